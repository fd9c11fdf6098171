from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from contactpairs import KForm
from contactpairs.errors import InconsistentSystemError, UnderdeterminedSystemError
from contactpairs.linalg import det, inverse, is_positive_definite, matmul, identity, nullspace, rank, solve
from contactpairs.scalars import as_scalar, format_rational, formal_c, is_formal, parse_rational, require_rational

import oracles
from strategies import small


@pytest.mark.parametrize("text,value", [("3", 3), ("-2/4", Fraction(-1, 2)), (" 7 / 3 ", Fraction(7, 3)), ("+0", 0)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/0", "", "a", "1/-2", "1e3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@settings(max_examples=100)
@given(small)
def test_format_parse_round_trip(x):
    assert parse_rational(format_rational(x)) == x
    assert "." not in format_rational(x)


def test_scalar_coercion():
    assert as_scalar("1/2") == Fraction(1, 2)
    for bad in (0.5, True):
        with pytest.raises(TypeError):
            as_scalar(bad)
    c = formal_c()
    assert is_formal(c) and not is_formal(Fraction(1))
    assert as_scalar(c - c + 3) == 3 and not is_formal(as_scalar(c - c + 3))
    with pytest.raises(TypeError):
        require_rational(c)
    # formal scalars are allowed as form coefficients, and stay exact
    assert KForm(2, 1, {(0,): c}).coefficient((0,)) == c


def test_linear_algebra():
    m = ((2, 1), (1, 1))
    assert det(m) == 1 and matmul(m, inverse(m)) == identity(2)
    assert rank(((1, 2), (2, 4))) == 1
    assert nullspace(((1, 2),), 2) == [(-2, 1)]
    assert solve(((1, 1), (1, -1)), (2, 0), 2) == (1, 1)
    with pytest.raises(InconsistentSystemError):
        solve(((1, 1), (1, 1)), (1, 2), 2)
    with pytest.raises(UnderdeterminedSystemError):
        solve(((1, 1),), (1,), 2)
    with pytest.raises(UnderdeterminedSystemError):
        inverse(((1, 2), (2, 4)))
    assert is_positive_definite(((2, 1), (1, 2))) and not is_positive_definite(((1, 2), (2, 1)))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_leibniz(rows):
    assert det(rows) == oracles.leibniz_det(rows)

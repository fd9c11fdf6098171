"""Exact rational linear algebra on small dense matrices.

Thin wrappers around :class:`sympy.polys.matrices.DomainMatrix` over ``QQ``
that accept and return :class:`fractions.Fraction` entries.  Matrices are
row-major sequences of rows.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import InconsistentSystemError, UnderdeterminedSystemError

Matrix = tuple[tuple[Fraction, ...], ...]


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _dm(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> DomainMatrix:
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    data = [[QQ(int(x.numerator), int(x.denominator)) for x in r] for r in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def _rows(m: DomainMatrix) -> Matrix:
    return tuple(tuple(_frac(x) for x in row) for row in m.to_list())


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    return _dm(rows).rank()


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    if not rows:
        return Fraction(1)
    return _frac(_dm(rows).det())


def inverse(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    if det(rows) == 0:
        raise UnderdeterminedSystemError("matrix is singular")
    return _rows(_dm(rows).inv())


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : rows @ x = 0}``, as vectors of length ``ncols``."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    basis = _dm(rows, ncols).nullspace().to_list()
    return [tuple(_frac(x) for x in v) for v in basis]


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], ncols: int) -> tuple[Fraction, ...]:
    """Unique solution of ``rows @ x = rhs``.

    Raises InconsistentSystemError when there is no solution and
    UnderdeterminedSystemError when the solution is not unique.
    """
    if len(rows) != len(rhs):
        raise ValueError("row count and right-hand side length differ")
    if not rows:
        if ncols:
            raise UnderdeterminedSystemError("no equations")
        return ()
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = _dm(aug, ncols + 1).rref()
    if ncols in pivots:
        raise InconsistentSystemError("linear system is inconsistent")
    if len(pivots) < ncols:
        raise UnderdeterminedSystemError(
            f"linear system has a {ncols - len(pivots)}-dimensional solution space"
        )
    red = reduced.to_list()
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = _frac(red[r][ncols])
    return tuple(x)


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols) for row in a)


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(tuple(col) for col in zip(*a))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def is_zero(a: Sequence[Sequence[Fraction]]) -> bool:
    return all(x == 0 for row in a for x in row)


def leading_minors(a: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    return [det([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def is_positive_definite(a: Sequence[Sequence[Fraction]]) -> bool:
    """Sylvester's criterion; assumes ``a`` symmetric."""
    return all(m > 0 for m in leading_minors(a))

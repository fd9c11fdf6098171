"""Exact scalars: rationals, and affine polynomials in a formal parameter ``c``.

Rationals are :class:`fractions.Fraction`.  The formal parameter is only
used by the generalized-pair family ``d alpha + c alpha ^ beta``; it is a
:class:`sympy.Poly` over ``QQ`` in the symbol ``c``.  Everything else in the
package rejects polynomial scalars via :func:`require_rational`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral

from sympy import QQ, Poly, Symbol

C = Symbol("c")

Scalar = Fraction | Poly

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` in base 10.

    Decimal notation (``"1.5"``), exponents and zero denominators are
    rejected with :class:`ValueError`.
    """
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"malformed rational {text!r}; expected 'p' or 'p/q'")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def as_scalar(x) -> Scalar:
    """Coerce ``x`` to a canonical exact scalar.

    Accepts ints, Fractions, rational strings and polynomials in ``c``.
    Floats are refused: no inexact value may enter the algebra.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, Integral):
        return Fraction(int(x))
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, Poly):
        if x.gens != (C,):
            raise TypeError(f"polynomial scalars must be in {C}, got {x.gens}")
        if x.degree() <= 0:
            return _poly_constant(x)
        return x.set_domain(QQ)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def _poly_constant(p: Poly) -> Fraction:
    coeffs = p.all_coeffs()
    v = coeffs[-1] if coeffs else 0
    return Fraction(int(v.p), int(v.q)) if hasattr(v, "p") else Fraction(v)


def is_formal(x) -> bool:
    return isinstance(x, Poly)


def require_rational(x) -> Fraction:
    if isinstance(x, Poly):
        raise TypeError("formal (polynomial) scalars are not allowed here")
    return as_scalar(x)


def formal_c() -> Poly:
    """The formal parameter ``c`` as a scalar."""
    return Poly(C, C, domain=QQ)


def poly_coefficients(p: Scalar) -> list[Fraction]:
    """Coefficients ``[a0, a1, ...]`` in increasing powers of ``c``."""
    if not isinstance(p, Poly):
        return [Fraction(p)]
    out = []
    for v in reversed(p.all_coeffs()):
        out.append(Fraction(int(v.p), int(v.q)))
    return out or [Fraction(0)]

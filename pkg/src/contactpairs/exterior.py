"""Exterior algebra of a finite-dimensional vector space with a fixed basis.

Forms are sparse maps from strictly increasing index tuples to exact
scalars.  Indices are zero-based in the API; ``repr`` prints them one-based
(``w1^w2``) to match the usual coframe notation.

Evaluation follows the determinant convention::

    (w_{i1} ^ ... ^ w_{ik})(X_1, ..., X_k) = det[w_{ir}(X_s)]

with no ``1/k!`` factor.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import NamedTuple

from . import linalg
from .errors import DimensionError
from .scalars import Scalar, as_scalar, is_formal, require_rational

Vector = tuple[Fraction, ...]


def _sort_with_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort ``idx`` and return the permutation sign; sign 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


def _is_zero(x) -> bool:
    return x.is_zero if is_formal(x) else x == 0


class KForm:
    """An alternating ``degree``-form on a ``dim``-dimensional space.

    ``terms`` may be a mapping or an iterable of ``(indices, coeff)`` pairs.
    Index tuples need not be sorted; they are reordered with the
    corresponding sign and tuples with a repeated index are dropped.
    """

    __slots__ = ("dim", "degree", "_terms", "_hash")

    def __init__(self, dim: int, degree: int, terms: Mapping | Iterable = ()):
        if not 0 <= degree:
            raise DimensionError(f"negative degree {degree}")
        self.dim = int(dim)
        self.degree = int(degree)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], Scalar] = {}
        for idx, coeff in items:
            idx = tuple(int(i) for i in idx)
            if len(idx) != degree:
                raise DimensionError(f"index tuple {idx} does not have length {degree}")
            if any(not 0 <= i < self.dim for i in idx):
                raise DimensionError(f"index tuple {idx} out of range for dimension {dim}")
            sign, key = _sort_with_sign(idx)
            if sign == 0:
                continue
            value = as_scalar(coeff) * sign
            acc[key] = acc[key] + value if key in acc else value
        self._terms = {k: acc[k] for k in sorted(acc) if not _is_zero(acc[k])}
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, dim: int, degree: int) -> KForm:
        return cls(dim, degree)

    @classmethod
    def constant(cls, dim: int, value=1) -> KForm:
        return cls(dim, 0, {(): value})

    @classmethod
    def basis(cls, dim: int, *indices: int, coeff=1) -> KForm:
        return cls(dim, len(indices), {tuple(indices): coeff})

    # mapping-like access

    @property
    def terms(self) -> Mapping[tuple[int, ...], Scalar]:
        return MappingProxyType(self._terms)

    def coefficient(self, indices: Sequence[int]) -> Scalar:
        sign, key = _sort_with_sign(indices)
        if sign == 0:
            return Fraction(0)
        return self._terms.get(key, Fraction(0)) * sign

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not any(is_formal(v) for v in self._terms.values())

    def top_coefficient(self) -> Scalar:
        """Coefficient on ``w1 ^ ... ^ wn``; requires ``degree == dim``."""
        if self.degree != self.dim:
            raise DimensionError(f"degree {self.degree} form is not top-degree in dimension {self.dim}")
        return self._terms.get(tuple(range(self.dim)), Fraction(0))

    # arithmetic

    def _check(self, other: KForm) -> None:
        if not isinstance(other, KForm):
            raise TypeError(f"expected KForm, got {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: KForm) -> KForm:
        self._check(other)
        if other.degree != self.degree:
            if other.is_zero():
                return self
            if self.is_zero():
                return other
            raise DimensionError(f"cannot add forms of degree {self.degree} and {other.degree}")
        return KForm(self.dim, self.degree, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> KForm:
        return KForm(self.dim, self.degree, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: KForm) -> KForm:
        return self + (-other)

    def __mul__(self, scalar) -> KForm:
        if isinstance(scalar, KForm):
            return NotImplemented
        s = as_scalar(scalar)
        return KForm(self.dim, self.degree, {k: v * s for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: KForm) -> KForm:
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KForm):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            key = tuple((k, str(v)) for k, v in self._terms.items())
            self._hash = hash((self.dim, self.degree if self._terms else -1, key))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return f"KForm(0, deg={self.degree}, dim={self.dim})"
        parts = []
        for idx, v in self._terms.items():
            name = "^".join(f"w{i + 1}" for i in idx) or "1"
            if is_formal(v):
                parts.append(f"({v.as_expr()})*{name}")
            elif v == 1:
                parts.append(name)
            elif v == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{v}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return repr(self) if self._terms else "0"


def coframe(dim: int) -> list[KForm]:
    """The dual basis one-forms ``w1..wn`` (zero-based list)."""
    return [KForm.basis(dim, i) for i in range(dim)]


def basis_vector(dim: int, i: int) -> Vector:
    return tuple(Fraction(int(j == i)) for j in range(dim))


def vector(*xs) -> Vector:
    return tuple(require_rational(x) for x in xs)


def wedge(a: KForm, b: KForm) -> KForm:
    """Exterior product; returns the zero form when the degree exceeds ``dim``."""
    a._check(b)
    deg = a.degree + b.degree
    out: list[tuple[tuple[int, ...], Scalar]] = []
    if deg <= a.dim:
        for ia, va in a._terms.items():
            sa = set(ia)
            for ib, vb in b._terms.items():
                if sa.intersection(ib):
                    continue
                out.append((ia + ib, va * vb))
    return KForm(a.dim, deg, out)


def power(a: KForm, m: int) -> KForm:
    if m < 0:
        raise ValueError("power must be non-negative")
    result = KForm.constant(a.dim)
    for _ in range(m):
        result = wedge(result, a)
    return result


def _check_vector(dim: int, x: Sequence) -> Vector:
    if len(x) != dim:
        raise DimensionError(f"vector of length {len(x)} in dimension {dim}")
    return tuple(require_rational(v) for v in x)


def interior(x: Sequence, a: KForm) -> KForm:
    """Contraction ``i_X a`` into the first slot."""
    if a.degree == 0:
        raise DimensionError("cannot contract a 0-form")
    x = _check_vector(a.dim, x)
    out = []
    for idx, v in a._terms.items():
        for p, i in enumerate(idx):
            if x[i] != 0:
                sign = -1 if p % 2 else 1
                out.append((idx[:p] + idx[p + 1:], v * x[i] * sign))
    return KForm(a.dim, a.degree - 1, out)


def evaluate(a: KForm, *vectors: Sequence) -> Fraction:
    if len(vectors) != a.degree:
        raise DimensionError(f"{a.degree}-form evaluated on {len(vectors)} vectors")
    vs = [_check_vector(a.dim, v) for v in vectors]
    total = Fraction(0)
    for idx, coeff in a._terms.items():
        coeff = require_rational(coeff)
        if a.degree == 0:
            total += coeff
            continue
        total += coeff * linalg.det([[v[i] for v in vs] for i in idx])
    return total


def two_form_matrix(a: KForm) -> linalg.Matrix:
    """The antisymmetric matrix ``M[i][j] = a(e_i, e_j)``."""
    if a.degree != 2:
        raise DimensionError(f"expected a 2-form, got degree {a.degree}")
    m = [[Fraction(0)] * a.dim for _ in range(a.dim)]
    for (i, j), v in a._terms.items():
        v = require_rational(v)
        m[i][j] = v
        m[j][i] = -v
    return tuple(tuple(r) for r in m)


def two_form_from_matrix(m: Sequence[Sequence[Fraction]]) -> KForm:
    n = len(m)
    for i in range(n):
        for j in range(n):
            if m[i][j] != -m[j][i]:
                raise ValueError("matrix is not antisymmetric")
    return KForm(n, 2, {(i, j): m[i][j] for i in range(n) for j in range(i + 1, n)})


def two_form_rank(a: KForm) -> int:
    return linalg.rank(two_form_matrix(a))


class Volume(NamedTuple):
    is_volume: bool
    sign: int | None


def is_volume(a: KForm) -> Volume:
    """Whether a top-degree form is non-zero, with its sign against ``w1^...^wn``."""
    if a.degree != a.dim:
        raise DimensionError(f"degree {a.degree} is not the top degree {a.dim}")
    top = require_rational(a.top_coefficient())
    if top == 0:
        return Volume(False, None)
    return Volume(True, 1 if top > 0 else -1)


def pullback(a: KForm, m: Sequence[Sequence[Fraction]]) -> KForm:
    """``(M^* a)(X_1, ..., X_k) = a(M X_1, ..., M X_k)``.

    ``m[i][j]`` is the ``e_i`` component of ``M e_j``.
    """
    n = a.dim
    if len(m) != n:
        raise DimensionError("matrix size does not match form dimension")
    if a.degree == 0:
        return a
    cols = [tuple(m[i][j] for i in range(n)) for j in range(n)]
    out = {}
    for idx in combinations(range(n), a.degree):
        v = evaluate(a, *(cols[j] for j in idx))
        if v:
            out[idx] = v
    return KForm(n, a.degree, out)


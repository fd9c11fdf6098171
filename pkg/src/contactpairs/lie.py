"""Lie algebras given by structure constants, and invariant calculus on them.

Conventions
-----------
``[e_i, e_j] = sum_k c^k_ij e_k``.  On invariant one-forms the differential is
``dw(X, Y) = -w([X, Y])``, so ``d w_k = -sum_{i<j} c^k_ij w_i ^ w_j``; it is
extended to higher degrees as a graded derivation.  Endomorphisms are square
matrices whose column ``j`` holds the image of ``e_j``.

Every vector field here is left-invariant, i.e. a constant coefficient vector
in the Lie algebra; that is the only kind of field the Lie derivatives accept.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import DimensionError, NotPositiveDefiniteError
from .exterior import KForm, Vector, basis_vector, coframe, interior, wedge
from .scalars import require_rational

Matrix = linalg.Matrix


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants of an ``dim``-dimensional Lie algebra.

    ``constants[(i, j)]`` for ``i < j`` is the coordinate vector of
    ``[e_i, e_j]``; missing pairs commute.  Jacobi is *not* enforced at
    construction so that invalid tables can be inspected with
    :func:`check_jacobi`.
    """

    dim: int
    constants: Mapping[tuple[int, int], Vector] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        clean = {}
        for (i, j), vec in dict(self.constants).items():
            if not (0 <= i < self.dim and 0 <= j < self.dim) or i == j:
                raise DimensionError(f"invalid bracket index pair {(i, j)}")
            if len(vec) != self.dim:
                raise DimensionError(f"bracket [{i},{j}] has {len(vec)} components, need {self.dim}")
            vec = tuple(require_rational(x) for x in vec)
            if i > j:
                i, j, vec = j, i, tuple(-x for x in vec)
            if any(vec):
                clean[(i, j)] = vec
        object.__setattr__(self, "constants", dict(sorted(clean.items())))

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[tuple[int, int], Mapping[int, object]], name: str = "") -> LieAlgebra:
        """Build from ``{(i, j): {k: c^k_ij}}``."""
        consts: dict[tuple[int, int], list[Fraction]] = {}
        for (i, j), comps in brackets.items():
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            vec = consts.setdefault((i, j), [Fraction(0)] * dim)
            for k, c in comps.items():
                vec[k] += sign * require_rational(c)
        return cls(dim, {k: tuple(v) for k, v in consts.items()}, name)

    @classmethod
    def from_differentials(cls, differentials: Sequence[KForm], name: str = "") -> LieAlgebra:
        """Build from the table ``d w_k`` of coframe differentials."""
        dim = len(differentials)
        consts: dict[tuple[int, int], list[Fraction]] = {}
        for k, dw in enumerate(differentials):
            if dw.dim != dim or (dw.degree != 2 and not dw.is_zero()):
                raise DimensionError(f"d w{k + 1} must be a 2-form in dimension {dim}")
            for (i, j), v in dw.terms.items():
                consts.setdefault((i, j), [Fraction(0)] * dim)[k] = -require_rational(v)
        return cls(dim, {k: tuple(v) for k, v in consts.items()}, name)

    @classmethod
    def abelian(cls, dim: int, name: str = "") -> LieAlgebra:
        return cls(dim, {}, name)

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self.constants.get((i, j), (Fraction(0),) * self.dim)[k]
        return -self.constants.get((j, i), (Fraction(0),) * self.dim)[k]

    def differentials(self) -> list[KForm]:
        """``d w_k`` for each coframe element."""
        out = []
        for k in range(self.dim):
            out.append(KForm(self.dim, 2, {ij: -vec[k] for ij, vec in self.constants.items()}))
        return out

    def is_abelian(self) -> bool:
        return not self.constants


def _vec(alg: LieAlgebra, x: Sequence) -> Vector:
    if len(x) != alg.dim:
        raise DimensionError(f"vector of length {len(x)} in a {alg.dim}-dimensional algebra")
    return tuple(require_rational(v) for v in x)


def bracket(alg: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    x, y = _vec(alg, x), _vec(alg, y)
    out = [Fraction(0)] * alg.dim
    for (i, j), vec in alg.constants.items():
        coeff = x[i] * y[j] - x[j] * y[i]
        if coeff:
            for k in range(alg.dim):
                out[k] += coeff * vec[k]
    return tuple(out)


def check_jacobi(alg: LieAlgebra) -> bool:
    """Jacobi identity on every basis triple."""
    e = [basis_vector(alg.dim, i) for i in range(alg.dim)]
    for a, b, c in combinations(range(alg.dim), 3):
        s = [
            bracket(alg, e[a], bracket(alg, e[b], e[c])),
            bracket(alg, e[b], bracket(alg, e[c], e[a])),
            bracket(alg, e[c], bracket(alg, e[a], e[b])),
        ]
        if any(sum(col) != 0 for col in zip(*s)):
            return False
    return True


def ce_differential(alg: LieAlgebra, a: KForm) -> KForm:
    """Chevalley-Eilenberg differential of an invariant form."""
    if a.dim != alg.dim:
        raise DimensionError(f"{a.dim}-dimensional form on a {alg.dim}-dimensional algebra")
    result = KForm.zero(alg.dim, a.degree + 1)
    if a.degree == 0 or a.degree >= alg.dim:
        return result
    dw = alg.differentials()
    w = coframe(alg.dim)
    for idx, coeff in a.terms.items():
        # d(w_i1 ^ ... ^ w_ik) = sum_p (-1)^p w_i1 ^ .. ^ d w_ip ^ .. ^ w_ik
        for p, i in enumerate(idx):
            if dw[i].is_zero():
                continue
            term = KForm.constant(alg.dim)
            for q, j in enumerate(idx):
                term = wedge(term, dw[j] if q == p else w[j])
            result = result + term * (coeff * (-1 if p % 2 else 1))
    return result


def d_squared_vanishes(alg: LieAlgebra) -> bool:
    """``d o d = 0`` on the coframe (equivalent to Jacobi)."""
    return all(ce_differential(alg, dw).is_zero() for dw in alg.differentials())


def lie_derivative_form(alg: LieAlgebra, x: Sequence, a: KForm) -> KForm:
    """``L_X a = i_X d a + d i_X a`` for invariant ``X``."""
    x = _vec(alg, x)
    da = ce_differential(alg, a)
    out = interior(x, da) if da.degree > 0 and not da.is_zero() else KForm.zero(alg.dim, a.degree)
    if a.degree > 0:
        out = out + ce_differential(alg, interior(x, a))
    return out


def ad_matrix(alg: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``Y -> [X, Y]``."""
    cols = [bracket(alg, x, basis_vector(alg.dim, j)) for j in range(alg.dim)]
    return linalg.transpose(cols)


def lie_derivative_endo(alg: LieAlgebra, x: Sequence, j: Sequence[Sequence[Fraction]]) -> Matrix:
    """Matrix of ``Y -> [X, JY] - J[X, Y]``."""
    ad = ad_matrix(alg, x)
    return _sub(linalg.matmul(ad, j), linalg.matmul(j, ad))


def lie_derivative_metric(alg: LieAlgebra, x: Sequence, g: Sequence[Sequence[Fraction]]) -> Matrix:
    """``(L_X g)(Y, Z) = -g([X,Y], Z) - g(Y, [X,Z])``."""
    ad = ad_matrix(alg, x)
    m = linalg.matmul(linalg.transpose(ad), g)
    return tuple(tuple(-m[i][k] - m[k][i] for k in range(alg.dim)) for i in range(alg.dim))


def is_derivation(alg: LieAlgebra, d: Sequence[Sequence[Fraction]]) -> bool:
    """``D[X, Y] = [DX, Y] + [X, DY]`` on basis pairs."""
    n = alg.dim
    cols = [tuple(d[i][j] for i in range(n)) for j in range(n)]
    e = [basis_vector(n, i) for i in range(n)]
    for a, b in combinations(range(n), 2):
        lhs = linalg.matvec(d, bracket(alg, e[a], e[b]))
        r1, r2 = bracket(alg, cols[a], e[b]), bracket(alg, e[a], cols[b])
        if any(l != u + v for l, u, v in zip(lhs, r1, r2)):
            return False
    return True


def derivation_action(d: Sequence[Sequence[Fraction]], a: KForm) -> KForm:
    """Infinitesimal action of an endomorphism on a form: ``-sum a(.., D., ..)``."""
    n = a.dim
    out = KForm.zero(n, a.degree)
    for idx, coeff in a.terms.items():
        for p, i in enumerate(idx):
            # (w_i o D) = sum_j d[i][j] w_j
            for jj in range(n):
                if d[i][jj]:
                    out = out + KForm(n, a.degree, {idx[:p] + (jj,) + idx[p + 1:]: -coeff * d[i][jj]})
    return out


def _sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


# metrics and the Levi-Civita connection


def check_metric(g: Sequence[Sequence]) -> Matrix:
    """Validate a symmetric positive definite matrix and return it canonically."""
    g = tuple(tuple(require_rational(x) for x in row) for row in g)
    n = len(g)
    if any(len(row) != n for row in g):
        raise NotPositiveDefiniteError("metric matrix is not square")
    if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
        raise NotPositiveDefiniteError("metric matrix is not symmetric")
    if not linalg.is_positive_definite(g):
        raise NotPositiveDefiniteError("metric is not positive definite")
    return g


def _g(g: Matrix, x: Vector, y: Vector) -> Fraction:
    return sum((x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j]), Fraction(0))


@dataclass(frozen=True)
class Connection:
    """Invariant connection ``nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k``."""

    gamma: tuple[tuple[Vector, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.gamma)

    def covariant(self, x: Sequence, y: Sequence) -> Vector:
        """``nabla_X Y`` for constant-coefficient ``X``, ``Y``."""
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                for k in range(n):
                    out[k] += x[i] * y[j] * self.gamma[i][j][k]
        return tuple(out)


def levi_civita(alg: LieAlgebra, g: Sequence[Sequence]) -> Connection:
    """Levi-Civita connection of a left-invariant metric (Koszul formula)."""
    g = check_metric(g)
    n = alg.dim
    if len(g) != n:
        raise DimensionError("metric size does not match algebra dimension")
    e = [basis_vector(n, i) for i in range(n)]
    ginv = linalg.inverse(g)
    br = [[bracket(alg, e[i], e[j]) for j in range(n)] for i in range(n)]
    gamma = []
    for i in range(n):
        row = []
        for j in range(n):
            # lowered[l] = g(nabla_i e_j, e_l)
            lowered = [
                (_g(g, br[i][j], e[l]) - _g(g, br[j][l], e[i]) + _g(g, br[l][i], e[j])) / 2
                for l in range(n)
            ]
            row.append(linalg.matvec(ginv, lowered))
        gamma.append(tuple(row))
    return Connection(tuple(gamma))


def is_torsion_free(alg: LieAlgebra, conn: Connection) -> bool:
    e = [basis_vector(alg.dim, i) for i in range(alg.dim)]
    for i, j in combinations(range(alg.dim), 2):
        t = tuple(a - b for a, b in zip(conn.covariant(e[i], e[j]), conn.covariant(e[j], e[i])))
        if t != bracket(alg, e[i], e[j]):
            return False
    return True


def is_metric_compatible(conn: Connection, g: Matrix) -> bool:
    n = conn.dim
    e = [basis_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(j, n):
                if _g(g, conn.covariant(e[i], e[j]), e[k]) + _g(g, e[j], conn.covariant(e[i], e[k])) != 0:
                    return False
    return True


def covariant_derivative_oneform(conn: Connection, theta: KForm) -> Matrix:
    """``M[i][j] = (nabla_{e_i} theta)(e_j) = -theta(nabla_{e_i} e_j)``."""
    if theta.degree != 1:
        raise DimensionError(f"expected a one-form, got degree {theta.degree}")
    n = conn.dim
    t = [require_rational(theta.coefficient((k,))) for k in range(n)]
    return tuple(
        tuple(-sum((t[k] * conn.gamma[i][j][k] for k in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def covariant_derivative_endo(conn: Connection, j: Sequence[Sequence[Fraction]]) -> list[Matrix]:
    """``(nabla_{e_i} J)`` for each ``i``, as matrices: ``nabla_i(J e_k) - J nabla_i e_k``."""
    n = conn.dim
    e = [basis_vector(n, i) for i in range(n)]
    out = []
    for i in range(n):
        cols = []
        for k in range(n):
            jk = tuple(j[r][k] for r in range(n))
            a = conn.covariant(e[i], jk)
            b = linalg.matvec(j, conn.covariant(e[i], e[k]))
            cols.append(tuple(x - y for x, y in zip(a, b)))
        out.append(linalg.transpose(cols))
    return out


# basis changes


def change_basis(alg: LieAlgebra, p: Sequence[Sequence]) -> LieAlgebra:
    """The same algebra in the basis ``e'_j = sum_i p[i][j] e_i``."""
    p = tuple(tuple(require_rational(x) for x in row) for row in p)
    n = alg.dim
    pinv = linalg.inverse(p)
    cols = [tuple(p[i][j] for i in range(n)) for j in range(n)]
    consts = {}
    for i, j in combinations(range(n), 2):
        consts[(i, j)] = linalg.matvec(pinv, bracket(alg, cols[i], cols[j]))
    return LieAlgebra(n, consts, alg.name)


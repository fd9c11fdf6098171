"""Almost complex structures, associated metrics, normality and Vaisman checks.

The fundamental form of ``(J, g)`` is ``omega(X, Y) = g(X, JY)``.  With that
convention a metric contact pair ``(alpha, beta, J, g)`` has fundamental
form ``d alpha - alpha ^ beta`` whose Lee form is ``-beta``; the conjugate
structure ``T`` has fundamental form ``d alpha + alpha ^ beta`` with Lee
form ``+beta``.  Reports carry that sign explicitly (``lee_sign``) instead
of absorbing it.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt

from . import linalg
from .errors import (
    DimensionError,
    NotAlmostComplexError,
    NotPositiveDefiniteError,
    PreconditionError,
    SplittingError,
    StructureError,
)
from .exterior import KForm, Vector, basis_vector, is_volume, power, pullback, two_form_from_matrix, two_form_matrix, wedge
from .lie import (
    LieAlgebra,
    bracket,
    ce_differential,
    check_metric,
    covariant_derivative_endo,
    covariant_derivative_oneform,
    levi_civita,
    lie_derivative_endo,
    lie_derivative_metric,
)
from .pairs import ContactPair, _coeffs, pair_type, reeb_fields, verify_contact_pair, verify_lcs, verify_symplectic_pair
from .scalars import require_rational

Matrix = linalg.Matrix


def as_matrix(m: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(require_rational(x) for x in row) for row in m)


def complex_structure(dim: int, images: Mapping[int, Sequence]) -> Matrix:
    """Almost complex structure determined by ``J e_a = v_a`` and ``J^2 = -1``.

    The vectors ``e_a`` and ``v_a`` together must form a basis; ``J v_a``
    is then forced to be ``-e_a``.
    """
    srcs = list(images)
    vs = [tuple(require_rational(x) for x in images[a]) for a in srcs]
    if 2 * len(srcs) != dim:
        raise DimensionError(f"need {dim // 2} images to fix J in dimension {dim}")
    es = [basis_vector(dim, a) for a in srcs]
    q = linalg.transpose(es + vs)
    if linalg.det(q) == 0:
        raise NotAlmostComplexError("the given vectors and their images are not a basis")
    neg = [tuple(-x for x in e) for e in es]
    img = linalg.transpose(vs + neg)
    return linalg.matmul(img, linalg.inverse(q))


def is_almost_complex(j: Sequence[Sequence]) -> bool:
    j = as_matrix(j)
    n = len(j)
    sq = linalg.matmul(j, j)
    return all(sq[a][b] == -int(a == b) for a in range(n) for b in range(n))


def _require_ac(j) -> Matrix:
    j = as_matrix(j)
    if not is_almost_complex(j):
        raise NotAlmostComplexError("J o J != -1")
    return j


def nijenhuis(alg: LieAlgebra, j, x, y) -> Vector:
    """``N_J(X, Y) = 2([JX, JY] - [X, Y] - J[JX, Y] - J[X, JY])``."""
    j = _require_ac(j)
    jx, jy = linalg.matvec(j, x), linalg.matvec(j, y)
    a = bracket(alg, jx, jy)
    b = bracket(alg, x, y)
    c = linalg.matvec(j, bracket(alg, jx, y))
    d = linalg.matvec(j, bracket(alg, x, jy))
    return tuple(2 * (p - q - r - s) for p, q, r, s in zip(a, b, c, d))


def nijenhuis_witness(alg: LieAlgebra, j) -> tuple[int, int, Vector] | None:
    """First basis pair ``(i, k)`` with ``N_J(e_i, e_k) != 0``, or None."""
    j = _require_ac(j)
    for i, k in combinations(range(alg.dim), 2):
        nv = nijenhuis(alg, j, basis_vector(alg.dim, i), basis_vector(alg.dim, k))
        if any(nv):
            return i, k, nv
    return None


def is_integrable(alg: LieAlgebra, j) -> bool:
    return nijenhuis_witness(alg, j) is None


def fundamental_form(j, g) -> KForm:
    """``omega(X, Y) = g(X, JY)``."""
    return two_form_from_matrix(linalg.matmul(as_matrix(g), as_matrix(j)))


def is_compatible(j, g) -> bool:
    j, g = as_matrix(j), as_matrix(g)
    return linalg.matmul(linalg.matmul(linalg.transpose(j), g), j) == g


def _is_zero_matrix(m) -> bool:
    return linalg.is_zero(m)


def associated_metric(alg: LieAlgebra, alpha: KForm, beta: KForm, j) -> Matrix:
    """The metric ``g`` with ``g(X, JY) = (d alpha - alpha ^ beta)(X, Y)``."""
    j = _require_ac(j)
    h = pair_type(alg)
    if not verify_contact_pair(alg, alpha, beta, h, 0).is_pair:
        raise PreconditionError("(alpha, beta) is not a contact pair of type (h,0)")
    reeb = reeb_fields(alg, alpha, beta)
    if linalg.matvec(j, reeb.A) != reeb.B:
        raise PreconditionError("J A != B")
    f = two_form_matrix(ce_differential(alg, alpha) - wedge(alpha, beta))
    # G J = F  =>  G = F J^{-1} = -F J
    g = tuple(tuple(-x for x in row) for row in linalg.matmul(f, j))
    g = check_metric(g)
    if not is_compatible(j, g):
        raise NotPositiveDefiniteError("g is not J-invariant")
    if linalg.matvec(g, reeb.A) != _coeffs(alpha) or linalg.matvec(g, reeb.B) != _coeffs(beta):
        raise StructureError("Reeb fields are not g-dual to alpha and beta")
    return g


def reeb_projector(a: Vector, b: Vector, alpha: KForm, beta: KForm) -> Matrix:
    """Projection onto span(A, B) along ``ker alpha ∩ ker beta``."""
    al, be = _coeffs(alpha), _coeffs(beta)
    n = len(a)
    return tuple(tuple(a[r] * al[s] + b[r] * be[s] for s in range(n)) for r in range(n))


def conjugate_T(alg: LieAlgebra, j, a, b, alpha: KForm, beta: KForm, g=None) -> Matrix:
    """``T = J`` on ``ker alpha ∩ ker beta`` and ``T = -J`` on span(A, B)."""
    j = _require_ac(j)
    n = alg.dim
    if linalg.matvec(j, a) != tuple(b):
        raise SplittingError("J A != B")
    al, be = _coeffs(alpha), _coeffs(beta)
    for v in linalg.nullspace([list(al), list(be)], n):
        jv = linalg.matvec(j, v)
        if sum(x * y for x, y in zip(al, jv)) or sum(x * y for x, y in zip(be, jv)):
            raise SplittingError("J does not preserve ker alpha ∩ ker beta")
    proj = reeb_projector(tuple(a), tuple(b), alpha, beta)
    t = linalg.matmul(j, tuple(tuple(int(r == s) - 2 * proj[r][s] for s in range(n)) for r in range(n)))
    if not is_almost_complex(t):
        raise StructureError("T o T != -1")
    if g is not None:
        expected = ce_differential(alg, alpha) + wedge(alpha, beta)
        if fundamental_form(t, g) != expected:
            raise StructureError("g(X, TY) != (d alpha + alpha ^ beta)(X, Y)")
    return t


@dataclass(frozen=True)
class FundamentalOrientations:
    j_sign: int | None
    t_sign: int | None

    @property
    def opposite(self) -> bool:
        return self.j_sign is not None and self.t_sign is not None and self.j_sign == -self.t_sign


def fundamental_orientations(alg: LieAlgebra, alpha: KForm, beta: KForm) -> FundamentalOrientations:
    """Volume signs of ``(d alpha -+ alpha ^ beta)^(h+1)``."""
    h = pair_type(alg)
    da, ab = ce_differential(alg, alpha), wedge(alpha, beta)
    return FundamentalOrientations(is_volume(power(da - ab, h + 1)).sign, is_volume(power(da + ab, h + 1)).sign)


@dataclass(frozen=True)
class MetricContactPair:
    pair: ContactPair
    J: Matrix
    g: Matrix
    A: Vector
    B: Vector

    @property
    def alpha(self) -> KForm:
        return self.pair.alpha

    @property
    def beta(self) -> KForm:
        return self.pair.beta


def metric_contact_pair(alg: LieAlgebra, alpha: KForm, beta: KForm, j, g) -> MetricContactPair:
    """Validate ``(alpha, beta, J, g)`` as a metric contact pair of type ``(h, 0)``."""
    j = _require_ac(j)
    g = check_metric(g)
    h = pair_type(alg)
    if not verify_contact_pair(alg, alpha, beta, h, 0).is_pair:
        raise PreconditionError("(alpha, beta) is not a contact pair of type (h,0)")
    reeb = reeb_fields(alg, alpha, beta)
    if linalg.matvec(j, reeb.A) != reeb.B:
        raise PreconditionError("J A != B")
    if fundamental_form(j, g) != ce_differential(alg, alpha) - wedge(alpha, beta):
        raise PreconditionError("g(X, JY) != (d alpha - alpha ^ beta)(X, Y)")
    return MetricContactPair(ContactPair(alpha, beta, h, 0), j, g, reeb.A, reeb.B)


@dataclass(frozen=True)
class NormalReport:
    J_integrable: bool
    T_integrable: bool
    L_AJ_zero: bool
    L_BJ_zero: bool
    T: Matrix
    witness: tuple | None

    @property
    def normal(self) -> bool:
        return self.J_integrable and self.T_integrable

    @property
    def equivalence_holds(self) -> bool:
        j = self.J_integrable
        return self.normal == (j and self.L_AJ_zero) == (j and self.L_BJ_zero)


def is_normal(alg: LieAlgebra, mcp: MetricContactPair) -> NormalReport:
    t = conjugate_T(alg, mcp.J, mcp.A, mcp.B, mcp.alpha, mcp.beta, mcp.g)
    wj = nijenhuis_witness(alg, mcp.J)
    wt = nijenhuis_witness(alg, t)
    la = _is_zero_matrix(lie_derivative_endo(alg, mcp.A, mcp.J))
    lb = _is_zero_matrix(lie_derivative_endo(alg, mcp.B, mcp.J))
    witness = None
    if wj is not None:
        witness = ("N_J", *wj)
    elif wt is not None:
        witness = ("N_T", *wt)
    return NormalReport(wj is None, wt is None, la, lb, t, witness)


def rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    p, q = isqrt(x.numerator), isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


@dataclass(frozen=True)
class VaismanReport:
    """Outcome of :func:`vaisman_check`.

    ``kind`` is one of ``"kahler"`` (Lee form zero), ``"vaisman"``,
    ``"lck"`` (integrable, Lee form not parallel) or ``"not_integrable"``.
    ``U`` and ``V`` are normalized when ``|theta|`` is rational; otherwise
    they are None and ``lee_dual`` (the g-dual of ``-theta``) gives the
    direction.  The pair one-forms ``alpha``, ``beta`` follow the same rule.
    """

    kind: str
    omega: KForm
    theta: KForm
    norm_squared: Fraction
    J_integrable: bool
    nabla_theta: Matrix | None = None
    parallel: bool | None = None
    lee_dual: Vector | None = None
    U: Vector | None = None
    V: Vector | None = None
    U_killing: bool | None = None
    V_killing: bool | None = None
    L_UJ_zero: bool | None = None
    L_VJ_zero: bool | None = None
    UV_commute: bool | None = None
    structure_identity: bool | None = None
    alpha: KForm | None = None
    beta: KForm | None = None
    lee_sign: int = -1

    @property
    def is_vaisman(self) -> bool:
        return self.kind == "vaisman"

    @property
    def killing_criterion_agrees(self) -> bool | None:
        """Vaisman iff U is Killing (the norm of theta is automatically constant)."""
        if self.parallel is None:
            return None
        return self.parallel == self.U_killing


def vaisman_check(alg: LieAlgebra, j, g) -> VaismanReport:
    j = _require_ac(j)
    g = check_metric(g)
    if not is_compatible(j, g):
        raise PreconditionError("g(JX, JY) != g(X, Y)")
    n = alg.dim
    integrable = is_integrable(alg, j)
    omega = fundamental_form(j, g)
    lcs = verify_lcs(alg, omega)
    theta = lcs.theta if lcs.theta.degree == 1 else KForm.zero(n, 1)
    t = _coeffs(theta)
    ginv = linalg.inverse(g)
    norm2 = sum(x * y for x, y in zip(t, linalg.matvec(ginv, t)))
    if norm2 == 0:
        return VaismanReport("kahler", omega, theta, norm2, integrable)

    conn = levi_civita(alg, g)
    nabla = covariant_derivative_oneform(conn, theta)
    parallel = _is_zero_matrix(nabla)
    # scale-free direction of U; rescaling by 1/|theta| preserves every flag below
    u = tuple(-x for x in linalg.matvec(ginv, t))
    v = tuple(-x for x in linalg.matvec(j, u))
    u_killing = _is_zero_matrix(lie_derivative_metric(alg, u, g))
    v_killing = _is_zero_matrix(lie_derivative_metric(alg, v, g))
    luj = _is_zero_matrix(lie_derivative_endo(alg, u, j))
    lvj = _is_zero_matrix(lie_derivative_endo(alg, v, j))
    commute = not any(bracket(alg, u, v))
    # d alpha = |theta| (omega + alpha ^ beta) with beta = -theta/|theta|,
    # alpha = beta o J, multiplied through by |theta|:
    tj = pullback(theta, j)
    identity = -ce_differential(alg, tj) == omega * norm2 + wedge(tj, theta)

    s = rational_sqrt(norm2)
    U = V = alpha = beta = None
    if s is not None:
        U = tuple(x / s for x in u)
        V = tuple(x / s for x in v)
        beta = theta * (-1 / s)
        alpha = pullback(beta, j)
    if not integrable:
        kind = "not_integrable"
    elif parallel:
        kind = "vaisman"
    else:
        kind = "lck"
    return VaismanReport(
        kind, omega, theta, norm2, integrable, nabla, parallel, u, U, V,
        u_killing, v_killing, luj, lvj, commute, identity, alpha, beta,
    )


def mcp_to_vaisman(alg: LieAlgebra, mcp: MetricContactPair) -> tuple[Matrix, Matrix, VaismanReport]:
    """Forget the pair: ``(alpha, beta, J, g) -> (J, g)`` with its Vaisman report."""
    rep = vaisman_check(alg, mcp.J, mcp.g)
    if rep.theta != -mcp.beta:
        raise StructureError(f"Lee form {rep.theta!r} is not -beta")
    return mcp.J, mcp.g, rep


def vaisman_to_mcp(alg: LieAlgebra, j, g) -> tuple[MetricContactPair, Fraction]:
    """Recover the normal metric contact pair of a non-Kähler Vaisman structure.

    The metric is first rescaled by ``|theta|^2`` so that the Lee form has
    unit length; the scale factor is returned with the pair.
    """
    rep = vaisman_check(alg, j, g)
    if rep.kind == "kahler":
        raise PreconditionError("Kähler structure: the Lee form vanishes")
    if rep.kind != "vaisman":
        raise PreconditionError(f"structure is not Vaisman ({rep.kind})")
    scale = rep.norm_squared
    g1 = tuple(tuple(scale * x for x in row) for row in as_matrix(g))
    beta = -rep.theta
    alpha = pullback(beta, as_matrix(j))
    mcp = metric_contact_pair(alg, alpha, beta, j, g1)
    u = linalg.matvec(linalg.inverse(g1), _coeffs(beta))
    v = tuple(-x for x in linalg.matvec(as_matrix(j), u))
    if mcp.B != u or mcp.A != v:
        raise StructureError("Reeb fields differ from (V, U)")
    return mcp, scale


@dataclass(frozen=True)
class KahlerPairReport:
    symplectic_pair: bool
    J_integrable: bool
    T_integrable: bool
    compatible: bool
    J_fundamental_matches: bool
    T_fundamental_matches: bool
    nabla_J_zero: bool
    nabla_T_zero: bool
    sum_closed: bool
    difference_closed: bool
    T: Matrix
    orientation_signs: tuple[int | None, int | None]

    @property
    def valid(self) -> bool:
        return all((
            self.symplectic_pair, self.J_integrable, self.T_integrable, self.compatible,
            self.J_fundamental_matches, self.T_fundamental_matches,
            self.nabla_J_zero, self.nabla_T_zero, self.sum_closed, self.difference_closed,
        ))


def kahler_pair_check(alg: LieAlgebra, w1: KForm, w2: KForm, j, g) -> KahlerPairReport:
    """Check ``J = J1 + J2``, ``T = J1 - J2`` and ``g`` against a symplectic pair.

    ``J1`` acts on ``ker w2`` (where ``w1`` is non-degenerate) and ``J2`` on
    ``ker w1``.
    """
    sp = verify_symplectic_pair(alg, w1, w2)
    if not sp.valid:
        raise PreconditionError("(w1, w2) is not a symplectic pair")
    j = _require_ac(j)
    g = check_metric(g)
    n = alg.dim
    m1, m2 = two_form_matrix(w1), two_form_matrix(w2)
    k1 = linalg.nullspace(m1, n)
    k2 = linalg.nullspace(m2, n)
    for m, kern in ((m1, k1), (m2, k2)):
        for v in kern:
            if any(linalg.matvec(m, linalg.matvec(j, v))):
                raise SplittingError("J does not preserve the kernel splitting of the pair")
    q = linalg.transpose(k2 + k1)
    half = len(k2)
    d = tuple(tuple(Fraction(-1 if (r == s and r >= half) else int(r == s)) for s in range(n)) for r in range(n))
    reflect = linalg.matmul(linalg.matmul(q, d), linalg.inverse(q))
    t = linalg.matmul(j, reflect)
    if not is_almost_complex(t):
        raise StructureError("T o T != -1")
    conn = levi_civita(alg, g)
    return KahlerPairReport(
        True,
        is_integrable(alg, j),
        is_integrable(alg, t),
        is_compatible(j, g) and is_compatible(t, g),
        fundamental_form(j, g) == w1 + w2,
        fundamental_form(t, g) == w1 - w2,
        all(_is_zero_matrix(m) for m in covariant_derivative_endo(conn, j)),
        all(_is_zero_matrix(m) for m in covariant_derivative_endo(conn, t)),
        ce_differential(alg, w1 + w2).is_zero(),
        ce_differential(alg, w1 - w2).is_zero(),
        t,
        (is_volume(power(w1 + w2, 2)).sign, is_volume(power(w1 - w2, 2)).sign),
    )


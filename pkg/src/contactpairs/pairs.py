"""Contact pairs, lcs forms and symplectic pairs on invariant models.

All conditions are checked at the Lie algebra level.  For left-invariant
structures a pointwise condition (being a volume form, having constant
rank) is the same statement everywhere, so the algebra-level check is the
global one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import (
    DegenerateFormError,
    DimensionError,
    InconsistentSystemError,
    LinearSystemError,
    NoLeeFormError,
    NotAPairError,
    PreconditionError,
    StructureError,
    UnderdeterminedSystemError,
)
from .exterior import KForm, Vector, evaluate, interior, is_volume, power, two_form_matrix, two_form_rank, wedge
from .lie import LieAlgebra, bracket, ce_differential, lie_derivative_form
from .scalars import formal_c, poly_coefficients, require_rational


@dataclass(frozen=True)
class ContactPair:
    alpha: KForm
    beta: KForm
    h: int
    k: int = 0


@dataclass(frozen=True)
class ContactPairReport:
    is_pair: bool
    is_generalized_only: bool
    volume_sign: int | None
    alpha_power_vanishes: bool
    beta_power_vanishes: bool
    beta_closed: bool


@dataclass(frozen=True)
class ReebPair:
    A: Vector
    B: Vector
    genuine: bool
    commuting: bool


@dataclass(frozen=True)
class LcsData:
    omega: KForm
    theta: KForm


@dataclass(frozen=True)
class AutomorphismReport:
    preserves: bool
    theta_of_x: Fraction
    preserves_lee_form: bool


@dataclass(frozen=True)
class OrientationReport:
    omega_power_sign: int | None
    pair_volume_sign: int | None
    ratio: Fraction | None

    @property
    def same(self) -> bool:
        return self.omega_power_sign is not None and self.omega_power_sign == self.pair_volume_sign


@dataclass(frozen=True)
class Admissibility:
    """Non-degeneracy of ``d alpha + c alpha ^ beta`` as a function of ``c``.

    ``coefficients`` are those of the top coefficient of ``omega_c^(h+1)``
    in increasing powers of ``c``; ``excluded`` lists the values of ``c``
    where it vanishes (``None`` means every ``c`` is excluded).
    """

    h: int
    coefficients: tuple[Fraction, ...]
    excluded: tuple[Fraction, ...] | None

    def is_admissible(self, c) -> bool:
        if self.excluded is None:
            return False
        return require_rational(c) not in self.excluded

    def describe(self) -> str:
        if self.excluded is None:
            return "no c"
        if not self.excluded:
            return "all c"
        return " and ".join(f"c != {x}" for x in self.excluded)


@dataclass(frozen=True)
class SymplecticPairReport:
    first_closed: bool
    second_closed: bool
    volume_sign: int | None
    first_square_zero: bool
    second_square_zero: bool
    sum_sign: int | None
    difference_sign: int | None

    @property
    def valid(self) -> bool:
        return (
            self.first_closed
            and self.second_closed
            and self.volume_sign is not None
            and self.first_square_zero
            and self.second_square_zero
        )


def _one_form(alg: LieAlgebra, a: KForm, name: str) -> None:
    if a.dim != alg.dim:
        raise DimensionError(f"{name} lives in dimension {a.dim}, algebra has dimension {alg.dim}")
    if a.degree != 1 and not a.is_zero():
        raise DimensionError(f"{name} must be a one-form, got degree {a.degree}")


def _coeffs(a: KForm) -> Vector:
    return tuple(require_rational(a.coefficient((i,))) for i in range(a.dim))


def _as_one_form(a: KForm) -> KForm:
    return a if a.degree == 1 else KForm.zero(a.dim, 1)


def pair_type(alg: LieAlgebra) -> int:
    """``h`` for a type ``(h, 0)`` pair in this dimension."""
    if alg.dim % 2 or alg.dim < 2:
        raise DimensionError(f"type (h,0) pairs need even dimension, got {alg.dim}")
    return alg.dim // 2 - 1


def verify_contact_pair(alg: LieAlgebra, alpha: KForm, beta: KForm, h: int, k: int = 0) -> ContactPairReport:
    _one_form(alg, alpha, "alpha")
    _one_form(alg, beta, "beta")
    alpha, beta = _as_one_form(alpha), _as_one_form(beta)
    if h < 0 or k < 0 or 2 * h + 2 * k + 2 != alg.dim:
        raise DimensionError(f"type ({h},{k}) does not fit dimension {alg.dim}")
    da, db = ce_differential(alg, alpha), ce_differential(alg, beta)
    top = wedge(wedge(wedge(alpha, power(da, h)), beta), power(db, k))
    vol = is_volume(top)
    a_ok = power(da, h + 1).is_zero()
    b_ok = power(db, k + 1).is_zero()
    closed = db.is_zero()
    is_pair = vol.is_volume and a_ok and b_ok
    generalized_only = k == 0 and vol.is_volume and closed and not a_ok
    return ContactPairReport(is_pair, generalized_only, vol.sign, a_ok, b_ok, closed)


def _contraction_rows(form2: KForm) -> list[list[Fraction]]:
    # (i_Y form2)(e_j) = sum_i Y_i M[i][j]; row j is column j of M
    m = two_form_matrix(form2)
    return [list(col) for col in zip(*m)]


def _solve_reeb(alg, alpha, beta, constraint_rows, genuine):
    n = alg.dim
    a, b = _coeffs(alpha), _coeffs(beta)
    rows = [list(a), list(b)] + constraint_rows
    zeros = [Fraction(0)] * len(constraint_rows)
    va = linalg.solve(rows, [Fraction(1), Fraction(0)] + zeros, n)
    vb = linalg.solve(rows, [Fraction(0), Fraction(1)] + zeros, n)
    return ReebPair(va, vb, genuine, not any(bracket(alg, va, vb)))


def reeb_fields(alg: LieAlgebra, alpha: KForm, beta: KForm) -> ReebPair:
    """Reeb vector fields of a contact pair or a generalized contact pair.

    First tries the defining system of a genuine pair (both fields
    annihilate ``d alpha`` and ``d beta``).  If that is inconsistent and
    ``beta`` is closed, falls back to the Reeb distribution: fields ``Y``
    with ``i_Y d alpha`` vanishing on ``ker alpha ∩ ker beta``.
    """
    _one_form(alg, alpha, "alpha")
    _one_form(alg, beta, "beta")
    alpha, beta = _as_one_form(alpha), _as_one_form(beta)
    da, db = ce_differential(alg, alpha), ce_differential(alg, beta)
    da = da if not da.is_zero() else KForm.zero(alg.dim, 2)
    db = db if not db.is_zero() else KForm.zero(alg.dim, 2)
    try:
        return _solve_reeb(alg, alpha, beta, _contraction_rows(da) + _contraction_rows(db), True)
    except InconsistentSystemError:
        if not db.is_zero():
            raise NotAPairError("no Reeb fields: the defining system is inconsistent") from None
    except UnderdeterminedSystemError:
        raise NotAPairError("Reeb fields are not unique: alpha ^ (d alpha)^h ^ beta is not a volume form") from None

    m = two_form_matrix(da)
    kernel = linalg.nullspace([list(_coeffs(alpha)), list(_coeffs(beta))], alg.dim)
    rows = [list(linalg.matvec(m, v)) for v in kernel]
    try:
        return _solve_reeb(alg, alpha, beta, rows, False)
    except LinearSystemError as exc:
        raise NotAPairError(f"no Reeb fields in the Reeb distribution: {exc}") from None


def _lee_system(omega: KForm):
    n = omega.dim
    triples = list(combinations(range(n), 3))
    cols = [wedge(omega, KForm.basis(n, k)) for k in range(n)]
    rows = [[require_rational(cols[k].coefficient(t)) for k in range(n)] for t in triples]
    return triples, rows


def verify_lcs(alg: LieAlgebra, omega: KForm) -> LcsData:
    """Check that ``omega`` is lcs and return it with its Lee form.

    Raises DegenerateFormError if ``omega`` is degenerate, NoLeeFormError if
    ``d omega = omega ^ theta`` has no solution or the solution is not
    closed, and UnderdeterminedSystemError if it is not unique (dimension 2).
    """
    if omega.dim != alg.dim or omega.degree != 2:
        raise DimensionError("omega must be a 2-form on the algebra")
    n = alg.dim
    if two_form_rank(omega) != n:
        raise DegenerateFormError(f"omega has rank {two_form_rank(omega)} < {n}")
    d_omega = ce_differential(alg, omega)
    triples, rows = _lee_system(omega)
    rhs = [require_rational(d_omega.coefficient(t)) for t in triples]
    try:
        coeffs = linalg.solve(rows, rhs, n)
    except InconsistentSystemError:
        raise NoLeeFormError("no one-form theta satisfies d omega = omega ^ theta") from None
    theta = KForm(n, 1, {(k,): v for k, v in enumerate(coeffs)})
    if not ce_differential(alg, theta).is_zero():
        raise NoLeeFormError("the solution theta of d omega = omega ^ theta is not closed")
    return LcsData(omega, theta)


def lee_vector(alg: LieAlgebra, lcs: LcsData) -> Vector:
    """The Lee vector field ``L`` with ``i_L omega = theta``."""
    rows = _contraction_rows(lcs.omega)
    lv = linalg.solve(rows, list(_coeffs(_as_one_form(lcs.theta))), alg.dim)
    if evaluate(_as_one_form(lcs.theta), lv) != 0:
        raise StructureError("theta(L) != 0")
    if not lie_derivative_form(alg, lv, lcs.omega).is_zero():
        raise StructureError("the Lee vector field does not preserve omega")
    if not lie_derivative_form(alg, lv, _as_one_form(lcs.theta)).is_zero():
        raise StructureError("the Lee vector field does not preserve theta")
    return lv


def check_infinitesimal_automorphism(alg: LieAlgebra, x, lcs: LcsData) -> AutomorphismReport:
    theta = _as_one_form(lcs.theta)
    preserves = lie_derivative_form(alg, x, lcs.omega).is_zero()
    lee = lie_derivative_form(alg, x, theta).is_zero()
    if preserves and not lee:
        raise StructureError("X preserves omega but not theta, contradicting non-degeneracy")
    return AutomorphismReport(preserves, evaluate(theta, x), lee)


def orientation_report(alg: LieAlgebra, alpha: KForm, beta: KForm) -> OrientationReport:
    """Compare ``omega^(h+1)`` with ``alpha ^ (d alpha)^h ^ beta`` for ``omega = d alpha + alpha ^ beta``."""
    h = pair_type(alg)
    da = ce_differential(alg, alpha)
    omega = da + wedge(alpha, beta)
    top_w = power(omega, h + 1)
    top_p = wedge(wedge(alpha, power(da, h)), beta)
    sw, sp = is_volume(top_w), is_volume(top_p)
    ratio = None
    if sp.is_volume:
        ratio = require_rational(top_w.top_coefficient()) / require_rational(top_p.top_coefficient())
    return OrientationReport(sw.sign, sp.sign, ratio)


def pair_to_lcs(alg: LieAlgebra, alpha: KForm, beta: KForm) -> LcsData:
    """``omega = d alpha + alpha ^ beta`` with Lee form ``beta``."""
    h = pair_type(alg)
    rep = verify_contact_pair(alg, alpha, beta, h, 0)
    if not rep.is_pair:
        raise NotAPairError(f"(alpha, beta) is not a contact pair of type ({h},0)")
    omega = ce_differential(alg, alpha) + wedge(alpha, beta)
    lcs = verify_lcs(alg, omega)
    if lcs.theta != beta:
        raise StructureError(f"Lee form {lcs.theta!r} differs from beta {beta!r}")
    if not orientation_report(alg, alpha, beta).same:
        raise StructureError("omega^(h+1) and alpha ^ (d alpha)^h ^ beta orient differently")
    return lcs


def lcs_to_pair(alg: LieAlgebra, lcs: LcsData, x) -> tuple[ContactPair, ReebPair]:
    """``(alpha, beta) = (-i_X omega, theta)`` for an automorphism ``X`` with ``theta(X) = 1``."""
    x = tuple(require_rational(v) for v in x)
    aut = check_infinitesimal_automorphism(alg, x, lcs)
    if not aut.preserves:
        raise PreconditionError("X does not preserve omega")
    if aut.theta_of_x != 1:
        raise PreconditionError(f"theta(X) = {aut.theta_of_x}, need 1")
    h = pair_type(alg)
    alpha = -interior(x, lcs.omega)
    beta = _as_one_form(lcs.theta)
    rep = verify_contact_pair(alg, alpha, beta, h, 0)
    if not rep.is_pair:
        raise StructureError("(-i_X omega, theta) is not a contact pair")
    reeb = reeb_fields(alg, alpha, beta)
    lv = lee_vector(alg, lcs)
    if reeb.A != lv or reeb.B != x:
        raise StructureError("Reeb fields do not match (L, X)")
    return ContactPair(alpha, beta, h, 0), reeb


FORMAL = "formal"


def generalized_to_lcs(alg: LieAlgebra, alpha: KForm, beta: KForm, c) -> LcsData | Admissibility:
    """The family ``omega_c = d alpha + c alpha ^ beta`` with Lee form ``c beta``.

    With a rational ``c`` returns the lcs data or raises
    DegenerateFormError.  With ``c = "formal"`` returns the exact set of
    excluded values instead.
    """
    h = pair_type(alg)
    rep = verify_contact_pair(alg, alpha, beta, h, 0)
    if not (rep.volume_sign is not None and rep.beta_closed):
        raise NotAPairError(f"(alpha, beta) is not a generalized contact pair of type ({h},0)")
    da = ce_differential(alg, alpha)
    ab = wedge(alpha, beta)
    if isinstance(c, str) and c == FORMAL:
        omega_c = da + ab * formal_c()
        top = power(omega_c, h + 1).top_coefficient()
        coeffs = poly_coefficients(top)
        expected = [
            require_rational(power(da, h + 1).top_coefficient()),
            (h + 1) * require_rational(wedge(power(da, h), ab).top_coefficient()),
        ]
        if (coeffs + [Fraction(0)] * 2)[:2] != expected or len(coeffs) > 2:
            raise StructureError("binomial expansion of omega_c^(h+1) does not match")
        a0, a1 = expected
        if a1 != 0:
            excluded = (-a0 / a1,)
        else:
            excluded = () if a0 != 0 else None
        return Admissibility(h, tuple(expected), excluded)
    c = require_rational(c)
    omega = da + ab * c
    theta = _as_one_form(beta) * c
    if ce_differential(alg, omega) != wedge(omega, theta):
        raise StructureError("d omega_c != omega_c ^ c beta")
    if two_form_rank(omega) != alg.dim:
        raise DegenerateFormError(f"omega_c is degenerate for c = {c}")
    lcs = verify_lcs(alg, omega)
    if lcs.theta != theta:
        raise StructureError("solved Lee form differs from c beta")
    return LcsData(omega, theta)


def verify_symplectic_pair(alg: LieAlgebra, w1: KForm, w2: KForm) -> SymplecticPairReport:
    if alg.dim != 4:
        raise DimensionError(f"symplectic pairs are defined in dimension 4, got {alg.dim}")
    for name, w in (("w1", w1), ("w2", w2)):
        if w.dim != 4 or w.degree != 2:
            raise DimensionError(f"{name} must be a 2-form in dimension 4")
    vol = is_volume(wedge(w1, w2))
    return SymplecticPairReport(
        ce_differential(alg, w1).is_zero(),
        ce_differential(alg, w2).is_zero(),
        vol.sign,
        wedge(w1, w1).is_zero(),
        wedge(w2, w2).is_zero(),
        is_volume(power(w1 + w2, 2)).sign,
        is_volume(power(w1 - w2, 2)).sign,
    )

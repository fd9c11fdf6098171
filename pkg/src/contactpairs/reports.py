"""Verification runners producing structured pass/fail reports.

Each ``run_*`` function takes a :class:`~contactpairs.document.Model` and
names of attached objects, performs one verification and returns a
:class:`Report`.  Failing checks always carry a witness.  These runners
back both the command line and the executable ``checks`` tables of model
documents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any

from . import hermitian, lie, linalg, pairs
from .document import Model, form_to_dict
from .errors import DimensionError, StructureError
from .exterior import KForm, basis_vector, power, wedge
from .scalars import format_rational, parse_rational


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None


@dataclass
class Report:
    command: str
    model: str
    checks: list[Check] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: Any = None) -> bool:
        if not passed and witness is None:
            witness = "condition is false"
        self.checks.append(Check(name, bool(passed), witness))
        return bool(passed)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "model": self.model,
            "ok": self.ok,
            "checks": [{"name": c.name, "passed": c.passed, "witness": to_json(c.witness)} for c in self.checks],
            "data": {k: to_json(v) for k, v in self.data.items()},
        }

    def to_text(self) -> str:
        lines = [f"{self.command} [{self.model}]: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{'pass' if c.passed else 'FAIL'}] {c.name}"
            if not c.passed:
                line += f"  witness: {to_text(c.witness)}"
            lines.append(line)
        for k, v in self.data.items():
            lines.append(f"  {k} = {to_text(v)}")
        return "\n".join(lines)


def to_json(value: Any) -> Any:
    """Exact JSON encoding: rationals become ``"p/q"`` strings, never floats."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, KForm):
        return form_to_dict(value)
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    return str(value)


def to_text(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, KForm):
        return repr(value)
    if isinstance(value, (list, tuple)):
        if value and all(isinstance(v, Fraction) for v in value):
            return "(" + ", ".join(format_rational(v) for v in value) + ")"
        return "[" + ", ".join(to_text(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {to_text(v)}" for k, v in value.items()) + "}"
    return str(value)


def parse_vector(text: str, dim: int) -> tuple[Fraction, ...]:
    parts = [p for p in str(text).split(",")]
    if len(parts) != dim:
        raise DimensionError(f"vector {text!r} has {len(parts)} components, need {dim}")
    return tuple(parse_rational(p.strip()) for p in parts)


def _label(model: Model) -> str:
    return model.name or "model"


def _error(exc: Exception) -> str:
    return f"{type(exc).__name__}: {exc}"


# runners


def run_verify(model: Model) -> Report:
    rep = Report("verify", _label(model))
    alg = model.algebra
    rep.add("jacobi", lie.check_jacobi(alg), _jacobi_witness(alg))
    rep.add("d_squared_zero", lie.d_squared_vanishes(alg))
    for name, g in model.metrics.items():
        try:
            lie.check_metric(g)
            rep.add(f"metric:{name}", True)
        except StructureError as exc:
            rep.add(f"metric:{name}", False, {"error": str(exc), "leading_minors": linalg.leading_minors(g)})
    info = {}
    for name, j in model.endomorphisms.items():
        entry = {"almost_complex": hermitian.is_almost_complex(j)}
        if entry["almost_complex"]:
            entry["integrable"] = hermitian.is_integrable(alg, j)
        entry["derivation"] = lie.is_derivation(alg, j)
        info[name] = entry
    if info:
        rep.data["endomorphisms"] = info
    if model.forms:
        rep.data["differentials"] = {k: lie.ce_differential(alg, f) for k, f in model.forms.items()}
    for i, chk in enumerate(model.checks):
        sub = run_check(model, chk)
        label = f"expect[{i}]:{chk['command']}"
        passed = sub.ok == chk["ok"]
        witness = None
        if not passed:
            witness = {"expected_ok": chk["ok"], "failed": [c.name for c in sub.checks if not c.passed]}
        rep.add(label, passed, witness)
    return rep


def _jacobi_witness(alg: lie.LieAlgebra):
    e = [basis_vector(alg.dim, i) for i in range(alg.dim)]
    for a, b, c in combinations(range(alg.dim), 3):
        parts = [
            lie.bracket(alg, e[a], lie.bracket(alg, e[b], e[c])),
            lie.bracket(alg, e[b], lie.bracket(alg, e[c], e[a])),
            lie.bracket(alg, e[c], lie.bracket(alg, e[a], e[b])),
        ]
        total = tuple(sum(col) for col in zip(*parts))
        if any(total):
            return {"triple": [a + 1, b + 1, c + 1], "jacobiator": total}
    return None


def run_contact_pair(model: Model, alpha: str, beta: str, h: int | None = None, k: int | None = None) -> Report:
    rep = Report("contact-pair", _label(model))
    alg = model.algebra
    a, b = model.form(alpha), model.form(beta)
    if h is None and k is None:
        h, k = pairs.pair_type(alg), 0
    elif h is None:
        h = (alg.dim - 2 - 2 * k) // 2
    elif k is None:
        k = (alg.dim - 2 - 2 * h) // 2
    r = pairs.verify_contact_pair(alg, a, b, h, k)
    da, db = lie.ce_differential(alg, a), lie.ce_differential(alg, b)
    top = wedge(wedge(wedge(a, power(da, h)), b), power(db, k))
    rep.add("volume", r.volume_sign is not None, {"top_form": top})
    rep.add("alpha_power_vanishes", r.alpha_power_vanishes, {"d_alpha_power": power(da, h + 1)})
    rep.add("beta_power_vanishes", r.beta_power_vanishes, {"d_beta_power": power(db, k + 1)})
    rep.data.update(type=[h, k], volume_sign=r.volume_sign, generalized_only=r.is_generalized_only,
                    d_alpha=da, d_beta=db)
    return rep


def run_reeb(model: Model, alpha: str, beta: str) -> Report:
    rep = Report("reeb", _label(model))
    alg = model.algebra
    try:
        rf = pairs.reeb_fields(alg, model.form(alpha), model.form(beta))
    except StructureError as exc:
        rep.add("reeb_fields", False, _error(exc))
        return rep
    rep.add("reeb_fields", True)
    if rf.genuine:
        rep.add("commuting", rf.commuting, {"bracket": lie.bracket(alg, rf.A, rf.B)})
    rep.data.update(A=rf.A, B=rf.B, genuine=rf.genuine, commuting=rf.commuting)
    return rep


def run_to_lcs(model: Model, alpha: str, beta: str, c: str | None = None) -> Report:
    rep = Report("to-lcs", _label(model))
    alg = model.algebra
    a, b = model.form(alpha), model.form(beta)
    if c is None:
        try:
            lcs = pairs.pair_to_lcs(alg, a, b)
        except StructureError as exc:
            rep.add("pair_to_lcs", False, _error(exc))
            return rep
        rep.add("pair_to_lcs", True)
        _lcs_identities(rep, alg, lcs)
        orient = pairs.orientation_report(alg, a, b)
        rep.add("same_orientation", orient.same,
                {"omega_power_sign": orient.omega_power_sign, "pair_volume_sign": orient.pair_volume_sign})
        rep.data.update(omega=lcs.omega, theta=lcs.theta, orientation_sign=orient.omega_power_sign,
                        top_ratio=orient.ratio)
        return rep
    if c == pairs.FORMAL:
        try:
            adm = pairs.generalized_to_lcs(alg, a, b, pairs.FORMAL)
        except StructureError as exc:
            rep.add("generalized_pair", False, _error(exc))
            return rep
        rep.add("generalized_pair", True)
        rep.add("admissible_somewhere", adm.excluded is not None, {"top_coefficient": adm.coefficients})
        rep.data.update(top_coefficient=list(adm.coefficients), excluded=adm.excluded,
                        admissible=adm.describe())
        return rep
    value = parse_rational(c)
    try:
        lcs = pairs.generalized_to_lcs(alg, a, b, value)
    except StructureError as exc:
        rep.add("generalized_to_lcs", False, _error(exc))
        return rep
    rep.add("generalized_to_lcs", True)
    _lcs_identities(rep, alg, lcs)
    rep.data.update(c=value, omega=lcs.omega, theta=lcs.theta)
    return rep


def _lcs_identities(rep: Report, alg, lcs: pairs.LcsData) -> None:
    d_omega = lie.ce_differential(alg, lcs.omega)
    rhs = wedge(lcs.omega, lcs.theta)
    rep.add("d_omega_eq_omega_wedge_theta", d_omega == rhs, {"d_omega": d_omega, "omega_wedge_theta": rhs})
    rep.add("theta_closed", lie.ce_differential(alg, lcs.theta).is_zero())
    try:
        lv = pairs.lee_vector(alg, lcs)
        rep.add("lee_vector", True)
        rep.data["lee_vector"] = lv
    except StructureError as exc:
        rep.add("lee_vector", False, _error(exc))


def run_lcs(model: Model, omega: str) -> Report:
    rep = Report("lcs", _label(model))
    alg = model.algebra
    w = model.form(omega)
    try:
        lcs = pairs.verify_lcs(alg, w)
    except StructureError as exc:
        rep.add("lcs", False, _error(exc))
        return rep
    rep.add("lcs", True)
    _lcs_identities(rep, alg, lcs)
    rep.data.update(theta=lcs.theta, rank=alg.dim)
    return rep


def run_from_lcs(model: Model, omega: str, x: str) -> Report:
    rep = Report("from-lcs", _label(model))
    alg = model.algebra
    xv = parse_vector(x, alg.dim)
    try:
        lcs = pairs.verify_lcs(alg, model.form(omega))
    except StructureError as exc:
        rep.add("lcs", False, _error(exc))
        return rep
    rep.add("lcs", True)
    aut = pairs.check_infinitesimal_automorphism(alg, xv, lcs)
    rep.add("x_preserves_omega", aut.preserves, {"L_X_omega": lie.lie_derivative_form(alg, xv, lcs.omega)})
    rep.add("theta_of_x_is_one", aut.theta_of_x == 1, {"theta_of_x": aut.theta_of_x})
    if not rep.ok:
        return rep
    try:
        cp, reeb = pairs.lcs_to_pair(alg, lcs, xv)
    except StructureError as exc:
        rep.add("lcs_to_pair", False, _error(exc))
        return rep
    rep.add("lcs_to_pair", True)
    back = pairs.pair_to_lcs(alg, cp.alpha, cp.beta)
    rep.add("round_trip", back == lcs, {"omega": back.omega, "theta": back.theta})
    rep.data.update(alpha=cp.alpha, beta=cp.beta, A=reeb.A, B=reeb.B)
    return rep


def run_nijenhuis(model: Model, j: str) -> Report:
    rep = Report("nijenhuis", _label(model))
    jm = model.endomorphism(j)
    if not rep.add("almost_complex", hermitian.is_almost_complex(jm),
                   {"J_squared": linalg.matmul(jm, jm)}):
        return rep
    w = hermitian.nijenhuis_witness(model.algebra, jm)
    rep.add("integrable", w is None, None if w is None else {"pair": [w[0] + 1, w[1] + 1], "N": w[2]})
    return rep


def run_normal(model: Model, alpha: str, beta: str, j: str, g: str) -> Report:
    rep = Report("normal", _label(model))
    alg = model.algebra
    a, b = model.form(alpha), model.form(beta)
    try:
        mcp = hermitian.metric_contact_pair(alg, a, b, model.endomorphism(j), model.metric(g))
        nr = hermitian.is_normal(alg, mcp)
    except StructureError as exc:
        rep.add("metric_contact_pair", False, _error(exc))
        return rep
    rep.add("metric_contact_pair", True)
    wj = wt = None
    if nr.witness:
        w = {"tensor": nr.witness[0], "pair": [nr.witness[1] + 1, nr.witness[2] + 1], "N": nr.witness[3]}
        wj = w if nr.witness[0] == "N_J" else None
        wt = w if nr.witness[0] == "N_T" else None
    rep.add("J_integrable", nr.J_integrable, wj)
    rep.add("T_integrable", nr.T_integrable, wt)
    rep.add("L_A_J_zero", nr.L_AJ_zero, {"L_A_J": lie.lie_derivative_endo(alg, mcp.A, mcp.J)})
    rep.add("L_B_J_zero", nr.L_BJ_zero, {"L_B_J": lie.lie_derivative_endo(alg, mcp.B, mcp.J)})
    rep.add("normality_criteria_agree", nr.equivalence_holds)
    orient = hermitian.fundamental_orientations(alg, a, b)
    rep.add("opposite_orientations", orient.opposite, {"J": orient.j_sign, "T": orient.t_sign})
    rep.data.update(A=mcp.A, B=mcp.B, T=nr.T, J_orientation=orient.j_sign, T_orientation=orient.t_sign)
    return rep


def run_vaisman(model: Model, j: str, g: str) -> Report:
    rep = Report("vaisman", _label(model))
    alg = model.algebra
    try:
        vr = hermitian.vaisman_check(alg, model.endomorphism(j), model.metric(g))
    except StructureError as exc:
        rep.add("lck", False, _error(exc))
        return rep
    rep.add("lck", True)
    rep.add("J_integrable", vr.J_integrable)
    rep.data.update(kind=vr.kind, omega=vr.omega, lee_form=vr.theta, norm_squared=vr.norm_squared)
    if vr.kind == "kahler":
        return rep
    rep.add("lee_form_parallel", bool(vr.parallel), {"nabla_theta": vr.nabla_theta})
    rep.add("U_killing", bool(vr.U_killing))
    rep.add("V_killing", bool(vr.V_killing))
    rep.add("L_U_J_zero", bool(vr.L_UJ_zero))
    rep.add("L_V_J_zero", bool(vr.L_VJ_zero))
    rep.add("U_V_commute", bool(vr.UV_commute))
    rep.add("d_alpha_identity", bool(vr.structure_identity))
    rep.add("killing_criterion_agrees", bool(vr.killing_criterion_agrees))
    rep.data.update(U=vr.U, V=vr.V, alpha=vr.alpha, beta=vr.beta, lee_sign=vr.lee_sign)
    if vr.is_vaisman:
        try:
            mcp, scale = hermitian.vaisman_to_mcp(alg, model.endomorphism(j), model.metric(g))
            nr = hermitian.is_normal(alg, mcp)
            rep.add("normal_metric_contact_pair", nr.normal, nr.witness)
            rep.data.update(pair_alpha=mcp.alpha, pair_beta=mcp.beta, metric_scale=scale)
        except StructureError as exc:
            rep.add("normal_metric_contact_pair", False, _error(exc))
    return rep


def run_symplectic_pair(model: Model, w1: str, w2: str) -> Report:
    rep = Report("symplectic-pair", _label(model))
    alg = model.algebra
    a, b = model.form(w1), model.form(w2)
    sp = pairs.verify_symplectic_pair(alg, a, b)
    rep.add("w1_closed", sp.first_closed, {"d_w1": lie.ce_differential(alg, a)})
    rep.add("w2_closed", sp.second_closed, {"d_w2": lie.ce_differential(alg, b)})
    rep.add("volume", sp.volume_sign is not None, {"w1_wedge_w2": wedge(a, b)})
    rep.add("w1_square_zero", sp.first_square_zero, {"w1_squared": wedge(a, a)})
    rep.add("w2_square_zero", sp.second_square_zero, {"w2_squared": wedge(b, b)})
    opposite = sp.sum_sign is not None and sp.difference_sign is not None and sp.sum_sign == -sp.difference_sign
    rep.add("sum_difference_opposite", opposite, {"sum": sp.sum_sign, "difference": sp.difference_sign})
    rep.data.update(sum_sign=sp.sum_sign, difference_sign=sp.difference_sign)
    return rep


def run_kahler_pair(model: Model, w1: str, w2: str, j: str, g: str) -> Report:
    rep = Report("kahler-pair", _label(model))
    alg = model.algebra
    try:
        kr = hermitian.kahler_pair_check(alg, model.form(w1), model.form(w2), model.endomorphism(j), model.metric(g))
    except StructureError as exc:
        rep.add("kahler_pair", False, _error(exc))
        return rep
    for name in ("J_integrable", "T_integrable", "compatible", "J_fundamental_matches", "T_fundamental_matches",
                 "nabla_J_zero", "nabla_T_zero", "sum_closed", "difference_closed"):
        rep.add(name, getattr(kr, name))
    s, d = kr.orientation_signs
    rep.add("opposite_orientations", s is not None and d is not None and s == -d, {"J": s, "T": d})
    rep.data.update(T=kr.T)
    return rep


def run_derivation(model: Model, d: str, alpha: str, beta: str, j: str | None = None) -> Report:
    """An outer infinitesimal symmetry (e.g. a circle action) preserving the pair."""
    rep = Report("derivation", _label(model))
    alg = model.algebra
    dm = model.endomorphism(d)
    a, b = model.form(alpha), model.form(beta)
    rep.add("derivation", lie.is_derivation(alg, dm))
    rep.add("preserves_alpha", lie.derivation_action(dm, a).is_zero(), {"R_alpha": lie.derivation_action(dm, a)})
    rep.add("preserves_beta", lie.derivation_action(dm, b).is_zero(), {"R_beta": lie.derivation_action(dm, b)})
    if j is not None:
        jm = model.endomorphism(j)
        comm = tuple(tuple(x - y for x, y in zip(r1, r2))
                     for r1, r2 in zip(linalg.matmul(dm, jm), linalg.matmul(jm, dm)))
        rep.add("commutes_with_J", linalg.is_zero(comm), {"commutator": comm})
    return rep


def write_lcs_model(model: Model, rep: Report, path) -> None:
    """Write ``model`` with the lcs form and Lee form of a ``to-lcs`` report attached."""
    from dataclasses import replace

    from .document import dump_model

    forms = dict(model.forms)
    forms["omega"] = rep.data["omega"]
    forms["theta"] = rep.data["theta"]
    dump_model(replace(model, forms=forms, checks=()), path)


RUNNERS = {
    "verify": run_verify,
    "contact-pair": run_contact_pair,
    "reeb": run_reeb,
    "to-lcs": run_to_lcs,
    "from-lcs": run_from_lcs,
    "lcs": run_lcs,
    "nijenhuis": run_nijenhuis,
    "normal": run_normal,
    "vaisman": run_vaisman,
    "symplectic-pair": run_symplectic_pair,
    "kahler-pair": run_kahler_pair,
    "derivation": run_derivation,
}


def run_check(model: Model, check: dict) -> Report:
    """Execute one ``{"command", "args", "ok"}`` entry of a checks table."""
    command = check["command"]
    if command == "verify" or command not in RUNNERS:
        raise KeyError(f"unknown check command {command!r}")
    return RUNNERS[command](model, **check.get("args", {}))


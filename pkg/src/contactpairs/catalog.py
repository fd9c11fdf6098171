"""Built-in fixture models.

Each entry is a model document (the same JSON shape the command line
reads) with designated forms, complex structures, metrics, a provenance
note and a table of expected verification outcomes.  The tables are
executable: :func:`reproduce` runs every row through the real operations.
"""

from __future__ import annotations

import copy

from .document import Model, model_from_dict


def _d(table: dict[int, list[tuple[int, int, str]]]) -> dict:
    return {f"w{k}": [{"i": i, "j": j, "coeff": c} for i, j, c in rows] for k, rows in table.items()}


def _one(*terms: tuple[int, str]) -> dict:
    return {"degree": 1, "terms": [{"indices": [i], "coeff": c} for i, c in terms]}


def _two(*terms: tuple[int, int, str]) -> dict:
    return {"degree": 2, "terms": [{"indices": [i, j], "coeff": c} for i, j, c in terms]}


def _endo(dim: int, images: dict[int, dict[int, str]]) -> list[list[str]]:
    """Matrix whose column ``j`` is the image of ``e_j`` (one-based)."""
    m = [["0"] * dim for _ in range(dim)]
    for j, image in images.items():
        for i, c in image.items():
            m[i - 1][j - 1] = c
    return m


def _identity(dim: int) -> list[list[str]]:
    return [["1" if i == j else "0" for j in range(dim)] for i in range(dim)]


def _check(command: str, ok: bool, **args) -> dict:
    return {"command": command, "args": args, "ok": ok}


def _contact_fixture(name: str, d: dict, alpha: str, beta: str, j: list, provenance: str,
                     extra_endos: dict | None = None, extra_checks: list | None = None) -> dict:
    endos = {"J": j}
    endos.update(extra_endos or {})
    checks = [
        _check("contact-pair", True, alpha=alpha, beta=beta, h=1, k=0),
        _check("reeb", True, alpha=alpha, beta=beta),
        _check("to-lcs", True, alpha=alpha, beta=beta),
        _check("to-lcs", True, alpha=alpha, beta=beta, c="formal"),
        _check("to-lcs", True, alpha=alpha, beta=beta, c="1"),
        _check("to-lcs", False, alpha=alpha, beta=beta, c="0"),
        _check("lcs", True, omega="omega"),
        _check("from-lcs", True, omega="omega", x="0,0,0,1"),
        _check("nijenhuis", True, j="J"),
        _check("normal", True, alpha=alpha, beta=beta, j="J", g="g"),
        _check("vaisman", True, j="J", g="g"),
        _check("contact-pair", False, alpha=beta, beta=alpha, h=1, k=0),
        _check("symplectic-pair", False, w1="omega", w2="omega"),
    ]
    checks += extra_checks or []
    return {
        "name": name,
        "dimension": 4,
        "coframe": ["w1", "w2", "w3", "w4"],
        "d": d,
        "forms": {},
        "endomorphisms": endos,
        "metrics": {"g": _identity(4)},
        "checks": checks,
        "provenance": provenance,
    }


def _with_forms(doc: dict, **forms) -> dict:
    doc["forms"] = forms
    return doc


# Circle action rotating span(e1, e2): R e1 = e2, R e2 = -e1.
_ROTATION = _endo(4, {1: {2: "1"}, 2: {1: "-1"}})

_SL2 = _with_forms(
    _contact_fixture(
        "sl2r_x_r",
        _d({1: [(2, 3, "1")], 2: [(1, 3, "-1")], 3: [(1, 2, "-1")]}),
        "w3", "w4",
        # J e1 = e2, J e4 = -e3 (hence J e2 = -e1, J e3 = e4)
        _endo(4, {1: {2: "1"}, 2: {1: "-1"}, 3: {4: "1"}, 4: {3: "-1"}}),
        "Universal cover of SL(2,R) times R, structure equations and J as stated for the "
        "normal metric contact pair (w3, w4) with Reeb fields e3, e4. Metric sum of w_i^2.",
        {"R": _ROTATION},
        [_check("derivation", True, d="R", alpha="w3", beta="w4", j="J")],
    ),
    alpha=_one((3, "1")),
    beta=_one((4, "1")),
    # omega = d alpha + alpha ^ beta = -w1^w2 + w3^w4
    omega=_two((1, 2, "-1"), (3, 4, "1")),
)

_NIL = _with_forms(
    _contact_fixture(
        "nil3_x_r",
        _d({3: [(1, 2, "-1")]}),
        "w3", "w4",
        # J e1 = e2, J e3 = e4
        _endo(4, {1: {2: "1"}, 2: {1: "-1"}, 3: {4: "1"}, 4: {3: "-1"}}),
        "Heisenberg group times R, structure equations and J as stated for the normal "
        "metric contact pair (w3, w4) with Reeb fields e3, e4. Metric sum of w_i^2.",
        {"R": _ROTATION},
        [_check("derivation", True, d="R", alpha="w3", beta="w4", j="J")],
    ),
    alpha=_one((3, "1")),
    beta=_one((4, "1")),
    omega=_two((1, 2, "-1"), (3, 4, "1")),
)

_S3 = _with_forms(
    _contact_fixture(
        "s3_x_r",
        _d({1: [(2, 3, "-1")], 2: [(1, 3, "1")], 3: [(1, 2, "-1")]}),
        "w1", "w4",
        # J e2 = e3, J e1 = e4
        _endo(4, {2: {3: "1"}, 3: {2: "-1"}, 1: {4: "1"}, 4: {1: "-1"}}),
        "Derived: su(2) + R with dw1 = -w2^w3, dw2 = -w3^w1, dw3 = -w1^w2, so "
        "[e1,e2] = e3 cyclically. d(w1) = -w2^w3 has (d w1)^2 = 0 and "
        "w1 ^ dw1 ^ w4 = -w1^w2^w3^w4, a contact pair of type (1,0) with Reeb fields e1, e4. "
        "J rotates span(e2,e3) and span(e1,e4); a bracket and Nijenhuis expansion shows "
        "N_J = N_T = 0. The Hopf-surface geometry S^3 x R.",
    ),
    alpha=_one((1, "1")),
    beta=_one((4, "1")),
    # d alpha + alpha ^ beta = -w2^w3 + w1^w4
    omega=_two((2, 3, "-1"), (1, 4, "1")),
)


def _kahler_fixture(name: str, d: dict, provenance: str, forms: dict, extra_checks: list) -> dict:
    # Kähler structures on the factors: J e2 = e1 on span(e1,e2), J e4 = e3 on span(e3,e4)
    j = _endo(4, {2: {1: "1"}, 1: {2: "-1"}, 4: {3: "1"}, 3: {4: "-1"}})
    base = {"w12": _two((1, 2, "1")), "w34": _two((3, 4, "1"))}
    base.update(forms)
    return {
        "name": name,
        "dimension": 4,
        "coframe": ["w1", "w2", "w3", "w4"],
        "d": d,
        "forms": base,
        "endomorphisms": {"J": j},
        "metrics": {"g": _identity(4)},
        "checks": [
            _check("symplectic-pair", True, w1="w12", w2="w34"),
            _check("kahler-pair", True, w1="w12", w2="w34", j="J", g="g"),
            _check("nijenhuis", True, j="J"),
            _check("vaisman", True, j="J", g="g"),
            _check("symplectic-pair", False, w1="w12", w2="w12"),
        ] + extra_checks,
        "provenance": provenance,
    }


_C2 = _kahler_fixture(
    "c2",
    {},
    "Abelian R^4 with the flat metric; w1^w2 and w3^w4 are closed with vanishing squares "
    "and wedge to the volume form, so they form a symplectic pair. Kähler case of the "
    "Lee form check.",
    {},
    [_check("contact-pair", False, alpha="w3", beta="w4", h=1, k=0)],
)

_H2H2 = _kahler_fixture(
    "h2_x_h2",
    _d({2: [(1, 2, "-1")], 4: [(3, 4, "-1")]}),
    "Derived: the solvable group of the hyperbolic plane is the 2-dimensional Lie algebra "
    "[e1,e2] = e2, i.e. dw2 = -w1^w2; take two copies. Closure: d(w1^w2) = dw1^w2 - w1^dw2 "
    "= w1^w1^w2 = 0 and likewise d(w3^w4) = 0, so (w1^w2, w3^w4) is a symplectic pair. "
    "The pair (w2 + w4, w1) is a generalized contact pair only: dw1 = 0, "
    "(w2+w4)^d(w2+w4)^w1 = w1^w2^w3^w4 but (d(w2+w4))^2 = 2 w1^w2^w3^w4; "
    "the top coefficient of (d alpha + c alpha^beta)^2 is 2 + 2c, so c = -1 is excluded.",
    {"alpha": _one((2, "1"), (4, "1")), "beta": _one((1, "1"))},
    [
        _check("contact-pair", False, alpha="alpha", beta="beta", h=1, k=0),
        _check("reeb", True, alpha="alpha", beta="beta"),
        _check("to-lcs", True, alpha="alpha", beta="beta", c="formal"),
        _check("to-lcs", True, alpha="alpha", beta="beta", c="1"),
        _check("to-lcs", False, alpha="alpha", beta="beta", c="-1"),
    ],
)

_CH2 = _kahler_fixture(
    "c_x_h2",
    _d({4: [(3, 4, "-1")]}),
    "Derived: flat R^2 times the hyperbolic plane algebra dw4 = -w3^w4. "
    "d(w1^w2) = 0 trivially and d(w3^w4) = w3^w3^w4 = 0, so (w1^w2, w3^w4) is a "
    "symplectic pair.",
    {},
    [],
)

_ENTRIES = {doc["name"]: doc for doc in (_SL2, _NIL, _C2, _H2H2, _CH2, _S3)}


def list_models() -> list[str]:
    return list(_ENTRIES)


def document(name: str) -> dict:
    """The raw model document of a catalog entry (a fresh copy)."""
    try:
        return copy.deepcopy(_ENTRIES[name])
    except KeyError:
        raise KeyError(f"unknown catalog model {name!r}; known: {', '.join(_ENTRIES)}") from None


def load_model(name: str) -> Model:
    return model_from_dict(document(name))


def reproduce(name: str) -> list[tuple[dict, bool]]:
    """Run every expected-outcome row; returns ``(row, reproduced)`` pairs."""
    from .reports import run_check

    model = load_model(name)
    return [(row, run_check(model, row).ok == row["ok"]) for row in model.checks]

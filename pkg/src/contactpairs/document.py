"""Models with named attachments, and their JSON document format.

A document describes a Lie algebra by its coframe differentials (``"d"``)
or by brackets (``"brackets"``), plus named forms, endomorphisms and
metrics.  Indices are one-based and every coefficient is a string ``"p"``
or ``"p/q"``.  Endomorphism and metric matrices are row-major; entry
``[i][j]`` of an endomorphism is the ``e_i`` component of the image of
``e_j``.  See ``schemas/model.schema.json``.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Any

from .exterior import KForm
from .lie import LieAlgebra
from .linalg import Matrix
from .scalars import format_rational, parse_rational


class DocumentError(ValueError):
    """A model document is malformed; ``path`` locates the offending value."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path or '(root)'}: {message}")


@dataclass(frozen=True)
class Model:
    """A Lie algebra together with named forms, endomorphisms and metrics."""

    algebra: LieAlgebra
    coframe: tuple[str, ...]
    forms: Mapping[str, KForm] = field(default_factory=dict)
    endomorphisms: Mapping[str, Matrix] = field(default_factory=dict)
    metrics: Mapping[str, Matrix] = field(default_factory=dict)
    name: str = ""
    checks: tuple[dict, ...] = ()
    provenance: str = ""

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def form(self, name: str) -> KForm:
        if name in self.forms:
            return self.forms[name]
        if name in self.coframe:
            return KForm.basis(self.dim, self.coframe.index(name))
        raise KeyError(f"no form named {name!r}")

    def endomorphism(self, name: str) -> Matrix:
        try:
            return self.endomorphisms[name]
        except KeyError:
            raise KeyError(f"no endomorphism named {name!r}") from None

    def metric(self, name: str) -> Matrix:
        try:
            return self.metrics[name]
        except KeyError:
            raise KeyError(f"no metric named {name!r}") from None


def schema(name: str = "model") -> dict:
    """Load a published JSON schema (``"model"`` or ``"report"``)."""
    text = resources.files("contactpairs").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


# parsing


def _rational(value: Any, path: str):
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from None


def _index(value: Any, dim: int, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= dim:
        raise DocumentError(path, f"index must be an integer in 1..{dim}, got {value!r}")
    return value - 1


def _matrix(value: Any, dim: int, path: str) -> Matrix:
    if not isinstance(value, list) or len(value) != dim:
        raise DocumentError(path, f"expected a {dim}x{dim} matrix")
    rows = []
    for r, row in enumerate(value):
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentError(f"{path}[{r}]", f"expected a row of length {dim}")
        rows.append(tuple(_rational(x, f"{path}[{r}][{c}]") for c, x in enumerate(row)))
    return tuple(rows)


def _form(value: Any, dim: int, path: str) -> KForm:
    if not isinstance(value, dict):
        raise DocumentError(path, "expected an object with 'degree' and 'terms'")
    degree = value.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or not 0 <= degree <= dim:
        raise DocumentError(f"{path}.degree", f"degree must be an integer in 0..{dim}")
    terms = value.get("terms", [])
    if not isinstance(terms, list):
        raise DocumentError(f"{path}.terms", "expected a list")
    out = []
    for t, term in enumerate(terms):
        tp = f"{path}.terms[{t}]"
        if not isinstance(term, dict) or "indices" not in term or "coeff" not in term:
            raise DocumentError(tp, "expected {indices, coeff}")
        idx = term["indices"]
        if not isinstance(idx, list) or len(idx) != degree:
            raise DocumentError(f"{tp}.indices", f"expected {degree} indices")
        idx = tuple(_index(i, dim, f"{tp}.indices[{p}]") for p, i in enumerate(idx))
        out.append((idx, _rational(term["coeff"], f"{tp}.coeff")))
    return KForm(dim, degree, out)


def model_from_dict(doc: Any) -> Model:
    if not isinstance(doc, dict):
        raise DocumentError("", "document must be a JSON object")
    dim = doc.get("dimension")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DocumentError("dimension", "must be a positive integer")
    names = doc.get("coframe", [f"w{i + 1}" for i in range(dim)])
    if not isinstance(names, list) or len(names) != dim or not all(isinstance(x, str) for x in names):
        raise DocumentError("coframe", f"expected {dim} names")
    if len(set(names)) != dim:
        raise DocumentError("coframe", "names must be distinct")
    if "d" not in doc and "brackets" not in doc:
        raise DocumentError("", "one of 'd' or 'brackets' is required")

    from_d = from_br = None
    if "d" in doc:
        table = doc["d"]
        if not isinstance(table, dict):
            raise DocumentError("d", "expected an object keyed by coframe names")
        diffs = [[] for _ in range(dim)]
        for key, entries in table.items():
            if key not in names:
                raise DocumentError(f"d.{key}", "unknown coframe name")
            if not isinstance(entries, list):
                raise DocumentError(f"d.{key}", "expected a list of {i, j, coeff}")
            for e, entry in enumerate(entries):
                ep = f"d.{key}[{e}]"
                if not isinstance(entry, dict) or not {"i", "j", "coeff"} <= entry.keys():
                    raise DocumentError(ep, "expected {i, j, coeff}")
                i = _index(entry["i"], dim, f"{ep}.i")
                j = _index(entry["j"], dim, f"{ep}.j")
                if i >= j:
                    raise DocumentError(ep, "need i < j")
                diffs[names.index(key)].append(((i, j), _rational(entry["coeff"], f"{ep}.coeff")))
        from_d = LieAlgebra.from_differentials([KForm(dim, 2, t) for t in diffs])
    if "brackets" in doc:
        entries = doc["brackets"]
        if not isinstance(entries, list):
            raise DocumentError("brackets", "expected a list of {i, j, k, coeff}")
        br: dict[tuple[int, int], dict[int, Any]] = {}
        for e, entry in enumerate(entries):
            ep = f"brackets[{e}]"
            if not isinstance(entry, dict) or not {"i", "j", "k", "coeff"} <= entry.keys():
                raise DocumentError(ep, "expected {i, j, k, coeff}")
            i = _index(entry["i"], dim, f"{ep}.i")
            j = _index(entry["j"], dim, f"{ep}.j")
            k = _index(entry["k"], dim, f"{ep}.k")
            if i >= j:
                raise DocumentError(ep, "need i < j")
            slot = br.setdefault((i, j), {})
            slot[k] = slot.get(k, 0) + _rational(entry["coeff"], f"{ep}.coeff")
        from_br = LieAlgebra.from_brackets(dim, br)
    if from_d is not None and from_br is not None and from_d.constants != from_br.constants:
        raise DocumentError("brackets", "bracket table disagrees with the 'd' table")
    algebra = from_d if from_d is not None else from_br
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise DocumentError("name", "must be a string")
    algebra = LieAlgebra(dim, algebra.constants, name)

    def section(key):
        value = doc.get(key, {})
        if not isinstance(value, dict):
            raise DocumentError(key, "expected an object keyed by names")
        return value

    forms = {k: _form(v, dim, f"forms.{k}") for k, v in section("forms").items()}
    endos = {k: _matrix(v, dim, f"endomorphisms.{k}") for k, v in section("endomorphisms").items()}
    metrics = {k: _matrix(v, dim, f"metrics.{k}") for k, v in section("metrics").items()}
    checks = doc.get("checks", [])
    if not isinstance(checks, list) or not all(isinstance(c, dict) for c in checks):
        raise DocumentError("checks", "expected a list of objects")
    for c, chk in enumerate(checks):
        if not isinstance(chk.get("command"), str) or not isinstance(chk.get("ok"), bool):
            raise DocumentError(f"checks[{c}]", "expected {command, args, ok}")
    provenance = doc.get("provenance", "")
    return Model(algebra, tuple(names), forms, endos, metrics, name, tuple(checks), str(provenance))


def load_model(path: str | Path) -> Model:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DocumentError("", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return model_from_dict(doc)


# serialization


def form_to_dict(a: KForm) -> dict:
    return {
        "degree": a.degree,
        "terms": [{"indices": [i + 1 for i in idx], "coeff": format_rational(v)} for idx, v in a.terms.items()],
    }


def matrix_to_list(m) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m]


def model_to_dict(model: Model) -> dict:
    dim = model.dim
    d_table = {}
    for name, dw in zip(model.coframe, model.algebra.differentials()):
        d_table[name] = [{"i": i + 1, "j": j + 1, "coeff": format_rational(v)} for (i, j), v in dw.terms.items()]
    brackets = []
    for i, j in combinations(range(dim), 2):
        for k in range(dim):
            c = model.algebra.structure_constant(i, j, k)
            if c:
                brackets.append({"i": i + 1, "j": j + 1, "k": k + 1, "coeff": format_rational(c)})
    doc = {
        "name": model.name,
        "dimension": dim,
        "coframe": list(model.coframe),
        "d": d_table,
        "brackets": brackets,
        "forms": {k: form_to_dict(v) for k, v in model.forms.items()},
        "endomorphisms": {k: matrix_to_list(v) for k, v in model.endomorphisms.items()},
        "metrics": {k: matrix_to_list(v) for k, v in model.metrics.items()},
    }
    if model.checks:
        doc["checks"] = [dict(c) for c in model.checks]
    if model.provenance:
        doc["provenance"] = model.provenance
    return doc


def dump_model(model: Model, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(model), fh, indent=2)
        fh.write("\n")

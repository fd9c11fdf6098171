import pytest

from contactpairs import catalog
from contactpairs.hermitian import is_normal, metric_contact_pair, vaisman_check
from contactpairs.lie import check_jacobi, derivation_action, is_derivation
from contactpairs.pairs import verify_contact_pair

NAMES = ["sl2r_x_r", "nil3_x_r", "c2", "h2_x_h2", "c_x_h2", "s3_x_r"]


def test_list_models():
    assert catalog.list_models() == NAMES


def test_unknown_model():
    with pytest.raises(KeyError, match="unknown catalog model"):
        catalog.load_model("torus")


@pytest.mark.parametrize("name", NAMES)
def test_entry_is_populated(name):
    m = catalog.load_model(name)
    assert m.name == name and m.dim == 4
    assert check_jacobi(m.algebra)
    assert m.provenance and m.checks
    assert "J" in m.endomorphisms and "g" in m.metrics
    assert any(not row["ok"] for row in m.checks)


@pytest.mark.parametrize("name", NAMES)
def test_expected_outcomes_reproduce(name):
    failures = [row for row, ok in catalog.reproduce(name) if not ok]
    assert failures == []


def test_derived_entries_carry_derivations():
    for name in ("h2_x_h2", "c_x_h2", "s3_x_r"):
        assert catalog.load_model(name).provenance.startswith("Derived")


def test_documents_are_copies():
    doc = catalog.document("nil3_x_r")
    doc["forms"].clear()
    assert catalog.load_model("nil3_x_r").forms


def test_nil_contact_pair():
    m = catalog.load_model("nil3_x_r")
    assert verify_contact_pair(m.algebra, m.form("alpha"), m.form("beta"), 1).is_pair


def test_c2_is_kahler_case():
    m = catalog.load_model("c2")
    assert vaisman_check(m.algebra, m.endomorphism("J"), m.metric("g")).kind == "kahler"


def test_s3_normal():
    m = catalog.load_model("s3_x_r")
    mcp = metric_contact_pair(m.algebra, m.form("alpha"), m.form("beta"), m.endomorphism("J"), m.metric("g"))
    r = is_normal(m.algebra, mcp)
    assert r.J_integrable and r.T_integrable and r.L_AJ_zero and r.L_BJ_zero


@pytest.mark.parametrize("name", ["sl2r_x_r", "nil3_x_r"])
def test_circle_action_preserves_pair(name):
    m = catalog.load_model(name)
    r = m.endomorphism("R")
    assert is_derivation(m.algebra, r)
    assert derivation_action(r, m.form("alpha")).is_zero()
    assert derivation_action(r, m.form("beta")).is_zero()

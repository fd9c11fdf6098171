import json

import jsonschema
import pytest

from contactpairs import catalog
from contactpairs.document import DocumentError, load_model, model_from_dict, model_to_dict, schema

NIL = {"dimension": 4, "d": {"w3": [{"i": 1, "j": 2, "coeff": "-1"}]}}


def validator():
    return jsonschema.Draft202012Validator(schema("model"))


@pytest.mark.parametrize("name", catalog.list_models())
def test_catalog_documents_match_schema_and_round_trip(name):
    model = catalog.load_model(name)
    doc = model_to_dict(model)
    validator().validate(doc)
    again = model_from_dict(json.loads(json.dumps(doc)))
    assert again == model


def test_brackets_and_d_agree():
    doc = dict(NIL, brackets=[{"i": 1, "j": 2, "k": 3, "coeff": "1"}])
    assert model_from_dict(doc).algebra.constants == model_from_dict(NIL).algebra.constants
    only = {"dimension": 4, "brackets": doc["brackets"]}
    assert model_from_dict(only).algebra.constants == model_from_dict(NIL).algebra.constants


def test_brackets_disagreeing_with_d():
    doc = dict(NIL, brackets=[{"i": 1, "j": 2, "k": 3, "coeff": "-1"}])
    with pytest.raises(DocumentError, match="disagrees"):
        model_from_dict(doc)


@pytest.mark.parametrize("coeff,message", [("1.5", "malformed"), ("1/0", "zero denominator"), ("x", "malformed")])
def test_malformed_coefficients_carry_position(coeff, message):
    doc = {"dimension": 4, "d": {"w3": [{"i": 1, "j": 2, "coeff": "-1"}, {"i": 1, "j": 4, "coeff": coeff}]}}
    with pytest.raises(DocumentError, match=message) as info:
        model_from_dict(doc)
    assert info.value.path == "d.w3[1].coeff"


@pytest.mark.parametrize("doc,path", [
    ({"d": {}}, "dimension"),
    ({"dimension": 4}, ""),
    ({"dimension": 4, "d": {"w9": []}}, "d.w9"),
    ({"dimension": 4, "d": {"w1": [{"i": 2, "j": 1, "coeff": "1"}]}}, "d.w1[0]"),
    ({"dimension": 4, "d": {"w1": [{"i": 1, "j": 5, "coeff": "1"}]}}, "d.w1[0].j"),
    ({"dimension": 4, "d": {}, "forms": {"a": {"degree": 2, "terms": [{"indices": [1], "coeff": "1"}]}}},
     "forms.a.terms[0].indices"),
    ({"dimension": 4, "d": {}, "metrics": {"g": [["1"]]}}, "metrics.g"),
    ({"dimension": 2, "d": {}, "endomorphisms": {"J": [["0", "-1"], ["1", "0.5"]]}}, "endomorphisms.J[1][1]"),
    ({"dimension": 4, "d": {}, "coframe": ["a", "a", "b", "c"]}, "coframe"),
])
def test_structural_errors(doc, path):
    with pytest.raises(DocumentError) as info:
        model_from_dict(doc)
    assert info.value.path == path


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"dimension": 4,')
    with pytest.raises(DocumentError, match="invalid JSON at line 1"):
        load_model(p)


def test_schema_rejects_float_coefficients():
    doc = {"dimension": 4, "d": {"w3": [{"i": 1, "j": 2, "coeff": 1.5}]}}
    assert not validator().is_valid(doc)
    assert not validator().is_valid({"dimension": 4, "d": {"w3": [{"i": 1, "j": 2, "coeff": "1.5"}]}})

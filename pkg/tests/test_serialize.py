import json

import pytest
from hypothesis import given

from hopfoid.finite_dual import equal
from hopfoid.parser import parse_matrix
from hopfoid.picard_vessiot import PVRing, pv_fundamental
from hopfoid.serialize import (class_from_json, class_to_json, dumps, fundamental_from_json,
                               fundamental_to_json, load_file, module_from_json, module_to_json)
from conftest import classes, modules


@given(modules(3, 2))
def test_module_round_trip(M):
    assert module_from_json(json.loads(dumps(module_to_json(M)))) == M


@given(classes())
def test_class_round_trip(c):
    d = class_from_json(dumps(class_to_json(c)))
    assert d.module == c.module and d.functional == c.functional and d.vector == c.vector
    assert equal(c, d)


def test_fundamental_round_trip(tmp_path):
    F = pv_fundamental(PVRing(parse_matrix("x, 1; 0, x^2")), 5)
    path = tmp_path / "f.json"
    path.write_text(dumps(fundamental_to_json(F)))
    G = fundamental_from_json(load_file(path))
    assert G.rows == F.rows and G.satisfies_system()


def test_bad_module_json():
    with pytest.raises(ValueError):
        module_from_json({"rank": 2, "matrix": [["0"]]})
    with pytest.raises(ValueError):
        module_from_json({"rank": 1})


def test_dumps_is_deterministic():
    a = dumps({"b": 1, "a": "y1⊗y1"})
    assert a.index('"a"') < a.index('"b"') and "⊗" in a

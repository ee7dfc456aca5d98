"""JSON forms of modules, classes and fundamental matrices.

Polynomials are stored as strings in the expression syntax of
:mod:`hopfoid.parser`, so files are readable and editable by hand.
"""

from __future__ import annotations

import json

from .algebra.polymatrix import PolyMatrix
from .diffmod import DiffModule
from .finite_dual import DualClass
from .parser import parse_matrix, parse_vector
from .picard_vessiot import FundamentalMatrix

__all__ = ["module_to_json", "module_from_json", "class_to_json", "class_from_json",
           "fundamental_to_json", "fundamental_from_json", "dumps", "load_file"]


def module_to_json(M):
    out = {"type": "module", "rank": M.rank, "matrix": M.matrix.to_lists()}
    if M.label:
        out["label"] = M.label
    return out


def module_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    if "matrix" not in data:
        raise ValueError("module JSON needs a 'matrix' field")
    mat = parse_matrix(data["matrix"])
    if "rank" in data and data["rank"] != len(mat):
        raise ValueError(f"rank {data['rank']} does not match a {len(mat)}x{len(mat)} matrix")
    return DiffModule(PolyMatrix(mat, len(mat)), data.get("label"))


def class_to_json(c):
    return {"type": "class", "module": module_to_json(c.module),
            "functional": [str(e) for e in c.functional],
            "vector": [str(e) for e in c.vector]}


def class_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    M = module_from_json(data["module"])
    return DualClass(M, parse_vector(data["functional"]), parse_vector(data["vector"]))


def fundamental_to_json(F):
    out = {"type": "fundamental"}
    out.update(F.to_json())
    if F.matrix is not None:
        out["module"] = {"matrix": F.matrix.to_lists()}
    return out


def fundamental_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    mat = None
    if "module" in data:
        mat = PolyMatrix(parse_matrix(data["module"]["matrix"]))
    return FundamentalMatrix.from_json(data, mat)


def dumps(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def load_file(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)

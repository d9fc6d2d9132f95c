"""Lossless JSON encoding of algebra specifications.

Schema
------
{
  "field": {"kind": "Fp", "p": 2} | {"kind": "Q"},
  "names": ["U", "Ea", ...],                    # optional
  "presentation":
      {"kind": "structure_constants", "dim": n,
       "unit": ["1", "0", ...], "table": [[["0", ...], ...], ...]}
    | {"kind": "matrix_basis", "size": k,
       "matrices": [[["1", ...], ...], ...], "autoclose": false}
}

Scalars travel as decimal strings ("3", "1/2") so the round trip is
bit exact. Dumps are canonical: sorted keys, two-space indent, newline
at the end of file.
"""
from __future__ import annotations

import json
from typing import Optional, Tuple

from .algebra import Algebra, MatrixRep, build_algebra, from_matrix_basis
from .errors import BadShape
from .fields import Field, field_from_json, field_to_json


def algebra_to_spec(algebra: Algebra) -> dict:
    """Structure-constant presentation of an algebra."""
    f = algebra.field
    return {
        "field": field_to_json(f),
        "names": list(algebra.names),
        "presentation": {
            "kind": "structure_constants",
            "dim": algebra.dim,
            "unit": [f.format(x) for x in algebra.unit],
            "table": [
                [[f.format(x) for x in cell] for cell in row] for row in algebra.table
            ],
        },
    }


def matrix_basis_spec(field: Field, size: int, matrices, names=None, autoclose: bool = False) -> dict:
    return {
        "field": field_to_json(field),
        **({"names": list(names)} if names else {}),
        "presentation": {
            "kind": "matrix_basis",
            "size": size,
            "autoclose": autoclose,
            "matrices": [
                [[field.format(field.coerce(x)) for x in row] for row in grid]
                for grid in matrices
            ],
        },
    }


def algebra_from_spec(spec: dict) -> Tuple[Algebra, Optional[MatrixRep]]:
    """Build and validate an algebra from a decoded spec dictionary."""
    try:
        field = field_from_json(spec["field"])
        presentation = spec["presentation"]
        kind = presentation["kind"]
    except (KeyError, TypeError) as exc:
        raise BadShape(f"malformed algebra spec: missing field {exc}") from exc
    names = spec.get("names")
    if kind == "structure_constants":
        dim = int(presentation["dim"])
        unit = [field.parse(s) for s in presentation["unit"]]
        table = [
            [[field.parse(s) for s in cell] for cell in row]
            for row in presentation["table"]
        ]
        if names is None:
            names = [f"b{i}" for i in range(dim)]
        return build_algebra(field, dim, unit, table, names), None
    if kind == "matrix_basis":
        size = int(presentation["size"])
        mats = [
            [[field.parse(s) for s in row] for row in grid]
            for grid in presentation["matrices"]
        ]
        autoclose = bool(presentation.get("autoclose", False))
        algebra, rep = from_matrix_basis(field, size, mats, autoclose=autoclose, names=names)
        return algebra, rep
    raise BadShape(f"unknown presentation kind {kind!r}")


def dumps_spec(spec: dict) -> str:
    return json.dumps(spec, indent=2, sort_keys=True) + "\n"


def load_spec_file(path: str) -> Tuple[Algebra, Optional[MatrixRep]]:
    with open(path, "r", encoding="utf-8") as fh:
        return algebra_from_spec(json.load(fh))

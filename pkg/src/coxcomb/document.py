"""Input documents and canonical JSON.

A document is a JSON object with optional top-level sections ``matrix``,
``group``, ``ring``, ``flags`` and ``iteration``; anything else is rejected.
Integers may be written as decimal strings, which is how integers outside
the 53-bit safe range are emitted.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

import jsonschema

SAFE_INT = 2**53 - 1

_INT = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?[0-9]+$"}]}
_POS = {"oneOf": [{"type": "integer", "minimum": 1}, {"type": "string", "pattern": r"^[1-9][0-9]*$"}]}
_COUNT = {"type": "integer", "minimum": 0}
_RATIONAL = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]*[1-9][0-9]*)?$"}]}
_VECTOR = {"type": "array", "items": _INT}
_MATRIX = {
    "oneOf": [
        {"type": "array", "items": _VECTOR},
        {
            "type": "object",
            "properties": {"rows": _COUNT, "cols": _COUNT, "entries": _VECTOR},
            "required": ["rows", "cols", "entries"],
            "additionalProperties": False,
        },
    ]
}
_GROUP = {
    "oneOf": [
        {
            "type": "object",
            "properties": {"free_rank": _COUNT, "torsion": {"type": "array", "items": _POS}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"presentation": _MATRIX},
            "required": ["presentation"],
            "additionalProperties": False,
        },
    ]
}
_FLAG_NAMES = (
    "almost_homogeneous", "complexity_one", "units_constant", "spherical",
    "q_factorial_projective", "smooth", "complete", "torus_action", "constant_invariants",
)

SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "matrix": _MATRIX,
        "group": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "groups": {"type": "array", "items": _GROUP},
                "classes": {"type": "array", "items": _VECTOR},
                "maps": {"type": "array", "items": _MATRIX},
            },
        },
        "ring": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "points": {
                    "type": "array",
                    "items": {"type": "array", "items": _RATIONAL, "minItems": 2, "maxItems": 2},
                },
                "exponent_vectors": {
                    "type": "array",
                    "items": {"type": "array", "items": _POS, "minItems": 1},
                },
                "m": _COUNT,
                "normalize": {"type": "boolean"},
                "triples": {
                    "type": "array",
                    "items": {"type": "array", "items": _COUNT, "minItems": 3, "maxItems": 3},
                },
            },
            "required": ["exponent_vectors"],
        },
        "flags": {
            "type": "object",
            "additionalProperties": False,
            "properties": {name: {"type": "boolean"} for name in _FLAG_NAMES},
        },
        "iteration": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "config": {
                    "type": "array",
                    "items": {
                        "oneOf": [
                            {"type": "array", "items": _POS, "minItems": 1},
                            {
                                "type": "object",
                                "properties": {
                                    "class": {"type": ["string", "integer"]},
                                    "vector": {"type": "array", "items": _POS, "minItems": 1},
                                },
                                "required": ["class", "vector"],
                                "additionalProperties": False,
                            },
                        ]
                    },
                },
                "profiles": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["degree"],
                        "properties": {
                            "degree": _POS,
                            "fibers": {
                                "type": "array",
                                "items": {
                                    "type": "object",
                                    "additionalProperties": False,
                                    "required": ["point", "fiber_size"],
                                    "properties": {
                                        "point": _COUNT,
                                        "fiber_size": _POS,
                                        "multiplicities": {"type": "array", "items": _POS},
                                    },
                                },
                            },
                        },
                    },
                },
                "max_steps": _COUNT,
                "heuristic_gcd": {"type": "boolean"},
            },
        },
    },
}


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class InputDocument:
    data: dict

    def section(self, name: str, required: bool = True):
        if name not in self.data:
            if required:
                raise SchemaError(f"document has no '{name}' section")
            return None
        return self.data[name]


def parse_document(text: str) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    try:
        jsonschema.validate(data, SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"schema violation at {where}: {exc.message}") from None
    return InputDocument(data)


def serialize_document(doc: InputDocument) -> str:
    return canonical_json(doc.data)


def to_int(x) -> int:
    return int(x)


def to_rational(x) -> Fraction:
    return Fraction(x)


def jsonable(obj: Any) -> Any:
    """Convert results to JSON values: big ints and rationals become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Enum):
        return jsonable(obj.value)
    if isinstance(obj, int):
        return obj if abs(obj) <= SAFE_INT else str(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        raise TypeError("floats have no place in an exact report")
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=True) + "\n"

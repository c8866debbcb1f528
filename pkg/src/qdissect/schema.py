"""JSON Schemas for the command-line tool's machine-readable output.

Coefficients and mismatch values are decimal strings because exact values
outgrow 64-bit integers and JSON number precision.
"""

DECIMAL = {"type": "string", "pattern": r"^-?[0-9]+$"}

REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "VerificationReport",
    "type": "object",
    "required": ["id", "kind", "order", "status", "millis"],
    "properties": {
        "id": {"type": "string"},
        "kind": {"enum": ["exact", "congruence"]},
        "modulus": {"type": "integer", "minimum": 2},
        "order": {"type": "integer", "minimum": 0},
        "status": {"enum": ["pass", "fail"]},
        "first_mismatch": {
            "type": "object",
            "required": ["n", "lhs", "rhs"],
            "properties": {"n": {"type": "integer", "minimum": 0}, "lhs": DECIMAL, "rhs": DECIMAL},
            "additionalProperties": False,
        },
        "millis": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
    "if": {"properties": {"status": {"const": "fail"}}},
    "then": {"required": ["first_mismatch"]},
    "else": {"not": {"required": ["first_mismatch"]}},
}

EXPANSION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Expansion",
    "type": "object",
    "required": ["expr", "ring", "order", "coeffs"],
    "properties": {
        "expr": {"type": "string"},
        "ring": {"type": "string", "pattern": r"^(exact|mod [0-9]+)$"},
        "order": {"type": "integer", "minimum": 0},
        "coeffs": {"type": "array", "items": DECIMAL},
    },
    "additionalProperties": False,
}

REPORT_LIST = {"type": "array", "items": REPORT}

"""Published JSON schemas for every report the library and CLI emit."""

_COEFF = {"type": "string", "pattern": "^-?[0-9]+$"}
_FRACTION = {"type": "string", "pattern": "^-?[0-9]+(/[1-9][0-9]*)?$"}
_INT_ARRAY = {"type": "array", "items": {"type": "integer"}}

CHOW_ELEMENT_SCHEMA = {
    "type": "object",
    "required": ["k", "n", "terms"],
    "additionalProperties": False,
    "properties": {
        "k": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 2},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["partition", "coeff"],
                "additionalProperties": False,
                "properties": {
                    "partition": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 0},
                    },
                    "coeff": _COEFF,
                },
            },
        },
    },
}

FANO_REPORT_SCHEMA = {
    "type": "object",
    "required": ["d", "N", "expansion", "missing_class_ok", "line_count"],
    "additionalProperties": False,
    "properties": {
        "d": {"type": "integer", "minimum": 2},
        "N": {"type": "integer", "minimum": 4},
        "expansion": CHOW_ELEMENT_SCHEMA,
        "missing_class_ok": {"type": "boolean"},
        "line_count": {"type": ["integer", "null"]},
    },
}

DESCRIPTOR_SCHEMA = {
    "type": "object",
    "required": [
        "name",
        "m",
        "D",
        "a",
        "hyperbolicity_threshold",
        "lines_threshold",
        "line_space_dimensions",
        "factors",
        "paper_discrepancies",
    ],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "m": {"type": "integer", "minimum": 1},
        "D": {"type": "integer", "minimum": 1},
        "a": {"type": "array", "items": {"type": "integer", "maximum": -2}},
        "hyperbolicity_threshold": _INT_ARRAY,
        "lines_threshold": _INT_ARRAY,
        "line_space_dimensions": _INT_ARRAY,
        "factors": {"type": "array", "items": {"type": "string"}},
        "paper_discrepancies": {"type": "array", "items": {"type": "string"}},
    },
}

CLASSIFICATION_SCHEMA = {
    "type": "object",
    "required": ["kind", "witness", "boundary"],
    "additionalProperties": False,
    "properties": {
        "kind": {
            "type": "string",
            "enum": ["Hyperbolic", "ContainsLines", "OpenGap", "LowDimension"],
        },
        "witness": {"type": ["integer", "null"]},
        "boundary": _INT_ARRAY,
    },
}

CLASSIFY_SCHEMA = {
    "type": "object",
    "required": [
        "variety",
        "degrees",
        "classification",
        "epsilon",
        "counterexamples",
        "paper_discrepancies",
    ],
    "additionalProperties": False,
    "properties": {
        "variety": {"type": "string"},
        "degrees": _INT_ARRAY,
        "classification": CLASSIFICATION_SCHEMA,
        "epsilon": {"anyOf": [_FRACTION, {"type": "null"}]},
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["variety", "condition", "note", "citation"],
                "additionalProperties": False,
                "properties": {
                    "variety": {"type": "string"},
                    "condition": {"type": "string"},
                    "note": {"type": "string"},
                    "citation": {"type": "string"},
                },
            },
        },
        "paper_discrepancies": {"type": "array", "items": {"type": "string"}},
    },
}

GENUS_REPORT_SCHEMA = {
    "type": "object",
    "required": ["variety", "degrees", "epsilon", "binding_case", "cases", "ledger_flags"],
    "additionalProperties": False,
    "properties": {
        "variety": {"type": "string"},
        "degrees": _INT_ARRAY,
        "epsilon": {"anyOf": [_FRACTION, {"type": "null"}]},
        "binding_case": {"type": "string", "enum": ["A", "B", "C"]},
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["case", "j", "coefficients"],
                "additionalProperties": False,
                "properties": {
                    "case": {"type": "string", "enum": ["A", "B", "C"]},
                    "j": {"type": ["integer", "null"]},
                    "coefficients": {"type": "array", "items": _FRACTION},
                },
            },
        },
        "ledger_flags": {"type": "array", "items": {"type": "string"}},
    },
}

THRESHOLD_SCHEMA = {
    "type": "object",
    "required": [
        "variety",
        "hyperbolicity_threshold",
        "lines_threshold",
        "paper_discrepancies",
    ],
    "additionalProperties": False,
    "properties": {
        "variety": {"type": "string"},
        "hyperbolicity_threshold": _INT_ARRAY,
        "lines_threshold": _INT_ARRAY,
        "paper_discrepancies": {"type": "array", "items": {"type": "string"}},
    },
}

CERTIFY_SCHEMA = {
    "type": "object",
    "required": ["variety", "degrees", "classification", "epsilon", "binding_case"],
    "additionalProperties": False,
    "properties": {
        "variety": {"type": "string"},
        "degrees": _INT_ARRAY,
        "classification": CLASSIFICATION_SCHEMA,
        "epsilon": {"anyOf": [_FRACTION, {"type": "null"}]},
        "binding_case": {"type": "string", "enum": ["A", "B", "C"]},
    },
}

SECTION_REPORT_SCHEMA = {
    "type": "object",
    "required": ["entries", "all_ok"],
    "additionalProperties": False,
    "properties": {
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "d", "ok", "rank", "target_dim"],
                "additionalProperties": False,
                "properties": {
                    "n": {"type": "integer", "minimum": 1},
                    "d": {"type": "integer", "minimum": 1},
                    "ok": {"type": "boolean"},
                    "rank": {"type": "integer", "minimum": 0},
                    "target_dim": {"type": "integer", "minimum": 0},
                },
            },
        },
        "all_ok": {"type": "boolean"},
    },
}

LINE_COUNT_SCHEMA = {
    "type": "object",
    "required": ["n", "d", "N", "count"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 3},
        "d": {"type": "integer", "minimum": 3},
        "N": {"type": "integer", "minimum": 4},
        "count": {"type": "integer"},
    },
}

SWEEP_SCHEMA = {
    "type": "object",
    "required": ["variety", "rows"],
    "additionalProperties": False,
    "properties": {
        "variety": {"type": "string"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "classification", "epsilon"],
                "additionalProperties": False,
                "properties": {
                    "degree": {"type": "integer"},
                    "classification": CLASSIFICATION_SCHEMA,
                    "epsilon": {"anyOf": [_FRACTION, {"type": "null"}]},
                },
            },
        },
    },
}

INTEGRATE_SCHEMA = {
    "type": "object",
    "required": ["k", "n", "value"],
    "additionalProperties": False,
    "properties": {
        "k": {"type": "integer"},
        "n": {"type": "integer"},
        "value": _COEFF,
    },
}

DUAL_SCHEMA = {
    "type": "object",
    "required": ["k", "n", "partition", "complement", "dual_k", "dual_partition"],
    "additionalProperties": False,
    "properties": {
        "k": {"type": "integer"},
        "n": {"type": "integer"},
        "partition": _INT_ARRAY,
        "complement": _INT_ARRAY,
        "dual_k": {"type": "integer"},
        "dual_partition": _INT_ARRAY,
    },
}

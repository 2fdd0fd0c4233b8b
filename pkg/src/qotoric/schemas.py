"""JSON Schemas (draft 2020-12) for the command-line outputs."""

_rational = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_vector = {"type": "array", "items": _rational}
_int_vector = {"type": "array", "items": {"type": "integer"}}
_cyclotomic = {
    "type": "object",
    "required": ["level", "coords"],
    "properties": {"level": {"type": "integer", "minimum": 1}, "coords": {"type": "array", "items": _rational}},
    "additionalProperties": False,
}
_series = {
    "type": "object",
    "required": ["d", "m", "trunc", "terms"],
    "properties": {
        "d": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 1},
        "trunc": {"anyOf": [{"const": "inf"}, _rational]},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["u", "c"],
                "properties": {"u": _vector, "c": _cyclotomic},
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}
_poly = {
    "type": "object",
    "required": ["degree", "coefficients"],
    "properties": {"degree": {"type": "integer", "minimum": 1}, "coefficients": {"type": "array", "items": _series}},
    "additionalProperties": False,
}
_semigroup = {
    "type": "object",
    "required": ["d", "m", "generators"],
    "properties": {
        "d": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 1},
        "generators": {"type": "array", "items": _int_vector},
    },
    "additionalProperties": False,
}
_fan = {
    "type": "object",
    "required": ["cones"],
    "properties": {"cones": {"type": "array", "items": {"type": "array", "items": _int_vector}}},
    "additionalProperties": False,
}
_matrix = {"anyOf": [{"type": "null"}, {"type": "array", "items": _int_vector}]}
_report = {
    "type": "object",
    "required": ["weight", "max_grade", "dims_semigroup", "dims_filtration", "samples",
                 "multiplicativity_failures", "leading_form_witnesses", "checks", "verdict",
                 "counterexample", "caveat"],
    "properties": {
        "weight": _vector,
        "max_grade": {"type": "integer", "minimum": 0},
        "dims_semigroup": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "dims_filtration": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "samples": {"type": "integer", "minimum": 0},
        "multiplicativity_failures": {"type": "integer", "minimum": 0},
        "leading_form_witnesses": {
            "type": "array",
            "items": {"type": "object", "required": ["u", "element"],
                      "properties": {"u": _vector, "element": _series}, "additionalProperties": False},
        },
        "checks": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "verdict": {"enum": ["pass", "fail"]},
        "counterexample": {"type": ["string", "null"]},
        "caveat": {"type": "string"},
    },
    "additionalProperties": False,
}
_errors = {
    "type": "array",
    "items": {"type": "object", "required": ["type", "message"],
              "properties": {"type": {"type": "string"}, "message": {"type": "string"}}},
}


def _result(props: dict, required: list[str] | None = None) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": (required if required is not None else list(props)) + ["errors"],
        "properties": {**props, "errors": _errors},
        "additionalProperties": False,
    }


_iso = {"isomorphic": {"type": "boolean"}, "witness": _matrix}
_fan_result = {"fan": _fan, "exceptional_weights": {"type": "array", "items": _vector}}

OUTPUT_SCHEMAS: dict[str, dict] = {
    "valuation": _result({"valuation": {"type": "integer", "minimum": 0}}),
    "restrict": _result({"restriction": _series}),
    "newton": _result({"vertices": {"type": "array", "items": _vector},
                       "recession": {"type": "array", "items": _int_vector},
                       "face": {"type": "array", "items": _vector}}, ["vertices", "recession"]),
    "blowup-fan": _result(_fan_result),
    "qo-check": _result({"quasi_ordinary": {"type": "boolean"},
                         "delta": {"anyOf": [{"type": "null"}, _vector]},
                         "discriminant": _series}),
    "qo-invariants": _result({
        "exponents": {"type": "array", "items": _vector},
        "indices": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "gammas": {"type": "array", "items": _vector},
        "lattices": {"type": "array", "items": {"type": "array", "items": _vector}},
        "semigroup": _semigroup,
        "degree": {"type": "integer", "minimum": 1},
        "branch_polynomial": _poly,
    }),
    "semiroot": _result({"semiroots": {"type": "array", "items": {
        "type": "object", "required": ["j", "value"],
        "properties": {"j": {"type": "integer", "minimum": 1}, "value": _series},
        "additionalProperties": False}}}),
    "semigroup-mingens": _result({"minimal_generators": _semigroup}),
    "semigroup-saturate": _result({"saturation": _semigroup}),
    "semigroup-dims": _result({"dims": {"type": "array", "items": {"type": "integer", "minimum": 0}}}),
    "semigroup-iso": _result(_iso),
    "verify-toric": _result({"reports": {"type": "array", "items": _report}}),
    "verify-qo": _result({"reports": {"type": "array", "items": _report}}),
    "invariance": _result(_iso),
}

ERROR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["errors"],
    "properties": {"errors": {**_errors, "minItems": 1}},
    "additionalProperties": False,
}

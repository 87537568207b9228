"""JSON documents: target graphs, critical sequences, sphere nests, matrices.

Target-graph documents look like::

    {"n": 4, "k": 2, "root": "v0",
     "vertices": [{"id": "v0", "chi": 0}, {"id": "v1", "chi": 1}],
     "edges": [{"from": "v0", "to": "v1", "lambda": "min", "sigma": "+", "chiS": 0}]}

Unknown keys are rejected. A vertex may carry ``depth``; it is checked
against the computed depth and never written back out.

Matrices are row-major 2x2 integer arrays ``[[a, b], [c, d]]``; rows and
columns follow :mod:`foldchi.plumbing`.
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .errors import DocumentSchemaError, DocumentSyntaxError, GraphValidationError
from .foldcore import (
    Codim,
    Edge,
    FoldLabel,
    Lam,
    Sigma,
    TargetGraph,
    ValidationReport,
    Violation,
    ViolationKind,
    depths,
)
from .mfunctions import CriticalSequence
from .plumbing import Mat2Z, PlumbingGraph
from .roundfold import NestingForest, Sphere

_INT = {"type": "integer"}
_LAMBDA = {"enum": ["min", "max"]}
_SIGMA = {"enum": ["+", "-"]}

TARGET_GRAPH_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["n", "k", "vertices", "root", "edges"],
    "properties": {
        "n": _INT,
        "k": _INT,
        "root": {"type": "string"},
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "chi"],
                "properties": {"id": {"type": "string"}, "chi": _INT, "depth": {"type": "integer", "minimum": 0}},
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["from", "to", "lambda", "sigma", "chiS"],
                "properties": {
                    "from": {"type": "string"},
                    "to": {"type": "string"},
                    "lambda": _LAMBDA,
                    "sigma": _SIGMA,
                    "chiS": _INT,
                },
            },
        },
    },
}

_EVENT = {
    "type": "object",
    "additionalProperties": False,
    "required": ["lambda", "sigma"],
    "properties": {"lambda": _LAMBDA, "sigma": _SIGMA},
}

SEQUENCE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["n", "events"],
    "properties": {"n": _INT, "events": {"type": "array", "items": _EVENT}},
}

FOREST_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["n", "k", "spheres"],
    "properties": {
        "n": _INT,
        "k": _INT,
        "spheres": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "lambda", "sigma"],
                "properties": {
                    "id": {"type": "string"},
                    "parent": {"type": ["string", "null"]},
                    "lambda": _LAMBDA,
                    "sigma": _SIGMA,
                },
            },
        },
    },
}

MATRIX_SCHEMA = {
    "type": "array",
    "minItems": 2,
    "maxItems": 2,
    "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": _INT},
}


def _pointer(parts) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in parts)


def load_json(doc: str | bytes) -> Any:
    try:
        return json.loads(doc)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def check_schema(data: Any, schema: dict) -> None:
    """Raise :class:`DocumentSchemaError` listing every violation with its JSON pointer."""
    validator = jsonschema.Draft202012Validator(schema)
    errors = []
    for err in sorted(validator.iter_errors(data), key=lambda e: (list(map(str, e.absolute_path)), e.message)):
        path = list(err.absolute_path)
        if err.validator == "required":
            missing = [p for p in err.validator_value if isinstance(err.instance, dict) and p not in err.instance]
            for p in missing:
                errors.append((_pointer(path + [p]), f"missing required property {p!r}"))
            continue
        if err.validator == "additionalProperties":
            extra = sorted(set(err.instance) - set(err.schema.get("properties", {})))
            for p in extra:
                errors.append((_pointer(path + [p]), f"unknown property {p!r}"))
            continue
        errors.append((_pointer(path), err.message))
    if errors:
        raise DocumentSchemaError(errors)


def _label(obj: dict) -> FoldLabel:
    return FoldLabel(Lam(obj["lambda"]), Sigma(obj["sigma"]))


def target_graph_from_dict(data: Any, validate: bool = True) -> TargetGraph:
    check_schema(data, TARGET_GRAPH_SCHEMA)
    ids = [v["id"] for v in data["vertices"]]
    dupes = sorted({i for i in ids if ids.count(i) > 1})
    if dupes:
        raise DocumentSchemaError([("/vertices", f"duplicate vertex id {d!r}") for d in dupes])
    g = TargetGraph(
        Codim(data["n"], data["k"]),
        {v["id"]: v["chi"] for v in data["vertices"]},
        data["root"],
        tuple(Edge(e["from"], e["to"], _label(e), e["chiS"]) for e in data["edges"]),
    )
    if validate:
        report = g.report
        if report.ok:
            claimed = [(i, v["id"], v["depth"]) for i, v in enumerate(data["vertices"]) if "depth" in v]
            if claimed:
                actual = depths(g)
                bad = [
                    Violation(ViolationKind.DEPTH_MISMATCH, f"/vertices/{i}/depth: {vid} is at depth {actual[vid]}")
                    for i, vid, d in claimed
                    if actual[vid] != d
                ]
                report = ValidationReport(tuple(bad))
        if not report.ok:
            raise GraphValidationError(report)
    return g


def parse_target_graph_json(doc: str | bytes, validate: bool = True) -> TargetGraph:
    """Parse and (by default) structurally validate a target-graph document."""
    return target_graph_from_dict(load_json(doc), validate=validate)


def target_graph_to_dict(g: TargetGraph) -> dict:
    return {
        "n": g.codim.n,
        "k": g.codim.k,
        "root": g.root,
        "vertices": [{"id": v, "chi": chi} for v, chi in g.vertices.items()],
        "edges": [
            {
                "from": e.tail,
                "to": e.head,
                "lambda": e.label.lam.value,
                "sigma": e.label.sigma.value,
                "chiS": e.chi_sing,
            }
            for e in g.edges
        ],
    }


def dumps(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def serialize_target_graph(g: TargetGraph) -> str:
    return dumps(target_graph_to_dict(g))


def sequence_from_dict(data: Any) -> CriticalSequence:
    check_schema(data, SEQUENCE_SCHEMA)
    return CriticalSequence(data["n"], tuple(_label(e) for e in data["events"]))


def sequence_to_dict(seq: CriticalSequence) -> dict:
    return {"n": seq.n, "events": [{"lambda": e.lam.value, "sigma": e.sigma.value} for e in seq.events]}


def forest_from_dict(data: Any) -> tuple[Codim, NestingForest]:
    check_schema(data, FOREST_SCHEMA)
    spheres = tuple(Sphere(s["id"], _label(s), s.get("parent")) for s in data["spheres"])
    return Codim(data["n"], data["k"]), NestingForest(spheres)


def matrix_from_json(data: Any) -> Mat2Z:
    check_schema(data, MATRIX_SCHEMA)
    return Mat2Z.from_rows(data)


def plumbing_graph_to_dict(pg: PlumbingGraph) -> dict:
    return {
        "central": {"genus": pg.genus, "weight": pg.central_weight},
        "chains": [list(c) for c in pg.chains],
        "raw_chains": [list(c) for c in pg.raw_chains],
        "boundary_arrows": pg.boundary_arrows,
        "sign_convention": pg.sign_convention,
    }


PLUMBING_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["central", "chains", "boundary_arrows"],
    "properties": {
        "central": {
            "type": "object",
            "additionalProperties": False,
            "required": ["genus", "weight"],
            "properties": {"genus": {"type": "integer", "minimum": 0}, "weight": _INT},
        },
        "chains": {"type": "array", "items": {"type": "array", "items": _INT}},
        "raw_chains": {"type": "array", "items": {"type": "array", "items": _INT}},
        "boundary_arrows": {"type": "integer", "minimum": 0},
        "sign_convention": {"enum": ["negate", "raw"]},
    },
}


def plumbing_graph_from_dict(data: Any) -> PlumbingGraph:
    check_schema(data, PLUMBING_SCHEMA)
    chains = tuple(tuple(c) for c in data["chains"])
    return PlumbingGraph(
        genus=data["central"]["genus"],
        central_weight=data["central"]["weight"],
        chains=chains,
        raw_chains=tuple(tuple(c) for c in data.get("raw_chains", data["chains"])),
        boundary_arrows=data["boundary_arrows"],
        sign_convention=data.get("sign_convention", "negate"),
    )

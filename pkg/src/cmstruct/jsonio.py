"""JSON interchange for structures, groups, heaps, algebras and patterns.

Rationals travel as ``"num/den"`` strings (or bare integer strings); tuples as
index arrays.  Output is canonical: points in given order, tuples sorted.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .bilipschitz import LipZetaPattern
from .core import MetricStructure, Relation, make_relation
from .embeddings import CubePoint
from .groups import FiniteGroup
from .heaps import HeapTable
from .stone import BooleanStructure


def fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _relations_to_json(relations) -> dict:
    return {
        name: {"arity": rel.arity, "tuples": [list(t) for t in sorted(rel.tuples)]}
        for name, rel in sorted(relations.items())
    }


def _relations_from_json(raw) -> dict[str, Relation]:
    return {name: make_relation(r["arity"], r.get("tuples", [])) for name, r in (raw or {}).items()}


def structure_to_json(S: MetricStructure) -> dict:
    return {
        "points": list(S.points),
        "metric": [[fmt(x) for x in row] for row in S.metric],
        "relations": _relations_to_json(S.relations),
    }


def structure_from_json(raw: dict) -> MetricStructure:
    return MetricStructure(raw["points"], raw["metric"], _relations_from_json(raw.get("relations")))


def group_to_json(G: FiniteGroup) -> dict:
    return {"order": G.order, "table": [list(row) for row in G.table]}


def group_from_json(raw: dict) -> FiniteGroup:
    table = raw["table"]
    if "order" in raw and raw["order"] != len(table):
        raise ValueError(f"order {raw['order']} does not match a {len(table)}-row table")
    return FiniteGroup(table, raw.get("labels"))


def heap_to_json(H: HeapTable) -> dict:
    return {"order": H.order, "op": [[list(row) for row in plane] for plane in H.op]}


def heap_from_json(raw: dict) -> HeapTable:
    op = raw["op"]
    if "order" in raw and raw["order"] != len(op):
        raise ValueError(f"order {raw['order']} does not match a table of size {len(op)}")
    return HeapTable(op)


def boolean_to_json(A: BooleanStructure) -> dict:
    return {
        "elements": list(A.elements),
        "zero": A.zero,
        "one": A.one,
        "neg": [[a, A.neg[a]] for a in sorted(A.neg)],
        "meet": [[a, b, A.meet[(a, b)]] for a, b in sorted(A.meet)],
        "join": [[a, b, A.join[(a, b)]] for a, b in sorted(A.join)],
        "relations": _relations_to_json(A.relations),
    }


def boolean_from_json(raw: dict) -> BooleanStructure:
    return BooleanStructure(
        tuple(raw["elements"]),
        raw["zero"],
        raw["one"],
        {a: b for a, b in raw["neg"]},
        {(a, b): c for a, b, c in raw["meet"]},
        {(a, b): c for a, b, c in raw["join"]},
        _relations_from_json(raw.get("relations")),
    )


def pattern_to_json(z: LipZetaPattern) -> dict:
    return {
        "n": z.n,
        "constraints": {k: [list(t) for t in sorted(v)] for k, v in z.constraints.items()},
        "r": [None if x is None else fmt(x) for x in z.r],
        "t": [[name, k, fmt(v)] for (name, k), v in z.t.items()],
    }


def pattern_from_json(raw: dict) -> LipZetaPattern:
    return LipZetaPattern(
        raw["n"],
        {k: frozenset(tuple(t) for t in v) for k, v in raw.get("constraints", {}).items()},
        tuple(raw.get("r", ())),
        {(name, k): v for name, k, v in raw.get("t", [])},
    )


def cube_points_to_json(points: list[CubePoint]) -> list[list[str]]:
    return [[fmt(x) for x in p.coords] for p in points]


def read_json(path) -> object:
    return json.loads(Path(path).read_text())


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)

"""Finite metric structures over exact rationals.

A structure is an ordered list of point names, a symmetric distance matrix of
``Fraction`` entries and a dict of named relations.  Relations are sets of
index tuples of a fixed arity.  Everything here is immutable and exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping, NamedTuple, Sequence

Rational = Fraction
DistanceMatrix = tuple[tuple[Fraction, ...], ...]

#: returned by :func:`relation_covering_radius` when nothing is marked
INFINITY = math.inf


class Relation(NamedTuple):
    arity: int
    tuples: frozenset[tuple[int, ...]]


class StructureError(ValueError):
    """Raised when an operation is handed an ill-formed structure or argument."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        super().__init__(message)
        self.report = report


class SignatureMismatch(ValueError):
    """Two structures disagree on relation names or arities."""


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[str, tuple], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{name} {list(witness)}" for name, witness in self.violations)


def as_fraction(value) -> Fraction:
    """Parse ints, Fractions and ``"num/den"`` strings. Floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not distances")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


def as_matrix(rows: Iterable[Iterable]) -> DistanceMatrix:
    return tuple(tuple(as_fraction(x) for x in row) for row in rows)


def make_relation(arity: int, tuples: Iterable[Sequence[int]]) -> Relation:
    return Relation(int(arity), frozenset(tuple(int(i) for i in t) for t in tuples))


@dataclass(frozen=True, eq=True)
class MetricStructure:
    points: tuple[str, ...]
    metric: DistanceMatrix
    relations: Mapping[str, Relation] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(str(p) for p in self.points))
        object.__setattr__(self, "metric", as_matrix(self.metric))
        rels = {}
        for name, rel in dict(self.relations).items():
            if not isinstance(rel, Relation):
                arity, tuples = rel
                rel = make_relation(arity, tuples)
            rels[str(name)] = rel
        object.__setattr__(self, "relations", dict(sorted(rels.items())))

    __hash__ = None  # relations is a dict

    @property
    def n(self) -> int:
        return len(self.points)

    def d(self, i: int, j: int) -> Fraction:
        return self.metric[i][j]

    def signature(self) -> dict[str, int]:
        return {name: rel.arity for name, rel in self.relations.items()}

    def diameter(self) -> Fraction:
        return max((x for row in self.metric for x in row), default=Fraction(0))

    def relabel(self, perm: Sequence[int]) -> "MetricStructure":
        """Move the point at index ``i`` to index ``perm[i]``."""
        n = self.n
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        points = [self.points[inv[k]] for k in range(n)]
        metric = [[self.metric[inv[a]][inv[b]] for b in range(n)] for a in range(n)]
        rels = {
            name: Relation(rel.arity, frozenset(tuple(perm[i] for i in t) for t in rel.tuples))
            for name, rel in self.relations.items()
        }
        return MetricStructure(points, metric, rels)

    def with_relations(self, relations: Mapping[str, Relation]) -> "MetricStructure":
        return MetricStructure(self.points, self.metric, relations)

    def __repr__(self) -> str:
        rels = {k: sorted(v.tuples) for k, v in self.relations.items()}
        return f"MetricStructure(n={self.n}, metric={[[str(x) for x in r] for r in self.metric]}, relations={rels})"


def discrete_structure(n: int, relations: Mapping[str, Relation] | None = None,
                       names: Sequence[str] | None = None) -> MetricStructure:
    """``n`` points at mutual distance 1."""
    names = list(names) if names is not None else [str(i) for i in range(n)]
    metric = [[Fraction(int(i != j)) for j in range(n)] for i in range(n)]
    return MetricStructure(names, metric, relations or {})


def validate_structure(raw: MetricStructure) -> ValidationReport:
    """Check metric axioms and relation well-formedness, collecting every violation."""
    out: list[tuple[str, tuple]] = []
    n = len(raw.points)
    m = raw.metric
    if n == 0:
        out.append(("nonempty", ()))
    if len(m) != n or any(len(row) != n for row in m):
        out.append(("shape", (n, len(m))))
        return ValidationReport(tuple(out))
    if len(set(raw.points)) != n:
        out.append(("distinct point names", ()))
    for i in range(n):
        if m[i][i] != 0:
            out.append(("zero diagonal", (i,)))
    for i, j in combinations(range(n), 2):
        if m[i][j] != m[j][i]:
            out.append(("symmetry", (i, j)))
        if m[i][j] <= 0 or m[j][i] <= 0:
            out.append(("positivity", (i, j)))
    for i, j, k in product(range(n), repeat=3):
        if i < k and j != i and j != k and m[i][k] > m[i][j] + m[j][k]:
            out.append(("triangle", (i, j, k)))
    for name, rel in raw.relations.items():
        if rel.arity < 1:
            out.append((f"arity {name}", (rel.arity,)))
        for t in sorted(rel.tuples):
            if len(t) != rel.arity:
                out.append((f"tuple length {name}", t))
            elif any(not 0 <= i < n for i in t):
                out.append((f"tuple index {name}", t))
    return ValidationReport(tuple(out))


def check_structure(S: MetricStructure) -> MetricStructure:
    report = validate_structure(S)
    if not report.ok:
        raise StructureError(f"invalid metric structure:\n{report}", report)
    return S


def product_metric(S: MetricStructure, a: Sequence[int], b: Sequence[int]) -> Fraction:
    """Sup metric on tuples: ``max_i d(a_i, b_i)``."""
    if len(a) != len(b):
        raise StructureError(f"tuple lengths differ: {len(a)} != {len(b)}")
    m = S.metric
    return max((m[x][y] for x, y in zip(a, b)), default=Fraction(0))


def covering_radius(S: MetricStructure, subset: Iterable[int]) -> Fraction:
    """Least r such that ``subset`` is r-dense in S."""
    subset = sorted(set(subset))
    if not subset:
        raise StructureError("covering radius of an empty subset")
    m = S.metric
    return max(min(m[p][s] for s in subset) for p in range(S.n))


def relation_covering_radius(S: MetricStructure, name: str, marked: Iterable[Sequence[int]]):
    """Least t such that ``marked`` is t-dense in the relation under the sup metric.

    Returns :data:`INFINITY` when ``marked`` is empty but the relation is not.
    """
    if name not in S.relations:
        raise StructureError(f"unknown relation {name!r}")
    tuples = S.relations[name].tuples
    marked = {tuple(t) for t in marked}
    if not marked <= tuples:
        raise StructureError(f"marked tuples are not all in {name!r}")
    if not tuples:
        return Fraction(0)
    if not marked:
        return INFINITY
    return max(min(product_metric(S, t, s) for s in marked) for t in tuples)


def scale_metric(S: MetricStructure, lam) -> MetricStructure:
    lam = as_fraction(lam)
    if lam <= 0:
        raise StructureError(f"scale factor must be positive, got {lam}")
    metric = [[x * lam for x in row] for row in S.metric]
    return MetricStructure(S.points, metric, S.relations)

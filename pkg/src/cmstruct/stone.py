"""Clopen-algebra encoding of finite discrete structures and its inverse.

Every subset of a finite discrete space is clopen, so the algebra is the
full power set, with subsets written as bitmasks.  A relation R is coded by
the tuples of sets whose product misses R.  Decoding reads atoms off the
meet graph alone and never looks at the bits of the labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Mapping

from .core import MetricStructure, Relation, StructureError, ValidationReport, discrete_structure

MAX_POINTS = 12


@dataclass(frozen=True)
class BooleanStructure:
    elements: tuple[int, ...]
    zero: int
    one: int
    neg: Mapping[int, int]
    meet: Mapping[tuple[int, int], int]
    join: Mapping[tuple[int, int], int]
    relations: Mapping[str, Relation] = field(default_factory=dict)

    __hash__ = None


def clopen_algebra(M: MetricStructure) -> BooleanStructure:
    """Power-set algebra of M with each relation coded by the products that miss it."""
    n = M.n
    if n > MAX_POINTS:
        raise StructureError(f"power set of {n} points exceeds the {MAX_POINTS}-point guard")
    full = (1 << n) - 1
    elements = tuple(range(1 << n))
    neg = {a: full & ~a for a in elements}
    meet = {(a, b): a & b for a in elements for b in elements}
    join = {(a, b): a | b for a in elements for b in elements}
    rels = {name: Relation(rel.arity, _coded_tuples(n, rel)) for name, rel in M.relations.items()}
    return BooleanStructure(elements, 0, full, neg, meet, join, rels)


def _coded_tuples(n: int, rel: Relation) -> frozenset[tuple[int, ...]]:
    """Tuples (a_1..a_k) with R disjoint from a_1 x ... x a_k.

    Built position by position: after fixing a_1..a_j, only the relation tuples
    whose first j entries lie in a_1..a_j can still meet the product.
    """
    out = []
    universe = range(1 << n)

    def extend(prefix: tuple[int, ...], alive: list[tuple[int, ...]]):
        j = len(prefix)
        if j == rel.arity:
            if not alive:
                out.append(prefix)
            return
        for a in universe:
            extend(prefix + (a,), [t for t in alive if a >> t[j] & 1])

    extend((), sorted(rel.tuples))
    return frozenset(out)


def coded_tuples_direct(M: MetricStructure, name: str) -> frozenset[tuple[int, ...]]:
    """The same set as :func:`clopen_algebra` computes, by testing every tuple directly."""
    rel = M.relations[name]
    n = M.n
    hits = []
    for masks in product(range(1 << n), repeat=rel.arity):
        meets = any(all(masks[k] >> t[k] & 1 for k in range(rel.arity)) for t in rel.tuples)
        if not meets:
            hits.append(masks)
    return frozenset(hits)


def validate_boolean(A: BooleanStructure) -> ValidationReport:
    """Boolean algebra axioms on the operation graphs, checked exhaustively."""
    key = (A.elements, A.zero, A.one, tuple(sorted(A.neg.items())),
           tuple(sorted(A.meet.items())), tuple(sorted(A.join.items())))
    out = list(_validate_operations(key).violations)
    Es = set(A.elements)
    for name, rel in A.relations.items():
        for t in rel.tuples:
            if len(t) != rel.arity or any(x not in Es for x in t):
                out.append((f"tuple {name}", t))
    return ValidationReport(tuple(out))


@lru_cache(maxsize=32)
def _validate_operations(key) -> ValidationReport:
    # the same power-set algebra is decoded many times over; check its laws once
    elements, zero, one, neg, meet, join = key
    A = BooleanStructure(elements, zero, one, dict(neg), dict(meet), dict(join))
    E = A.elements
    Es = set(E)
    out = []
    if A.zero not in Es or A.one not in Es:
        out.append(("constants", (A.zero, A.one)))
    for a in E:
        if A.neg.get(a) not in Es:
            out.append(("neg total", (a,)))
    for a, b in product(E, repeat=2):
        if A.meet.get((a, b)) not in Es or A.join.get((a, b)) not in Es:
            out.append(("meet/join total", (a, b)))
    if out:
        return ValidationReport(tuple(out))
    m, j, ng = A.meet, A.join, A.neg
    for a in E:
        if m[(a, A.one)] != a or j[(a, A.zero)] != a:
            out.append(("identity", (a,)))
        if m[(a, ng[a])] != A.zero or j[(a, ng[a])] != A.one:
            out.append(("complement", (a,)))
    for a, b in product(E, repeat=2):
        if m[(a, b)] != m[(b, a)] or j[(a, b)] != j[(b, a)]:
            out.append(("commutativity", (a, b)))
        if m[(a, j[(a, b)])] != a or j[(a, m[(a, b)])] != a:
            out.append(("absorption", (a, b)))
    for a, b, c in product(E, repeat=3):
        if m[(a, m[(b, c)])] != m[(m[(a, b)], c)] or j[(a, j[(b, c)])] != j[(j[(a, b)], c)]:
            out.append(("associativity", (a, b, c)))
        if m[(a, j[(b, c)])] != j[(m[(a, b)], m[(a, c)])]:
            out.append(("distributivity", (a, b, c)))
    return ValidationReport(tuple(out))


def atoms(A: BooleanStructure) -> list[int]:
    """Minimal nonzero elements, sorted by label."""
    return sorted(
        x for x in A.elements
        if x != A.zero and all(A.meet[(x, y)] in (A.zero, x) for y in A.elements)
    )


def stone_decode(A: BooleanStructure) -> MetricStructure:
    """Discrete structure on the atoms; a tuple of atoms is in R iff it is not coded."""
    report = validate_boolean(A)
    if not report.ok:
        raise StructureError(f"not a Boolean algebra:\n{report}", report)
    pts = atoms(A)
    rels = {}
    for name, rel in A.relations.items():
        tuples = frozenset(
            idx for idx in product(range(len(pts)), repeat=rel.arity)
            if tuple(pts[i] for i in idx) not in rel.tuples
        )
        rels[name] = Relation(rel.arity, tuples)
    return discrete_structure(len(pts), rels, names=[f"atom{x}" for x in pts])


def is_boolean_isomorphism(A: BooleanStructure, B: BooleanStructure, f: Mapping[int, int]) -> bool:
    if sorted(f) != sorted(A.elements) or sorted(f.values()) != sorted(B.elements):
        return False
    if f[A.zero] != B.zero or f[A.one] != B.one:
        return False
    if any(f[A.neg[a]] != B.neg[f[a]] for a in A.elements):
        return False
    for a, b in product(A.elements, repeat=2):
        if f[A.meet[(a, b)]] != B.meet[(f[a], f[b])] or f[A.join[(a, b)]] != B.join[(f[a], f[b])]:
            return False
    for name, rel in A.relations.items():
        if {tuple(f[x] for x in t) for t in rel.tuples} != B.relations[name].tuples:
            return False
    return True

"""Heaps: groups with the identity forgotten.

A heap table ``op[x][y][z]`` holds ``[x, y, z]``.  From a group it is
``x y^-1 z``; back from a heap with chosen identity ``e`` the product is
``[x, e, y]`` and the inverse ``[e, x, e]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .core import MetricStructure, Relation, StructureError, ValidationReport, discrete_structure
from .groups import FiniteGroup, is_group_isomorphism

Op = tuple[tuple[tuple[int, ...], ...], ...]


def validate_heap(op: Sequence) -> ValidationReport:
    """Exhaustive check of para-associativity (n^5) and the identity law (n^2)."""
    n = len(op)
    if n == 0:
        return ValidationReport((("nonempty", ()),))
    if any(len(plane) != n or any(len(row) != n for row in plane) for plane in op):
        return ValidationReport((("cubic table", ()),))
    bad = [w for w in product(range(n), repeat=3) if not 0 <= op[w[0]][w[1]][w[2]] < n]
    if bad:
        return ValidationReport(tuple(("closure", w) for w in bad))
    out = []
    for a, b in product(range(n), repeat=2):
        if op[a][a][b] != b:
            out.append(("identity law [a,a,b]=b", (a, b)))
        if op[b][a][a] != b:
            out.append(("identity law [b,a,a]=b", (a, b)))
    for a, b, c in product(range(n), repeat=3):
        left_abc = op[a][b][c]
        row = op[left_abc]
        for d, e in product(range(n), repeat=2):
            if row[d][e] != op[a][b][op[c][d][e]]:
                out.append(("para-associativity", (a, b, c, d, e)))
    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class HeapTable:
    op: Op

    def __post_init__(self):
        op = tuple(tuple(tuple(int(x) for x in row) for row in plane) for plane in self.op)
        object.__setattr__(self, "op", op)

    @property
    def order(self) -> int:
        return len(self.op)

    def __call__(self, x: int, y: int, z: int) -> int:
        return self.op[x][y][z]

    def check(self) -> "HeapTable":
        report = validate_heap(self.op)
        if not report.ok:
            raise StructureError(f"not a heap:\n{_first(report)}", report)
        return self


def _first(report: ValidationReport, k: int = 5) -> str:
    lines = str(report).splitlines()
    more = f"\n... {len(lines) - k} more" if len(lines) > k else ""
    return "\n".join(lines[:k]) + more


def heap_from_group(G: FiniteGroup) -> HeapTable:
    n, t, inv = G.order, G.table, G.inverse
    return HeapTable(tuple(
        tuple(tuple(t[t[x][inv[y]]][z] for z in range(n)) for y in range(n)) for x in range(n)
    ))


def group_from_heap(H: HeapTable, e: int) -> FiniteGroup:
    H.check()
    if not 0 <= e < H.order:
        raise StructureError(f"element {e} out of range")
    n = H.order
    return FiniteGroup([[H(x, e, y) for y in range(n)] for x in range(n)])


def base_change_iso(H: HeapTable, e: int, a: int) -> tuple[int, ...]:
    """Left multiplication by ``a`` as an isomorphism from the group at e to the group at a.

    Also confirms ``[x, a, y] == x . a^-1 . y`` in the group at ``e``.
    Raises AssertionError if either check fails, which would be a bug.
    """
    G_e = group_from_heap(H, e)
    G_a = group_from_heap(H, a)
    n = H.order
    lam = tuple(H(a, e, x) for x in range(n))
    a_inv = H(e, a, e)
    for x, y in product(range(n), repeat=2):
        if G_a.mul(x, y) != G_e.mul(G_e.mul(x, a_inv), y):
            raise AssertionError(f"x*y != x.a^-1.y at {(x, y)}")
    if not is_group_isomorphism(G_e, G_a, lam):
        raise AssertionError(f"left multiplication by {a} is not an isomorphism")
    return lam


def heap_graph(H: HeapTable) -> frozenset[tuple[int, int, int, int]]:
    n = H.order
    return frozenset((x, y, z, H(x, y, z)) for x, y, z in product(range(n), repeat=3))


def heap_structure(H: HeapTable) -> MetricStructure:
    """Discrete metric structure carrying the 4-ary graph of the operation."""
    return discrete_structure(H.order, {"Graph": Relation(4, heap_graph(H))})


def is_heap_isomorphism(H: HeapTable, K: HeapTable, alpha: Sequence[int]) -> bool:
    n = H.order
    return (K.order == n and sorted(alpha) == list(range(n))
            and all(alpha[H(x, y, z)] == K(alpha[x], alpha[y], alpha[z])
                    for x, y, z in product(range(n), repeat=3)))


def _closed(H: HeapTable, subset: Sequence[int]) -> bool:
    members = set(subset)
    return all(H(x, y, z) in members for x, y, z in product(subset, repeat=3))


def subheaps(H: HeapTable) -> list[frozenset[int]]:
    """All nonempty subsets closed under the operation, in (size, elements) order.

    The result is checked against the left cosets of subgroups of the group at 0.
    """
    H.check()
    n = H.order
    found = [frozenset(s) for k in range(1, n + 1) for s in combinations(range(n), k)
             if _closed(H, s)]
    if set(found) != coset_subheaps(H, 0):
        raise AssertionError("closed subsets differ from cosets of subgroups")
    return found


def coset_subheaps(H: HeapTable, e: int) -> set[frozenset[int]]:
    """Left cosets of all subgroups of the group at ``e``."""
    G = group_from_heap(H, e)
    n = G.order
    subgroups = set()
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            if e in s and all(G.mul(x, G.inv(y)) in s for x in s for y in s):
                subgroups.add(frozenset(s))
    return {frozenset(G.mul(g, x) for x in K) for K in subgroups for g in range(n)}


@dataclass(frozen=True)
class HeapIsoDecomposition:
    a: int
    beta: tuple[int, ...]


def decompose_heap_iso(H: HeapTable, K: HeapTable, alpha: Sequence[int],
                       e: int, e2: int) -> HeapIsoDecomposition:
    """Split a heap isomorphism H -> K as left translation by ``a`` after a group isomorphism.

    Groups are taken at ``e`` in H and ``e2`` in K.
    """
    alpha = tuple(alpha)
    if not is_heap_isomorphism(H, K, alpha):
        raise StructureError("map is not a heap isomorphism")
    G_H = group_from_heap(H, e)
    G_K = group_from_heap(K, e2)
    a = alpha[e]
    a_inv = G_K.inv(a)
    beta = tuple(G_K.mul(a_inv, alpha[x]) for x in range(H.order))
    if not is_group_isomorphism(G_H, G_K, beta):
        raise AssertionError("beta is not a group isomorphism")
    if any(G_K.mul(a, beta[x]) != alpha[x] for x in range(H.order)):
        raise AssertionError("alpha != lambda_a . beta")
    return HeapIsoDecomposition(a, beta)

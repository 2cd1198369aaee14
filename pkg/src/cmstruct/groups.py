"""Finite groups as Cayley tables and their encodings as metric structures.

Elements are indices ``0..n-1`` into the table.  Left-invariant metrics are
given by a length function ``rho`` with ``d(g, h) = rho(g^-1 h)``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Mapping, Sequence

from .core import (
    MetricStructure,
    Relation,
    StructureError,
    ValidationReport,
    as_fraction,
    discrete_structure,
    validate_structure,
)
from .isometry import decide_isometric_iso


def validate_group(table: Sequence[Sequence[int]]) -> ValidationReport:
    """Closure, associativity, identity and inverses, checked exhaustively."""
    out = []
    n = len(table)
    if n == 0:
        return ValidationReport((("nonempty", ()),))
    if any(len(row) != n for row in table):
        return ValidationReport((("square table", ()),))
    bad = [(x, y) for x, y in product(range(n), repeat=2) if not 0 <= table[x][y] < n]
    if bad:
        return ValidationReport(tuple(("closure", w) for w in bad))
    for x, y, z in product(range(n), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            out.append(("associativity", (x, y, z)))
    ids = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
    if not ids:
        out.append(("identity", ()))
    else:
        e = ids[0]
        for x in range(n):
            if not any(table[x][y] == e == table[y][x] for y in range(n)):
                out.append(("inverse", (x,)))
    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    identity: int = field(init=False, compare=False)
    inverse: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        report = validate_group(table)
        if not report.ok:
            raise StructureError(f"not a group:\n{report}", report)
        n = len(table)
        e = next(e for e in range(n) if all(table[e][x] == x for x in range(n)))
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", tuple(table[x].index(e) for x in range(n)))
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        else:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        """The subgroup generated by ``gens``."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = self.table[x][s]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    def relabel(self, perm: Sequence[int]) -> "FiniteGroup":
        """Isomorphic copy in which element ``x`` becomes ``perm[x]``."""
        n = self.order
        inv = [0] * n
        for x, p in enumerate(perm):
            inv[p] = x
        table = [[perm[self.table[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
        labels = [self.labels[inv[a]] for a in range(n)]
        return FiniteGroup(table, labels)


# catalogue --------------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(x + y) % n for y in range(n)] for x in range(n)])


def _from_elements(elements: list, mul, labels=None) -> FiniteGroup:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul(x, y)] for y in elements] for x in elements]
    return FiniteGroup(table, labels or [str(x) for x in elements])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    pairs = list(product(range(G.order), range(H.order)))
    return _from_elements(
        pairs,
        lambda a, b: (G.mul(a[0], b[0]), H.mul(a[1], b[1])),
        [f"({G.labels[a]},{H.labels[b]})" for a, b in pairs],
    )


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; (k, s) means rotation k then reflection s."""
    elements = [(k, s) for s in (0, 1) for k in range(n)]

    def mul(a, b):
        k1, s1 = a
        k2, s2 = b
        return ((k1 + (-k2 if s1 else k2)) % n, s1 ^ s2)

    return _from_elements(elements, mul, [("r%d" % k) if not s else ("sr%d" % k) for k, s in elements])


def symmetric(n: int) -> FiniteGroup:
    elements = sorted(permutations(range(n)))
    return _from_elements(elements, lambda p, q: tuple(p[q[i]] for i in range(n)))


def quaternion() -> FiniteGroup:
    """Q8 as {±1, ±i, ±j, ±k}."""
    names = ["1", "i", "j", "k"]
    # unit products: units[a][b] = (sign, unit)
    units = {
        ("1", x): (1, x) for x in names
    }
    units.update({(x, "1"): (1, x) for x in names})
    units.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })
    elements = [(s, u) for s in (1, -1) for u in names]

    def mul(a, b):
        sign, unit = units[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    return _from_elements(elements, mul, [("" if s > 0 else "-") + u for s, u in elements])


def small_groups(order: int) -> list[FiniteGroup]:
    """One representative per isomorphism type, for orders 1 to 8."""
    Z = cyclic
    catalogue = {
        1: lambda: [Z(1)],
        2: lambda: [Z(2)],
        3: lambda: [Z(3)],
        4: lambda: [Z(4), direct_product(Z(2), Z(2))],
        5: lambda: [Z(5)],
        6: lambda: [Z(6), symmetric(3)],
        7: lambda: [Z(7)],
        8: lambda: [Z(8), direct_product(Z(4), Z(2)),
                    direct_product(direct_product(Z(2), Z(2)), Z(2)), dihedral(4), quaternion()],
    }
    if order not in catalogue:
        raise ValueError(f"no catalogue entry for order {order}")
    return catalogue[order]()


def find_group_isomorphism(G: FiniteGroup, H: FiniteGroup) -> tuple[int, ...] | None:
    """Backtracking search for a multiplication-preserving bijection G -> H."""
    n = G.order
    if H.order != n:
        return None
    elem_order_G = [_element_order(G, x) for x in range(n)]
    elem_order_H = [_element_order(H, x) for x in range(n)]
    if sorted(elem_order_G) != sorted(elem_order_H):
        return None
    f = [-1] * n
    used = [False] * n

    def consistent(i: int) -> bool:
        # every product among assigned elements that involves i for the first time
        for a in range(i + 1):
            for b in range(i + 1):
                p = G.table[a][b]
                if p <= i and i in (a, b, p) and H.table[f[a]][f[b]] != f[p]:
                    return False
        return True

    def search(i: int) -> bool:
        if i == n:
            return True
        for y in range(n):
            if used[y] or elem_order_H[y] != elem_order_G[i]:
                continue
            f[i] = y
            used[y] = True
            if consistent(i) and search(i + 1):
                return True
            used[y] = False
            f[i] = -1
        return False

    if search(0):
        return tuple(f)
    return None


def is_group_isomorphism(G: FiniteGroup, H: FiniteGroup, f: Sequence[int]) -> bool:
    n = G.order
    return (H.order == n and sorted(f) == list(range(n))
            and all(f[G.table[x][y]] == H.table[f[x]][f[y]] for x in range(n) for y in range(n)))


def _element_order(G: FiniteGroup, x: int) -> int:
    k, y = 1, x
    while y != G.identity:
        y = G.table[y][x]
        k += 1
    return k


# metrics ----------------------------------------------------------------

@dataclass(frozen=True)
class LeftInvariantMetric:
    """``d(g, h) = length[g^-1 h]``."""

    group: FiniteGroup
    length: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "length", tuple(as_fraction(x) for x in self.length))
        if len(self.length) != self.group.order:
            raise StructureError("length function has the wrong size")

    def d(self, g: int, h: int) -> Fraction:
        return self.length[self.group.table[self.group.inverse[g]][h]]

    def matrix(self):
        n = self.group.order
        return tuple(tuple(self.d(g, h) for h in range(n)) for g in range(n))

    def validate(self) -> ValidationReport:
        G, rho = self.group, self.length
        out = []
        if rho[G.identity] != 0:
            out.append(("zero at identity", (G.identity,)))
        for g in range(G.order):
            if g != G.identity and rho[g] <= 0:
                out.append(("positivity", (g,)))
            if rho[g] != rho[G.inverse[g]]:
                out.append(("symmetry", (g,)))
        for g, h in product(range(G.order), repeat=2):
            if rho[G.table[g][h]] > rho[g] + rho[h]:
                out.append(("subadditivity", (g, h)))
        return ValidationReport(tuple(out))


def weighted_word_metric(G: FiniteGroup, weights: Mapping[int, object]) -> LeftInvariantMetric:
    """Least total generator weight of a word for each element (Dijkstra on the Cayley graph).

    ``weights`` maps each generator to a positive rational; the generating set
    must be closed under inverses with ``w(s) == w(s^-1)``.
    """
    w = {int(s): as_fraction(x) for s, x in weights.items()}
    for s, x in w.items():
        if not 0 <= s < G.order:
            raise StructureError(f"generator {s} is not an element")
        if x <= 0:
            raise StructureError(f"generator {s} has non-positive weight {x}")
        t = G.inverse[s]
        if t not in w or w[t] != x:
            raise StructureError(f"weights are not symmetric at generator {s}")
    dist: dict[int, Fraction] = {G.identity: Fraction(0)}
    heap = [(Fraction(0), G.identity)]
    while heap:
        dx, x = heapq.heappop(heap)
        if dx > dist[x]:
            continue
        for s, ws in sorted(w.items()):
            y = G.table[x][s]
            if y not in dist or dx + ws < dist[y]:
                dist[y] = dx + ws
                heapq.heappush(heap, (dx + ws, y))
    missing = [g for g in range(G.order) if g not in dist]
    if missing:
        raise StructureError(f"generators do not reach elements {missing}")
    return LeftInvariantMetric(G, tuple(dist[g] for g in range(G.order)))


def roelcke_metric(G: FiniteGroup, d: LeftInvariantMetric):
    """Entry (g, h) is the least over f of max(d(f, g), d(f^-1, h^-1))."""
    n = G.order
    inv = G.inverse
    return tuple(
        tuple(min(max(d.d(f, g), d.d(inv[f], inv[h])) for f in range(n)) for h in range(n))
        for g in range(n)
    )


def mult_graph(G: FiniteGroup) -> frozenset[tuple[int, int, int]]:
    return frozenset((g, f, G.table[g][f]) for g in range(G.order) for f in range(G.order))


def roelcke_structure(G: FiniteGroup, d: LeftInvariantMetric) -> MetricStructure:
    S = MetricStructure(G.labels, roelcke_metric(G, d), {"Mult": Relation(3, mult_graph(G))})
    report = validate_structure(S)
    if not report.ok:
        raise StructureError(f"Roelcke metric is not a metric:\n{report}", report)
    return S


def alexandrov_structure(P: MetricStructure, base: int,
                         mult: Iterable[Sequence[int]] = (),
                         point_name: str = "*") -> MetricStructure:
    """One-point compactification of a finite pointed space.

    With ``l(g) = 1/(1 + d(g, base))`` the new metric is
    ``min(d(f, g), l(f) + l(g))`` and the added point sits at distance ``l(g)``
    from ``g``.  Relations of P are kept; the added point is marked by the
    unary relation ``Infinity`` and ``mult`` becomes the ternary ``Mult``.
    """
    n = P.n
    if not 0 <= base < n:
        raise StructureError(f"base point {base} out of range")
    ell = [1 / (1 + P.metric[g][base]) for g in range(n)]
    metric = [[min(P.metric[f][g], ell[f] + ell[g]) if f != g else Fraction(0)
               for g in range(n)] + [ell[f]] for f in range(n)]
    metric.append(ell + [Fraction(0)])
    rels = dict(P.relations)
    mult = frozenset(tuple(t) for t in mult)
    if mult or "Mult" not in rels:
        rels["Mult"] = Relation(3, mult)
    rels["Infinity"] = Relation(1, frozenset({(n,)}))
    S = MetricStructure(list(P.points) + [point_name], metric, rels)
    report = validate_structure(S)
    if not report.ok:
        raise StructureError(f"compactified metric is not a metric:\n{report}", report)
    return S


def integer_ball(radius: int) -> tuple[MetricStructure, int, frozenset]:
    """The integers -radius..radius with |i-j| and the surviving sums.

    Returns ``(space, base_index, mult_triples)`` ready for
    :func:`alexandrov_structure`.
    """
    values = list(range(-radius, radius + 1))
    idx = {v: i for i, v in enumerate(values)}
    metric = [[abs(a - b) for b in values] for a in values]
    mult = frozenset((idx[a], idx[b], idx[a + b]) for a in values for b in values if a + b in idx)
    return MetricStructure([str(v) for v in values], metric), idx[0], mult


# translations -----------------------------------------------------------

def _check_generates(G: FiniteGroup, a: int, b: int) -> None:
    if G.generated([a, b]) != frozenset(range(G.order)):
        raise StructureError(f"elements {a} and {b} do not generate the group")


def translation_structure(G: FiniteGroup, a: int, b: int, A: Iterable[int]) -> MetricStructure:
    """Discrete structure with the graphs of right multiplication by a and b and the subset A."""
    _check_generates(G, a, b)
    n = G.order
    A = frozenset(A)
    return discrete_structure(n, {
        "A": Relation(1, frozenset((x,) for x in A)),
        "Ra": Relation(2, frozenset((g, G.table[g][a]) for g in range(n))),
        "Rb": Relation(2, frozenset((g, G.table[g][b]) for g in range(n))),
    }, names=G.labels)


def left_translate(G: FiniteGroup, g: int, A: Iterable[int]) -> frozenset[int]:
    return frozenset(G.table[g][x] for x in A)


def decide_translation_equiv(G: FiniteGroup, a: int, b: int,
                             A: Iterable[int], B: Iterable[int]) -> int | None:
    """Least g with gA = B, found through isomorphism of the translation structures."""
    A, B = frozenset(A), frozenset(B)
    SA = translation_structure(G, a, b, A)
    SB = translation_structure(G, a, b, B)
    phi = decide_isometric_iso(SA, SB)
    if phi is None:
        return None
    g0 = phi[G.identity]
    if any(phi[x] != G.table[g0][x] for x in range(G.order)):
        raise AssertionError(f"structure isomorphism {phi} is not a left translation")
    # all solutions are g0 * stabiliser(A)
    stab = [h for h in range(G.order) if left_translate(G, h, A) == A]
    return min(G.table[g0][h] for h in stab)

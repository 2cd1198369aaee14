"""Distance-matrix invariants and isometric isomorphism of finite structures.

``compute_C_zeta`` collects the distance matrices of all n-tuples whose
designated sub-tuples lie in designated relations.  The decider works on
exact relation patterns instead: colour refinement on the disjoint union of
the two structures followed by an ordered backtracking search, which yields
the lexicographically least witness.  ``brute_force_isometric_iso`` is the
plain exhaustive oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Mapping, Sequence

from .core import (
    DistanceMatrix,
    MetricStructure,
    SignatureMismatch,
    StructureError,
)

Bijection = tuple[int, ...]


@dataclass(frozen=True)
class ZetaPattern:
    """Length ``n`` plus, per relation, position tuples (0-based) that must land in it."""

    n: int
    constraints: Mapping[str, frozenset[tuple[int, ...]]] = field(default_factory=dict)

    def __post_init__(self):
        cons = {
            str(name): frozenset(tuple(int(i) for i in t) for t in tuples)
            for name, tuples in dict(self.constraints).items()
        }
        object.__setattr__(self, "constraints", dict(sorted(cons.items())))

    __hash__ = None

    def check_against(self, S: MetricStructure) -> None:
        for name, tuples in self.constraints.items():
            if name not in S.relations:
                raise StructureError(f"pattern names relation {name!r} absent from structure")
            arity = S.relations[name].arity
            for t in tuples:
                if len(t) != arity or any(not 0 <= i < self.n for i in t):
                    raise StructureError(f"bad constraint {t} for {name!r} (arity {arity}, n={self.n})")

    def add(self, name: str, positions: Sequence[int]) -> "ZetaPattern":
        cons = dict(self.constraints)
        cons[name] = frozenset(cons.get(name, frozenset())) | {tuple(positions)}
        return ZetaPattern(self.n, cons)


def distance_matrix(S: MetricStructure, t: Sequence[int]) -> DistanceMatrix:
    m = S.metric
    for i in t:
        if not 0 <= i < S.n:
            raise StructureError(f"index {i} out of range for {S.n} points")
    return tuple(tuple(m[a][b] for b in t) for a in t)


def _constraints_by_last(n: int, constraints) -> list[list[tuple[frozenset, tuple[int, ...]]]]:
    # constraint (rel, positions) can be checked once the prefix reaches max(positions)
    by_last: list[list] = [[] for _ in range(n)]
    for tuples, rel in constraints:
        for pos in tuples:
            by_last[max(pos)].append((rel, pos))
    return by_last


def constrained_tuples(S: MetricStructure, zeta: ZetaPattern):
    """Yield every n-tuple of indices meeting the pattern's relation constraints."""
    zeta.check_against(S)
    n = zeta.n
    if n == 0:
        yield ()
        return
    by_last = _constraints_by_last(
        n, [(tuples, S.relations[name].tuples) for name, tuples in zeta.constraints.items()]
    )
    prefix = [0] * n

    def extend(k: int):
        for x in range(S.n):
            prefix[k] = x
            if all(tuple(prefix[p] for p in pos) in rel for rel, pos in by_last[k]):
                if k == n - 1:
                    yield tuple(prefix)
                else:
                    yield from extend(k + 1)

    yield from extend(0)


def compute_C_zeta(S: MetricStructure, zeta: ZetaPattern) -> frozenset[DistanceMatrix]:
    return frozenset(distance_matrix(S, t) for t in constrained_tuples(S, zeta))


def relation_patterns(S: MetricStructure, order: Sequence[int]):
    """Relation tuples of S rewritten as positions in ``order``; sorted and hashable."""
    pos = {p: k for k, p in enumerate(order)}
    return tuple(
        (name, rel.arity, tuple(sorted(tuple(pos[i] for i in t) for t in rel.tuples)))
        for name, rel in S.relations.items()
    )


Signature = frozenset


def full_signature(S: MetricStructure, max_points: int = 8) -> Signature:
    """The set of (distance matrix, relation patterns) over all orderings of the points."""
    if S.n > max_points:
        raise StructureError(f"signature enumerates {S.n}! orderings; raise max_points to allow it")
    return frozenset((distance_matrix(S, order), relation_patterns(S, order))
                     for order in permutations(range(S.n)))


def canonical_signature(S: MetricStructure, max_points: int = 8) -> list:
    """``full_signature`` as a sorted list, used for printing and comparison."""
    return sorted(full_signature(S, max_points), key=_entry_key)


def _entry_key(entry):
    matrix, patterns = entry
    return ([x for row in matrix for x in row], patterns)


def check_same_signature(S: MetricStructure, T: MetricStructure) -> None:
    if S.signature() != T.signature():
        raise SignatureMismatch(f"relation signatures differ: {S.signature()} vs {T.signature()}")


def is_isometric_iso(S: MetricStructure, T: MetricStructure, f: Sequence[int]) -> bool:
    """Directly check that ``f`` is a distance-preserving, relation-onto bijection."""
    n = S.n
    if T.n != n or sorted(f) != list(range(n)):
        return False
    ms, mt = S.metric, T.metric
    if any(ms[i][j] != mt[f[i]][f[j]] for i in range(n) for j in range(n)):
        return False
    for name, rel in S.relations.items():
        image = {tuple(f[i] for i in t) for t in rel.tuples}
        if image != T.relations[name].tuples:
            return False
    return True


def brute_force_isometric_iso(S: MetricStructure, T: MetricStructure) -> Bijection | None:
    check_same_signature(S, T)
    if S.n != T.n:
        return None
    for f in permutations(range(S.n)):
        if is_isometric_iso(S, T, f):
            return f
    return None


def _refine_colours(structures: Sequence[MetricStructure]) -> list[list[int]]:
    """Colour refinement run jointly, so colours are comparable across structures."""

    def renumber(sigs):
        palette = {s: k for k, s in enumerate(sorted(set(x for xs in sigs for x in xs)))}
        return [[palette[s] for s in xs] for xs in sigs]

    names = list(structures[0].relations)
    incidences = []
    for S in structures:
        inc = [[] for _ in range(S.n)]
        for r, name in enumerate(names):
            for t in S.relations[name].tuples:
                for pos, p in enumerate(t):
                    inc[p].append((r, pos, t))
        incidences.append(inc)

    sigs = [
        [(tuple(sorted(S.metric[p])), tuple(sorted((r, pos) for r, pos, _ in inc[p])))
         for p in range(S.n)]
        for S, inc in zip(structures, incidences)
    ]
    colours = renumber([[repr(s) for s in xs] for xs in sigs])
    n_classes = len(set(c for cs in colours for c in cs))
    while True:
        sigs = []
        for S, inc, cs in zip(structures, incidences, colours):
            row = []
            for p in range(S.n):
                dist = tuple(sorted((S.metric[p][q], cs[q]) for q in range(S.n)))
                rels = tuple(sorted((r, pos, tuple(cs[x] for x in t)) for r, pos, t in inc[p]))
                row.append(repr((cs[p], dist, rels)))
            sigs.append(row)
        colours = renumber(sigs)
        k = len(set(c for cs in colours for c in cs))
        if k == n_classes:
            return colours
        n_classes = k


def decide_isometric_iso(S: MetricStructure, T: MetricStructure) -> Bijection | None:
    """Lexicographically least isometric isomorphism S -> T, or ``None``."""
    check_same_signature(S, T)
    n = S.n
    if T.n != n:
        return None
    for name, rel in S.relations.items():
        if len(rel.tuples) != len(T.relations[name].tuples):
            return None
    if n == 0:
        return ()
    cs, ct = _refine_colours([S, T])
    if sorted(cs) != sorted(ct):
        return None

    # relation tuples of S, grouped by their largest index
    checks: list[list] = [[] for _ in range(n)]
    for name, rel in S.relations.items():
        target = T.relations[name].tuples
        for t in rel.tuples:
            checks[max(t)].append((t, target))

    ms, mt = S.metric, T.metric
    f = [-1] * n
    used = [False] * n

    def search(i: int) -> bool:
        if i == n:
            return True
        row = ms[i]
        for y in range(n):
            if used[y] or ct[y] != cs[i]:
                continue
            trow = mt[y]
            if any(row[j] != trow[f[j]] for j in range(i)):
                continue
            f[i] = y
            if all(tuple(f[x] for x in t) in target for t, target in checks[i]):
                used[y] = True
                if search(i + 1):
                    return True
                used[y] = False
            f[i] = -1
        return False

    if search(0):
        return tuple(f)
    return None


def _slots(signature: Mapping[str, int], n: int) -> list[tuple[str, tuple[int, ...]]]:
    # bit b of a pattern mask says "slot b's positions land in slot b's relation"
    return [(name, pos) for name in sorted(signature)
            for pos in product(range(n), repeat=signature[name])]


def zeta_patterns(signature: Mapping[str, int], n: int):
    """Every pattern of length ``n`` over the given relation signature.

    Pattern number ``mask`` constrains exactly the slots whose bits are set.
    The count is doubly exponential; intended for tiny n only.
    """
    slots = _slots(signature, n)
    for mask in range(1 << len(slots)):
        cons: dict[str, set] = {}
        for b, (name, pos) in enumerate(slots):
            if mask >> b & 1:
                cons.setdefault(name, set()).add(pos)
        yield ZetaPattern(n, {k: frozenset(v) for k, v in cons.items()})


def all_C_zeta(S: MetricStructure, n: int) -> list[frozenset[DistanceMatrix]]:
    """C_zeta for every pattern of ``zeta_patterns(S.signature(), n)``, in that order.

    One pass over the n-tuples: each tuple records which slots it satisfies,
    and belongs to every pattern whose mask is a subset of that record.
    """
    slots = _slots(S.signature(), n)
    rels = S.relations
    groups: dict[int, set] = {}
    for t in product(range(S.n), repeat=n):
        held = 0
        for b, (name, pos) in enumerate(slots):
            if tuple(t[p] for p in pos) in rels[name].tuples:
                held |= 1 << b
        groups.setdefault(held, set()).add(distance_matrix(S, t))
    records = sorted(groups)
    cache: dict[tuple, frozenset] = {}
    out = []
    for mask in range(1 << len(slots)):
        key = tuple(h for h in records if mask & ~h == 0)
        if key not in cache:
            cache[key] = frozenset().union(*(groups[h] for h in key))
        out.append(cache[key])
    return out

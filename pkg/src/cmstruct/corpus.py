"""Random and exhaustive generators of small structures, groups and patterns."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Mapping, Sequence

import numpy as np

from .bilipschitz import LipZetaPattern
from .core import INFINITY, MetricStructure, Relation, covering_radius, relation_covering_radius
from .groups import FiniteGroup, LeftInvariantMetric, weighted_word_metric


def rng_from(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def shortest_path_closure(weights: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Floyd-Warshall on a complete weighted graph; the result is a metric."""
    n = len(weights)
    d = [list(row) for row in weights]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            di = d[i]
            for j in range(n):
                if di[k] + dk[j] < di[j]:
                    di[j] = di[k] + dk[j]
    return d


def random_metric(rng, n: int, max_weight: int = 6, denominator: int = 1) -> list[list[Fraction]]:
    """Random positive rational edge weights closed under shortest paths."""
    rng = rng_from(rng)
    w = [[Fraction(0)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        x = Fraction(int(rng.integers(1, max_weight + 1)), denominator)
        w[i][j] = w[j][i] = x
    return shortest_path_closure(w)


def random_relation(rng, n: int, arity: int, density: float = 0.3) -> Relation:
    rng = rng_from(rng)
    tuples = [t for t in product(range(n), repeat=arity) if rng.random() < density]
    return Relation(arity, frozenset(tuples))


def random_structure(rng, n: int, signature: Mapping[str, int] | None = None,
                     density: float = 0.3, max_weight: int = 6, denominator: int = 1) -> MetricStructure:
    rng = rng_from(rng)
    signature = {"R": 2} if signature is None else signature
    metric = random_metric(rng, n, max_weight, denominator)
    rels = {name: random_relation(rng, n, arity, density) for name, arity in sorted(signature.items())}
    return MetricStructure([f"p{i}" for i in range(n)], metric, rels)


def random_permutation(rng, n: int) -> tuple[int, ...]:
    return tuple(int(x) for x in rng_from(rng).permutation(n))


def metric_matrices(n: int, values: Sequence[int]) -> Iterator[list[list[Fraction]]]:
    """Every symmetric matrix with off-diagonal entries from ``values`` obeying the triangle law."""
    pairs = list(combinations(range(n), 2))
    for choice in product(values, repeat=len(pairs)):
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in zip(pairs, choice):
            m[i][j] = m[j][i] = Fraction(v)
        if all(m[i][k] <= m[i][j] + m[j][k] for i, j, k in product(range(n), repeat=3)):
            yield m


def relations_up_to(n: int, arity: int, max_tuples: int | None = None) -> Iterator[frozenset]:
    """All relations of the given arity, optionally only those with at most ``max_tuples`` tuples."""
    cells = list(product(range(n), repeat=arity))
    top = len(cells) if max_tuples is None else min(max_tuples, len(cells))
    for k in range(top + 1):
        for chosen in combinations(cells, k):
            yield frozenset(chosen)


def random_word_metric(rng, G: FiniteGroup, max_weight: int = 4) -> LeftInvariantMetric:
    """Word metric for random symmetric weights on a random inverse-closed generating set."""
    rng = rng_from(rng)
    gens: set[int] = set()
    while G.generated(gens) != frozenset(range(G.order)):
        g = int(rng.integers(G.order))
        if g != G.identity:
            gens |= {g, G.inverse[g]}
    weights = {}
    for g in sorted(gens):
        if g not in weights:
            w = Fraction(int(rng.integers(1, max_weight + 1)), int(rng.integers(1, 3)))
            weights[g] = weights[G.inverse[g]] = w
    return weighted_word_metric(G, weights)


def random_lip_pattern(rng, S: MetricStructure, n: int | None = None) -> LipZetaPattern:
    """A pattern that S can plausibly meet: read off a random tuple, then loosened.

    Radii are the tuple's own covering radii times a random slack, or left out.
    """
    rng = rng_from(rng)
    n = int(rng.integers(1, S.n + 2)) if n is None else n
    tup = [int(x) for x in rng.integers(0, S.n, size=n)]
    cons = {}
    for name, rel in S.relations.items():
        held = [pos for pos in product(range(n), repeat=rel.arity)
                if tuple(tup[p] for p in pos) in rel.tuples]
        keep = [pos for pos in held if rng.random() < 0.5]
        if keep:
            cons[name] = frozenset(keep)
    slack = [Fraction(1), Fraction(3, 2), Fraction(2)]
    r = []
    for k in range(1, n + 1):
        if rng.random() < 0.6:
            r.append(covering_radius(S, tup[:k]) * slack[int(rng.integers(len(slack)))])
        else:
            r.append(None)
    t = {}
    for name, rel in S.relations.items():
        for k in range(rel.arity, n + 1):
            if rng.random() < 0.4:
                marked = {tuple(tup[p] for p in pos) for pos in cons.get(name, ()) if max(pos) < k}
                radius = relation_covering_radius(S, name, marked)
                if radius != INFINITY:
                    t[(name, k)] = radius * slack[int(rng.integers(len(slack)))]
    return LipZetaPattern(n, cons, tuple(r), t)

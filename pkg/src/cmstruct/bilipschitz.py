"""Perturbation invariants for bi-Lipschitz isomorphism.

A :class:`LipZetaPattern` adds density radii to a relational pattern.  The set
of tuples meeting it (``compute_D_zeta``) is enumerated by prefix, since every
condition on the first ``k`` entries can be checked as soon as they are fixed.
Boxes of perturbed matrices are never built; ``dominates`` checks the witness
form "some base matrix of the target is a c-perturbation".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .core import (
    INFINITY,
    DistanceMatrix,
    MetricStructure,
    StructureError,
    as_fraction,
    covering_radius,
    relation_covering_radius,
)
from .isometry import _constraints_by_last, check_same_signature, distance_matrix


@dataclass(frozen=True)
class LipZetaPattern:
    """Relational pattern with density radii.

    ``r[k-1]`` bounds the covering radius of the first ``k`` tuple entries.
    ``t[(name, k)]`` bounds the sup-metric covering radius, inside relation
    ``name``, of the constrained sub-tuples using only the first ``k`` entries.
    Radii left as ``None`` or absent from ``t`` impose nothing.
    """

    n: int
    constraints: Mapping[str, frozenset[tuple[int, ...]]] = field(default_factory=dict)
    r: tuple = ()
    t: Mapping[tuple[str, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cons = {
            str(name): frozenset(tuple(int(i) for i in tup) for tup in tuples)
            for name, tuples in dict(self.constraints).items()
        }
        object.__setattr__(self, "constraints", dict(sorted(cons.items())))
        r = tuple(None if x is None else as_fraction(x) for x in self.r)
        if not r:
            r = (None,) * self.n
        if len(r) != self.n:
            raise StructureError(f"expected {self.n} radii, got {len(r)}")
        object.__setattr__(self, "r", r)
        t = {(str(name), int(k)): as_fraction(v) for (name, k), v in dict(self.t).items()}
        object.__setattr__(self, "t", dict(sorted(t.items())))
        if any(x is not None and x < 0 for x in r) or any(v < 0 for v in t.values()):
            raise StructureError("density radii must be non-negative")

    __hash__ = None

    def scaled(self, c) -> "LipZetaPattern":
        """The pattern with every radius multiplied by ``c``."""
        c = as_fraction(c)
        return LipZetaPattern(
            self.n,
            self.constraints,
            tuple(None if x is None else c * x for x in self.r),
            {key: c * v for key, v in self.t.items()},
        )

    def check_against(self, S: MetricStructure) -> None:
        for name, tuples in self.constraints.items():
            if name not in S.relations:
                raise StructureError(f"pattern names relation {name!r} absent from structure")
            arity = S.relations[name].arity
            for tup in tuples:
                if len(tup) != arity or any(not 0 <= i < self.n for i in tup):
                    raise StructureError(f"bad constraint {tup} for {name!r}")
        for name, k in self.t:
            if name not in S.relations:
                raise StructureError(f"pattern names relation {name!r} absent from structure")
            if not S.relations[name].arity <= k <= self.n:
                raise StructureError(f"density index {(name, k)} outside arity..n")


def is_alpha_perturbation(A: DistanceMatrix, B: DistanceMatrix, alpha) -> bool:
    """True iff ``A[i][j]/alpha <= B[i][j] <= alpha*A[i][j]`` for all entries."""
    alpha = as_fraction(alpha)
    if alpha < 1:
        raise StructureError(f"perturbation factor must be >= 1, got {alpha}")
    if len(A) != len(B) or any(len(a) != len(b) for a, b in zip(A, B)):
        raise StructureError("matrix dimensions differ")
    for row_a, row_b in zip(A, B):
        for a, b in zip(row_a, row_b):
            if b * alpha < a or b > alpha * a:
                return False
    return True


def compute_D_zeta(S: MetricStructure, zeta: LipZetaPattern) -> list[tuple[int, ...]]:
    """All n-tuples meeting the density, membership and relation-density conditions."""
    zeta.check_against(S)
    n = zeta.n
    if n == 0:
        return [()]
    by_last = _constraints_by_last(
        n, [(tuples, S.relations[name].tuples) for name, tuples in zeta.constraints.items()]
    )
    # relation densities to test once the prefix has length k
    density_at: list[list[tuple[str, Fraction, list]]] = [[] for _ in range(n)]
    for (name, k), bound in zeta.t.items():
        usable = [pos for pos in zeta.constraints.get(name, ()) if max(pos) < k]
        density_at[k - 1].append((name, bound, usable))

    out = []
    prefix = [0] * n
    # radii depend only on the set of points (or marked tuples), so cache them
    radius: dict = {}
    rel_radius: dict = {}

    def ok_at(k: int) -> bool:
        if not all(tuple(prefix[p] for p in pos) in rel for rel, pos in by_last[k]):
            return False
        if zeta.r[k] is not None:
            key = frozenset(prefix[: k + 1])
            if key not in radius:
                radius[key] = covering_radius(S, key)
            if radius[key] > zeta.r[k]:
                return False
        for name, bound, usable in density_at[k]:
            key = (name, frozenset(tuple(prefix[p] for p in pos) for pos in usable))
            if key not in rel_radius:
                rel_radius[key] = relation_covering_radius(S, name, key[1])
            if rel_radius[key] > bound:
                return False
        return True

    def extend(k: int):
        for x in range(S.n):
            prefix[k] = x
            if ok_at(k):
                if k == n - 1:
                    out.append(tuple(prefix))
                else:
                    extend(k + 1)

    extend(0)
    return out


def base_matrices(S: MetricStructure, zeta: LipZetaPattern) -> frozenset[DistanceMatrix]:
    return frozenset(distance_matrix(S, t) for t in compute_D_zeta(S, zeta))


def dominates(S: MetricStructure, T: MetricStructure, c, patterns: Iterable[LipZetaPattern]) -> bool:
    """Every base matrix of S under each pattern has a c-perturbation among T's under c*pattern."""
    check_same_signature(S, T)
    c = as_fraction(c)
    if c < 1:
        raise StructureError(f"dominance constant must be >= 1, got {c}")
    p, q = c.numerator, c.denominator
    # over a common denominator the entrywise test is q*a <= p*b and q*b <= p*a in integers
    scale = lcm(*(x.denominator for M in (S.metric, T.metric) for row in M for x in row))
    for zeta in patterns:
        targets = [_upper_ints(B, scale) for B in base_matrices(T, zeta.scaled(c))]
        for A in base_matrices(S, zeta):
            a = _upper_ints(A, scale)
            if not any(all(q * x <= p * y and q * y <= p * x for x, y in zip(a, b)) for b in targets):
                return False
    return True


def _upper_ints(M: DistanceMatrix, scale: int) -> tuple[int, ...]:
    n = len(M)
    return tuple(int(M[i][j] * scale) for i in range(n) for j in range(i + 1, n))


def canonical_pattern(S: MetricStructure) -> LipZetaPattern:
    """The pattern read off the enumeration 0..n-1 of S itself.

    Constraints record every relation tuple, ``r_k`` is the covering radius of
    the first k points and ``t`` the covering radii of the recorded sub-tuples.
    """
    n = S.n
    cons = {name: rel.tuples for name, rel in S.relations.items()}
    r = tuple(covering_radius(S, range(k)) for k in range(1, n + 1))
    t = {}
    for name, rel in S.relations.items():
        for k in range(rel.arity, n + 1):
            marked = [tup for tup in rel.tuples if max(tup) < k]
            t[(name, k)] = relation_covering_radius(S, name, marked)
    # infinite radii carry no information
    t = {key: v for key, v in t.items() if v != INFINITY}
    return LipZetaPattern(n, cons, r, t)


def pair_distortion(S: MetricStructure, T: MetricStructure, f: Sequence[int]) -> Fraction:
    """max over distinct pairs of max(d_T(fx,fy)/d_S(x,y), d_S(x,y)/d_T(fx,fy))."""
    ms, mt = S.metric, T.metric
    worst = Fraction(1)
    n = len(f)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = ms[i][j], mt[f[i]][f[j]]
            q = b / a if b >= a else a / b
            if q > worst:
                worst = q
    return worst


def optimal_distortion(S: MetricStructure, T: MetricStructure) -> Fraction | None:
    """Least bi-Lipschitz constant of a relation-onto bijection, or ``None`` if none exists.

    Branch and bound over partial assignments; a branch is cut once its
    distortion so far reaches the best complete one.
    """
    check_same_signature(S, T)
    n = S.n
    if T.n != n:
        return None
    for name, rel in S.relations.items():
        if len(rel.tuples) != len(T.relations[name].tuples):
            return None

    checks: list[list] = [[] for _ in range(n)]
    for name, rel in S.relations.items():
        target = T.relations[name].tuples
        for tup in rel.tuples:
            checks[max(tup)].append((tup, target))

    ms, mt = S.metric, T.metric
    best: list = [None]
    f = [-1] * n
    used = [False] * n

    def search(i: int, worst: Fraction):
        if i == n:
            if best[0] is None or worst < best[0]:
                best[0] = worst
            return
        for y in range(n):
            if used[y]:
                continue
            w = worst
            for j in range(i):
                a, b = ms[i][j], mt[y][f[j]]
                q = b / a if b >= a else a / b
                if q > w:
                    w = q
            if best[0] is not None and w >= best[0]:
                continue
            f[i] = y
            if all(tuple(f[x] for x in tup) in target for tup, target in checks[i]):
                used[y] = True
                search(i + 1, w)
                used[y] = False
            f[i] = -1

    search(0, Fraction(1))
    return best[0]


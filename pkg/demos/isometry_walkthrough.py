"""Deciding isometric isomorphism of small metric structures.

A structure is a finite metric space plus named relations.  We build a
3-point structure, shuffle it, and ask the decider to undo the shuffle.
"""

from fractions import Fraction

from cmstruct import MetricStructure, Relation
from cmstruct.corpus import random_permutation
from cmstruct.isometry import (
    ZetaPattern,
    brute_force_isometric_iso,
    compute_C_zeta,
    decide_isometric_iso,
    full_signature,
)

S = MetricStructure(
    ["a", "b", "c"],
    [[0, 1, 2], [1, 0, Fraction(3, 2)], [2, Fraction(3, 2), 0]],
    {"Edge": Relation(2, frozenset({(0, 1), (1, 2)}))},
)
T = S.relabel(random_permutation(0, 3))
print("shuffled points:", T.points)

f = decide_isometric_iso(S, T)
print("decider witness:", f, " brute force agrees:", f == brute_force_isometric_iso(S, T))

# Dropping one edge breaks the isomorphism even though the metric is untouched.
U = T.with_relations({"Edge": Relation(2, frozenset(list(T.relations["Edge"].tuples)[:1]))})
print("after removing an edge:", decide_isometric_iso(S, U))

# The invariant behind the decider: distance matrices of tuples meeting a pattern.
zeta = ZetaPattern(2, {"Edge": {(0, 1)}})
print("pairs joined by an edge, as matrices:")
for m in sorted(compute_C_zeta(S, zeta)):
    print("  ", [[str(x) for x in row] for row in m])

print("signatures agree:", full_signature(S) == full_signature(T))
print("signatures after edge removal agree:", full_signature(S) == full_signature(U))

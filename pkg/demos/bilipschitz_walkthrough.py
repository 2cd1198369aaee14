"""Bi-Lipschitz distortion and perturbation dominance.

The least distortion of a relation-preserving bijection is computed exactly.
Dominance at that constant holds for any pattern list, and the canonical
pattern of each side pins the constant down from below.
"""

from fractions import Fraction

from cmstruct import MetricStructure, Relation
from cmstruct.bilipschitz import canonical_pattern, dominates, optimal_distortion
from cmstruct.corpus import random_lip_pattern

S = MetricStructure(["x", "y", "z"], [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
                    {"Marked": Relation(1, frozenset({(0,)}))})
T = MetricStructure(["u", "v", "w"], [[0, 2, 1], [2, 0, 1], [1, 1, 0]],
                    {"Marked": Relation(1, frozenset({(2,)}))})

c = optimal_distortion(S, T)
print("optimal distortion:", c)

patterns = [random_lip_pattern(seed, S) for seed in range(8)]
print("dominates at c with random patterns:", dominates(S, T, c, patterns))

below = c * Fraction(15, 16)
print(f"canonical patterns at {below}:",
      dominates(S, T, below, [canonical_pattern(S)]),
      dominates(T, S, below, [canonical_pattern(T)]))
print("canonical patterns at c:",
      dominates(S, T, c, [canonical_pattern(S)]),
      dominates(T, S, c, [canonical_pattern(T)]))

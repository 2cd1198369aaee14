"""Coding a finite discrete structure by its algebra of subsets.

A relation is stored as the tuples of sets whose product misses it.
Decoding uses only the algebra, through its atoms.
"""

from cmstruct.core import Relation, discrete_structure
from cmstruct.isometry import decide_isometric_iso
from cmstruct.stone import atoms, clopen_algebra, stone_decode

M = discrete_structure(3, {"Next": Relation(2, frozenset({(0, 1), (1, 2), (2, 0)}))})
A = clopen_algebra(M)
print("elements:", len(A.elements), " atoms:", atoms(A))
print("coded pairs of sets:", len(A.relations["Next"].tuples), "of", len(A.elements) ** 2)

back = stone_decode(A)
print("decoded points:", back.points)
print("decoded relation:", sorted(back.relations["Next"].tuples))
print("isomorphic to the original:", decide_isometric_iso(M, back) is not None)

"""Groups as metric structures.

Word metrics come from weighted generators.  The Roelcke metric together with
the multiplication graph turns a finite group into a metric structure, and
structure isomorphism then detects group isomorphism.
"""

from cmstruct.corpus import random_word_metric
from cmstruct.groups import (
    alexandrov_structure,
    cyclic,
    decide_translation_equiv,
    integer_ball,
    roelcke_metric,
    roelcke_structure,
    small_groups,
    weighted_word_metric,
)
from cmstruct.isometry import decide_isometric_iso

Z5 = cyclic(5)
d = weighted_word_metric(Z5, {1: 1, 4: 1})
print("word lengths in Z5:", [str(x) for x in d.length])
print("Roelcke row of 0:", [str(x) for x in roelcke_metric(Z5, d)[0]])

names = ["Z8", "Z4xZ2", "Z2^3", "D4", "Q8"]
order8 = small_groups(8)
structures = [roelcke_structure(G, random_word_metric(i, G)) for i, G in enumerate(order8)]
print("order-8 structures isomorphic to each other?")
for i in range(5):
    row = ["yes" if decide_isometric_iso(structures[i], structures[j]) else "no " for j in range(5)]
    print(f"  {names[i]:6s}", " ".join(row))

ball, base, mult = integer_ball(3)
S = alexandrov_structure(ball, base, mult)
print("compactified distance between -3 and 3:", S.metric[0][6])

print("translate {0,1} onto {2,3} in Z5 by", decide_translation_equiv(Z5, 1, 2, {0, 1}, {2, 3}))
print("translate {0,1} onto {0,2} in Z5 by", decide_translation_equiv(Z5, 1, 2, {0, 1}, {0, 2}))

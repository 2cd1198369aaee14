"""Points of a metric space as coordinates in the Hilbert cube."""

from fractions import Fraction

from cmstruct import MetricStructure
from cmstruct.embeddings import cube_metric, iota, kuratowski_embed, sup_distance

S = MetricStructure(["p", "q", "r"], [[0, Fraction(1, 2), 1], [Fraction(1, 2), 0, Fraction(1, 2)],
                                      [1, Fraction(1, 2), 0]])
pts = kuratowski_embed(S, 5)
for name, p in zip(S.points, pts):
    print(name, [str(x) for x in p.coords])

print("sup distance p-r on the first 3 coordinates:", sup_distance(pts[0], pts[2], 3))
print("cube distance p-r:", cube_metric(pts[0], pts[2]))
print("after iota:", cube_metric(iota(pts[0]), iota(pts[2])))
print("iota(p):", [str(x) for x in iota(pts[0]).coords])

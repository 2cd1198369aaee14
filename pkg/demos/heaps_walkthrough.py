"""Heaps: groups that have forgotten their identity.

Any element can serve as the identity again, and the groups obtained at
different choices are isomorphic by left multiplication.
"""

from cmstruct.groups import find_group_isomorphism, quaternion
from cmstruct.heaps import (
    base_change_iso,
    decompose_heap_iso,
    group_from_heap,
    heap_from_group,
    subheaps,
    validate_heap,
)

Q = quaternion()
H = heap_from_group(Q)
print("heap axioms hold:", validate_heap(H.op).ok)
print("group at 0 equals Q8:", group_from_heap(H, 0) == Q)

G3 = group_from_heap(H, 3)
print("identity of the group at 3:", G3.identity)
print("isomorphic to Q8:", find_group_isomorphism(G3, Q) is not None)
print("base change 0 -> 3:", base_change_iso(H, 0, 3))

subs = subheaps(H)
print("subheaps by size:", {k: sum(len(s) == k for s in subs) for k in (1, 2, 4, 8)})

alpha = tuple(H(3, 0, x) for x in range(8))
d = decompose_heap_iso(H, H, alpha, 0, 0)
print("translation by 3 splits as a =", d.a, "and beta =", d.beta)

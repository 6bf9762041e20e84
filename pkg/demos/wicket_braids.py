"""
Wickets as braids on their feet
===============================

A loop of n wickets drags the 2n feet around the plane, giving a braid.
The crossing signs of the generator pictures are pinned by search: every
relator of W_n must become a trivial braid.
"""

from ringgroups import GroupId, parse_word, relators
from ringgroups.braids import braid_is_trivial, endpoint_hom, pin_dictionary

d = pin_dictionary(3)
print("pinned signs:", d.key)
print("all winning sign patterns:", d.winners)
print(d.to_text())

# Every relator of W_3 maps to a braid that Dynnikov coordinates certify trivial.
rels = relators(GroupId("W", 3))
print(sum(braid_is_trivial(endpoint_hom(w, d)) for w in rels), "of", len(rels), "relators trivial")

# A nontrivial element: one wicket passes through its neighbour and back out.
w = parse_word("r1 s1^-1", GroupId("W", 3))
b = endpoint_hom(w, d)
print(f"{w} -> {b} ; trivial? {braid_is_trivial(b)}")

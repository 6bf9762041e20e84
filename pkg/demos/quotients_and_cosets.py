"""
Permutation quotients and coset enumeration
===========================================

Forgetting everything but how rings are permuted and flipped gives the signed
permutation group; the kernel is the pure untwisted subgroup.
"""

import random

from ringgroups import GroupId, parse_word, relators, signed_image, todd_coxeter
from ringgroups.quotients import in_untwisted, is_pure, section_word
from ringgroups.words import invert, random_word

g = GroupId("R", 4)
w = random_word(g, 20, random.Random(3))
img = signed_image(w)
print("word:", w)
print("image:", img)

# Strip the canonical section of the image: what is left is pure and untwisted.
rest = w * invert(section_word(img, g))
print("remainder pure and untwisted:", is_pure(rest) and in_untwisted(rest))

# Setting rho_i = sigma_i collapses R_n onto its signed permutation quotient.
for n in (2, 3, 4):
    gn = GroupId("R", n)
    extra = [parse_word(f"r{i} s{i}^-1", gn) for i in range(1, n)]
    print(f"n={n}: {todd_coxeter(relators(gn), extra).count} cosets")

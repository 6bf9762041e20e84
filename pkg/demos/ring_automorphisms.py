"""
Rings and symmetric automorphisms
=================================

Loops of rings act on the fundamental group of the complement, a free group.
sigma_i swaps generators, rho_i conjugates, tau_i inverts.
"""

from ringgroups import GroupId, parse_word
from ringgroups.free_autos import alpha_word, compose, dahm_rep, inverse, is_identity, mccool

g = GroupId("R", 3)
a = dahm_rep(parse_word("r1 s2 t3", g))
print(a.to_text())
print("inverse composes to the identity:", is_identity(compose(a, inverse(a))))

# alpha_ij pulls ring i through ring j and back.  As a word in rho and sigma it
# is a conjugate of rho_k sigma_k^-1; the construction checks the automorphism.
for i, j in ((1, 2), (2, 1), (3, 1)):
    w = alpha_word(i, j, 3)
    print(f"alpha_{i}{j} = {w} ; matches McCool generator: {dahm_rep(w) == mccool(i, j, 3)}")

# The alpha_{i n} commute: a free abelian subgroup of rank n-1.
n = 5
cols = [mccool(i, n, n) for i in range(1, n)]
print("alpha_i5 commute:", all(compose(x, y) == compose(y, x) for x in cols for y in cols))

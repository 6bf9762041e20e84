"""
Word problems in the six motion groups
======================================

Each family gets a faithful representation: wicket groups map to braids on
the 2n feet, ring groups map to symmetric automorphisms of a free group.
"""

from ringgroups import GroupId, is_trivial, parse_word

# tau_1 reverses the first ring.  Doing it twice is trivial in R_n, where the
# rings are unoriented circles, but not in VR_n or W_n, which track full turns.
for fam in ("R", "VR", "W"):
    w = parse_word("t1 t1", GroupId(fam, 2))
    print(f"{fam}_2: t1^2 trivial? {is_trivial(w)}")

# Passing ring 1 around ring 2 twice is trivial for rings (sigma_i^2 = 1) but
# not for wickets, whose sigmas generate a braid group.
for fam in ("UR", "UW"):
    print(f"{fam}_3: s1^2 trivial? {is_trivial(parse_word('s1 s1', GroupId(fam, 3)))}")

# The mixed relation rho_1 sigma_2 sigma_1 = sigma_2 sigma_1 rho_2 holds everywhere.
mixed = "r1 s2 s1 r2^-1 s1^-1 s2^-1"
print("mixed relation:", [is_trivial(parse_word(mixed, GroupId(f, 3))) for f in ("UW", "W", "UR", "R")])

# McCool generators live in the pure untwisted group PUR_n.
tri = parse_word("a1_2 a1_3 a2_3 a1_2^-1 a1_3^-1 a2_3^-1", GroupId("PUR", 3))
print("PUR_3 triangle relation trivial?", is_trivial(tri))

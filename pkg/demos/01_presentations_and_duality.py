"""
Presentations, Koszul duals, and dimension tables
=================================================

Walk through the core objects: build the polydendriform presentation in
its two generator bases, compute the Koszul dual with exact arithmetic,
and confirm the quotient dimensions against the closed-form series.
"""

from polyops import (
    build_presentation,
    dims,
    koszul_dual,
    quotient_dim,
    relation_spaces_equal,
    std_from_harpoon,
)

# The gamma = 2 polydendriform operad has four generators prec_1, prec_2,
# succ_1, succ_2 and a 12-dimensional space of quadratic relations.
gamma = 2
std = build_presentation("dendr-std", gamma)
print("presentation:", std)
print("relation span dimension:", std.relation_basis().dimension, "= 3*gamma^2")

# A second basis generates the same relation space: the "harpoon" family,
# related by the triangular substitution prec_b = la_1 + ... + la_b.
harpoon = build_presentation("dendr-harpoon", gamma)
same = relation_spaces_equal(harpoon, std, std_from_harpoon(gamma))
print("harpoon and standard bases present the same operad:", same)

# Quotient dimensions are computed from the operadic ideal, arity by
# arity, and match the closed form gamma^(n-1) * catalan(n).
table = [quotient_dim(std, n) for n in range(1, 5)]
print("quotient dimensions (arity 1..4):", table)
print("closed-form dimensions:          ", dims("dendr", gamma, 4).dims())

# The Koszul dual lives on primed generators; its relations annihilate
# the originals under the signed pairing on two-node trees.  Here the
# dual is the diassociative-type operad, with dimensions n * gamma^(n-1).
dual = koszul_dual(harpoon)
print("dual generators:", ", ".join(dual.signature.names()))
print("dual relation span dimension:", dual.relation_basis().dimension, "= 5*gamma^2")
print("dual quotient dimensions:", [quotient_dim(dual, n) for n in range(1, 5)])
print("dias closed form:         ", dims("dias", gamma, 4).dims())

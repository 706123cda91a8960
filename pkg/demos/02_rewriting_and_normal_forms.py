"""
Quadratic rewriting: convergence and normal forms
=================================================

The multiassociative and multiplicial relations orient into monomial
rewrite systems.  This script runs them: single rewrites, exhaustive
local-confluence certificates, and normal-form counting against the
operad dimensions.
"""

from polyops import (
    build_rewrite_system,
    count_normal_forms,
    dims,
    is_locally_confluent,
    normal_form,
    parse_tree,
    tree_to_text,
)

# gamma = 2 multiassociative: every tree collapses onto a right comb
# uniformly labeled by its greatest label.
rs = build_rewrite_system("As", 2)
print("system:", rs)
for text in ("star_2(star_1(.,.),.)", "star_1(star_1(.,.),star_2(.,.))"):
    t = parse_tree(text, rs.signature)
    print(f"  {text}  ~>  {tree_to_text(normal_form(rs, t))}")

# Local confluence is certified by joining every peak on three internal
# nodes; with termination (guarded by step caps) that gives convergence,
# so normal forms form a basis of the quotient.
for family in ("As", "Dup"):
    for gamma in (1, 2, 3):
        ok = is_locally_confluent(build_rewrite_system(family, gamma))
        print(f"locally confluent {family} gamma={gamma}:", ok)

# Counting normal forms therefore recovers dimension sequences: for the
# multiplicial system these are the edge-valued binary tree counts.
rs = build_rewrite_system("Dup", 2)
counts = [count_normal_forms(rs, n) for n in range(1, 7)]
print("multiplicial normal forms by arity:", counts)
print("gamma^(n-1) * catalan(n):          ", dims("dendr", 2, 6).dims())

rsa = build_rewrite_system("As", 3)
print("multiassociative normal forms:", [count_normal_forms(rsa, n) for n in range(1, 7)])

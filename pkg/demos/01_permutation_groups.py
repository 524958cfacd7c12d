"""
Permutations, groups and subgroups
==================================

Points are written 1-based in cycle notation. Products act left to right,
so ``a * b`` applies ``a`` first.
"""

from grouplab import Permutation, all_subgroups, generate_group, permutes, product_set
from grouplab.core import is_normal, normal_closure, subgroup_generated

a = Permutation.parse("(1 2)", 3)
b = Permutation.parse("(2 3)", 3)
print("a * b =", (a * b).cycle_string())
print("a conjugated by b =", (a ** b).cycle_string())

# the symmetric group on three points, closed breadth-first from two generators
S3 = generate_group([Permutation.parse("(1 2 3)", 3), a], name="S3")
print(S3, "order", S3.order)

# every subgroup, in canonical order (by order, then element set)
for H in all_subgroups(S3):
    print("  ", H.describe(), "normal" if is_normal(H, S3) else "")

# two reflections do not permute: the product set has 4 elements
H = subgroup_generated(S3, [a])
K = subgroup_generated(S3, [Permutation.parse("(1 3)", 3)])
print("|HK| =", len(product_set(H, K)), "permutes:", permutes(H, K))

# the normal closure of a reflection is everything
print("normal closure of <(1 2)>:", normal_closure(S3, H).order)

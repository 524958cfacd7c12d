"""
Embedding properties of a subgroup
==================================

The same small subgroups are tested against each embedding predicate.
False answers come with a witness that can be re-checked independently.
"""

from grouplab import builtin
from grouplab.core import subgroup_generated
from grouplab.embeddings import PREDICATES, recheck
from grouplab.perm import Permutation

cases = [
    ("symmetric4", "(1 2)"),
    ("symmetric3", "(1 2)"),
    ("alternating4", "(1 2)(3 4)"),
    ("symmetric3", "(1 2 3)"),
]

for name, gen in cases:
    G = builtin(name)
    H = subgroup_generated(G, [Permutation.parse(gen, G.degree)])
    print(f"<{gen}> in {name}")
    for label, pred in PREDICATES.items():
        v = pred(H, G)
        print(f"   {label:18s} {str(v.holds):5s}  {v.detail}  (witness re-checks: {recheck(v)})")

"""
The order-216 group where normalizer control fails
==================================================

A Sylow 3-subgroup has class 2 and the trivial subgroup satisfies the
s-semipermutability condition, N_G(P) is 3-supersolvable, and yet G is not.
So a p-nilpotence assumption on N_G(P) cannot be weakened to
p-supersolvability in the class-(p-1) criterion.
"""

from grouplab import evaluate, fixture_216_153
from grouplab.classes import is_p_nilpotent, is_p_supersolvable, is_solvable
from grouplab.core import normalizer
from grouplab.reports import format_reports
from grouplab.structure import chief_series, nilpotency_class, sylow_subgroup

G = fixture_216_153()
P = sylow_subgroup(G, 3)
N = normalizer(G, P)

print("order", G.order, "solvable", is_solvable(G).holds)
print("Sylow 3-subgroup order", P.order, "class", nilpotency_class(P))
print("N_G(P) order", N.order, "3-supersolvable", is_p_supersolvable(N, 3).holds,
      "3-nilpotent", is_p_nilpotent(N, 3).holds)
print("G 3-supersolvable:", is_p_supersolvable(G, 3).holds)
print("chief factors:", chief_series(G).factor_orders())

# both criteria are vacuous here, as they must be
print(format_reports([evaluate("XU_LI", G, 3), evaluate("MAIN", G, 3)]))

"""
Sylow subgroups, quotients and series in S4
===========================================
"""

from grouplab import builtin
from grouplab.classes import is_p_nilpotent, is_p_supersolvable
from grouplab.reports import describe_group
from grouplab.structure import (
    chief_series,
    derived_series,
    frattini,
    o_p,
    o_p_prime,
    o_upper_p,
    quotient,
    supersolvable_hypercentre,
    sylow_conjugates,
    sylow_subgroup,
)

S4 = builtin("symmetric4")

for p in (2, 3):
    P = sylow_subgroup(S4, p)
    print(f"Sylow {p}: {describe_group(P)}, {len(sylow_conjugates(S4, p))} conjugates")

print("derived series:", [T.order for T in derived_series(S4).terms])
print("chief factors:", chief_series(S4).factor_orders())

V4 = o_p(S4, 2)
Q = quotient(S4, V4)
print("S4 / V4 has order", Q.group.order, "abelian" if Q.group.is_abelian() else "nonabelian")

print("O_3'(S4) =", describe_group(o_p_prime(S4, 3)))
print("O^2(S4)  =", describe_group(o_upper_p(S4, 2)))
print("Frattini =", describe_group(frattini(S4)))
print("Z_U(S4)  =", describe_group(supersolvable_hypercentre(S4)))

# the 4-point chief factor V4 is what breaks 2-supersolvability
v = is_p_supersolvable(S4, 2)
print("2-supersolvable:", v.holds, "-", v.detail)
print("3-nilpotent:", is_p_nilpotent(S4, 3).holds)

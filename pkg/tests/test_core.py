from itertools import product

import pytest

import oracles
from conftest import catalog_groups, group
from grouplab.core import (
    EnumerationTooLarge,
    GroupTooLarge,
    all_subgroups,
    center,
    centralizer,
    conjugate_subgroup,
    core,
    generate_group,
    is_normal,
    is_subnormal,
    maximal_subgroups,
    normal_closure,
    normalizer,
    permutes,
    product_set,
    subgroup_generated,
    subgroups_of_order,
)
from grouplab.perm import Permutation
from grouplab.structure import sylow_subgroup

P = Permutation.parse


def sub(G, *cycles):
    return subgroup_generated(G, [P(c, G.degree) for c in cycles])


@pytest.mark.parametrize("gens, degree, order", [
    (["(1 2)", "(1 2 3)"], 3, 6),
    ([], 4, 1),
    (["(1 2 3 4)", "(1 3)"], 4, 8),
])
def test_generate_group_orders(gens, degree, order):
    G = generate_group([P(g, degree) for g in gens], degree)
    assert G.order == order
    assert G.identity in G
    assert all(g in G for g in G.generators)


def test_generate_group_matches_oracle_closure():
    gens = [P("(1 2 3 4 5)", 5), P("(1 2)", 5)]
    G = generate_group(gens, 5)
    assert {g.images for g in G.elements} == oracles.closure([g.images for g in gens], 5)


def test_element_budget_is_enforced():
    with pytest.raises(GroupTooLarge, match="too large"):
        generate_group([P("(1 2 3 4 5 6 7)", 7), P("(1 2)", 7)], 7, max_elements=1000)


def test_elements_closed_and_order_divides_factorial():
    import math
    for G in catalog_groups():
        assert math.factorial(G.degree) % G.order == 0
        els = set(G.elements)
        for a in G.generators:
            assert all(a * x in els for x in els)
            assert a.inverse() in els


def test_subgroup_generated(S3, S4):
    assert sub(S3, "(1 2 3)").order == 3
    assert sub(S3).order == 1
    assert sub(S4, "(1 2)", "(1 3 4)").order == 24
    assert sub(S3, "(1 2 3)").parent is S3


def test_product_set_and_permutes(S3):
    H, K = sub(S3, "(1 2)"), sub(S3, "(1 2 3)")
    assert permutes(H, K)
    K2 = sub(S3, "(1 3)")
    assert len(product_set(H, K2)) == 4
    assert not permutes(H, K2)
    assert permutes(S3.trivial_subgroup(), K2)


def test_conjugate_subgroup(S3, S4):
    H = sub(S3, "(1 2)")
    assert conjugate_subgroup(H, P("(2 3)", 3)) == sub(S3, "(1 3)")
    assert conjugate_subgroup(H, S3.identity) == H
    V4 = sub(S4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert all(conjugate_subgroup(V4, g) == V4 for g in S4.elements)


def test_normalizer_centralizer_center(S3, S4):
    P2 = sylow_subgroup(S4, 2)
    assert normalizer(S4, P2) == P2 and P2.order == 8
    assert center(S3).order == 1
    assert centralizer(S3, [S3.identity]) == S3.whole()


def test_normal_closure_and_core(S3):
    H = sub(S3, "(1 2)")
    assert normal_closure(S3, H) == S3.whole()
    assert core(S3, H).order == 1


def test_normal_and_subnormal(S3, S4, A4):
    V4 = sub(S4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert is_normal(V4, S4) and is_subnormal(V4, S4)
    H = sub(A4, "(1 2)(3 4)")
    assert not is_normal(H, A4) and is_subnormal(H, A4)
    assert not is_subnormal(sub(S3, "(1 2)"), S3)


def test_subgroup_lattice_examples(S3, Q8):
    orders = sorted(H.order for H in all_subgroups(S3))
    assert orders == [1, 2, 2, 2, 3, 6]
    assert len(subgroups_of_order(Q8, 4)) == 3
    C6 = group("cyclic6")
    assert sorted(M.order for M in maximal_subgroups(C6)) == [2, 3]


@pytest.mark.parametrize("name", ["symmetric3", "alternating4", "quaternion8", "symmetric4",
                                  "dihedral8", "dihedral12", "cyclic12"])
def test_subgroup_count_matches_pair_closure_oracle(name):
    G = group(name)
    expected = oracles.subgroups_by_pairs({g.images for g in G.elements}, G.degree)
    got = {frozenset(g.images for g in H.elements) for H in all_subgroups(G)}
    assert got == expected


def test_enumeration_budget_is_loud():
    with pytest.raises(EnumerationTooLarge):
        all_subgroups(group("symmetric4"), budget=10)


@pytest.mark.parametrize("name", ["symmetric3", "alternating4", "quaternion8", "dihedral12"])
def test_set_operation_invariants(name):
    G = group(name)
    subs = all_subgroups(G)
    for H, K in product(subs, subs):
        hk = len(product_set(H, K))
        assert hk == H.order * K.order // (H & K).order
        joined = subgroup_generated(G, list(H.elements) + list(K.elements))
        assert permutes(H, K) == (hk == joined.order)
        assert permutes(H, K) == permutes(K, H)
        if is_normal(H, G):
            assert permutes(H, K)
    for H in subs:
        C, N = core(G, H), normal_closure(G, H)
        assert C <= H <= N
        assert is_normal(C, G) and is_normal(N, G)
        conj = [oracles.compose(oracles.compose(oracles.inverse(g.images), h.images), g.images)
                for g in G.elements for h in H.generators]
        assert N.order == len(oracles.closure(conj, G.degree))


def test_equality_is_by_element_set(S4):
    assert sub(S4, "(1 2 3 4)") == sub(S4, "(1 4 3 2)")
    assert hash(sub(S4, "(1 2 3 4)")) == hash(sub(S4, "(1 4 3 2)"))

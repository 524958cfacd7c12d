import pytest
from hypothesis import given
from hypothesis import strategies as st

from grouplab.perm import Permutation, PermutationError


@st.composite
def perms(draw, degree=None):
    n = degree or draw(st.integers(1, 8))
    return Permutation(draw(st.permutations(range(n))))


def test_parse_and_cycle_string():
    p = Permutation.parse("(1 2 3)(4 5)", 6)
    assert p.images == (1, 2, 0, 4, 3, 5)
    assert p.cycle_string() == "(1 2 3)(4 5)"
    assert Permutation.parse("()", 3) == Permutation.identity(3)
    assert Permutation.parse("(1,3)", 3) == Permutation.parse("(1 3)", 3)


def test_degree_inferred_from_largest_point():
    assert Permutation.parse("(2 5)").degree == 5


@pytest.mark.parametrize("bad, message", [
    ("(1 2 2)", "repeated point in cycle"),
    ("(1 2)(2 3)", "repeated point"),
    ("(0 1)", "out of range"),
    ("(1 9)", "out of range"),
    ("(1 x)", None),
    ("(1 2", None),
])
def test_malformed_cycles_rejected(bad, message):
    with pytest.raises(PermutationError, match=message):
        Permutation.parse(bad, 4)


def test_non_bijection_rejected():
    with pytest.raises(PermutationError):
        Permutation([0, 0, 1])


def test_product_acts_left_to_right():
    a = Permutation.parse("(1 2)", 3)
    b = Permutation.parse("(2 3)", 3)
    # 1 -> 2 under a, then 2 -> 3 under b
    assert (a * b).cycle_string() == "(1 3 2)"


def test_conjugation_relabels_points():
    h = Permutation.parse("(1 2)", 3)
    g = Permutation.parse("(2 3)", 3)
    assert (h ** g).cycle_string() == "(1 3)"


@given(perms())
def test_inverse_cancels(p):
    assert p * p.inverse() == Permutation.identity(p.degree)
    assert p.inverse() * p == Permutation.identity(p.degree)


@given(perms(degree=6), perms(degree=6), perms(degree=6))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms())
def test_order_and_cycle_round_trip(p):
    assert p ** p.order() == Permutation.identity(p.degree)
    assert all(p ** k != Permutation.identity(p.degree) for k in range(1, p.order()))
    assert Permutation.parse(p.cycle_string(), p.degree) == p


def test_extend_shifts_support():
    p = Permutation.parse("(1 2)", 2).extend(5, 3)
    assert p.cycle_string() == "(4 5)"

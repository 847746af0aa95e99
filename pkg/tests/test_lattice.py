import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import in_semigroup, minors_gcd, nonneg_solutions
from toricasci.lattice import (
    DimensionError,
    combine,
    hermite_basis,
    integer_representation,
    is_cyclic_generated_by,
    lattice_contains_lattice,
    lattice_intersection,
    lattice_membership,
    semigroup_membership,
)

T1 = [(6, 0, 0), (0, 6, 0), (0, 0, 6), (1, 0, 1), (0, 1, 1)]
V = [(6, 0, 0), (0, 6, 0), (0, 0, 6)]


def test_hermite_standard_basis():
    assert hermite_basis([(1, 0), (0, 1)]).basis == ((1, 0), (0, 1))
    assert hermite_basis([(0, 1), (1, 0)]).basis == ((1, 0), (0, 1))


def test_hermite_family_lattice():
    L = hermite_basis(T1)
    assert L.rank == 3
    # index of the lattice = product of pivots; brute-force oracle: gcd of maximal minors
    index = 1
    for row, p in zip(L.basis, L.pivots):
        index *= row[p]
    assert index == minors_gcd(T1, 3) == 6
    assert (4, 4, 2) in L


def test_hermite_single_generator():
    L = hermite_basis([(2, 4)])
    assert L.basis == ((2, 4),)
    assert (1, 2) not in L
    assert (-4, -8) in L


def test_hermite_is_canonical():
    assert hermite_basis([(2, 4), (1, 1)]) == hermite_basis([(1, 3), (0, 2), (3, 5)])
    H = hermite_basis([(3, 5, 7), (2, 2, 8), (1, 9, 4)])
    for row, p in zip(H.basis, H.pivots):
        assert row[p] > 0
    for i, p in enumerate(H.pivots):
        for above in H.basis[:i]:
            assert 0 <= above[p] < H.basis[i][p]


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        hermite_basis([(1, 0), (1, 0, 0)])
    with pytest.raises(DimensionError):
        lattice_membership((1, 2, 3), hermite_basis([(1, 0)]))
    with pytest.raises(DimensionError):
        lattice_intersection(hermite_basis([(1, 0)]), hermite_basis([(1, 0, 0)]))


def test_membership_family_vector():
    L = hermite_basis(T1)
    coeffs = lattice_membership((4, 4, 2), L)
    assert coeffs is not None
    assert combine(coeffs, L.basis) == (4, 4, 2)
    # sum v_i - g sum w_i with g = 2
    assert combine((1, 1, 1, -2, -2), T1) == (4, 4, 2)
    rep = integer_representation((4, 4, 2), T1)
    assert combine(rep, T1) == (4, 4, 2)


def test_membership_trivial_cases():
    L = hermite_basis(T1)
    assert lattice_membership((0, 0, 0), L) == (0, 0, 0)
    assert lattice_membership((1, 1, 1), hermite_basis(V)) is None


def test_intersection_examples():
    assert lattice_intersection(hermite_basis(V), hermite_basis([(1, 0, 1)])).basis == ((6, 0, 6),)
    L = hermite_basis(T1)
    assert lattice_intersection(L, L) == L
    T_1 = V + [(1, 0, 1)]
    meet = lattice_intersection(hermite_basis(T_1), hermite_basis([(4, 4, 2)]))
    assert meet.basis == ((12, 12, 6),)


def test_intersection_with_zero_lattice():
    Z = hermite_basis([], ambient_dim=2)
    assert lattice_intersection(Z, hermite_basis([(1, 0)])).rank == 0


def test_cyclic_generator():
    assert is_cyclic_generated_by(hermite_basis([(6, 0, 6)])) == (6, 0, 6)
    assert is_cyclic_generated_by(hermite_basis([(1, 0), (0, 1)])) is None
    assert is_cyclic_generated_by(hermite_basis([(-4, -4, -2)])) == (4, 4, 2)
    assert is_cyclic_generated_by(hermite_basis([(0, -3, 6), (0, 2, -4)])) == (0, 1, -2)


def test_semigroup_examples():
    assert semigroup_membership((12, 12, 6), T1) == (2, 2, 1, 0, 0)
    assert semigroup_membership((8, 8, 4), T1) == (1, 1, 0, 2, 2)
    assert semigroup_membership((4, 4, 2), T1) is None
    assert not in_semigroup((4, 4, 2), T1)


def test_semigroup_errors():
    with pytest.raises(ValueError):
        semigroup_membership((-1, 0), [(1, 0)])
    with pytest.raises(ValueError):
        semigroup_membership((1, 0), [(0, 0)])
    assert semigroup_membership((0, 0), [(1, 0)]) == (0,)
    assert semigroup_membership((1, 0), []) is None


small_vec = st.lists(st.integers(-6, 6), min_size=3, max_size=3).map(tuple)


@settings(max_examples=60, deadline=None)
@given(st.lists(small_vec, min_size=1, max_size=4))
def test_hermite_round_trip(gens):
    L = hermite_basis(gens)
    for g in gens:
        assert g in L
    for b in L.basis:
        rep = integer_representation(b, gens)
        assert rep is not None and combine(rep, gens) == b


@settings(max_examples=60, deadline=None)
@given(
    st.lists(small_vec, min_size=1, max_size=3),
    st.lists(small_vec, min_size=1, max_size=3),
    st.lists(st.integers(-3, 3), min_size=3, max_size=3),
)
def test_intersection_properties(g1, g2, coeffs):
    L1, L2 = hermite_basis(g1), hermite_basis(g2)
    meet = lattice_intersection(L1, L2)
    assert lattice_contains_lattice(L1, meet)
    assert lattice_contains_lattice(L2, meet)
    v = combine(coeffs[: L1.rank], L1.basis, 3)
    if v in L2:
        assert v in meet


nonneg_vec = st.lists(st.integers(0, 4), min_size=3, max_size=3).map(tuple).filter(any)


@settings(max_examples=80, deadline=None)
@given(st.lists(nonneg_vec, min_size=1, max_size=4), st.lists(st.integers(0, 20), min_size=3, max_size=3))
def test_semigroup_against_enumeration(gens, target):
    got = semigroup_membership(target, gens)
    expected = nonneg_solutions(target, gens)
    if got is None:
        assert expected == []
    else:
        assert combine(got, gens) == tuple(target)
        assert got in expected


@pytest.mark.parametrize("n", [3, 4])
def test_intersection_formula_random(n):
    # Z{c e_j, d(e_i + e_n) : earlier i} meets Z d(e_k + e_n) in Z (lcm(c, d)/d) d(e_k + e_n)
    import random
    from math import lcm

    rng = random.Random(1234 + n)
    for _ in range(40):
        c, d = rng.randint(1, 12), rng.randint(1, 12)
        order = rng.sample(range(n - 1), rng.randint(1, n - 1))
        gens = [tuple(c if j == i else 0 for j in range(n)) for i in range(n)]
        for i in order:
            w = tuple(d if j in (i, n - 1) else 0 for j in range(n))
            meet = lattice_intersection(hermite_basis(gens), hermite_basis([w]))
            m = lcm(c, d)
            assert meet == hermite_basis([tuple(m // d * x for x in w)])
            gens.append(w)

import json
from itertools import combinations
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from oracles import nonneg_solutions
from toricasci.config import Binomial, ToricConfiguration, parse_binomial
from toricasci.family import lemma1_ci_binomials, lemma1_configuration
from toricasci.toric_ideal import (
    binomial_in_ideal,
    enumerate_fiber,
    iter_fibers,
    markov_basis,
    minimal_generator_count,
    moves_connect_fibers,
    same_up_to_orientation,
)

def test_binomial_in_ideal(example_config):
    assert binomial_in_ideal(parse_binomial("y1^6 - x1*x3", 3, 3), example_config)
    assert binomial_in_ideal(parse_binomial("y1^2*y2^2*y3 - x1*x2*x3", 3, 3), example_config)
    assert not binomial_in_ideal(parse_binomial("y1 - x1", 3, 3), example_config)
    with pytest.raises(ValueError):
        binomial_in_ideal(parse_binomial("y1 - x1", 3, 2), example_config)


def test_enumerate_fiber_matches_brute(example_config):
    gens = example_config.generators
    for b in [(6, 6, 6), (12, 12, 6), (8, 8, 4), (7, 1, 8)]:
        assert list(enumerate_fiber(example_config, b).points) == sorted(nonneg_solutions(b, gens))


def test_enumerate_fiber_errors(example_config):
    with pytest.raises(ValueError):
        enumerate_fiber(example_config, (1, 2))
    with pytest.raises(ValueError):
        enumerate_fiber(example_config, (-1, 0, 0))


def test_iter_fibers_consistent(example_config):
    fibers = iter_fibers(example_config, 16)
    seen = set()
    for f in fibers:
        assert sum(f.degree) <= 16
        assert f.points == enumerate_fiber(example_config, f.degree).points
        seen.add(f.degree)
    assert len(seen) == len(fibers)
    # every degree in range reachable from some z is present
    assert (6, 6, 0) in seen and (1, 0, 1) in seen and (0, 0, 0) in seen


def test_example_markov_basis(example_config):
    res = markov_basis(example_config, 36)
    assert res.count == 6
    assert res.complete_up_to_bound
    expected = [
        "y1^6 - x1*x3",
        "y2^6 - x2*x3",
        "y2^2*y3 - x2*y1^4",
        "y1^2*y3 - x1*y2^4",
        "x3*y3 - y1^4*y2^4",
        "y3^2 - x1*x2*y1^2*y2^2",
    ]
    got = [str(b) for b in res.binomials]
    assert sorted(got) == sorted(expected)
    for b in res.binomials:
        assert b.is_canonical() and binomial_in_ideal(b, example_config)
    assert minimal_generator_count(example_config, 36) == (6, True)


def test_example_basis_connects_fibers(example_config):
    res = markov_basis(example_config, 24)
    assert moves_connect_fibers(example_config, res.binomials, 24)
    # one generator fewer leaves some fiber disconnected
    for k in range(res.count):
        rest = res.binomials[:k] + res.binomials[k + 1:]
        assert not moves_connect_fibers(example_config, rest, 24)


def test_small_bound_flags_incomplete(example_config):
    res = markov_basis(example_config, 12)
    assert res.count < 6
    assert not res.complete_up_to_bound


def test_bad_bound(example_config):
    with pytest.raises(ValueError):
        markov_basis(example_config, 0)


def test_json_shape(example_config):
    data = json.loads(json.dumps(markov_basis(example_config, 36).to_json()))
    assert data["count"] == 6 and data["degree_bound_used"] == 36
    back = [Binomial.from_json(d, 3, 3) for d in data["binomials"]]
    assert [str(b) for b in back] == data["equations"]


def test_free_configuration():
    T = ToricConfiguration(2, 3, ())
    res = markov_basis(T, 20)
    assert res.count == 0 and res.complete_up_to_bound


def test_degenerate_configuration():
    # w equal to a multiple of a v_j
    T = ToricConfiguration(2, 2, ((4, 0),))
    assert [str(b) for b in markov_basis(T, 20).binomials] == ["y1 - x1^2"]
    with pytest.raises(ValueError):
        ToricConfiguration(2, 2, ((2, 0),))


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("c", range(1, 6))
@pytest.mark.parametrize("d", range(1, 6))
def test_lemma1_complete_intersection(n, c, d):
    for k in range(1, n):
        for idx in combinations(range(1, n), k):
            T = lemma1_configuration(n, c, d, idx)
            bound = 3 * lcm(c, d)
            res = markov_basis(T, bound)
            assert same_up_to_orientation(res.binomials, lemma1_ci_binomials(n, c, d, idx))
            assert res.complete_up_to_bound


def test_orientation_helper():
    a = Binomial(1, (1, 0), (0, 2))
    assert same_up_to_orientation([a], [Binomial(1, (0, 2), (1, 0))])
    assert not same_up_to_orientation([a], [Binomial(1, (2, 0), (0, 1))])


@settings(max_examples=25, deadline=None)
@given(
    c=st.integers(1, 4),
    rows=st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=2, unique=True),
)
def test_markov_basis_connects(c, rows):
    rows = [r for r in rows if any(r) and r not in {(c, 0), (0, c)}]
    T = ToricConfiguration(2, c, tuple(rows))
    res = markov_basis(T, 14)
    assert all(binomial_in_ideal(b, T) for b in res.binomials)
    assert moves_connect_fibers(T, res.binomials, 14)

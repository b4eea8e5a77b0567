"""Branch-and-bound hitting sets against exhaustive enumeration."""

import random

from sigmadim.transversal import minimum_hitting_set, minimum_hitting_set_size
from conftest import brute_min_hitting_set_size


def test_empty_collection():
    assert minimum_hitting_set([]) == frozenset()


def test_infeasible():
    assert minimum_hitting_set([set()]) is None
    assert minimum_hitting_set_size([{1}, set()]) is None


def test_unit_propagation_chain():
    assert minimum_hitting_set([{1}, {2}, {1, 2, 3}]) == frozenset({1, 2})


def test_witness_hits_everything():
    sets = [{1, 2}, {2, 3}, {3, 4}, {5}]
    hs = minimum_hitting_set(sets)
    assert all(hs & s for s in map(frozenset, sets))
    assert len(hs) == brute_min_hitting_set_size(sets)


def test_random_instances_match_exhaustive():
    rng = random.Random(11)
    for _ in range(120):
        universe = range(rng.randint(1, 9))
        sets = [
            frozenset(rng.sample(universe, rng.randint(1, min(4, len(universe)))))
            for _ in range(rng.randint(1, 7))
        ]
        expect = brute_min_hitting_set_size(sets)
        got = minimum_hitting_set(sets)
        assert len(got) == expect
        assert all(got & s for s in sets)


def test_deterministic():
    sets = [{3, 1}, {1, 2}, {2, 3}]
    assert minimum_hitting_set(sets) == minimum_hitting_set(list(reversed(sets)))


def test_interval_instances_scale():
    # chain constraints like those of width-2 families at window 64
    sets = [{t, t + 1} for t in range(64)]
    assert minimum_hitting_set_size(sets) == 32

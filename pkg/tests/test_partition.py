import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multab.errors import InputError
from multab.partition import (
    CoverTrace,
    EqualSumMatching,
    best_matching_for_r,
    find_equal_sum_set,
    greedy_cover,
    maximal_matching,
)
from multab.profiles import ScaleProfile

PROFILE = ScaleProfile()


def test_find_equal_sum_examples():
    assert find_equal_sum_set([1, 2, 3], range(3), 2, 3) == (0, 1)
    assert find_equal_sum_set([5, 5], range(2), 1, 4) is None
    assert find_equal_sum_set([1, 1, 1, 1], range(4), 2, 2) == (0, 1)


def test_find_equal_sum_is_lex_least():
    weights = [4, 1, 3, 2, 3]
    found = find_equal_sum_set(weights, range(5), 2, 4)
    assert found == (1, 2)  # {1,2} beats {3,... } and {0,...} has no partner
    assert find_equal_sum_set(weights, [0, 3, 4], 2, 7) == (0, 4)


def test_find_equal_sum_validation():
    with pytest.raises(InputError):
        find_equal_sum_set([1], [0], 0, 1)
    with pytest.raises(InputError):
        find_equal_sum_set([0], [0], 1, 1)


def test_maximal_matching_examples():
    match = maximal_matching([1, 2, 3, 1, 2, 3], range(6), 2, 4)
    assert set(map(frozenset, match.sets)) == {
        frozenset({0, 2}),
        frozenset({1, 4}),
        frozenset({3, 5}),
    }
    assert match.sets[0] == (0, 2)  # lexicographic extraction order
    assert maximal_matching([7], [0], 1, 7).sets == ((0,),)
    assert maximal_matching([2, 2], range(2), 2, 5).sets == ()


def test_best_matching_examples():
    match = best_matching_for_r([5, 5, 5, 5], range(4), 2)
    assert (match.r, match.d, match.size) == (1, 5, 4)
    match = best_matching_for_r([1], [0], 5)
    assert (match.r, match.d, match.size) == (1, 1, 1)
    match = best_matching_for_r([1, 2, 3, 1, 2, 3], range(6), 2)
    assert (match.r, match.d, match.size) == (2, 4, 3)
    assert match.covered_weight == 12


def test_best_matching_empty_active():
    with pytest.raises(InputError):
        best_matching_for_r([1, 2], [], 2)


def test_greedy_cover_examples():
    trace, best = greedy_cover([5, 5, 5, 5], PROFILE)
    assert len(trace.rounds) == 1 and best.covered_weight == 20
    trace, best = greedy_cover([1, 2, 3, 1, 2, 3], PROFILE)
    assert len(trace.rounds) == 1 and best.covered_weight == 12
    trace, best = greedy_cover([1, 2, 4, 8, 16], PROFILE)
    assert best.covered_weight == 16
    assert best.sets == ((4,),)


def test_cover_trace_contract():
    trace, best = greedy_cover([3, 1, 4, 1, 5, 9, 2, 6], PROFILE)
    remaining = [count for _, count in trace.rounds]
    assert remaining[-1] == 0
    assert all(a > b for a, b in zip(remaining, remaining[1:]))


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=50), min_size=1, max_size=25),
)
def test_cover_invariants_random(weights):
    trace, best = greedy_cover(weights, PROFILE)
    total = sum(weights)
    covered_all: set[int] = set()
    for match, _ in trace.rounds:
        match.validate(weights)
        assert not covered_all & match.covered_indices()
        covered_all |= match.covered_indices()
    assert covered_all == set(range(len(weights)))
    assert best.covered_weight * len(trace.rounds) >= total


def test_equal_weights_one_round():
    for n in (1, 2, 7, 20):
        trace, best = greedy_cover([13] * n, PROFILE)
        assert len(trace.rounds) == 1
        assert best.covered_weight == 13 * n


def test_matching_validate_catches_corruption():
    good = EqualSumMatching(2, 4, ((0, 2), (1, 3)))
    good.validate([1, 1, 3, 3])
    with pytest.raises(InputError):
        EqualSumMatching(2, 4, ((0, 2), (0, 3))).validate([1, 1, 3, 3])
    with pytest.raises(InputError):
        EqualSumMatching(2, 5, ((0, 2),)).validate([1, 1, 3, 3])
    with pytest.raises(InputError):
        EqualSumMatching(1, 4, ((0, 2),)).validate([1, 1, 3, 3])


def test_determinism():
    rng = random.Random(0)
    weights = [rng.randint(1, 30) for _ in range(30)]
    first = greedy_cover(weights, PROFILE)
    second = greedy_cover(list(weights), PROFILE)
    assert first[0] == second[0] and first[1] == second[1]

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_subset_sums
from multab.errors import BudgetError, InputError
from multab.sumset import (
    Seq,
    SizeSet,
    mixed_block_bound_holds,
    repeated,
    residues_mod,
    subset_sums,
    sumset_add,
    two_block_bound_holds,
)


def test_subset_sums_examples():
    assert subset_sums(Seq.of([1, 2])).values() == [0, 1, 2, 3]
    assert subset_sums(Seq.of([2, 2, 2])).values() == [0, 2, 4, 6]
    assert subset_sums(Seq.of([3, 5])).values() == [0, 3, 5, 8]


def test_sumset_add_examples():
    # {0,3,6} + {0,5}, enumerated by hand: 0,3,5,6,8,11
    assert sumset_add(repeated(2, 3), repeated(1, 5)).values() == [0, 3, 5, 6, 8, 11]
    s = subset_sums(Seq.of([4, 9]))
    assert sumset_add(s, SizeSet.from_values([0])) == s
    assert sumset_add(repeated(1, 1), repeated(1, 1)).values() == [0, 1, 2]


def test_repeated_examples():
    assert repeated(3, 2).values() == [0, 2, 4, 6]
    assert repeated(0, 7).values() == [0]
    assert repeated(2, 5).values() == [0, 5, 10]


def test_residues_examples():
    assert residues_mod(Seq.of([2, 2]), 4) == {0, 2}
    assert residues_mod(Seq.of([1]), 2) == {0, 1}
    # subset sums {0,3,5,8} mod 4
    assert residues_mod(Seq.of([3, 5]), 4) == {0, 1, 3}
    with pytest.raises(InputError):
        residues_mod(Seq.of([1]), 0)


def test_block_bound_examples():
    # S(1,1,5,5) has 9 elements >= 2*min(5,2) = 4
    assert mixed_block_bound_holds(Seq.of([1, 1]), 5, 2, 1)
    assert mixed_block_bound_holds(Seq.of([2, 2]), 4, 1, 2)
    assert mixed_block_bound_holds(Seq.of([1]), 1, 1, 1)
    assert two_block_bound_holds(2, 3, 1, 5, 1)
    assert two_block_bound_holds(1, 1, 1, 1, 1)
    assert two_block_bound_holds(3, 4, 2, 6, 2)


def test_block_bound_hypothesis_violation_raises():
    with pytest.raises(InputError):
        mixed_block_bound_holds(Seq.of([4]), 8, 1, 1)  # gcd 4 > 1
    with pytest.raises(InputError):
        two_block_bound_holds(1, 6, 1, 9, 1)  # gcd 3 > 1


def test_seq_validation():
    with pytest.raises(InputError):
        Seq.of([0, 1])
    with pytest.raises(InputError):
        Seq.of([-2])
    assert Seq.run(0, 5).length == 0
    assert Seq.of([2, 2, 3]).total == 7


def test_budget():
    with pytest.raises(BudgetError):
        subset_sums(Seq.run(10**7, 10**6))


@given(st.lists(st.integers(min_value=1, max_value=50), min_size=1, max_size=12))
def test_subset_sums_match_naive(terms):
    assert set(subset_sums(Seq.of(terms)).values()) == naive_subset_sums(terms)


@given(st.lists(st.integers(min_value=1, max_value=40), min_size=1, max_size=10))
def test_contains_zero_total_and_symmetry(terms):
    s = subset_sums(Seq.of(terms))
    total = sum(terms)
    assert 0 in s and total in s
    values = set(s.values())
    assert {total - v for v in values} == values


@given(
    st.lists(st.integers(min_value=1, max_value=30), min_size=0, max_size=6),
    st.lists(st.integers(min_value=1, max_value=30), min_size=0, max_size=6),
)
def test_concat_is_minkowski_sum(a, b):
    combined = subset_sums(Seq.of(a).concat(Seq.of(b)))
    assert combined == sumset_add(subset_sums(Seq.of(a)), subset_sums(Seq.of(b)))


def test_concat_exhaustive_small():
    from itertools import product

    for la in range(3):
        for lb in range(3):
            for a in product((1, 2, 3), repeat=la):
                for b in product((1, 2, 3), repeat=lb):
                    lhs = subset_sums(Seq.of(a).concat(Seq.of(b)))
                    rhs = sumset_add(subset_sums(Seq.of(a)), subset_sums(Seq.of(b)))
                    assert lhs == rhs


@settings(max_examples=30)
@given(
    st.lists(st.integers(min_value=1, max_value=8), min_size=1, max_size=4),
    st.integers(min_value=1, max_value=10),
    st.integers(min_value=1, max_value=4),
)
def test_mixed_block_bound_random(terms, b, k):
    from math import gcd

    g = max(gcd(t, b) for t in terms)
    assert mixed_block_bound_holds(Seq.of(terms), b, k, g)


def test_sizeset_contract():
    s = SizeSet.from_values([0, 4, 7])
    assert len(s) == 3 and 4 in s and 5 not in s
    with pytest.raises(InputError):
        SizeSet.from_values([1, 2], max_value=5).__class__(5, 0b110)  # no zero bit

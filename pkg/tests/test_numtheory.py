import math
import random
from math import gcd

import pytest

from conftest import reference_primes
from multab.errors import BudgetError, InputError
from multab.numtheory import (
    gcd_divisibility_certificate,
    min_gcd_shift,
    min_gcd_shift_pair,
    primes_in,
    product_set_size,
)


def test_primes_in_examples():
    assert primes_in(10, 20) == [11, 13, 17, 19]
    assert primes_in(24, 28) == []
    assert primes_in(2, 2) == [2]


def test_primes_in_validation():
    with pytest.raises(InputError):
        primes_in(1, 10)
    with pytest.raises(InputError):
        primes_in(9, 3)
    with pytest.raises(BudgetError):
        primes_in(2, 10**9)


def test_primes_match_reference_sieve():
    ref = reference_primes(100_000)
    assert primes_in(2, 100_000) == ref
    assert primes_in(50_000, 60_000) == [p for p in ref if 50_000 <= p <= 60_000]


def test_prime_density_corridor():
    for n in (1_000, 10_000, 100_000):
        count = len(primes_in(n, 2 * n))
        assert 0.5 * n / math.log(n) <= count <= 2.0 * n / math.log(n)


def test_min_gcd_shift_examples():
    assert min_gcd_shift(12, 30, 1, 3) == min_gcd_shift(12, 30, 1, 3).__class__(1, 1)
    r = min_gcd_shift(12, 30, 1, 3)
    assert (r.i, r.g) == (1, 1)
    r = min_gcd_shift(5, 5, 7, 1)
    assert (r.i, r.g) == (0, 5)
    r = min_gcd_shift(8, 12, 2, 2)
    assert (r.i, r.g) == (1, 2)


def test_min_gcd_shift_is_true_minimum():
    rng = random.Random(2)
    for _ in range(300):
        a, b = rng.randint(1, 500), rng.randint(1, 500)
        d, k = rng.randint(1, 9), rng.randint(1, 8)
        res = min_gcd_shift(a, b, d, k)
        scan = [gcd(a, abs(b - i * d)) for i in range(k)]
        assert res.g == min(scan)
        assert scan[res.i] == res.g
        assert res.i == scan.index(res.g)  # ties break low


def test_min_gcd_shift_pair_examples():
    r = min_gcd_shift_pair(10, 4, 2, 3)
    assert (r.i, r.g) == (0, 2)
    r = min_gcd_shift_pair(7, 6, 1, 1)
    assert (r.i, r.g) == (0, 1)
    r = min_gcd_shift_pair(9, 3, 3, 2)
    assert (r.i, r.g) == (0, 3)
    with pytest.raises(InputError):
        min_gcd_shift_pair(5, 5, 1, 2)


def test_min_gcd_shift_pair_matches_direct_scan():
    rng = random.Random(4)
    for _ in range(300):
        a, b = rng.randint(1, 300), rng.randint(1, 300)
        if a == b:
            continue
        d, k = rng.randint(1, 7), rng.randint(1, 7)
        res = min_gcd_shift_pair(a, b, d, k)
        scan = [gcd(abs(a - i * d), abs(b - i * d)) or abs(a - b) for i in range(k)]
        # gcd(a-id, b-id) with both possibly zero never happens since a != b
        assert res.g == min(scan)
        assert res.g == scan[res.i]


def test_divisibility_examples():
    assert gcd_divisibility_certificate(12, 30, 1, 3)  # 24 divides 48
    assert gcd_divisibility_certificate(7, 3, 2, 1)  # k=1: gcd(a,b) | a*d
    assert gcd_divisibility_certificate(8, 12, 2, 2)  # 8 divides 32


def test_divisibility_small_sweep():
    for a in range(1, 25):
        for b in range(1, 25):
            for d in range(1, 4):
                for k in range(1, 5):
                    assert gcd_divisibility_certificate(a, b, d, k), (a, b, d, k)


def test_product_set_examples():
    assert product_set_size({2, 3}, 4) == 7
    assert product_set_size({1}, 5) == 5
    assert product_set_size({2}, 1) == 1
    with pytest.raises(InputError):
        product_set_size(set(), 3)
    with pytest.raises(BudgetError):
        product_set_size(set(range(1, 10**5)), 10**4)


def test_product_counting_step():
    rng = random.Random(77)
    done = 0
    while done < 100:
        b = rng.randint(4, 40)
        top = b**3 // 16 - 1
        if top < 1:
            continue
        a_set = set(rng.sample(range(1, top + 1), rng.randint(1, min(12, top))))
        primes = primes_in(max(2, math.ceil(b / 2)), b)
        assert 6 * product_set_size(a_set, b) >= len(a_set) * len(primes)
        done += 1

"""Primes in an interval, gcd-shift minimizers, and exact product-set sizes.

The gcd-shift divisibility certificate is the exact, testable surrogate for
the asymptotic statement it supports: both sides are computed as exact big
integers and divisibility is checked outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .errors import BudgetError, InputError

SIEVE_BUDGET = 100_000_000
PRODUCT_BUDGET = 10_000_000


@dataclass(frozen=True)
class GcdShiftResult:
    """The shift index i and the minimum gcd value it achieves."""

    i: int
    g: int


def _simple_sieve(limit: int) -> np.ndarray:
    """Primes up to limit inclusive, ascending."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.nonzero(is_prime)[0].astype(np.int64)


def primes_in(lo: int, hi: int, budget: int = SIEVE_BUDGET) -> list[int]:
    """Exactly the primes in [lo, hi], ascending. Segmented sieve."""
    if not (2 <= lo <= hi):
        raise InputError(f"need 2 <= lo <= hi, got [{lo}, {hi}]")
    if hi > budget:
        raise BudgetError(f"sieve bound {hi} exceeds budget {budget}")
    base = _simple_sieve(isqrt(hi))
    segment = np.ones(hi - lo + 1, dtype=bool)
    for p in base:
        # crossing off starts at p*p, so base primes inside [lo, hi] survive
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start <= hi:
            segment[start - lo :: p] = False
    return [int(v) for v in np.nonzero(segment)[0] + lo]


def min_gcd_shift(a: int, b: int, d: int, k: int) -> GcdShiftResult:
    """Minimize gcd(a, b - i*d) over 0 <= i < k, ties to the smaller i.

    b - i*d may be non-positive; gcd uses absolute values with gcd(a, 0) = a.
    """
    if min(a, b, d, k) < 1:
        raise InputError("a, b, d, k must be >= 1")
    best_i, best_g = 0, gcd(a, abs(b))
    for i in range(1, k):
        g = gcd(a, abs(b - i * d))
        if g < best_g:
            best_i, best_g = i, g
    return GcdShiftResult(best_i, best_g)


def min_gcd_shift_pair(a: int, b: int, d: int, k: int) -> GcdShiftResult:
    """Minimize gcd(a - i*d, b - i*d) over 0 <= i < k via gcd(a-b, b-i*d)."""
    if min(a, b, d, k) < 1:
        raise InputError("a, b, d, k must be >= 1")
    if a == b:
        raise InputError("a == b makes the pairwise gcd unbounded")
    diff = abs(a - b)
    best_i, best_g = 0, gcd(diff, abs(b))
    for i in range(1, k):
        g = gcd(diff, abs(b - i * d))
        if g < best_g:
            best_i, best_g = i, g
    return GcdShiftResult(best_i, best_g)


def _prime_powers_below(k: int) -> list[int]:
    out = []
    for p in _simple_sieve(k - 1) if k > 2 else []:
        q = int(p)
        while q < k:
            out.append(q)
            q *= int(p)
    return sorted(out)


def gcd_divisibility_certificate(a: int, b: int, d: int, k: int) -> bool:
    """Exact divisibility: prod_i gcd(a, b-id) | a * d^k * prod_{q<k} q^ceil(k/q).

    q ranges over prime powers below k. Both sides are exact big integers;
    the return value should always be True.
    """
    if min(a, b, d, k) < 1:
        raise InputError("a, b, d, k must be >= 1")
    lhs = 1
    for i in range(k):
        lhs *= gcd(a, abs(b - i * d))
    rhs = a * d**k
    for q in _prime_powers_below(k):
        rhs *= q ** (-(-k // q))
    return rhs % lhs == 0


def product_set_size(a_set: set[int] | frozenset[int], b: int, budget: int = PRODUCT_BUDGET) -> int:
    """Exact |A . [b]| = |{a*j : a in A, 1 <= j <= b}|."""
    if not a_set:
        raise InputError("A must be nonempty")
    if b < 1:
        raise InputError("b must be >= 1")
    if any(a < 1 for a in a_set):
        raise InputError("A must contain positive integers")
    if len(a_set) * b > budget:
        raise BudgetError(f"{len(a_set)} x {b} products exceed budget {budget}")
    products: set[int] = set()
    for a in a_set:
        products.update(a * j for j in range(1, b + 1))
    return len(products)

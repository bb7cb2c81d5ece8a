"""Exhaustive property sweeps over the number-theoretic building blocks.

Each sweep counts cases and violations; a violation would falsify one of
the exact bounds this package relies on, so every sweep must come back
clean. Ranges come in two sizes: "small" for a quick CLI check and "full"
for the acceptance runs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import gcd

from .errors import InputError
from .numtheory import (
    gcd_divisibility_certificate,
    min_gcd_shift,
    primes_in,
    product_set_size,
)
from .sumset import Seq, mixed_block_bound_holds, two_block_bound_holds


@dataclass(frozen=True)
class SweepResult:
    name: str
    cases: int
    violations: int

    @property
    def ok(self) -> bool:
        return self.violations == 0


def sweep_mixed_block_bound(
    max_term: int = 8, max_len: int = 5, max_mod: int = 12, max_k: int = 5
) -> SweepResult:
    """|S(a, k∘b)| >= k min(b/g, n) over all weight multisets in range."""
    cases = violations = 0
    for length in range(1, max_len + 1):
        for terms in combinations_with_replacement(range(1, max_term + 1), length):
            seq = Seq.of(terms)
            for b in range(1, max_mod + 1):
                g = max(gcd(t, b) for t in terms)
                for k in range(1, max_k + 1):
                    cases += 1
                    if not mixed_block_bound_holds(seq, b, k, g):
                        violations += 1
    return SweepResult("mixed-block-bound", cases, violations)


def sweep_two_block_bound(
    max_a: int = 8, max_b: int = 12, max_k: int = 5, max_l: int = 5
) -> SweepResult:
    """|S(k∘a, l∘b)| >= k min(a/g, l) over the full parameter box."""
    cases = violations = 0
    for a in range(1, max_a + 1):
        for b in range(1, max_b + 1):
            g = gcd(a, b)
            for k in range(1, max_k + 1):
                for l in range(1, max_l + 1):
                    cases += 1
                    if not two_block_bound_holds(k, a, l, b, g):
                        violations += 1
    return SweepResult("two-block-bound", cases, violations)


def sweep_gcd_divisibility(
    max_ab: int = 60, max_d: int = 6, max_k: int = 6
) -> SweepResult:
    """prod gcd(a, b-id) divides a d^k prod q^ceil(k/q), exhaustively."""
    cases = violations = 0
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            for d in range(1, max_d + 1):
                for k in range(1, max_k + 1):
                    cases += 1
                    if not gcd_divisibility_certificate(a, b, d, k):
                        violations += 1
    return SweepResult("gcd-divisibility", cases, violations)


def sweep_min_gcd_shift(
    max_ab: int = 40, max_d: int = 4, max_k: int = 5
) -> SweepResult:
    """The reported minimum gcd shift never exceeds any scanned value."""
    cases = violations = 0
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            for d in range(1, max_d + 1):
                for k in range(1, max_k + 1):
                    cases += 1
                    res = min_gcd_shift(a, b, d, k)
                    scan = [gcd(a, abs(b - i * d)) for i in range(k)]
                    if res.g != min(scan) or scan[res.i] != res.g:
                        violations += 1
    return SweepResult("min-gcd-shift", cases, violations)


def sweep_product_counting(samples: int = 100, seed: int = 0) -> SweepResult:
    """6 |A.[b]| >= |A| |primes in [b/2, b]| whenever max A < b^3 / 16."""
    rng = random.Random(seed)
    cases = violations = 0
    while cases < samples:
        b = rng.randint(4, 40)
        top = b**3 // 16 - 1
        if top < 1:
            continue
        size = rng.randint(1, min(12, top))
        a_set = set(rng.sample(range(1, top + 1), size))
        cases += 1
        primes = primes_in(max(2, math.ceil(b / 2)), b) if b >= 2 else []
        if 6 * product_set_size(a_set, b) < len(a_set) * len(primes):
            violations += 1
    return SweepResult("product-counting-step", cases, violations)


def sweep_prime_density(points: tuple[int, ...] = (1_000, 10_000, 100_000)) -> SweepResult:
    """Primes in [n, 2n] stay within [0.5, 2] * n/ln n (sanity corridor)."""
    cases = violations = 0
    for n in points:
        cases += 1
        count = len(primes_in(n, 2 * n))
        expected = n / math.log(n)
        if not 0.5 * expected <= count <= 2.0 * expected:
            violations += 1
    return SweepResult("prime-density-corridor", cases, violations)


def run_sweeps(scale: str = "small", seed: int = 0) -> list[SweepResult]:
    """All sweeps at the requested scale ("small" or "full")."""
    if scale == "full":
        return [
            sweep_mixed_block_bound(8, 5, 12, 5),
            sweep_two_block_bound(8, 12, 5, 5),
            sweep_gcd_divisibility(60, 6, 6),
            sweep_min_gcd_shift(40, 4, 5),
            sweep_product_counting(100, seed),
            sweep_prime_density((1_000, 10_000, 100_000)),
        ]
    if scale == "small":
        return [
            sweep_mixed_block_bound(5, 3, 8, 3),
            sweep_two_block_bound(5, 8, 3, 3),
            sweep_gcd_divisibility(30, 4, 4),
            sweep_min_gcd_shift(20, 3, 4),
            sweep_product_counting(25, seed),
            sweep_prime_density((1_000, 10_000)),
        ]
    raise InputError(f"unknown sweep scale {scale!r}")

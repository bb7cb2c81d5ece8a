"""Equal-sum groupings of weighted indices and the greedy weight cover.

Given positive integer weights a_0..a_{n-1}, an (r, d) matching is a family
of pairwise-disjoint r-element index sets whose weights each sum to d. The
cover loop repeatedly extracts the best matching it can find and removes
the covered indices; by pigeonhole, the heaviest matching seen covers at
least total/rounds weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError
from .profiles import ScaleProfile


@dataclass(frozen=True)
class EqualSumMatching:
    """Disjoint index sets of common cardinality r and common weight-sum d."""

    r: int
    d: int
    sets: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.sets)

    @property
    def covered_weight(self) -> int:
        return self.size * self.d

    def covered_indices(self) -> set[int]:
        return {i for block in self.sets for i in block}

    def validate(self, weights: Sequence[int]) -> None:
        seen: set[int] = set()
        for block in self.sets:
            if len(block) != self.r:
                raise InputError("set cardinality differs from r")
            if seen & set(block):
                raise InputError("sets are not pairwise disjoint")
            seen.update(block)
            if sum(weights[i] for i in block) != self.d:
                raise InputError("set weight-sum differs from d")


@dataclass(frozen=True)
class CoverTrace:
    """Per-round (matching, uncovered-count-after) pairs of the greedy cover."""

    rounds: tuple[tuple[EqualSumMatching, int], ...]


def _check_weights(weights: Sequence[int]) -> None:
    if any(w < 1 for w in weights):
        raise InputError("weights must be positive integers")


def _suffix_feasibility(order: list[int], weights: Sequence[int], r: int, d: int) -> list[list[int]]:
    """feas[i][j]: bitmask of sums <= d reachable picking j indices from order[i:]."""
    n = len(order)
    cap = (1 << (d + 1)) - 1
    feas = [[0] * (r + 1) for _ in range(n + 1)]
    feas[n][0] = 1
    for i in range(n - 1, -1, -1):
        w = weights[order[i]]
        nxt = feas[i + 1]
        cur = feas[i]
        cur[0] = 1
        for j in range(1, r + 1):
            cur[j] = (nxt[j] | ((nxt[j - 1] << w) if w <= d else 0)) & cap
    return feas


def find_equal_sum_set(
    weights: Sequence[int], active: Iterable[int], r: int, d: int
) -> tuple[int, ...] | None:
    """Lexicographically least r-subset of `active` with weight-sum d, if any."""
    if r < 1 or d < 1:
        raise InputError("r and d must be >= 1")
    _check_weights(weights)
    order = sorted(set(active))
    if len(order) < r:
        return None
    feas = _suffix_feasibility(order, weights, r, d)
    if not (feas[0][r] >> d) & 1:
        return None
    picked: list[int] = []
    need, target = r, d
    for i, idx in enumerate(order):
        if need == 0:
            break
        w = weights[idx]
        if w <= target and (feas[i + 1][need - 1] >> (target - w)) & 1:
            picked.append(idx)
            need -= 1
            target -= w
    return tuple(picked)


def maximal_matching(
    weights: Sequence[int], active: Iterable[int], r: int, d: int
) -> EqualSumMatching:
    """Greedy maximal matching: extract lex-least equal-sum sets until none remain."""
    remaining = sorted(set(active))
    sets: list[tuple[int, ...]] = []
    while True:
        block = find_equal_sum_set(weights, remaining, r, d)
        if block is None:
            break
        sets.append(block)
        taken = set(block)
        remaining = [i for i in remaining if i not in taken]
    return EqualSumMatching(r, d, tuple(sets))


def _sum_counts(weights: Sequence[int], order: list[int], r: int) -> np.ndarray:
    """counts[j, s] = number of j-subsets of order with weight-sum s."""
    total = sum(weights[i] for i in order)
    dtype = object if len(order) > 60 else np.int64
    counts = np.zeros((r + 1, total + 1), dtype=dtype)
    counts[0, 0] = 1
    for idx in order:
        w = weights[idx]
        for j in range(min(r, len(order)), 0, -1):
            counts[j, w:] += counts[j - 1, : total + 1 - w]
    return counts


def best_matching_for_r(
    weights: Sequence[int], active: Iterable[int], r: int, top_sums: int = 8
) -> EqualSumMatching:
    """Best maximal matching over cardinalities r' <= r and ranked target sums.

    For each r', candidate sums d are ranked by how many r'-subsets achieve
    them (ties to the smaller d) and only the top few are tried. Matchings
    compare by set count, ties resolved toward the smaller r' and then the
    earlier-ranked candidate; with a nonempty active set the r'=1 groupings
    guarantee a nonempty result.
    """
    if r < 1:
        raise InputError("r must be >= 1")
    _check_weights(weights)
    order = sorted(set(active))
    if not order:
        raise InputError("active set is empty")
    r_cap = min(r, len(order))
    counts = _sum_counts(weights, order, r_cap)
    best: EqualSumMatching | None = None
    best_key: tuple[int, int, int] | None = None
    for r_prime in range(1, r_cap + 1):
        if best is not None and len(order) // r_prime <= best.size:
            break  # a larger r' cannot beat the incumbent on set count
        row = counts[r_prime]
        candidates = sorted(
            (int(d) for d in np.nonzero(row[1:])[0] + 1),
            key=lambda d: (-int(row[d]), d),
        )[:top_sums]
        for d in candidates:
            ceiling = min(len(order) // r_prime, int(row[d]))
            if best is not None and ceiling <= best.size:
                continue
            match = maximal_matching(weights, order, r_prime, d)
            if not match.sets:
                continue
            key = (-match.size, r_prime, d)
            if best_key is None or key < best_key:
                best, best_key = match, key
    assert best is not None  # r'=1 always yields a matching on nonempty input
    return best


def greedy_cover(
    weights: Sequence[int], profile: ScaleProfile
) -> tuple[CoverTrace, EqualSumMatching]:
    """Cover all indices round by round; return the trace and heaviest matching.

    Each round extracts best_matching_for_r on what is still uncovered, so
    the uncovered count strictly decreases and the loop terminates. The
    returned matching maximizes covered weight (ties to the earlier round),
    and covered_weight * rounds >= total weight, exactly.
    """
    _check_weights(weights)
    if not weights:
        raise InputError("weights must be nonempty")
    total = sum(weights)
    r_cap = profile.r_max(total)
    uncovered = set(range(len(weights)))
    rounds: list[tuple[EqualSumMatching, int]] = []
    best: EqualSumMatching | None = None
    while uncovered:
        match = best_matching_for_r(weights, uncovered, r_cap, profile.top_sums)
        uncovered -= match.covered_indices()
        rounds.append((match, len(uncovered)))
        if best is None or match.covered_weight > best.covered_weight:
            best = match
    assert best is not None
    return CoverTrace(tuple(rounds)), best

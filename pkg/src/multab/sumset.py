"""Exact set-of-sums engine for finite sequences of positive integers.

Sets of achievable sums are kept as dense bitmasks (one Python int, bit i
set iff i is achievable), so a Minkowski sum is a handful of shift-ors and
repeated values never get expanded term by term.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from .errors import BudgetError, InputError

# Total-sum ceiling for one bitmask; beyond this the masks stop being cheap.
SUM_BUDGET = 10_000_000


@dataclass(frozen=True)
class Seq:
    """A finite sequence of positive integers stored as (value, count) runs."""

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for value, count in self.runs:
            if value < 1:
                raise InputError(f"sequence terms must be >= 1, got {value}")
            if count < 0:
                raise InputError(f"run counts must be >= 0, got {count}")

    @classmethod
    def of(cls, terms: Iterable[int]) -> "Seq":
        counts = Counter(terms)
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def run(cls, count: int, value: int) -> "Seq":
        """The sequence made of `count` copies of `value`."""
        if count == 0:
            return cls(())
        return cls(((value, count),))

    def concat(self, other: "Seq") -> "Seq":
        counts = Counter(dict(self.runs))
        for value, count in other.runs:
            counts[value] += count
        return Seq(tuple(sorted((v, c) for v, c in counts.items() if c > 0)))

    @property
    def length(self) -> int:
        return sum(c for _, c in self.runs)

    @property
    def total(self) -> int:
        return sum(v * c for v, c in self.runs)

    def terms(self) -> Iterator[int]:
        for value, count in self.runs:
            yield from [value] * count


class SizeSet:
    """A set of achievable sums over [0, max], as a dense bit-indexed set.

    Every instance contains 0 (the empty index set) and no member above
    `max`; both are enforced at construction.
    """

    __slots__ = ("max", "bits")

    def __init__(self, max_value: int, bits: int):
        if max_value < 0:
            raise InputError("max must be >= 0")
        if not bits & 1:
            raise InputError("a set of sums always contains 0")
        if bits >> (max_value + 1):
            raise InputError("membership above max")
        self.max = max_value
        self.bits = bits

    @classmethod
    def from_values(cls, values: Iterable[int], max_value: int | None = None) -> "SizeSet":
        vals = set(values) | {0}
        top = max(vals)
        if max_value is None:
            max_value = top
        bits = 0
        for v in vals:
            if v < 0 or v > max_value:
                raise InputError(f"value {v} outside [0, {max_value}]")
            bits |= 1 << v
        return cls(max_value, bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, value: int) -> bool:
        return 0 <= value <= self.max and (self.bits >> value) & 1 == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SizeSet) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values())

    def values(self) -> list[int]:
        bits = self.bits
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def __repr__(self) -> str:
        vals = self.values()
        shown = ", ".join(map(str, vals[:12])) + (", ..." if len(vals) > 12 else "")
        return f"SizeSet(max={self.max}, {{{shown}}})"


def _fold_run(bits: int, value: int, count: int) -> int:
    # Doubling: after processing blocks of 1, 2, 4, ... copies, every
    # multiplicity in [0, count] is reachable.
    remaining = count
    step = 1
    while remaining > 0:
        take = min(step, remaining)
        bits |= bits << (value * take)
        remaining -= take
        step *= 2
    return bits


def subset_sums(a: Seq) -> SizeSet:
    """All sums over index subsets of `a`, computed exactly."""
    total = a.total
    if total > SUM_BUDGET:
        raise BudgetError(f"sum of terms {total} exceeds budget {SUM_BUDGET}")
    bits = 1
    for value, count in a.runs:
        bits = _fold_run(bits, value, count)
    return SizeSet(total, bits)


def sumset_add(s: SizeSet, t: SizeSet) -> SizeSet:
    """Minkowski sum of two size sets."""
    if s.max + t.max > SUM_BUDGET:
        raise BudgetError(f"sum bound {s.max + t.max} exceeds budget {SUM_BUDGET}")
    small, large = (s, t) if len(s) <= len(t) else (t, s)
    bits = 0
    for v in small.values():
        bits |= large.bits << v
    return SizeSet(s.max + t.max, bits)


def repeated(k: int, a: int) -> SizeSet:
    """The arithmetic progression {0, a, 2a, ..., ka}."""
    if k < 0:
        raise InputError("k must be >= 0")
    if a < 1:
        raise InputError("a must be >= 1")
    return subset_sums(Seq.run(k, a))


def residues_mod(a: Seq, b: int) -> frozenset[int]:
    """Image of subset_sums(a) under reduction modulo b."""
    if b < 1:
        raise InputError("modulus must be >= 1")
    return frozenset(v % b for v in subset_sums(a).values())


def mixed_block_bound_holds(a: Seq, b: int, k: int, g: int) -> bool:
    """Check |S(a, k∘b)| >= k * min(b/g, n) for gcd(a_i, b) <= g.

    The hypothesis gcd(a_i, b) <= g is a precondition; violating it raises
    rather than returning False, so a False return would be a genuine
    falsification of the bound.
    """
    if b < 1 or k < 1 or g < 1:
        raise InputError("b, k, g must be >= 1")
    n = a.length
    if n < 1:
        raise InputError("sequence must be nonempty")
    for value, _ in a.runs:
        if gcd(value, b) > g:
            raise InputError(f"gcd({value}, {b}) > {g}: hypothesis violated")
    size = len(subset_sums(a.concat(Seq.run(k, b))))
    return size >= k * min(Fraction(b, g), Fraction(n))


def two_block_bound_holds(k: int, a: int, l: int, b: int, g: int) -> bool:
    """Check |S(k∘a, l∘b)| >= k * min(a/g, l) for gcd(a, b) <= g."""
    if min(k, a, l, b, g) < 1:
        raise InputError("all parameters must be >= 1")
    if gcd(a, b) > g:
        raise InputError(f"gcd({a}, {b}) > {g}: hypothesis violated")
    size = len(subset_sums(Seq.run(k, a).concat(Seq.run(l, b))))
    return size >= k * min(Fraction(a, g), Fraction(l))

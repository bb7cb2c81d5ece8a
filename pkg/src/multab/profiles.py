"""Tunable scale thresholds for the certificate constructions.

Every threshold is derived from one knob L, a stand-in for "log of the edge
count". The asymptotic regime the constructions were designed for never
holds at desk scale (for edge counts up to ~10^6, L^4 already dwarfs the
degrees involved), so the "paper" mode reproduces the literal formulas for
documentation while the "scaled" mode shrinks them enough for the branches
to actually fire. Soundness never depends on the profile; only the size of
the emitted certificate does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError

PAPER = "paper"
SCALED = "scaled"


@dataclass(frozen=True)
class ScaleProfile:
    """Threshold bundle: mode plus the multiplier for the scaled log."""

    mode: str = SCALED
    log_coeff: float = 1.0
    top_sums: int = 8
    max_entries: int = 1_000_000

    def __post_init__(self) -> None:
        if self.mode not in (PAPER, SCALED):
            raise ConfigError(f"unknown profile mode {self.mode!r}")
        if self.log_coeff <= 0:
            raise ConfigError("log_coeff must be positive")
        if self.top_sums < 1:
            raise ConfigError("top_sums must be >= 1")
        if self.max_entries < 1:
            raise ConfigError("max_entries must be >= 1")

    def L(self, m: int) -> float:
        """The log-of-edge-count surrogate, clamped to >= 2."""
        if m < 1:
            return 2.0
        if self.mode == PAPER:
            return max(2.0, math.log(m))
        return max(2.0, self.log_coeff * math.log2(m))

    def type_threshold(self, k: int, m: int) -> float:
        """A Y-vertex is typed when one multiplicity class reaches this count."""
        return k * (1.0 - 1.0 / (2.0 * self.L(m)))

    def two_class_threshold(self, k: int, m: int) -> float:
        """Minimum size of each of two multiplicity classes at one Y-vertex.

        The scaled floor of 2 keeps lone stray multiplicities from
        preempting the typed constructions on small graphs.
        """
        value = k / (2.0 * self.L(m) ** 2)
        return value if self.mode == PAPER else max(2.0, value)

    def d_min(self, m: int) -> float:
        """Below this common degree the plain degree-multiples family is used."""
        return self.L(m) ** 4 if self.mode == PAPER else 2.0

    def sparse_types_cutoff(self, d: int, m: int) -> int:
        """Most Y-vertices must be type-0: cap on the number that are not."""
        value = math.floor(d / (2.0 * self.L(m)))
        return value if self.mode == PAPER else max(1, value)

    def common_type_count(self, m: int) -> int:
        """Number of same-type Y-vertices intersected to form the core block."""
        if self.mode == PAPER:
            return max(1, math.floor(self.L(m)))
        return max(1, math.floor(self.L(m) / 2.0))

    def deletion_count(self, d: int, m: int) -> int:
        """Number of Y-vertices peeled off one at a time."""
        return max(1, math.floor(d / (4.0 * self.L(m))))

    def shift_bound(self, m: int) -> int:
        """Shifts f are searched in [0, shift_bound]; never above the core size."""
        return self.common_type_count(m)

    def r_max(self, m: int) -> int:
        """Largest group cardinality the equal-sum partitioner may use."""
        if m < 2:
            return 1
        if self.mode == PAPER:
            return max(1, math.floor(math.log(m)))
        return max(1, math.floor(math.log2(m)))

    def window(self, k: int, m: int) -> tuple[float, float]:
        """Target size window [k/2 - k/2L, k/2] for the type-0 union."""
        return k / 2.0 - k / (2.0 * self.L(m)), k / 2.0

    def as_dict(self) -> dict[str, float | str | int]:
        return {
            "mode": self.mode,
            "log_coeff": self.log_coeff,
            "top_sums": self.top_sums,
            "max_entries": self.max_entries,
        }


def profile_from_name(name: str, log_coeff: float = 1.0) -> ScaleProfile:
    return ScaleProfile(mode=name, log_coeff=log_coeff)

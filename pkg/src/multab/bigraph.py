"""Bipartite multigraphs: induced edge counting, contraction, degree profiles.

Vertices are 0-based indices into two classes X and Y. Multiplicities are
stored sparsely as (x, y) -> count >= 1; per-vertex adjacency rows are built
once and cached because subset counting is the hot path.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ConfigError, InputError, ParseError


class BipartiteMultigraph:
    """An immutable bipartite multigraph with integer edge multiplicities."""

    __slots__ = ("nx", "ny", "_mult", "m", "_x_rows", "_y_rows", "_id")

    def __init__(self, nx: int, ny: int, mult: Mapping[tuple[int, int], int]):
        if nx < 0 or ny < 0:
            raise InputError("vertex counts must be >= 0")
        cleaned: dict[tuple[int, int], int] = {}
        for (x, y), w in mult.items():
            if not (0 <= x < nx and 0 <= y < ny):
                raise InputError(f"pair ({x}, {y}) out of range for {nx}x{ny}")
            if w < 0:
                raise InputError(f"multiplicity must be >= 0, got {w}")
            if w > 0:
                cleaned[(x, y)] = w
        self.nx = nx
        self.ny = ny
        self._mult = cleaned
        self.m = sum(cleaned.values())
        x_rows: list[list[tuple[int, int]]] = [[] for _ in range(nx)]
        y_rows: list[list[tuple[int, int]]] = [[] for _ in range(ny)]
        for (x, y), w in sorted(cleaned.items()):
            x_rows[x].append((y, w))
            y_rows[y].append((x, w))
        self._x_rows = tuple(tuple(r) for r in x_rows)
        self._y_rows = tuple(tuple(r) for r in y_rows)
        self._id: str | None = None

    def mult(self, x: int, y: int) -> int:
        if not (0 <= x < self.nx and 0 <= y < self.ny):
            raise InputError(f"pair ({x}, {y}) out of range")
        return self._mult.get((x, y), 0)

    def pairs(self) -> list[tuple[int, int, int]]:
        """All (x, y, multiplicity) triples, sorted."""
        return [(x, y, w) for (x, y), w in sorted(self._mult.items())]

    def x_row(self, x: int) -> tuple[tuple[int, int], ...]:
        """Neighbors of x as (y, multiplicity), ascending y."""
        return self._x_rows[x]

    def y_row(self, y: int) -> tuple[tuple[int, int], ...]:
        return self._y_rows[y]

    def deg_x(self, x: int) -> int:
        return sum(w for _, w in self._x_rows[x])

    def deg_y(self, y: int) -> int:
        return sum(w for _, w in self._y_rows[y])

    def x_degrees(self) -> list[int]:
        return [self.deg_x(x) for x in range(self.nx)]

    def y_degrees(self) -> list[int]:
        return [self.deg_y(y) for y in range(self.ny)]

    def max_multiplicity(self) -> int:
        return max(self._mult.values(), default=0)

    def is_simple(self) -> bool:
        return self.max_multiplicity() <= 1

    def is_half_regular(self) -> bool:
        """True iff all X-vertices have one common degree (and X is nonempty)."""
        if self.nx == 0:
            return False
        d = self.deg_x(0)
        return all(self.deg_x(x) == d for x in range(self.nx))

    def transpose(self) -> "BipartiteMultigraph":
        return BipartiteMultigraph(
            self.ny, self.nx, {(y, x): w for (x, y), w in self._mult.items()}
        )

    def graph_id(self) -> str:
        if self._id is None:
            digest = hashlib.sha256(write_graph_text(self).encode()).hexdigest()
            self._id = digest[:32]
        return self._id

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BipartiteMultigraph)
            and self.nx == other.nx
            and self.ny == other.ny
            and self._mult == other._mult
        )

    def __hash__(self) -> int:
        return hash((self.nx, self.ny, tuple(sorted(self._mult.items()))))

    def __repr__(self) -> str:
        return f"BipartiteMultigraph(nx={self.nx}, ny={self.ny}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    """Counts gamma[t] of X-vertices joined to a fixed y by exactly t edges."""

    gamma: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if sum(self.gamma) != self.k:
            raise InputError("profile entries must sum to the X-vertex count")


@dataclass(frozen=True)
class Contraction:
    """A contracted graph plus the maps back to the vertices it came from.

    New X-vertex j is the merge of x_groups[j]; new Y-vertex i is y_map[i]
    in the original graph (Y-vertices isolated after contraction are gone).
    """

    graph: BipartiteMultigraph
    x_groups: tuple[tuple[int, ...], ...]
    y_map: tuple[int, ...]


def _check_subset(indices: Iterable[int], bound: int, side: str) -> list[int]:
    out = sorted(set(indices))
    if out and (out[0] < 0 or out[-1] >= bound):
        raise InputError(f"{side}-index out of range [0, {bound})")
    return out


def induced_edge_count(
    g: BipartiteMultigraph, xs: Iterable[int], ys: Iterable[int]
) -> int:
    """Total multiplicity over xs x ys, i.e. e(xs ∪ ys)."""
    xs = _check_subset(xs, g.nx, "X")
    ys = _check_subset(ys, g.ny, "Y")
    y_set = set(ys)
    total = 0
    for x in xs:
        for y, w in g.x_row(x):
            if y in y_set:
                total += w
    return total


def induced_subgraph(
    g: BipartiteMultigraph, xs: Iterable[int], ys: Iterable[int]
) -> tuple[BipartiteMultigraph, tuple[int, ...], tuple[int, ...]]:
    """Subgraph induced by xs ∪ ys, with index maps back to g."""
    xs = _check_subset(xs, g.nx, "X")
    ys = _check_subset(ys, g.ny, "Y")
    x_pos = {x: i for i, x in enumerate(xs)}
    y_pos = {y: i for i, y in enumerate(ys)}
    mult = {}
    for x in xs:
        for y, w in g.x_row(x):
            if y in y_pos:
                mult[(x_pos[x], y_pos[y])] = w
    return BipartiteMultigraph(len(xs), len(ys), mult), tuple(xs), tuple(ys)


def contract_groups(
    g: BipartiteMultigraph, groups: Sequence[Iterable[int]]
) -> Contraction:
    """Merge each group of X-vertices into one vertex, dropping the rest of X.

    Y-vertices left with no edge into any group are removed; the returned
    maps translate contracted indices back to g's indices.
    """
    norm: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for group in groups:
        members = _check_subset(group, g.nx, "X")
        if not members:
            raise InputError("groups must be nonempty")
        if seen & set(members):
            raise InputError("groups must be pairwise disjoint")
        seen.update(members)
        norm.append(tuple(members))

    col_sums: dict[int, dict[int, int]] = {}
    for j, members in enumerate(norm):
        for x in members:
            for y, w in g.x_row(x):
                col_sums.setdefault(y, {})
                col_sums[y][j] = col_sums[y].get(j, 0) + w
    kept_ys = sorted(col_sums)
    y_pos = {y: i for i, y in enumerate(kept_ys)}
    mult = {
        (j, y_pos[y]): w for y, per_j in col_sums.items() for j, w in per_j.items()
    }
    graph = BipartiteMultigraph(len(norm), len(kept_ys), mult)
    return Contraction(graph, tuple(norm), tuple(kept_ys))


def degree_profile(h: BipartiteMultigraph, y: int) -> DegreeProfile:
    """Multiplicity histogram of y against all of X, entries t = 0..r_max."""
    if not (0 <= y < h.ny):
        raise InputError(f"Y-index {y} out of range")
    r_max = h.max_multiplicity()
    gamma = [0] * (r_max + 1)
    row = h.y_row(y)
    gamma[0] = h.nx - len(row)
    for _, w in row:
        gamma[w] += 1
    return DegreeProfile(tuple(gamma), h.nx)


def classify_type(
    h: BipartiteMultigraph, y: int, threshold: float
) -> int | None:
    """The unique multiplicity t with gamma_t(y) >= threshold, if any.

    Uniqueness is forced only when threshold > k/2, so smaller thresholds
    are rejected as a configuration error.
    """
    k = h.nx
    if threshold <= k / 2:
        raise ConfigError(f"type threshold {threshold} must exceed k/2 = {k / 2}")
    profile = degree_profile(h, y)
    for t, count in enumerate(profile.gamma):
        if count >= threshold:
            return t
    return None


def disjoint_union(g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> BipartiteMultigraph:
    mult = dict(g1._mult)
    for (x, y), w in g2._mult.items():
        mult[(x + g1.nx, y + g1.ny)] = w
    return BipartiteMultigraph(g1.nx + g2.nx, g1.ny + g2.ny, mult)


# Text format: header "bigraph <nx> <ny> <#pairs>", one "x y mult" line per
# pair, 0-based indices; blank lines and '#' comments are ignored.


def write_graph_text(g: BipartiteMultigraph) -> str:
    lines = [f"bigraph {g.nx} {g.ny} {len(g.pairs())}"]
    lines.extend(f"{x} {y} {w}" for x, y, w in g.pairs())
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> BipartiteMultigraph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty graph text")
    header = lines[0].split()
    if len(header) != 4 or header[0] != "bigraph":
        raise ParseError(f"bad header: {lines[0]!r}")
    try:
        nx, ny, npairs = int(header[1]), int(header[2]), int(header[3])
    except ValueError as exc:
        raise ParseError(f"bad header numbers: {lines[0]!r}") from exc
    if len(lines) - 1 != npairs:
        raise ParseError(f"header promises {npairs} pairs, found {len(lines) - 1}")
    mult: dict[tuple[int, int], int] = {}
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"bad pair line: {line!r}")
        try:
            x, y, w = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ParseError(f"bad pair line: {line!r}") from exc
        if (x, y) in mult:
            raise ParseError(f"duplicate pair ({x}, {y})")
        if w < 1:
            raise ParseError(f"multiplicity must be >= 1 in files, got {w}")
        mult[(x, y)] = w
    try:
        return BipartiteMultigraph(nx, ny, mult)
    except InputError as exc:
        raise ParseError(str(exc)) from exc

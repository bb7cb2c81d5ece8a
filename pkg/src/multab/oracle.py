"""Ground truth: exhaustive induced-subgraph size sets and table statistics.

The sweep enumerates subsets of the smaller vertex class and, for each one,
collapses the other class into a subset-sum bitmask, so the cost is
2^(min side) times a few shift-ors rather than 2^(both sides).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import networkx as nx
import numpy as np

from .bigraph import BipartiteMultigraph
from .errors import BudgetError, InputError
from .sumset import SizeSet

ORACLE_SIDE_BUDGET = 24
TABLE_BUDGET = 100_000
SEARCH_EDGE_BUDGET = 12
_TABLE_CHUNK = 1 << 26


@dataclass(frozen=True)
class FordEstimate:
    """The density formula n^2 / ((log n)^delta (log log n)^(3/2))."""

    n: int
    delta: float
    value: float


def _fold_counts(bits: int, value_counts: dict[int, int]) -> int:
    for value, count in value_counts.items():
        remaining, step = count, 1
        while remaining > 0:
            take = min(step, remaining)
            bits |= bits << (value * take)
            remaining -= take
            step *= 2
    return bits


def brute_multiplication_table(
    g: BipartiteMultigraph, budget: int = ORACLE_SIDE_BUDGET
) -> SizeSet:
    """Exact set of induced-subgraph edge counts of g, 0 included.

    X-vertices with identical neighbor rows are interchangeable, so the
    sweep walks choice vectors over row classes instead of raw subsets.
    """
    work = g if g.nx <= g.ny else g.transpose()
    if work.nx > budget:
        raise BudgetError(f"smaller side {work.nx} exceeds oracle budget {budget}")
    classes: dict[tuple[tuple[int, int], ...], int] = {}
    for x in range(work.nx):
        row = work.x_row(x)
        classes[row] = classes.get(row, 0) + 1
    rows = [(dict(row), count) for row, count in classes.items()]
    ny = work.ny
    acc = 0
    col = [0] * ny

    def sweep(i: int) -> None:
        nonlocal acc
        if i == len(rows):
            weights: dict[int, int] = {}
            for w in col:
                if w:
                    weights[w] = weights.get(w, 0) + 1
            acc |= _fold_counts(1, weights)
            return
        row, count = rows[i]
        sweep(i + 1)
        for _ in range(count):
            for y, w in row.items():
                col[y] += w
            sweep(i + 1)
        for y, w in row.items():
            col[y] -= w * count

    sweep(0)
    return SizeSet(g.m, acc)


def table_nn(n: int, budget: int = TABLE_BUDGET) -> int:
    """Exact number of distinct products a*b with 1 <= a, b <= n (0 excluded)."""
    if n < 1:
        raise InputError("n must be >= 1")
    if n > budget:
        raise BudgetError(f"n = {n} exceeds table budget {budget}")
    count = 0
    top = n * n
    for lo in range(1, top + 1, _TABLE_CHUNK):
        hi = min(lo + _TABLE_CHUNK, top + 1)
        chunk = np.zeros(hi - lo, dtype=bool)
        for a in range(1, n + 1):
            b_lo = max(a, -(-lo // a))
            b_hi = min(n, (hi - 1) // a)
            if b_lo <= b_hi:
                chunk[a * b_lo - lo : a * b_hi - lo + 1 : a] = True
        count += int(chunk.sum())
    return count


def oracle_consistency(n: int) -> bool:
    """Check that the sweep on K_{n,n} reproduces {0} plus the product table."""
    if not (1 <= n <= 6):
        raise InputError("consistency check supports 1 <= n <= 6")
    complete = BipartiteMultigraph(
        n, n, {(x, y): 1 for x in range(n) for y in range(n)}
    )
    swept = set(brute_multiplication_table(complete).values())
    products = {a * b for a in range(1, n + 1) for b in range(1, n + 1)}
    return swept == {0} | products


FORD_DELTA = 1.0 - (1.0 + math.log(math.log(2.0))) / math.log(2.0)


def ford_estimate(n: int) -> FordEstimate:
    """Evaluate the table-density formula at n (natural logs)."""
    if n < 3:
        raise InputError("n must be >= 3 so log log n is positive")
    value = n * n / (math.log(n) ** FORD_DELTA * math.log(math.log(n)) ** 1.5)
    return FordEstimate(n, FORD_DELTA, value)


def _canonical_key(graph: nx.Graph) -> tuple:
    """Isomorphism-invariant refinement key: iterated neighbor-label multisets."""
    labels = {v: graph.degree(v) for v in graph.nodes}
    for _ in range(graph.number_of_nodes()):
        relabel = {}
        for v in graph.nodes:
            relabel[v] = (labels[v], tuple(sorted(labels[u] for u in graph[v])))
        canon = {lab: i for i, lab in enumerate(sorted(set(relabel.values())))}
        new_labels = {v: canon[relabel[v]] for v in graph.nodes}
        if new_labels == labels:
            break
        labels = new_labels
    return tuple(sorted((labels[v], tuple(sorted(labels[u] for u in graph[v]))) for v in graph.nodes))


def _matrix_rows(ny: int, n_rows: int, edges: int) -> Iterator[list[int]]:
    """Row bitmasks over ny columns: exactly n_rows nonempty rows totalling
    `edges`, nonincreasing under (popcount, value) so each row multiset
    appears once and every column ends up covered."""
    masks = sorted(range(1, 1 << ny), key=lambda v: (v.bit_count(), v), reverse=True)
    rows: list[int] = []

    def rec(start: int, cover: int, remaining: int, slots: int) -> Iterator[list[int]]:
        if slots == 0:
            if remaining == 0 and cover == (1 << ny) - 1:
                yield list(rows)
            return
        if remaining < slots or remaining < ny - cover.bit_count():
            return
        for pos in range(start, len(masks)):
            mask = masks[pos]
            bits = mask.bit_count()
            if bits * slots < remaining:
                break  # popcounts only shrink from here
            if bits > remaining - (slots - 1):
                continue
            rows.append(mask)
            yield from rec(pos, cover | mask, remaining - bits, slots - 1)
            rows.pop()

    yield from rec(0, 0, edges, n_rows)


def _to_nx(nx_count: int, ny_count: int, rows: list[int]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(nx_count + ny_count))
    for x, row in enumerate(rows):
        for y in range(ny_count):
            if (row >> y) & 1:
                graph.add_edge(x, nx_count + y)
    return graph


def conjecture_search(
    m: int, max_vertices: int | None = None
) -> tuple[int, list[BipartiteMultigraph]]:
    """Minimum table size over all bipartite graphs with exactly m edges.

    Graphs are enumerated without isolated vertices (they never change the
    table) up to graph isomorphism; returns the minimum |M(G)| and one
    representative per minimizing isomorphism class.
    """
    if not (1 <= m <= SEARCH_EDGE_BUDGET):
        raise BudgetError(f"m must be in [1, {SEARCH_EDGE_BUDGET}]")
    if max_vertices is None:
        max_vertices = 2 * m
    if max_vertices > 2 * m:
        raise InputError("max_vertices above 2m is never useful")
    seen: dict[tuple, list[nx.Graph]] = {}
    best_size: int | None = None
    minimizers: list[BipartiteMultigraph] = []

    for nx_count in range(1, m + 1):
        for ny_count in range(nx_count, m + 1):
            if nx_count + ny_count > max_vertices:
                continue
            if nx_count * ny_count < m:
                continue
            for rows in _matrix_rows(ny_count, nx_count, m):
                col_sums = [
                    sum((row >> y) & 1 for row in rows) for y in range(ny_count)
                ]
                if any(col_sums[i] < col_sums[i + 1] for i in range(ny_count - 1)):
                    continue  # one column-sorted representative is enough
                graph = _to_nx(nx_count, ny_count, rows)
                key = _canonical_key(graph)
                bucket = seen.setdefault(key, [])
                if any(nx.is_isomorphic(graph, other) for other in bucket):
                    continue
                bucket.append(graph)
                bg = BipartiteMultigraph(
                    nx_count,
                    ny_count,
                    {
                        (x, y): 1
                        for x, row in enumerate(rows)
                        for y in range(ny_count)
                        if (row >> y) & 1
                    },
                )
                size = len(brute_multiplication_table(bg))
                if best_size is None or size < best_size:
                    best_size = size
                    minimizers = [bg]
                elif size == best_size:
                    minimizers.append(bg)

    assert best_size is not None
    return best_size, minimizers

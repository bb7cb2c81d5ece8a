"""Shared helpers: independent brute-force oracles and the fuzz corpus.

The oracles here deliberately avoid the production code paths (no bitmask
sweeps, no side-swapping) so they stay meaningful as cross-checks.
"""

from __future__ import annotations

import random
from itertools import chain, combinations

from multab.bigraph import BipartiteMultigraph, disjoint_union
from multab.generators import (
    complete_bipartite,
    cycle_graph,
    matching_graph,
    path_graph,
    random_bipartite,
    star_graph,
    star_union,
)

CORPUS_SEED = 20260810


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def naive_multiplication_table(g: BipartiteMultigraph) -> set[int]:
    """All induced sizes by enumerating both sides outright (tiny graphs only)."""
    sizes = set()
    for xs in powerset(range(g.nx)):
        for ys in powerset(range(g.ny)):
            sizes.add(
                sum(g.mult(x, y) for x in xs for y in ys)
            )
    return sizes


def naive_subset_sums(terms) -> set[int]:
    sums = {0}
    for t in terms:
        sums |= {s + t for s in sums}
    return sums


def reference_primes(limit: int) -> list[int]:
    """Plain byte-array Eratosthenes, independent of the numpy sieve."""
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


def random_graph_corpus(count: int = 500, seed: int = CORPUS_SEED):
    """Seeded random graphs up to 20+20 vertices at densities 0.1-0.9."""
    rng = random.Random(seed)
    graphs = []
    for index in range(count):
        nx = rng.randint(1, 20)
        ny = rng.randint(1, 20)
        density = rng.uniform(0.1, 0.9)
        graphs.append(random_bipartite(nx, ny, density, seed=seed + index))
    return graphs


def structured_corpus():
    graphs = [complete_bipartite(a, b) for a in range(1, 6) for b in range(a, 7)]
    graphs += [path_graph(n) for n in range(2, 13)]
    graphs += [cycle_graph(n) for n in range(4, 17, 2)]
    graphs += [star_graph(n) for n in range(1, 11)]
    graphs += [matching_graph(n) for n in range(1, 11)]
    graphs += [star_union(c, d) for c, d in [(2, 2), (3, 3), (4, 2), (5, 4), (8, 3)]]
    graphs.append(disjoint_union(star_union(4, 3), matching_graph(5)))
    graphs.append(disjoint_union(complete_bipartite(3, 3), path_graph(6)))
    return graphs

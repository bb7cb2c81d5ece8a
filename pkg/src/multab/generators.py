"""Deterministic graph family generators for the CLI and test corpora."""

from __future__ import annotations

import random

from .bigraph import BipartiteMultigraph
from .errors import InputError


def complete_bipartite(a: int, b: int) -> BipartiteMultigraph:
    if a < 1 or b < 1:
        raise InputError("complete graph needs a, b >= 1")
    return BipartiteMultigraph(a, b, {(x, y): 1 for x in range(a) for y in range(b)})


def path_graph(n: int) -> BipartiteMultigraph:
    """Path on n vertices, alternating sides starting on X."""
    if n < 1:
        raise InputError("path needs n >= 1")
    nx, ny = (n + 1) // 2, n // 2
    mult = {}
    for i in range(n - 1):
        x, y = (i // 2, i // 2) if i % 2 == 0 else ((i + 1) // 2, i // 2)
        mult[(x, y)] = 1
    return BipartiteMultigraph(nx, ny, mult)


def cycle_graph(n: int) -> BipartiteMultigraph:
    """Even cycle on n vertices as a half-and-half bipartite graph."""
    if n < 4 or n % 2:
        raise InputError("bipartite cycle needs even n >= 4")
    half = n // 2
    mult = {}
    for i in range(half):
        mult[(i, i)] = 1
        mult[((i + 1) % half, i)] = 1
    return BipartiteMultigraph(half, half, mult)


def star_graph(n: int) -> BipartiteMultigraph:
    """K_{1,n}: one X-hub joined to n Y-leaves."""
    if n < 1:
        raise InputError("star needs n >= 1 leaves")
    return BipartiteMultigraph(1, n, {(0, y): 1 for y in range(n)})


def matching_graph(n: int) -> BipartiteMultigraph:
    if n < 1:
        raise InputError("matching needs n >= 1 edges")
    return BipartiteMultigraph(n, n, {(i, i): 1 for i in range(n)})


def star_union(count: int, degree: int) -> BipartiteMultigraph:
    """Disjoint union of `count` stars, hubs on X, each with `degree` leaves."""
    if count < 1 or degree < 1:
        raise InputError("star union needs count, degree >= 1")
    mult = {
        (c, c * degree + i): 1 for c in range(count) for i in range(degree)
    }
    return BipartiteMultigraph(count, count * degree, mult)


def random_bipartite(
    nx: int, ny: int, density: float, seed: int
) -> BipartiteMultigraph:
    """Seeded Bernoulli graph: same seed, same graph, bit-exact."""
    if nx < 1 or ny < 1:
        raise InputError("random graph needs nx, ny >= 1")
    if not 0.0 <= density <= 1.0:
        raise InputError("density must lie in [0, 1]")
    rng = random.Random(seed)
    mult = {}
    for x in range(nx):
        for y in range(ny):
            if rng.random() < density:
                mult[(x, y)] = 1
    return BipartiteMultigraph(nx, ny, mult)

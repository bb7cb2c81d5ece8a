"""The certification pipeline: reduce, contract, construct, keep the best.

Degrees on one side are grouped into equal-sum blocks and contracted into a
half-regular multigraph H (sizes certified on H pull back to the original
graph through the contraction maps). On H the applicable constructions are
evaluated alongside the trivial and one-vertex-removal families on the
original graph, and the certificate with the most entries wins. Soundness
is unconditional: the winner is re-verified before it is returned.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from ..bigraph import (
    BipartiteMultigraph,
    Contraction,
    contract_groups,
    degree_profile,
    induced_subgraph,
)
from ..errors import InternalCheckError
from ..parallel import worker_count
from ..partition import greedy_cover
from ..profiles import ScaleProfile
from ..sumset import repeated, sumset_add
from .certificate import CertEntry, Certificate, verify_certificate
from .constructions import (
    BRANCH_RANK,
    MULTIPLES,
    TRIVIAL,
    TWO_CLASS,
    WARM_UP,
    common_type_entries,
    degree_multiples_entries,
    sparse_types_entries,
    trivial_entries,
    two_class_entries,
    vertex_types,
    warm_up_entries,
)

Translator = Callable[[tuple[int, ...], tuple[int, ...]], tuple[tuple[int, ...], tuple[int, ...]]]


@dataclass
class PipelineReport:
    """The winning certificate plus which branch produced it and why."""

    certificate: Certificate
    path: str
    stats: dict = field(default_factory=dict)


def _identity_translator(xs: tuple[int, ...], ys: tuple[int, ...]):
    return xs, ys


def _swap_translator(xs: tuple[int, ...], ys: tuple[int, ...]):
    return ys, xs


def trivial_certificate(g: BipartiteMultigraph) -> Certificate:
    """The star-or-matching baseline as a standalone certificate."""
    entries = sorted(trivial_entries(g), key=lambda e: e.size)
    return Certificate(g.graph_id(), tuple(entries))


def warm_up_half_regular(g: BipartiteMultigraph) -> Certificate | None:
    """The one-vertex-removal certificate, when g supports it."""
    entries = warm_up_entries(g)
    if entries is None:
        return None
    return Certificate(g.graph_id(), tuple(sorted(entries, key=lambda e: e.size)))


def _cover_side(
    degrees: list[int], profile: ScaleProfile
) -> tuple[list[tuple[int, ...]], int, int, int]:
    """Equal-sum groups over the positive-degree indices: (groups, k, r, d)."""
    positive = [i for i, deg in enumerate(degrees) if deg > 0]
    weights = [degrees[i] for i in positive]
    _, best = greedy_cover(weights, profile)
    groups = [tuple(positive[i] for i in block) for block in best.sets]
    return groups, best.size, best.r, best.d


def _two_class_candidate(
    h: BipartiteMultigraph, profile: ScaleProfile
) -> tuple[int, int, int] | None:
    """Best (y, a, b) with two multiplicity classes over the class threshold."""
    d = h.deg_x(0)
    threshold = profile.two_class_threshold(h.nx, h.m)
    best: tuple[int, int, int, int] | None = None  # (-sizes, y, a, b)
    for y in range(h.ny):
        gamma = degree_profile(h, y).gamma
        heavy = [t for t, count in enumerate(gamma) if count >= threshold]
        for a, b in combinations(heavy, 2):
            if d <= b:
                continue
            sizes = len(
                sumset_add(repeated(gamma[a], d - a), repeated(gamma[b], d - b))
            )
            key = (-sizes, y, a, b)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return best[1], best[2], best[3]


def _contraction_translator(c: Contraction) -> Translator:
    def translate(xs: tuple[int, ...], ys: tuple[int, ...]):
        orig_xs = sorted(x for j in xs for x in c.x_groups[j])
        orig_ys = sorted(c.y_map[i] for i in ys)
        return tuple(orig_xs), tuple(orig_ys)

    return translate


def _compose_swap(
    c: Contraction, to_orig_y: tuple[int, ...], to_orig_x: tuple[int, ...]
) -> Translator:
    # Contraction of the transposed reduced graph: its X side is the
    # original Y side, so translated coordinates swap back at the end.
    def translate(xs: tuple[int, ...], ys: tuple[int, ...]):
        orig_ys = sorted(to_orig_y[r1] for j in xs for r1 in c.x_groups[j])
        orig_xs = sorted(to_orig_x[c.y_map[i]] for i in ys)
        return tuple(orig_xs), tuple(orig_ys)

    return translate


def certify_pipeline(
    g: BipartiteMultigraph, profile: ScaleProfile | None = None
) -> PipelineReport:
    """Run every applicable construction and return the largest certificate.

    The report's path names the winning branch; stats carry the contraction
    parameters, the per-branch entry counts, and any branch diagnostics.
    """
    if profile is None:
        profile = ScaleProfile()
    stats: dict = {
        "m": g.m,
        "nx": g.nx,
        "ny": g.ny,
        "profile": profile.as_dict(),
        "diagnostics": {},
    }
    jobs: list[tuple[str, Callable[[], list[CertEntry] | None], Translator]] = [
        (TRIVIAL, lambda: trivial_entries(g), _identity_translator)
    ]

    if g.m > 0:
        if g.is_simple():
            if g.is_half_regular() and g.ny > 0:
                jobs.append((WARM_UP, lambda: warm_up_entries(g), _identity_translator))
            transposed = g.transpose()
            if transposed.is_half_regular() and transposed.ny > 0:
                jobs.append(
                    (WARM_UP, lambda: warm_up_entries(transposed), _swap_translator)
                )

        groups_x, k_x, r_x, d_x = _cover_side(g.x_degrees(), profile)
        contraction = contract_groups(g, groups_x)
        translate = _contraction_translator(contraction)
        side, k, r, d = "x", k_x, r_x, d_x
        threshold_k = math.sqrt(g.m) / profile.L(g.m) ** 4
        if k_x < threshold_k:
            kept_x = sorted(x for grp in groups_x for x in grp)
            reduced, x_back, y_back = induced_subgraph(
                g, kept_x, list(contraction.y_map)
            )
            groups_y, k_y, r_y, d_y = _cover_side(reduced.y_degrees(), profile)
            if k_y > k_x:
                contraction = contract_groups(
                    reduced.transpose(), [list(b) for b in groups_y]
                )
                translate = _compose_swap(contraction, y_back, x_back)
                side, k, r, d = "y", k_y, r_y, d_y
        stats.update({"side": side, "k": k, "r": r, "d": d})
        h = contraction.graph

        jobs.append((MULTIPLES, lambda: degree_multiples_entries(h), translate))
        if d >= profile.d_min(h.m):
            candidate = _two_class_candidate(h, profile)
            if candidate is not None:
                y_c, a_c, b_c = candidate
                stats["two_class_at"] = candidate
                jobs.append(
                    (
                        TWO_CLASS,
                        lambda: two_class_entries(h, y_c, a_c, b_c),
                        translate,
                    )
                )
            else:
                types = vertex_types(h, profile)
                histogram: dict[str, int] = {}
                for t in types:
                    key = "untyped" if t is None else str(t)
                    histogram[key] = histogram.get(key, 0) + 1
                stats["types"] = histogram
                if all(t is not None for t in types):
                    nonzero = sum(1 for t in types if t)
                    if nonzero <= profile.sparse_types_cutoff(d, h.m):

                        def run_sparse() -> list[CertEntry] | None:
                            entries, diag = sparse_types_entries(h, profile)
                            stats["diagnostics"]["type-zero-chain"] = diag
                            return entries

                        jobs.append(("type-zero-chain", run_sparse, translate))
                    else:

                        def run_common() -> list[CertEntry] | None:
                            tag, entries, diag = common_type_entries(h, profile)
                            stats["diagnostics"]["common-type"] = diag
                            if entries is not None and tag is not None:
                                stats["common_type_tag"] = tag
                            return entries

                        jobs.append(("common-type", run_common, translate))

    workers = worker_count()
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [(tag, pool.submit(run), tr) for tag, run, tr in jobs]
            raw = [(tag, fut.result(), tr) for tag, fut, tr in futures]
    else:
        raw = [(tag, run(), tr) for tag, run, tr in jobs]

    candidates: list[tuple[str, list[CertEntry]]] = []
    branch_sizes: dict[str, int] = {}
    for tag, entries, tr in raw:
        if entries is None:
            branch_sizes[tag] = 0
            continue
        if tag == "common-type":
            tag = stats.get("common_type_tag", "common-type")
        if tr is not _identity_translator:
            entries = [
                CertEntry(e.size, *tr(e.xs, e.ys), e.source) for e in entries
            ]
        branch_sizes[tag] = max(branch_sizes.get(tag, 0), len(entries))
        candidates.append((tag, entries))
    stats["branches"] = branch_sizes

    winner_tag, winner_entries = max(
        candidates, key=lambda c: (len(c[1]), -BRANCH_RANK.get(c[0], 99))
    )
    ordered = sorted(winner_entries, key=lambda e: e.size)[: profile.max_entries]
    certificate = Certificate(g.graph_id(), tuple(ordered))
    report = verify_certificate(g, certificate)
    if not report.ok:
        raise InternalCheckError(f"pipeline produced a bad certificate: {report.message}")
    stats["certificate_size"] = len(certificate)
    stats["trivial_size"] = branch_sizes.get(TRIVIAL, 0)
    return PipelineReport(certificate, winner_tag, stats)

"""Certificate data model, verification, and JSON round-trip.

A certificate proves a lower bound on the number of induced-subgraph sizes
by exhibition: each entry names a size together with the witness vertex
subsets that realize it, and all entry sizes are pairwise distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..bigraph import BipartiteMultigraph, induced_edge_count
from ..errors import InputError, ParseError


@dataclass(frozen=True)
class CertEntry:
    """One witnessed size: induced_edge_count(g, xs, ys) must equal size."""

    size: int
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    source: str


@dataclass(frozen=True)
class Certificate:
    """A list of witnessed, pairwise-distinct sizes for one graph."""

    graph_id: str
    entries: tuple[CertEntry, ...]

    def sizes(self) -> list[int]:
        return sorted(e.size for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    message: str = "ok"
    failing_index: int | None = None
    duplicate_size: int | None = None


def verify_certificate(g: BipartiteMultigraph, cert: Certificate) -> VerificationReport:
    """Check every witness arithmetic claim and pairwise size distinctness."""
    if cert.graph_id != g.graph_id():
        raise InputError(
            f"certificate is for graph {cert.graph_id}, not {g.graph_id()}"
        )
    for index, entry in enumerate(cert.entries):
        try:
            count = induced_edge_count(g, entry.xs, entry.ys)
        except InputError as exc:
            return VerificationReport(
                False, f"entry {index}: {exc}", failing_index=index
            )
        if count != entry.size:
            return VerificationReport(
                False,
                f"entry {index} claims size {entry.size} but witnesses {count}",
                failing_index=index,
            )
    seen: dict[int, int] = {}
    for index, entry in enumerate(cert.entries):
        if entry.size in seen:
            return VerificationReport(
                False,
                f"entries {seen[entry.size]} and {index} share size {entry.size}",
                duplicate_size=entry.size,
            )
        seen[entry.size] = index
    return VerificationReport(True)


def certificate_to_json(
    cert: Certificate, profile: dict[str, Any], path: str
) -> dict[str, Any]:
    return {
        "graph_id": cert.graph_id,
        "profile": profile,
        "path": path,
        "entries": [
            {"size": e.size, "xs": list(e.xs), "ys": list(e.ys), "source": e.source}
            for e in cert.entries
        ],
    }


def certificate_from_json(obj: Any) -> Certificate:
    if not isinstance(obj, dict):
        raise ParseError("certificate JSON must be an object")
    try:
        graph_id = obj["graph_id"]
        raw_entries = obj["entries"]
        entries = tuple(
            CertEntry(
                int(e["size"]),
                tuple(int(v) for v in e["xs"]),
                tuple(int(v) for v in e["ys"]),
                str(e.get("source", "unknown")),
            )
            for e in raw_entries
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate JSON: {exc}") from exc
    if not isinstance(graph_id, str):
        raise ParseError("graph_id must be a string")
    return Certificate(graph_id, entries)

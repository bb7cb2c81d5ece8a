"""Request and response models for the service endpoints.

Graphs travel as the plain text format ("bigraph <nx> <ny> <#pairs>" plus
one "x y mult" line per pair); certificates travel as their JSON object.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field


class GenRequest(BaseModel):
    kind: Literal["complete", "path", "cycle", "star", "random", "matching"]
    params: list[float] = Field(default_factory=list)
    seed: int = 0


class GraphResponse(BaseModel):
    graph: str
    nx: int
    ny: int
    m: int


class CertifyRequest(BaseModel):
    graph: str
    profile: Literal["paper", "scaled"] = "scaled"
    log_coeff: float = 1.0
    max_entries: int | None = None


class CertifySummary(BaseModel):
    graph_id: str
    m: int
    path: str
    certificate_size: int
    trivial_size: int
    stats: dict[str, Any]


class CertifyResponse(BaseModel):
    summary: CertifySummary
    certificate: dict[str, Any]


class VerifyRequest(BaseModel):
    graph: str
    certificate: dict[str, Any]


class VerifyResponse(BaseModel):
    ok: bool
    message: str


class OracleRequest(BaseModel):
    graph: str
    budget: int | None = None


class OracleResponse(BaseModel):
    sizes: list[int]


class TableRequest(BaseModel):
    lo: int
    hi: int
    budget: int | None = None


class TableRow(BaseModel):
    n: int
    count: int
    density: float
    ford_estimate: float | None


class TableResponse(BaseModel):
    rows: list[TableRow]


class ConjectureRequest(BaseModel):
    max_m: int
    max_vertices: int | None = None


class ConjectureRow(BaseModel):
    m: int
    min_size: int
    minimizer_count: int
    minimizers: list[str]


class ConjectureResponse(BaseModel):
    rows: list[ConjectureRow]


class LemmasRequest(BaseModel):
    sweep: Literal["small", "full"] = "small"
    seed: int = 0


class SweepRow(BaseModel):
    name: str
    cases: int
    violations: int


class LemmasResponse(BaseModel):
    checks: list[SweepRow]
    all_pass: bool


class ErrorPayload(BaseModel):
    code: Literal["parse", "input", "budget", "config", "internal-verification"]
    message: str

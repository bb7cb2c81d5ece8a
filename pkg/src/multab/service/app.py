"""FastAPI application wrapping the core package.

Domain errors map onto structured payloads: parse/input/budget/config
problems come back as 400 with a machine-readable code, and a failed
internal verification (the bug trap) comes back as 500.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..bigraph import parse_graph_text, write_graph_text
from ..certify import (
    certificate_from_json,
    certificate_to_json,
    certify_pipeline,
    verify_certificate,
)
from ..errors import (
    BudgetError,
    ConfigError,
    InputError,
    InternalCheckError,
    MultabError,
    ParseError,
)
from ..generators import (
    complete_bipartite,
    cycle_graph,
    matching_graph,
    path_graph,
    random_bipartite,
    star_graph,
)
from ..oracle import (
    brute_multiplication_table,
    conjecture_search,
    ford_estimate,
    table_nn,
)
from ..profiles import ScaleProfile
from ..sweeps import run_sweeps
from . import schemas

ERROR_CODES = {
    ParseError: "parse",
    InputError: "input",
    BudgetError: "budget",
    ConfigError: "config",
}


def _http_error(exc: MultabError) -> HTTPException:
    if isinstance(exc, InternalCheckError):
        return HTTPException(
            status_code=500,
            detail={"code": "internal-verification", "message": str(exc)},
        )
    code = ERROR_CODES.get(type(exc), "input")
    return HTTPException(status_code=400, detail={"code": code, "message": str(exc)})


def _generate(req: schemas.GenRequest):
    p = req.params
    try:
        if req.kind == "complete":
            return complete_bipartite(int(p[0]), int(p[1]))
        if req.kind == "path":
            return path_graph(int(p[0]))
        if req.kind == "cycle":
            return cycle_graph(int(p[0]))
        if req.kind == "star":
            return star_graph(int(p[0]))
        if req.kind == "matching":
            return matching_graph(int(p[0]))
        return random_bipartite(int(p[0]), int(p[1]), float(p[2]), req.seed)
    except IndexError:
        raise InputError(f"kind {req.kind!r} is missing parameters") from None


def create_app() -> FastAPI:
    app = FastAPI(title="multab", version=__version__)

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok", "version": __version__}

    @app.post("/gen", response_model=schemas.GraphResponse)
    def gen(req: schemas.GenRequest) -> schemas.GraphResponse:
        try:
            graph = _generate(req)
        except MultabError as exc:
            raise _http_error(exc) from exc
        return schemas.GraphResponse(
            graph=write_graph_text(graph), nx=graph.nx, ny=graph.ny, m=graph.m
        )

    @app.post("/certify", response_model=schemas.CertifyResponse)
    def certify(req: schemas.CertifyRequest) -> schemas.CertifyResponse:
        try:
            graph = parse_graph_text(req.graph)
            profile = ScaleProfile(mode=req.profile, log_coeff=req.log_coeff)
            if req.max_entries is not None:
                profile = ScaleProfile(
                    mode=req.profile,
                    log_coeff=req.log_coeff,
                    max_entries=req.max_entries,
                )
            report = certify_pipeline(graph, profile)
        except MultabError as exc:
            raise _http_error(exc) from exc
        summary = schemas.CertifySummary(
            graph_id=report.certificate.graph_id,
            m=graph.m,
            path=report.path,
            certificate_size=len(report.certificate),
            trivial_size=report.stats.get("trivial_size", 0),
            stats=report.stats,
        )
        payload = certificate_to_json(
            report.certificate, profile.as_dict(), report.path
        )
        return schemas.CertifyResponse(summary=summary, certificate=payload)

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        try:
            graph = parse_graph_text(req.graph)
            cert = certificate_from_json(req.certificate)
            result = verify_certificate(graph, cert)
        except MultabError as exc:
            raise _http_error(exc) from exc
        return schemas.VerifyResponse(ok=result.ok, message=result.message)

    @app.post("/oracle", response_model=schemas.OracleResponse)
    def oracle(req: schemas.OracleRequest) -> schemas.OracleResponse:
        try:
            graph = parse_graph_text(req.graph)
            if req.budget is not None:
                sizes = brute_multiplication_table(graph, budget=req.budget)
            else:
                sizes = brute_multiplication_table(graph)
        except MultabError as exc:
            raise _http_error(exc) from exc
        return schemas.OracleResponse(sizes=sizes.values())

    @app.post("/table", response_model=schemas.TableResponse)
    def table(req: schemas.TableRequest) -> schemas.TableResponse:
        rows = []
        try:
            for n in range(req.lo, req.hi + 1):
                if req.budget is not None:
                    count = table_nn(n, budget=req.budget)
                else:
                    count = table_nn(n)
                ford = ford_estimate(n).value if n >= 3 else None
                rows.append(
                    schemas.TableRow(
                        n=n, count=count, density=count / (n * n), ford_estimate=ford
                    )
                )
        except MultabError as exc:
            raise _http_error(exc) from exc
        return schemas.TableResponse(rows=rows)

    @app.post("/conjecture", response_model=schemas.ConjectureResponse)
    def conjecture(req: schemas.ConjectureRequest) -> schemas.ConjectureResponse:
        rows = []
        try:
            for m in range(1, req.max_m + 1):
                max_vertices = (
                    min(req.max_vertices, 2 * m)
                    if req.max_vertices is not None
                    else None
                )
                min_size, minimizers = conjecture_search(m, max_vertices)
                rows.append(
                    schemas.ConjectureRow(
                        m=m,
                        min_size=min_size,
                        minimizer_count=len(minimizers),
                        minimizers=[write_graph_text(g) for g in minimizers],
                    )
                )
        except MultabError as exc:
            raise _http_error(exc) from exc
        return schemas.ConjectureResponse(rows=rows)

    @app.post("/lemmas", response_model=schemas.LemmasResponse)
    def lemmas(req: schemas.LemmasRequest) -> schemas.LemmasResponse:
        try:
            results = run_sweeps(req.sweep, req.seed)
        except MultabError as exc:
            raise _http_error(exc) from exc
        checks = [
            schemas.SweepRow(name=r.name, cases=r.cases, violations=r.violations)
            for r in results
        ]
        return schemas.LemmasResponse(
            checks=checks, all_pass=all(r.ok for r in results)
        )

    return app

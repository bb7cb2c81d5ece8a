"""Command-line client for the certification service.

Every command is a thin wrapper over one service endpoint; by default the
requests run against an in-process instance of the app, and --server points
them at a remote one instead. Exit codes: 0 ok, 1 verification mismatch,
2 parse/usage error, 3 internal verification failure, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

import anyio
import httpx

from .service import create_app

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_BUDGET = 4

_CODE_TO_EXIT = {
    "parse": EXIT_USAGE,
    "input": EXIT_USAGE,
    "config": EXIT_USAGE,
    "budget": EXIT_BUDGET,
    "internal-verification": EXIT_INTERNAL,
}


class ServiceFailure(Exception):
    def __init__(self, exit_code: int, message: str):
        super().__init__(message)
        self.exit_code = exit_code


def call_service(server: str | None, path: str, payload: dict) -> dict:
    """POST one request, either in-process or against a remote server."""
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            response = client.post(path, json=payload)
            return _unwrap(response.status_code, response.json())

    async def go() -> tuple[int, Any]:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://multab.internal", timeout=None
        ) as client:
            response = await client.post(path, json=payload)
            return response.status_code, response.json()

    status, body = anyio.run(go)
    return _unwrap(status, body)


def _unwrap(status: int, body: Any) -> dict:
    if status == 200:
        return body
    detail = body.get("detail") if isinstance(body, dict) else None
    if isinstance(detail, dict) and "code" in detail:
        code = detail["code"]
        message = detail.get("message", code)
        raise ServiceFailure(_CODE_TO_EXIT.get(code, EXIT_USAGE), message)
    raise ServiceFailure(EXIT_USAGE, f"service error {status}: {body}")


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ServiceFailure(EXIT_USAGE, f"cannot read {path}: {exc}") from exc


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def cmd_gen(args: argparse.Namespace) -> int:
    payload = {"kind": args.kind, "params": args.params, "seed": args.seed}
    body = call_service(args.server, "/gen", payload)
    if args.out:
        _write_text(args.out, body["graph"])
    else:
        sys.stdout.write(body["graph"])
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    payload = {
        "graph": _read_text(args.graph),
        "profile": args.profile,
        "log_coeff": args.log_coeff,
    }
    if args.max_entries is not None:
        payload["max_entries"] = args.max_entries
    body = call_service(args.server, "/certify", payload)
    summary = body["summary"]
    print(f"graph {summary['graph_id']}  m={summary['m']}")
    print(f"path: {summary['path']}")
    print(
        f"certificate sizes: {summary['certificate_size']} "
        f"(trivial baseline {summary['trivial_size']})"
    )
    rendered = json.dumps(body["certificate"], indent=2)
    if args.out:
        _write_text(args.out, rendered + "\n")
    else:
        print(rendered)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        certificate = json.loads(_read_text(args.certificate))
    except json.JSONDecodeError as exc:
        raise ServiceFailure(EXIT_USAGE, f"bad certificate JSON: {exc}") from exc
    payload = {"graph": _read_text(args.graph), "certificate": certificate}
    body = call_service(args.server, "/verify", payload)
    if body["ok"]:
        print("ok")
        return EXIT_OK
    print(body["message"], file=sys.stderr)
    return EXIT_MISMATCH


def cmd_oracle(args: argparse.Namespace) -> int:
    payload: dict = {"graph": _read_text(args.graph)}
    if args.budget is not None:
        payload["budget"] = args.budget
    body = call_service(args.server, "/oracle", payload)
    print(" ".join(str(v) for v in body["sizes"]))
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo, hi = 1, int(text)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad range {text!r}")
    return lo, hi


def cmd_table(args: argparse.Namespace) -> int:
    try:
        lo, hi = _parse_range(args.range)
    except ValueError as exc:
        raise ServiceFailure(EXIT_USAGE, str(exc)) from exc
    payload: dict = {"lo": lo, "hi": hi}
    if args.budget is not None:
        payload["budget"] = args.budget
    body = call_service(args.server, "/table", payload)
    lines = ["n,count,density,ford_estimate"]
    for row in body["rows"]:
        ford = "" if row["ford_estimate"] is None else repr(row["ford_estimate"])
        lines.append(f"{row['n']},{row['count']},{row['density']!r},{ford}")
    rendered = "\n".join(lines) + "\n"
    if args.out:
        _write_text(args.out, rendered)
    else:
        sys.stdout.write(rendered)
    return EXIT_OK


def cmd_conjecture(args: argparse.Namespace) -> int:
    payload: dict = {"max_m": args.max_m}
    if args.budget is not None:
        payload["max_vertices"] = args.budget
    body = call_service(args.server, "/conjecture", payload)
    for row in body["rows"]:
        print(
            f"m={row['m']} min_table={row['min_size']} "
            f"minimizers={row['minimizer_count']}"
        )
        for text in row["minimizers"][: args.show]:
            pairs = [
                line.split() for line in text.strip().splitlines()[1:]
            ]
            edges = " ".join(f"{x}-{y}" for x, y, _ in pairs)
            print(f"  {edges}")
    return EXIT_OK


def cmd_lemmas(args: argparse.Namespace) -> int:
    body = call_service(
        args.server, "/lemmas", {"sweep": args.sweep, "seed": args.seed}
    )
    for row in body["checks"]:
        status = "PASS" if row["violations"] == 0 else "FAIL"
        print(
            f"{row['name']}: cases={row['cases']} "
            f"violations={row['violations']} {status}"
        )
    if body["all_pass"]:
        print("all-pass")
        return EXIT_OK
    return EXIT_MISMATCH


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multab",
        description="Induced-subgraph size certificates for bipartite graphs",
    )
    parser.add_argument("--server", help="remote service URL (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument(
        "kind", choices=["complete", "path", "cycle", "star", "random", "matching"]
    )
    p.add_argument("params", nargs="*", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("certify", help="run the certification pipeline")
    p.add_argument("graph")
    p.add_argument("--profile", choices=["paper", "scaled"], default="scaled")
    p.add_argument("--log-coeff", type=float, default=1.0)
    p.add_argument("--max-entries", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="verify a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact induced-subgraph size set")
    p.add_argument("graph")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("table", help="distinct-products table sweep as CSV")
    p.add_argument("range", help="N or LO..HI")
    p.add_argument("--budget", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("conjecture", help="minimum table size per edge count")
    p.add_argument("--max-m", type=int, default=10)
    p.add_argument("--budget", type=int, help="cap on total vertices")
    p.add_argument("--show", type=int, default=3, help="minimizers to print per m")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("lemmas", help="run the exhaustive property sweeps")
    p.add_argument("--sweep", choices=["small", "full"], default="small")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ServiceFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

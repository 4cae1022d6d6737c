"""Thin command-line client for the dlite service.

All computation happens behind the HTTP API. By default each command runs
against an in-process instance of the app (no server or network needed,
and output is deterministic); pass ``--server URL`` to target a running
deployment instead. ``dlite serve`` starts one.

Exit codes: 0 success, 1 verification property failed, 2 usage or input
error, 3 measure undefined for the given inputs (KL without smoothing).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from dataclasses import dataclass, field

import httpx

from .measures import MeasureKind
from .verification import TOLERANCES

_EXIT_OK = 0
_EXIT_PROPERTY_FAILED = 1
_EXIT_USAGE = 2
_EXIT_UNDEFINED = 3


@dataclass
class CliConfig:
    """Resolved options shared by the subcommands."""

    server: str | None = None
    input_path: str | None = None
    format: str | None = None
    measure: str = MeasureKind.DLITE_CBRT.value
    smooth_epsilon: float | None = None
    output_path: str | None = None
    seed: int = 42
    samples: int = 10000
    dims: list[int] = field(default_factory=lambda: [2, 3, 4, 8])
    tolerances: dict[str, float] = field(default_factory=dict)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("value must be a positive integer")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _dims_list(text: str) -> list[int]:
    try:
        dims = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated list of integers"
        ) from None
    if not dims:
        raise argparse.ArgumentTypeError("need at least one dimension")
    for d in dims:
        if not 2 <= d <= 16:
            raise argparse.ArgumentTypeError(f"dimension {d} outside [2, 16]")
    return dims


def _tolerance_item(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError("expected NAME=VALUE")
    name = name.strip()
    if name not in TOLERANCES:
        raise argparse.ArgumentTypeError(
            f"unknown tolerance {name!r}; known: {', '.join(sorted(TOLERANCES))}"
        )
    try:
        return name, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a number") from None


def _infer_format(path: str, explicit: str | None) -> str | None:
    if explicit:
        return explicit
    lowered = path.lower()
    if lowered.endswith(".csv"):
        return "csv"
    if lowered.endswith(".json"):
        return "json"
    return None


def _request(server: str | None, path: str, payload: dict) -> tuple[int, dict]:
    """POST to a remote server, or to an in-process app when none is given."""

    async def go() -> tuple[int, dict]:
        if server:
            transport = None
            base = server
        else:
            from .service import create_app

            transport = httpx.ASGITransport(app=create_app())
            base = "http://dlite.internal"
        async with httpx.AsyncClient(
            transport=transport, base_url=base, timeout=600.0
        ) as client:
            response = await client.post(path, json=payload)
            try:
                body = response.json()
            except json.JSONDecodeError:
                body = {}
            return response.status_code, body

    return asyncio.run(go())


def _error_exit(status: int, body: dict) -> int:
    detail = body.get("detail")
    if isinstance(detail, dict):
        error = detail.get("error", "Error")
        message = detail.get("message", "")
    else:
        error = f"HTTP {status}"
        message = json.dumps(detail) if detail is not None else ""
    print(f"error: {error}: {message}", file=sys.stderr)
    if error == "KlUndefined":
        print("hint: re-run with --smooth EPS to epsilon-smooth all distributions",
              file=sys.stderr)
        return _EXIT_UNDEFINED
    return _EXIT_USAGE


def _emit(text: str, output_path: str | None) -> None:
    if output_path:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_cell(value: float) -> str:
    # 12 significant digits: enough to diff across platforms, short enough
    # to stay readable.
    return f"{value:.12g}"


def _read_input(cfg: CliConfig) -> tuple[str, str] | int:
    if not cfg.input_path:
        print("error: --input is required", file=sys.stderr)
        return _EXIT_USAGE
    fmt = _infer_format(cfg.input_path, cfg.format)
    if fmt is None:
        print(
            "error: cannot infer format from file name; pass --format csv|json",
            file=sys.stderr,
        )
        return _EXIT_USAGE
    try:
        with open(cfg.input_path, "r", encoding="utf-8") as fh:
            return fh.read(), fmt
    except OSError as exc:
        print(f"error: cannot read {cfg.input_path}: {exc}", file=sys.stderr)
        return _EXIT_USAGE


def run_dist(cfg: CliConfig) -> int:
    """Compute a pairwise distance matrix and render it as CSV."""
    loaded = _read_input(cfg)
    if isinstance(loaded, int):
        return loaded
    content, fmt = loaded
    status, body = _request(
        cfg.server,
        "/matrix",
        {
            "data": {"content": content, "format": fmt},
            "measure": cfg.measure,
            "smooth_epsilon": cfg.smooth_epsilon,
        },
    )
    if status != 200:
        return _error_exit(status, body)
    names = body["names"]
    lines = ["," + ",".join(names)]
    for name, row in zip(names, body["values"]):
        lines.append(name + "," + ",".join(_fmt_cell(v) for v in row))
    _emit("\n".join(lines) + "\n", cfg.output_path)
    return _EXIT_OK


def run_pair(cfg: CliConfig, name_a: str, name_b: str) -> int:
    """Report every measure plus the per-outcome breakdown for one pair."""
    loaded = _read_input(cfg)
    if isinstance(loaded, int):
        return loaded
    content, fmt = loaded
    status, body = _request(
        cfg.server,
        "/pair",
        {
            "data": {"content": content, "format": fmt},
            "name_a": name_a,
            "name_b": name_b,
            "smooth_epsilon": cfg.smooth_epsilon,
        },
    )
    if status != 200:
        return _error_exit(status, body)
    _emit(json.dumps(body, indent=2) + "\n", cfg.output_path)
    return _EXIT_OK


def run_verify(cfg: CliConfig) -> int:
    """Run the verification suites; print one report per line as JSON."""
    status, body = _request(
        cfg.server,
        "/verify",
        {
            "seed": cfg.seed,
            "samples": cfg.samples,
            "dims": cfg.dims,
            "tolerances": cfg.tolerances,
        },
    )
    if status != 200:
        return _error_exit(status, body)
    lines = [json.dumps(r, separators=(",", ":")) for r in body["reports"]]
    _emit("\n".join(lines) + "\n", cfg.output_path)
    return _EXIT_OK if body["all_passed"] else _EXIT_PROPERTY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlite",
        description="Entropic-difference measures between probability distributions",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, with_input: bool) -> None:
        p.add_argument("--server", help="URL of a running service; default is in-process")
        p.add_argument("--output", help="write output to this file instead of stdout")
        if with_input:
            p.add_argument("--input", required=True, help="CSV or JSON distribution file")
            p.add_argument("--format", choices=["csv", "json"],
                           help="input format (default: by file extension)")
            p.add_argument("--smooth", type=_positive_float, metavar="EPS",
                           help="epsilon-smooth all distributions before measuring")

    p_dist = sub.add_parser("dist", help="pairwise distance matrix as CSV")
    add_common(p_dist, with_input=True)
    p_dist.add_argument("--measure", choices=[k.value for k in MeasureKind],
                        default=MeasureKind.DLITE_CBRT.value)

    p_pair = sub.add_parser("pair", help="all measures for one pair of distributions")
    add_common(p_pair, with_input=True)
    p_pair.add_argument("name_a")
    p_pair.add_argument("name_b")

    p_verify = sub.add_parser("verify", help="run the numerical verification suites")
    add_common(p_verify, with_input=False)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--samples", type=_positive_int, default=10000)
    p_verify.add_argument("--dims", type=_dims_list, default=[2, 3, 4, 8],
                          help="comma-separated simplex dimensions, e.g. 2,3,4,8")
    p_verify.add_argument("--tolerance", type=_tolerance_item, action="append",
                          default=[], metavar="NAME=VALUE",
                          help=f"override a check tolerance; names: {', '.join(sorted(TOLERANCES))}")

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.subcommand == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return _EXIT_OK

    cfg = CliConfig(
        server=args.server,
        input_path=getattr(args, "input", None),
        format=getattr(args, "format", None),
        measure=getattr(args, "measure", MeasureKind.DLITE_CBRT.value),
        smooth_epsilon=getattr(args, "smooth", None),
        output_path=args.output,
        seed=getattr(args, "seed", 42),
        samples=getattr(args, "samples", 10000),
        dims=getattr(args, "dims", [2, 3, 4, 8]),
        tolerances=dict(getattr(args, "tolerance", [])),
    )
    try:
        if args.subcommand == "dist":
            return run_dist(cfg)
        if args.subcommand == "pair":
            return run_pair(cfg, args.name_a, args.name_b)
        if args.subcommand == "verify":
            return run_verify(cfg)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    raise AssertionError(f"unhandled subcommand {args.subcommand!r}")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

"""``fbh`` command-line entry point.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical precondition
violated (point not interior, divergent series, dimension mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import config
from .automorphism import LinearBiholomorphism, decompose_linear_biholomorphism
from .domain import DomainError, FBHDomain, Point
from .kernel import DivergentSeriesError, SeriesBudgetError, SeriesControl, kernel
from .serialize import dumps, from_cmat, point_from_json
from .suites import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_MATH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for mathematical failures here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def parse_point(text: str, n: int, m: int, as_json: bool) -> Point:
    """Decode ``re,im,re,im,...`` (z first, then w) or a JSON point document."""
    if as_json:
        try:
            data = json.loads(text)
            p = point_from_json(data)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot parse JSON point {text!r}: {exc}") from exc
    else:
        try:
            vals = [float(x) for x in text.split(",")]
        except ValueError as exc:
            raise UsageError(f"cannot parse point {text!r}: {exc}") from exc
        if len(vals) != 2 * (n + m):
            raise UsageError(f"point {text!r} needs {2 * (n + m)} numbers (re,im per coordinate), got {len(vals)}")
        coords = [complex(vals[i], vals[i + 1]) for i in range(0, len(vals), 2)]
        p = Point(coords[:n], coords[n:])
    if p.z.size != n or p.w.size != m:
        raise UsageError(f"point has dimensions ({p.z.size}, {p.w.size}), expected ({n}, {m})")
    return p


def _domain(n, m, mu) -> FBHDomain:
    try:
        return FBHDomain(n, m, mu)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def cmd_kernel(args) -> int:
    d = _domain(args.n, args.m, args.mu)
    p = parse_point(args.p, d.n, d.m, args.json)
    q = parse_point(args.q, d.n, d.m, args.json)
    try:
        ctl = SeriesControl(args.tol, config.SERIES_MAX_TERMS)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = kernel(d, p, q, ctl)
    print(dumps({"domain": d, "p": p, "q": q, "kernel": result}, indent=2))
    return EXIT_OK


def _apply_overrides(pairs: list[str]) -> None:
    for item in pairs:
        key, sep, value = item.partition("=")
        key = key.strip().upper()
        if not sep or not hasattr(config, key) or not isinstance(getattr(config, key), float):
            raise UsageError(f"--tol expects NAME=VALUE with NAME a tolerance in fbh.config, got {item!r}")
        try:
            setattr(config, key, float(value))
        except ValueError as exc:
            raise UsageError(f"bad value in {item!r}") from exc


def cmd_suite(args) -> int:
    _apply_overrides(args.tol)
    report = run_suite(args.name, args.seed)
    text = json.dumps(
        {"schema_version": config.SCHEMA_VERSION, **report.to_json(include_timing=args.timing)},
        sort_keys=True,
        indent=2,
    )
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    for c in report.checks:
        print(f"[{c.status.upper()}] {c.name}: measured {c.measured:.3e}, threshold {c.threshold:.3e}", file=sys.stderr)
    passed = sum(c.status == "pass" for c in report.checks)
    print(
        f"suite {report.suite_name} (seed {report.seed}): {passed}/{len(report.checks)} passed "
        f"in {report.wall_time:.2f}s",
        file=sys.stderr,
    )
    return EXIT_OK if report.passed else EXIT_MATH


def _read_matrix(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if isinstance(data, dict):
            data = data["matrix"]
        return from_cmat(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read matrix from {path!r}: {exc}") from exc


def cmd_decompose(args) -> int:
    src = _domain(args.n, args.m, args.mu)
    tgt = _domain(args.n, args.m, args.muprime if args.muprime is not None else args.mu)
    M = _read_matrix(args.matrix)
    result = decompose_linear_biholomorphism(LinearBiholomorphism(src, tgt, M), args.tol)
    print(dumps({"source": src, "target": tgt, "decomposition": result}, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fbh", description="Bergman kernel tools for Fock-Bargmann-Hartogs domains.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    k = sub.add_parser("kernel", help="evaluate K(p, q)")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--m", type=int, required=True)
    k.add_argument("--mu", type=float, required=True)
    k.add_argument("--p", required=True, help="re,im pairs, z then w (or a JSON point with --json)")
    k.add_argument("--q", required=True)
    k.add_argument("--tol", type=float, default=config.SERIES_TOL, help="absolute tail tolerance")
    k.add_argument("--json", action="store_true", help='points are JSON: {"z": [[re, im], ...], "w": [...]}')
    k.set_defaults(func=cmd_kernel)

    s = sub.add_parser("suite", help="run a verification battery")
    s.add_argument("name", choices=[*SUITES, "all"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="also write the JSON report to this file")
    s.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE", help="override a config tolerance")
    s.add_argument("--timing", action="store_true", help="include wall_time in the JSON (breaks byte determinism)")
    s.set_defaults(func=cmd_suite)

    dcp = sub.add_parser("decompose", help="test a linear map between two domains for the normal form")
    dcp.add_argument("matrix", help='JSON file: nested rows of numbers or [re, im] pairs, optionally under "matrix"')
    dcp.add_argument("--n", type=int, required=True)
    dcp.add_argument("--m", type=int, required=True)
    dcp.add_argument("--mu", type=float, required=True)
    dcp.add_argument("--muprime", type=float, default=None, help="target mu (defaults to --mu)")
    dcp.add_argument("--tol", type=float, default=config.DECOMPOSE_TOL)
    dcp.set_defaults(func=cmd_decompose)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fbh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, DivergentSeriesError, SeriesBudgetError) as exc:
        print(f"fbh: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())

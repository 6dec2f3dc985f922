"""Command-line front end.

Exit status: 0 on success, 2 when a verification subcommand finds a
mathematical mismatch (the mismatch is written to the report), 1 on I/O
failure, 64 on a usage error.

CSV columns for ``extremal``:
    n, ex_value, turan_value, extremal_count, turan_is_extremal,
    turan_is_unique, graphs_scanned, wall_ms
All counts are written as exact decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import enumeration, fbound, moves
from .counting import automorphism_count, count_embeddings
from .enumeration import CACHE_ENV, EnumerationCapError, ExtremalReport, check_cap
from .graph import Graph, GraphError
from .graph6 import graph6_encode
from .multipartite import WeakTReport, weak_t_check
from .presets import parse_graph

EXIT_OK, EXIT_IO, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2, 64

EXTREMAL_COLUMNS = [
    "n",
    "ex_value",
    "turan_value",
    "extremal_count",
    "turan_is_extremal",
    "turan_is_unique",
    "graphs_scanned",
    "wall_ms",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class ExperimentConfig:
    subcommand: str
    args: argparse.Namespace
    H: Graph | None = None
    F: Graph | None = None
    G: Graph | None = None
    n_values: list[int] = field(default_factory=list)


def parse_range(text: str) -> list[int]:
    """``"7"`` or ``"4..8"`` (inclusive) as a list of integers."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer or range: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty range: {text!r}")
    return values


def _graph_arg(text: str | None) -> Graph | None:
    if text is None:
        return None
    try:
        return parse_graph(text)
    except GraphError as exc:
        raise UsageError(f"cannot parse graph {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--no-timing", action="store_true", help="write wall_ms as 0 for reproducible output")

    p = _Parser(prog="turanlab", description="Exact small-case experiments on generalized Turán numbers.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    ex = sub.add_parser("extremal", parents=[common], help="exact ex(n, H, F) by exhaustive enumeration")
    ex.add_argument("--H", required=True, help="preset name or graph6")
    ex.add_argument("--F", required=True, help="preset name or graph6")
    ex.add_argument("--n", required=True, type=parse_range)
    ex.add_argument("--cache-dir", help=f"graph6 cache directory (default ${CACHE_ENV})")

    wt = sub.add_parser("weak-t", parents=[common], help="maximise P_ell over complete (k-1)-partite graphs")
    wt.add_argument("--ell", required=True, type=int)
    wt.add_argument("--k", required=True, type=int)
    wt.add_argument("--n", required=True, type=parse_range)
    wt.add_argument("--strict", action="store_true", help="exit 2 unless the balanced partition is the unique maximiser")

    md = sub.add_parser("move-delta", parents=[common], help="check the vertex-move P6 count formulas")
    md.add_argument("--k", type=parse_range, default=[4, 5, 6], help="k or range of k (k - 1 classes)")
    md.add_argument("--max-size", type=int, default=8)
    md.add_argument("--max-n", type=int, default=24)
    md.add_argument("--formulas", choices=moves.VARIANTS, default="verbatim")
    md.add_argument("--tuple", nargs="+", type=int, metavar="SIZE", help="single tuple a b [rest ...]")

    fs = sub.add_parser("f-scan", parents=[common], help="exact scan of the bound difference f(k, theta)")
    fs.add_argument("--kmax", type=int, default=10**4)
    fs.add_argument("--theta", nargs=2, type=int, metavar=("NUM", "DEN"), default=[0, 1])
    fs.add_argument("--closed-form-upto", type=int, default=50, help="compare the quartic closed form up to this k (0 to skip)")

    ct = sub.add_parser("count", parents=[common], help="embeddings and copies of H in G")
    ct.add_argument("--H", required=True)
    ct.add_argument("--G", required=True)

    en = sub.add_parser("enumerate", parents=[common], help="write graph6 representatives of all (F-free) graphs")
    en.add_argument("--n", required=True, type=int)
    en.add_argument("--F")
    en.add_argument("--allow-large", action="store_true", help="permit unrestricted enumeration at n = 10")
    en.add_argument("--cache-dir")

    ca = sub.add_parser("cache", help="inspect or clear the graph6 enumeration cache")
    ca.add_argument("action", choices=["list", "clear"])
    ca.add_argument("--cache-dir")
    return p


def parse_args(argv: list[str] | None = None) -> ExperimentConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = ExperimentConfig(args.subcommand, args)
    try:
        if args.subcommand == "extremal":
            cfg.H, cfg.F, cfg.n_values = _graph_arg(args.H), _graph_arg(args.F), args.n
            if cfg.F.num_edges == 0:
                raise UsageError("F must have at least one edge")
            for n in cfg.n_values:
                check_cap(n, restricted=True)
        elif args.subcommand == "enumerate":
            cfg.F, cfg.n_values = _graph_arg(args.F), [args.n]
            check_cap(args.n, restricted=cfg.F is not None, allow_large=args.allow_large)
        elif args.subcommand == "count":
            cfg.H, cfg.G = _graph_arg(args.H), _graph_arg(args.G)
        elif args.subcommand == "weak-t":
            cfg.n_values = args.n
            if args.ell < 2 or args.k < 3 or min(args.n) < args.k - 1:
                raise UsageError("weak-t needs ell >= 2, k >= 3 and n >= k - 1")
        elif args.subcommand == "f-scan":
            if args.kmax < 4 or args.theta[1] <= 0:
                raise UsageError("f-scan needs kmax >= 4 and a positive theta denominator")
        elif args.subcommand == "move-delta":
            if args.tuple is not None and len(args.tuple) < 2:
                raise UsageError("--tuple needs at least a and b")
    except (UsageError, EnumerationCapError) as exc:
        parser.error(str(exc))
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be positive")
    return cfg


def _scalar(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, float):
        return f"{value:.3f}"
    if isinstance(value, (tuple, list)):
        sep = ";" if value and isinstance(value[0], (tuple, list)) else " "
        return sep.join(_scalar(v) for v in value)
    return str(value)


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, float):
        return round(value, 3)
    if isinstance(value, (list, tuple, range)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _extremal_row(rep: ExtremalReport) -> dict:
    return {
        "n": rep.n,
        "ex_value": rep.ex_value,
        "turan_value": rep.turan_value,
        "extremal_count": rep.extremal_count,
        "turan_is_extremal": rep.turan_is_extremal,
        "turan_is_unique": rep.turan_is_unique,
        "graphs_scanned": rep.graphs_scanned,
        "wall_ms": rep.wall_ms,
    }


def _extremal_json(rep: ExtremalReport) -> dict:
    d = {"n": rep.n, "H": rep.H, "F": rep.F}
    d.update(_extremal_row(rep))
    d["extremal_graphs"] = rep.extremal_graphs
    return d


def _move_row(md: moves.MoveDelta) -> dict:
    return {
        "a": md.a,
        "b": md.b,
        "rest": md.rest,
        "n": md.n,
        "variant": md.variant,
        "phi1": md.phi1,
        "phi2": md.phi2,
        "phi3": md.phi3,
        "phi": md.phi,
        "psi": md.psi,
        "delta": md.delta,
        "oracle_diff": md.oracle_diff,
        "oracle_match": md.oracle_match,
        "mismatched_groups": md.mismatched_groups,
    }


def _weak_row(rep: WeakTReport) -> dict:
    return {
        "ell": rep.ell,
        "k": rep.k,
        "n": rep.n,
        "balanced": rep.balanced,
        "balanced_value": rep.balanced_value,
        "max_value": rep.max_value,
        "maximizers": [list(p) for p in rep.maximizers],
        "balanced_is_unique_maximizer": rep.balanced_is_unique_maximizer,
        "compositions_scanned": rep.compositions_scanned,
    }


def _fscan_row(rep) -> dict:
    return {
        "k_max": rep.k_max,
        "theta": rep.theta,
        "all_positive": rep.all_positive,
        "minimum": rep.minimum,
        "argmin": rep.argmin,
        "min_at_4": rep.min_at_4,
        "f4": rep.f4,
        "closed_form_checked_upto": rep.closed_form_upto,
        "closed_form_mismatches": rep.closed_form_mismatches,
    }


def _rows(report) -> tuple[list[str] | None, list[dict], list[dict]]:
    """(csv columns, csv rows, json rows) for any supported report shape."""
    items = report if isinstance(report, list) else [report]
    if not items:
        return EXTREMAL_COLUMNS, [], []
    first = items[0]
    if isinstance(first, ExtremalReport):
        return EXTREMAL_COLUMNS, [_extremal_row(r) for r in items], [_extremal_json(r) for r in items]
    if isinstance(first, moves.MoveDelta):
        rows = [_move_row(r) for r in items]
    elif isinstance(first, WeakTReport):
        rows = [_weak_row(r) for r in items]
    elif isinstance(first, FScanResult):
        rows = [_fscan_row(r) for r in items]
    else:
        rows = [dict(r) for r in items]
    return list(rows[0]), rows, rows


def emit_report(report, fmt: str) -> bytes:
    """Serialise a report (or list of reports) as CSV or JSON bytes."""
    columns, rows, jrows = _rows(report)
    if fmt == "json":
        payload = [_jsonable(r) for r in jrows]
        if not isinstance(report, list):
            payload = payload[0]
        return (json.dumps(payload, indent=2) + "\n").encode()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_scalar(r[c]) for c in columns])
    return buf.getvalue().encode()


@dataclass
class FScanResult:
    k_max: int
    theta: Fraction
    all_positive: bool
    minimum: Fraction
    argmin: int
    min_at_4: bool
    f4: Fraction
    closed_form_upto: int
    closed_form_mismatches: list[int]

    @property
    def ok(self) -> bool:
        return self.all_positive and self.min_at_4 and not self.closed_form_mismatches


def f_scan(k_max: int, theta: Fraction, closed_form_upto: int) -> FScanResult:
    if theta == 0:
        rep = fbound.f_k0_positive_scan(k_max, closed_form_upto)
        upto = rep.closed_form_checked[-1] if len(rep.closed_form_checked) else 0
        return FScanResult(k_max, theta, rep.all_positive, rep.minimum, rep.argmin, rep.min_at_4, rep.f4,
                           upto, rep.closed_form_mismatches)
    values = {}
    for k in range(4, k_max + 1):
        if theta >= Fraction(1, k - 1):
            break
        values[k] = fbound.f_k_theta(k, theta).value
    if not values:
        raise UsageError("theta is not below 1/(k-1) for any k >= 4")
    argmin = min(values, key=values.get)
    return FScanResult(max(values), theta, all(v > 0 for v in values.values()), values[argmin], argmin,
                       argmin == 4, values[4], 0, [])


def _write(data: bytes, output: str | None) -> None:
    if output:
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def run(cfg: ExperimentConfig) -> int:
    a = cfg.args
    status = EXIT_OK
    if cfg.subcommand == "cache":
        root = a.cache_dir or os.environ.get(CACHE_ENV)
        if not root:
            print(f"no cache directory (set ${CACHE_ENV} or pass --cache-dir)", file=sys.stderr)
            return EXIT_IO
        path = Path(root)
        files = sorted(path.glob("*.g6")) if path.is_dir() else []
        if a.action == "list":
            for f in files:
                with open(f, "rb") as fh:
                    print(f"{f.name}\t{sum(1 for line in fh if line.strip())}")
        else:
            for f in files:
                f.unlink()
        return EXIT_OK

    if cfg.subcommand == "extremal":
        scan = enumeration.turan_good_scan(
            cfg.H, cfg.F, cfg.n_values, workers=a.workers, cache_dir=a.cache_dir, H_label=a.H, F_label=a.F
        )
        report = scan.reports
        if a.no_timing:
            for r in report:
                r.wall_ms = 0.0
    elif cfg.subcommand == "weak-t":
        report = [weak_t_check(a.ell, a.k, n, workers=a.workers) for n in cfg.n_values]
        if a.strict and not all(r.balanced_is_unique_maximizer for r in report):
            status = EXIT_MISMATCH
    elif cfg.subcommand == "move-delta":
        if a.tuple:
            x, y, *rest = a.tuple
            report = [moves.move_delta(x, y, tuple(rest), variant=a.formulas, localize="oracle")]
        else:
            report = moves.move_delta_sweep([k - 1 for k in a.k], a.max_size, a.max_n, variant=a.formulas)
        if not all(m.oracle_match for m in report):
            status = EXIT_MISMATCH
    elif cfg.subcommand == "f-scan":
        try:
            report = f_scan(a.kmax, Fraction(a.theta[0], a.theta[1]), a.closed_form_upto)
        except (UsageError, ValueError) as exc:
            print(f"turanlab: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if not report.ok:
            status = EXIT_MISMATCH
    elif cfg.subcommand == "count":
        emb = count_embeddings(cfg.H, cfg.G, workers=a.workers)
        aut = automorphism_count(cfg.H)
        report = {"H": graph6_encode(cfg.H).decode(), "G": graph6_encode(cfg.G).decode(),
                  "embeddings": emb, "automorphisms": aut, "copies": emb // aut}
    elif cfg.subcommand == "enumerate":
        if cfg.F is None:
            graphs = enumeration.enumerate_graphs(a.n, allow_large=a.allow_large, workers=a.workers,
                                                  cache_dir=a.cache_dir)
        else:
            graphs = enumeration.enumerate_f_free(a.n, cfg.F, workers=a.workers, cache_dir=a.cache_dir)
        data = b"".join(graph6_encode(G) + b"\n" for G in graphs)
        try:
            _write(data, a.output)
        except OSError as exc:
            print(f"turanlab: cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
        return EXIT_OK
    else:  # pragma: no cover - argparse rejects unknown subcommands
        return EXIT_USAGE

    try:
        _write(emit_report(report, a.format), a.output)
    except OSError as exc:
        print(f"turanlab: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    return status


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    try:
        return run(cfg)
    except OSError as exc:
        print(f"turanlab: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 on success, 1 on usage errors, 2 on I/O or parse errors.
"""
from __future__ import annotations

import argparse
import csv
import math
import logging
import sys

from . import kernels
from .errors import InvalidInputError, InvalidParameterError, ParseError
from .estimator import DEFAULT_FRACTION, DEFAULT_TAU, SamplerConfig, default_degree_set
from .degree import DEFAULT_K
from .graph import exact_ccdh, generate_power_law, graph_stats, load_edge_list, write_edge_list
from .harness import (
    CONVERGENCE_COLUMNS, ESTIMATE_COLUMNS, parse_budget, parse_fraction,
    run_baseline, run_convergence, run_estimate,
)
from .oracle import LEDGER_COLUMNS

log = logging.getLogger("saddles")

EXIT_USAGE = 1
EXIT_IO = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(value):
    if isinstance(value, float):
        return str(int(value)) if value.is_integer() else repr(value)
    return "" if value is None else str(value)


def _write_rows(fh, columns, rows):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row.get(c, "")) for c in columns])


def _write_ledger_footer(fh, run_index, seed, ledger):
    parts = [f"run_index={run_index}", f"seed={seed}"]
    parts += [f"{c}={_fmt(float(ledger[c]) if c.startswith('pct') else ledger[c])}" for c in LEDGER_COLUMNS]
    fh.write("# ledger " + " ".join(parts) + "\n")


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _degrees(text, graph):
    if text is None or text == "auto":
        return tuple(default_degree_set(graph.max_degree).tolist())
    try:
        ds = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise UsageError(f"cannot parse --degrees {text!r}") from None
    if not ds or ds[0] < 1:
        raise UsageError("--degrees must be positive integers")
    return tuple(ds)


def cmd_stats(args):
    g = load_edge_list(args.input)
    stats = graph_stats(g)
    stats["edges_per_vertex"] = g.m / g.n
    cols = ["n", "m", "max_degree", "avg_degree", "edges_per_vertex", "h_index", "z_index", "z_index_rounded"]
    stats["z_index_rounded"] = round(stats["z_index"])
    fh, close = _open_out(args.output)
    _write_rows(fh, cols, [stats])
    if close:
        fh.close()


def cmd_ccdh(args):
    g = load_edge_list(args.input)
    fh, close = _open_out(args.output)
    exact_ccdh(g).to_csv(fh)
    if close:
        fh.close()


def _config_from_args(args, g):
    if args.model == "sm" and args.k is not None:
        raise UsageError("--k only applies to --model hdm")
    n = g.n
    default = max(1, math.ceil(DEFAULT_FRACTION * n))
    r = parse_budget(args.r, n) if args.r is not None else default
    q = parse_budget(args.q, n) if args.q is not None else default
    try:
        return SamplerConfig(
            r=r, q=q, degrees=_degrees(args.degrees, g), model=args.model, ell=args.ell,
            tau=args.tau, k=args.k if args.k is not None else DEFAULT_K, seed=args.seed,
        )
    except InvalidParameterError as exc:
        raise UsageError(str(exc)) from None


def cmd_estimate(args):
    if args.runs < 1:
        raise UsageError("--runs must be at least 1")
    g = load_edge_list(args.input)
    config = _config_from_args(args, g)
    truth = exact_ccdh(g) if args.truth else None
    fh, close = _open_out(args.output)
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(ESTIMATE_COLUMNS)
    for i in range(args.runs):
        seed = None if args.seed is None else args.seed + i
        report = run_estimate(g, config.with_seed(seed), args.input, truth, i, args.monotone)
        for row in report.rows:
            w.writerow([_fmt(row.get(c, "")) for c in ESTIMATE_COLUMNS])
        _write_ledger_footer(fh, i, seed, report.ledger)
        log.info("run %d done in %.3fs", i, report.duration)
    if close:
        fh.close()


def cmd_baseline(args):
    if args.runs < 1:
        raise UsageError("--runs must be at least 1")
    g = load_edge_list(args.input)
    try:
        budget = parse_budget(args.budget, g.n)
    except InvalidParameterError as exc:
        raise UsageError(str(exc)) from None
    degrees = _degrees(args.degrees, g)
    truth = exact_ccdh(g) if args.truth else None
    fh, close = _open_out(args.output)
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(ESTIMATE_COLUMNS)
    for i in range(args.runs):
        seed = None if args.seed is None else args.seed + i
        report = run_baseline(g, args.method, budget, degrees, seed, args.input, truth, i)
        for row in report.rows:
            w.writerow([_fmt(row.get(c, "")) for c in ESTIMATE_COLUMNS])
    if close:
        fh.close()


def cmd_convergence(args):
    if args.runs < 1:
        raise UsageError("--runs must be at least 1")
    if args.degrees in (None, "auto"):
        raise UsageError("convergence needs an explicit --degrees list")
    try:
        budgets = [parse_fraction(b) for b in args.budget.split(",") if b.strip()]
    except InvalidParameterError as exc:
        raise UsageError(str(exc)) from None
    if args.model == "sm" and args.k is not None:
        raise UsageError("--k only applies to --model hdm")
    g = load_edge_list(args.input)
    degrees = _degrees(args.degrees, g)
    rows = run_convergence(g, degrees, budgets, args.runs, seed=args.seed or 0, model=args.model,
                           ell=args.ell, tau=args.tau, k=args.k if args.k is not None else DEFAULT_K)
    fh, close = _open_out(args.output)
    _write_rows(fh, CONVERGENCE_COLUMNS, rows)
    if close:
        fh.close()


def cmd_generate(args):
    try:
        g = generate_power_law(args.n, args.gamma, seed=args.seed, avg_degree=args.avg_degree)
    except InvalidParameterError as exc:
        raise UsageError(str(exc)) from None
    fh, close = _open_out(args.output)
    write_edge_list(g, fh)
    if close:
        fh.close()


def build_parser():
    p = _Parser(prog="saddles", description="Sublinear ccdh estimation and baselines.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def io_args(sp, needs_input=True):
        if needs_input:
            sp.add_argument("--input", required=True, help="SNAP edge-list file")
        sp.add_argument("--output", default="-", help="output CSV (default stdout)")

    sp = sub.add_parser("stats", help="n, m, max degree, h- and z-index")
    io_args(sp)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("ccdh", help="exact ccdh as CSV")
    io_args(sp)
    sp.set_defaults(func=cmd_ccdh)

    def sampler_args(sp):
        sp.add_argument("--model", choices=["sm", "hdm"], default="sm")
        sp.add_argument("--ell", type=int, default=1)
        sp.add_argument("--tau", type=float, default=DEFAULT_TAU)
        sp.add_argument("--k", type=int, default=None, help=f"collision threshold (hdm; default {DEFAULT_K})")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--runs", type=int, default=1)

    sp = sub.add_parser("estimate", help="run SADDLES")
    io_args(sp)
    sampler_args(sp)
    sp.add_argument("--r", default=None, help="vertex samples per trial (count, fraction or %%)")
    sp.add_argument("--q", default=None, help="edge samples per trial (count, fraction or %%)")
    sp.add_argument("--degrees", default="auto", help='comma list or "auto"')
    sp.add_argument("--truth", action="store_true", help="join exact ccdh and alpha error")
    sp.add_argument("--monotone", action="store_true", help="emit the non-increasing envelope")
    sp.set_defaults(func=cmd_estimate)

    sp = sub.add_parser("baseline", help="run a baseline sampler")
    io_args(sp)
    sp.add_argument("--method", choices=["vs", "es", "rwj", "ows", "ff"], required=True)
    sp.add_argument("--budget", default="1%", help="distinct vertices (count, fraction or %%)")
    sp.add_argument("--degrees", default="auto")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--runs", type=int, default=1)
    sp.add_argument("--truth", action="store_true")
    sp.set_defaults(func=cmd_baseline)

    sp = sub.add_parser("convergence", help="alpha over runs at increasing budgets")
    io_args(sp)
    sampler_args(sp)
    sp.add_argument("--degrees", required=True)
    sp.add_argument("--budget", default="0.001,0.01,0.1", help="comma list of r+q fractions of n")
    sp.set_defaults(func=cmd_convergence)

    sp = sub.add_parser("generate", help="write a Chung-Lu power-law graph")
    io_args(sp, needs_input=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--gamma", type=float, required=True)
    sp.add_argument("--avg-degree", type=float, default=10.0)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    log.debug("kernel backend: %s", kernels.BACKEND)
    try:
        args.func(args)
    except (UsageError, InvalidParameterError) as exc:
        print(f"saddles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ParseError, InvalidInputError) as exc:
        print(f"saddles: error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())

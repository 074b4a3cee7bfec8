"""Command-line front end: ``riglab {gen,stats,verify,oracle,curve}``.

Exit codes: 0 success (or PASS), 1 runtime failure (or FAIL), 2 usage error.
Machine-readable output goes to stdout or ``--out``; human summaries go to
stderr. ``RIGLAB_SEED`` supplies the default seed, and ``--config FILE``
reads flat ``key=value`` defaults that explicit flags override.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Sequence

import numpy as np

from . import theory
from .algorithms import graph_stats
from .core import Graph, IntervalFamily, graph_from_intervals
from .generators import MODELS, RngSeed, generate
from .montecarlo import EXPERIMENTS, ExperimentConfig, TrialError, empirical_cdf, run_experiment
from .oracle import MAX_ENUM_N, double_factorial, exact_edge_count_distribution, exact_prob_universal

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_seed() -> int:
    env = os.environ.get("RIGLAB_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"RIGLAB_SEED must be an integer, got {env!r}") from None


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _fraction(q) -> dict[str, int]:
    return {"num": q.numerator, "den": q.denominator}


# -- subcommands -------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    params = {}
    if args.model == "gnp":
        params["p"] = args.p
    elif args.model == "prisner":
        params["m"] = args.m
    elif args.model == "dotprod":
        params["r"] = args.r
    try:
        obj = generate(args.model, args.n, RngSeed.from_master(seed), **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    graph = obj if isinstance(obj, Graph) else graph_from_intervals(obj)
    if args.format == "json":
        text = obj.to_json()
    else:
        lines = [f"# n {graph.n}"] + [f"{i} {j}" for i, j in graph.edges()]
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    summary = f"{args.model}: n={args.n} seed={seed} edges={graph.edge_count}"
    print(summary, file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def _load_input(path: str) -> IntervalFamily | Graph:
    with open(path) as fh:
        text = fh.read()
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RuntimeError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        if "intervals" in d:
            return IntervalFamily.from_dict(d)
        if "edges" in d:
            return Graph.from_dict(d)
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise RuntimeError(f"{path}: invalid document: {exc}") from None
    raise RuntimeError(f"{path}: expected an object with 'intervals' or 'edges'")


def cmd_stats(args: argparse.Namespace) -> int:
    obj = _load_input(args.input)
    _write(json.dumps(graph_stats(obj, with_diameter=args.diameter)), None)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    params = {k: getattr(args, k) for k in ("p", "m", "r", "eps") if getattr(args, k) is not None}
    options = {"workers": args.threads}
    if args.triples is not None:
        options["triples"] = args.triples
    if args.model is not None:
        options["model"] = args.model
    try:
        cfg = ExperimentConfig(args.experiment, args.n, args.trials, seed, args.tolerance, params, options)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        report = run_experiment(cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(report.to_json(), args.out)
    if args.samples:
        with open(args.samples, "w") as fh:
            fh.write(report.samples_csv())
    print(report.verdict(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oracle(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= MAX_ENUM_N:
        raise UsageError(f"--n must lie in 1..{MAX_ENUM_N}")
    dist = exact_edge_count_distribution(args.n)
    out = {
        "n": args.n,
        "matchings": double_factorial(2 * args.n - 1),
        "p_universal": _fraction(exact_prob_universal(args.n)),
        "edge_mean": _fraction(dist.mean),
        "edge_var": _fraction(dist.variance),
        "edge_distribution": {str(k): _fraction(p) for k, p in dist.outcomes.items()},
    }
    _write(json.dumps(out), None)
    return EXIT_OK


def _read_samples(path: str, column: str | None) -> np.ndarray:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise RuntimeError(f"{path}: empty sample file")
    header, body = rows[0], rows[1:]
    if column is None:
        cols = [c for c in header if c != "trial"]
        if not cols:
            raise RuntimeError(f"{path}: no statistic column")
        column = cols[0]
    if column not in header:
        raise RuntimeError(f"{path}: no column {column!r}")
    k = header.index(column)
    try:
        return np.array([float(r[k]) for r in body])
    except (ValueError, IndexError) as exc:
        raise RuntimeError(f"{path}: bad sample row: {exc}") from None


def cmd_curve(args: argparse.Namespace) -> int:
    curve = theory.tabulate(args.which, args.points)
    if args.empirical is None:
        text = curve.to_csv()
    else:
        ecdf = empirical_cdf(_read_samples(args.empirical, args.column))
        lines = ["x,F_theory,F_empirical"]
        lines += [f"{x:.17g},{f:.17g},{ecdf(x):.17g}" for x, f in curve.points]
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def _read_config(path: str) -> dict[str, str]:
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            k, v = line.split("=", 1)
            out[k.strip().replace("-", "_")] = v.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="riglab", description="Random interval graph laboratory.")
    parser.add_argument("--config", help="flat key=value file of default flag values")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random family or graph")
    g.add_argument("model", choices=MODELS)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=_seed)
    g.add_argument("--p", type=float, default=2.0 / 3.0, help="G(n,p) edge probability")
    g.add_argument("--m", type=float, default=2.0, help="Prisner window length")
    g.add_argument("--r", type=float, default=1.0, help="dot-product exponent")
    g.add_argument("--out")
    g.add_argument("--format", choices=("json", "edgelist"), default="json")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("stats", help="invariants of a saved family or graph")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--diameter", action="store_true", help="also compute the diameter (all-pairs BFS)")
    s.set_defaults(func=cmd_stats)

    v = sub.add_parser("verify", help="run a Monte Carlo experiment")
    v.add_argument("experiment", choices=list(EXPERIMENTS))
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--trials", type=int, required=True)
    v.add_argument("--seed", type=_seed)
    v.add_argument("--tolerance", type=float)
    v.add_argument("--out")
    v.add_argument("--samples", help="write per-trial statistics as CSV")
    v.add_argument("--p", type=float)
    v.add_argument("--m", type=float)
    v.add_argument("--r", type=float)
    v.add_argument("--eps", type=float)
    v.add_argument("--triples", type=int)
    v.add_argument("--model", choices=("scheinerman", "matching", "prisner"))
    v.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact enumeration over all matchings")
    o.add_argument("--n", type=int, required=True)
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("curve", help="tabulate a limit law as CSV")
    c.add_argument("--which", choices=list(theory.CURVES), required=True)
    c.add_argument("--points", type=int, default=101)
    c.add_argument("--out")
    c.add_argument("--empirical", help="per-trial CSV from 'verify --samples' to overlay")
    c.add_argument("--column", help="sample column to overlay (default: first statistic)")
    c.set_defaults(func=cmd_curve)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: Sequence[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    try:
        cfg = _read_config(known.config)
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    for action in parser._subparsers._group_actions:
        for subparser in action.choices.values():
            dests = {a.dest for a in subparser._actions}
            vals = {k: v for k, v in cfg.items() if k in dests}
            for a in subparser._actions:
                if a.dest in vals:
                    a.required = False
            subparser.set_defaults(**vals)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
        args = parser.parse_args(argv)
        if getattr(args, "points", 2) < 2:
            raise UsageError("--points must be >= 2")
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    except UsageError as exc:
        print(f"riglab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, RuntimeError, TrialError) as exc:
        print(f"riglab: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

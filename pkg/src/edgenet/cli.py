"""Command-line interface.

One subcommand per capability: generate, degrees, project, fit, loglik,
growth-experiment, degree-experiment. Data goes to files or stdout,
diagnostics to stderr. Exit codes: 0 success, 1 usage error, 2 data or
parse error, 3 numeric or convergence error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import (
    BracketingError,
    DivergentEstimateError,
    EdgenetError,
    ExponentOutOfRangeError,
    InsufficientDataError,
    InvalidInputError,
    MalformedGraphError,
    NumericError,
    ParseError,
    UnattainableTargetError,
)
from .estimation import fit_mle, fit_moment
from .generator import RNG_NAME, Params, generate
from .graph import Multigraph, parse_edge_list, write_edge_list
from .harness import ExperimentConfig, run_degree_experiment, run_growth_experiment
from .likelihood import log_prob_closed

__all__ = ["cli_dispatch", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3

_DATA_ERRORS = (ParseError, MalformedGraphError, InsufficientDataError, InvalidInputError, OSError)
_NUMERIC_ERRORS = (
    BracketingError,
    NumericError,
    UnattainableTargetError,
    DivergentEstimateError,
    ExponentOutOfRangeError,
)


def _read_graph(path: str, directed: bool) -> Multigraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_edge_list(text, directed=directed)


def _params(args: argparse.Namespace) -> Params:
    return Params(alpha=args.alpha, theta=args.theta)


def _cmd_generate(args: argparse.Namespace) -> int:
    g = generate(_params(args), args.edges, seed=args.seed, directed=args.directed)
    Path(args.out).write_text(write_edge_list(g), encoding="utf-8", newline="\n")
    print(
        f"generated {g.num_edges} edges, {g.num_vertices} vertices "
        f"(rng={RNG_NAME}, seed={args.seed}) -> {args.out}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_degrees(args: argparse.Namespace) -> int:
    g = _read_graph(args.infile, args.directed)
    hist = g.degree_histogram()
    print("degree,count")
    for k in sorted(hist.counts):
        print(f"{k},{hist.counts[k]}")
    return EXIT_OK


def _cmd_project(args: argparse.Namespace) -> int:
    g = _read_graph(args.infile, args.directed)
    projected = g.project_simple()
    Path(args.out).write_text(write_edge_list(projected), encoding="utf-8", newline="\n")
    print(
        f"projected {g.num_edges} -> {projected.num_edges} edges "
        f"({g.num_vertices} vertices)",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_fit(args: argparse.Namespace) -> int:
    g = _read_graph(args.infile, args.directed)
    if args.method == "moment":
        kmin = "auto" if args.kmin == "auto" else int(args.kmin)
        result = fit_moment(g, kmin=kmin, estimator=args.estimator)
    else:
        result = fit_mle(g, projected=args.projected)
    print(result.to_json())
    if not result.diagnostics.get("converged", True):
        print("warning: optimizer did not converge", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def _cmd_loglik(args: argparse.Namespace) -> int:
    params = _params(args)
    g = _read_graph(args.infile, args.directed)
    print(format(log_prob_closed(g, params), ".17g"))
    return EXIT_OK


def _cmd_growth(args: argparse.Namespace) -> int:
    cfg = ExperimentConfig(
        params=_params(args),
        n_edges=args.edges,
        replicates=args.replicates,
        base_seed=args.base_seed,
        directed=args.directed,
        output_path=args.out,
    )
    result = run_growth_experiment(cfg)
    print(
        f"mean N over {cfg.replicates} replicates: {result.mean_vertices:.2f}; "
        f"predicted {result.expected:.2f}; ratio {result.ratio:.4f} -> {args.out}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_degree_experiment(args: argparse.Namespace) -> int:
    cfg = ExperimentConfig(
        params=_params(args),
        n_edges=args.edges,
        replicates=1,
        base_seed=args.base_seed,
        directed=args.directed,
        output_path=args.out,
    )
    result = run_degree_experiment(cfg, kmin=args.kmin)
    if args.gnuplot:
        script_path = Path(args.out).with_name(Path(args.out).name + ".gnuplot")
        script_path.write_text(result.gnuplot_script(args.out), encoding="utf-8", newline="\n")
        print(f"wrote plot script {script_path}", file=sys.stderr)
    for name, table in (("multigraph", result.multigraph), ("projected", result.projected)):
        shown = "n/a" if table.gamma_hat is None else f"{table.gamma_hat:.4f}"
        print(f"{name}: {len(table.points)} ccdf points, gamma_hat={shown}", file=sys.stderr)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgenet",
        description="Edge-driven scale-free multigraph model: generation, likelihood, fitting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p: argparse.ArgumentParser) -> None:
        p.add_argument("--alpha", type=float, required=True, help="in (0, 1)")
        p.add_argument("--theta", type=float, required=True, help="> -alpha")

    p = sub.add_parser("generate", help="sample a graph and write its edge list")
    add_params(p)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("degrees", help="degree histogram of an edge list")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--directed", action="store_true")
    p.set_defaults(func=_cmd_degrees)

    p = sub.add_parser("project", help="collapse parallel edges to a simple graph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--directed", action="store_true")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("fit", help="estimate (alpha, theta) from an edge list")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--method", choices=("moment", "mle"), default="moment")
    p.add_argument("--kmin", default="auto", help="tail cutoff for the moment method")
    p.add_argument("--estimator", choices=("mle", "ccdf"), default="mle",
                   help="tail exponent estimator for the moment method")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--projected", action="store_true",
                   help="declare that the input had parallel edges collapsed")
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("loglik", help="closed-form log-probability of an edge list")
    p.add_argument("--in", dest="infile", required=True)
    add_params(p)
    p.add_argument("--directed", action="store_true")
    p.set_defaults(func=_cmd_loglik)

    p = sub.add_parser("growth-experiment", help="replicate vertex counts vs the growth law")
    add_params(p)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--replicates", type=int, default=1)
    p.add_argument("--base-seed", type=int, default=0)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("degree-experiment", help="CCDF tables for a graph and its projection")
    add_params(p)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--base-seed", type=int, default=0)
    p.add_argument("--kmin", type=int, default=5)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--gnuplot", action="store_true", help="also write a plot script")
    p.add_argument("--out", required=True, help="base path for the two CSV files")
    p.set_defaults(func=_cmd_degree_experiment)

    return parser


def cli_dispatch(argv: list[str]) -> int:
    """Route argv to a subcommand and map failures to exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except EdgenetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()

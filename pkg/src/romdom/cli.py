"""Command-line interface: verify, oracle, solve, baseline, bench."""

from __future__ import annotations

import argparse
import json
import sys

from . import baselines, bench, solvers, verify
from .game import (
    DEFAULT_LAMBDA1,
    DEFAULT_LAMBDA2,
    GameConfig,
    parse_profile,
    profile_text,
    random_profile,
)
from .graph import load_graph
from .rng import SplitMix64


def _add_lambda_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lambda1", type=int, default=DEFAULT_LAMBDA1)
    parser.add_argument("--lambda2", type=int, default=DEFAULT_LAMBDA2)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="romdom",
        description="Roman domination via a potential game: solvers, "
        "verifiers, oracles, and a benchmark harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="classify a profile on a graph")
    p_verify.add_argument("graph", help="path to a graph file")
    p_verify.add_argument("profile", help="profile string over {0,1,2}")
    _add_lambda_args(p_verify)

    p_oracle = sub.add_parser("oracle", help="exact optimum by branch and bound")
    p_oracle.add_argument("graph")
    p_oracle.add_argument("--cap", type=int, default=verify.ORACLE_CAP_DEFAULT)

    p_solve = sub.add_parser("solve", help="run a game dynamic")
    p_solve.add_argument("graph")
    p_solve.add_argument("--algo", choices=("gaa", "gsa", "egsa"), required=True)
    p_solve.add_argument(
        "--init",
        default="zeros",
        help='"zeros", "random", or a literal profile string',
    )
    p_solve.add_argument("--restarts", type=int, default=0)
    p_solve.add_argument("--seed", type=int, default=0)
    _add_lambda_args(p_solve)
    p_solve.add_argument("--trace", help="write the full run record as JSON")

    p_base = sub.add_parser("baseline", help="run a comparison algorithm")
    p_base.add_argument("graph")
    p_base.add_argument("--algo", choices=("greedy", "treedp"), required=True)

    p_bench = sub.add_parser("bench", help="run a seeded experiment sweep")
    p_bench.add_argument("--model", choices=bench.MODELS, required=True)
    p_bench.add_argument("--n", required=True, help="comma-separated sizes")
    p_bench.add_argument("--samples", type=int, default=100)
    p_bench.add_argument("--algos", required=True, help="comma-separated algorithms")
    p_bench.add_argument("--seed", type=int, default=42)
    p_bench.add_argument("--restarts", type=int, default=0)
    p_bench.add_argument("--ba-m", type=int, default=5)
    p_bench.add_argument("--er-p", type=float, default=0.2)
    _add_lambda_args(p_bench)
    p_bench.add_argument("--format", choices=("csv", "json"), default="csv")
    p_bench.add_argument(
        "--verify",
        action="store_true",
        help="run the verifier suite on every solver output",
    )
    p_bench.add_argument("--out", help="write output to a file instead of stdout")
    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    profile = parse_profile(args.profile)
    cfg = GameConfig.for_graph(g, args.lambda1, args.lambda2)
    label = verify.classify(g, profile, cfg)
    print(f"flags: {' '.join(label.flags) or '(none)'}")
    if label.g_rdf is None:
        print(f"note: G_RDF check skipped (n > {verify.ORACLE_CAP_DEFAULT})")
    if label.pareto is None:
        print(f"note: PARETO check skipped (n > {verify.PARETO_CAP_DEFAULT})")
    bad = verify.find_bad_substructures(g, profile)
    if bad:
        for pattern, center in bad:
            print(f"bad substructure {pattern} at vertex {center}")
    else:
        print("bad substructures: none")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    result = verify.brute_force_optimum(g, cap=args.cap)
    print(f"optimum {result.optimum_weight}")
    print(f"witness {profile_text(result.witness)}")
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    cfg = GameConfig.for_graph(g, args.lambda1, args.lambda2)
    if args.init == "zeros":
        start = (0,) * g.n
    elif args.init == "random":
        start = random_profile(g.n, SplitMix64(args.seed))
    else:
        start = parse_profile(args.init)
    if args.restarts:
        if args.algo != "gsa":
            print("error: --restarts requires --algo gsa", file=sys.stderr)
            return 2
        report = solvers.run_gsa_restarts(g, args.restarts, args.seed, cfg)
    elif args.algo == "gaa":
        report = solvers.run_gaa(g, start, cfg)
    elif args.algo == "gsa":
        report = solvers.run_gsa(g, start, cfg)
    else:
        report = solvers.run_egsa(g, start, cfg)
    record = report.to_record()
    for key in ("algo", "final", "weight", "rounds_total", "rounds_effective"):
        print(f"{key}: {record[key]}")
    print(
        "x_counts: "
        + " ".join(f"{k}={record[k]}" for k in ("x01", "x02", "x10", "x12", "x20", "x21"))
    )
    print(f"contracts: {len(record['contracts'])}")
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump(record, fh, indent=2)
            fh.write("\n")
    return 0


def _cmd_baseline(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    if args.algo == "greedy":
        profile = baselines.greedy_rdf(g)
        print(f"weight {verify.weight(profile)}")
        print(f"profile {profile_text(profile)}")
    else:
        result = baselines.tree_dp_optimum(g)
        print(f"weight {result.optimum_weight}")
        print(f"profile {profile_text(result.witness)}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    spec = bench.ExperimentSpec(
        model=args.model,
        n_values=tuple(int(part) for part in args.n.split(",") if part),
        samples=args.samples,
        algos=tuple(part for part in args.algos.split(",") if part),
        seed=args.seed,
        lambda1=args.lambda1,
        lambda2=args.lambda2,
        ba_m=args.ba_m,
        er_p=args.er_p,
        restarts=args.restarts,
        verify=args.verify,
    )
    text = bench.emit(bench.run_experiment(spec), args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "solve": _cmd_solve,
    "baseline": _cmd_baseline,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

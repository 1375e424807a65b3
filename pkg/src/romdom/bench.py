"""Experiment harness: seeded sweeps, eta/omega metrics, CSV/JSON output.

Child seeds derive from (base seed, n, sample index, role), so the
sampled graphs never change when algorithms are added to a sweep, and
paired comparisons across algorithms always see identical graphs.
Aggregation is exact rational arithmetic; decimals appear only at
emission (6 places, round-half-even), which makes repeated runs
byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import baselines, solvers, verify
from .errors import MetricError, ParameterError
from .game import DEFAULT_LAMBDA1, DEFAULT_LAMBDA2, GameConfig
from .graph import Graph, gen_ba, gen_ba_tree, gen_er, gen_random_tree
from .rng import derive_seed

MODELS = ("ba", "er", "rt", "bat")
TREE_MODELS = ("rt", "bat")
GAME_ALGOS = ("gaa", "gsa", "egsa", "gsa_restarts")
ALL_ALGOS = GAME_ALGOS + ("greedy", "treedp")

CSV_HEADER = (
    "model,n,algorithm,samples,mean_weight,mean_rounds_total,"
    "mean_rounds_effective,eta,omega,seed"
)

_ETA_NOTE = (
    "eta = mean gsa rounds_total / (mean gaa rounds_total * n); "
    "rounds_total counts every outer iteration including the terminal "
    "no-change round (rounds_effective is also reported)"
)

# Roles for child-seed derivation.
_ROLE_GRAPH = 0
_ROLE_RESTART = 1


@dataclass(frozen=True)
class ExperimentSpec:
    model: str
    n_values: tuple[int, ...]
    samples: int
    algos: tuple[str, ...]
    seed: int
    lambda1: int = DEFAULT_LAMBDA1
    lambda2: int = DEFAULT_LAMBDA2
    ba_m: int = 5
    er_p: float = 0.2
    restarts: int = 0
    verify: bool = False

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ParameterError(f"unknown model {self.model!r}")
        if self.samples < 1:
            raise ParameterError("samples must be >= 1")
        if not self.n_values:
            raise ParameterError("need at least one n value")
        if not self.algos:
            raise ParameterError("need at least one algorithm")
        for algo in self.algos:
            if algo not in ALL_ALGOS:
                raise ParameterError(f"unknown algorithm {algo!r}")
        if "treedp" in self.algos and self.model not in TREE_MODELS:
            raise ParameterError("treedp only applies to tree models (rt, bat)")
        if self.restarts < 0:
            raise ParameterError("restarts must be >= 0")


@dataclass(frozen=True)
class BenchRow:
    model: str
    n: int
    algorithm: str
    samples: int
    mean_weight: Fraction
    mean_rounds_total: Fraction | None
    mean_rounds_effective: Fraction | None
    eta: Fraction | None
    omega: Fraction | None
    seed: int


@dataclass(frozen=True)
class ExperimentResult:
    spec: ExperimentSpec
    rows: tuple[BenchRow, ...]


def metric_eta(gsa_rounds, gaa_rounds, n: int) -> Fraction:
    """Real-time speedup proxy: synchronous rounds per (sweep * player)."""
    gaa = Fraction(gaa_rounds)
    if gaa <= 0:
        raise MetricError("gaa round count must be positive")
    if n <= 0:
        raise MetricError("vertex count must be positive")
    return Fraction(gsa_rounds) / (gaa * n)


def metric_omega(weight, optimum) -> Fraction:
    """Relative error of a solution weight against the exact optimum."""
    if optimum <= 0:
        raise MetricError("optimum must be positive")
    if weight < optimum:
        raise MetricError(
            f"negative gap: weight {weight} below optimum {optimum} "
            "signals a broken solver or oracle"
        )
    return Fraction(weight - optimum, optimum)


_tree_dp_validated = False


def _ensure_tree_dp_validated() -> None:
    """Cross-check the tree DP against the brute-force oracle once.

    Runs before any benchmark that relies on the DP as its optimum.
    """
    global _tree_dp_validated
    if _tree_dp_validated:
        return
    for n in range(2, 13):
        for rep in range(2):
            tree = gen_random_tree(n, derive_seed(0xD9, n, rep))
            dp = baselines.tree_dp_optimum(tree)
            oracle = verify.brute_force_optimum(tree)
            if dp.optimum_weight != oracle.optimum_weight:
                raise RuntimeError(
                    f"tree DP disagrees with brute force on n={n}, rep={rep}: "
                    f"{dp.optimum_weight} != {oracle.optimum_weight}"
                )
    _tree_dp_validated = True


def _make_graph(spec: ExperimentSpec, n: int, sample: int) -> Graph:
    gseed = derive_seed(spec.seed, n, sample, _ROLE_GRAPH)
    if spec.model == "ba":
        return gen_ba(n, spec.ba_m, gseed)
    if spec.model == "er":
        return gen_er(n, spec.er_p, gseed)
    if spec.model == "rt":
        return gen_random_tree(n, gseed)
    return gen_ba_tree(n, gseed)


def _verify_output(g: Graph, profile, cfg: GameConfig, context: str) -> None:
    checks = (
        ("rdf", verify.is_rdf(g, profile)),
        ("minimal", verify.is_minimal_rdf(g, profile)),
        ("strong-minimal", verify.is_strong_minimal_rdf(g, profile)),
        ("nash", verify.is_nash(g, profile, cfg)),
    )
    failed = [name for name, ok in checks if not ok]
    if failed:
        raise RuntimeError(f"{context}: output failed {', '.join(failed)}")


def run_experiment(spec: ExperimentSpec) -> ExperimentResult:
    if "treedp" in spec.algos:
        _ensure_tree_dp_validated()
    rows: list[BenchRow] = []
    for n in spec.n_values:
        weights: dict[str, list[int]] = {a: [] for a in spec.algos}
        totals: dict[str, list[int]] = {a: [] for a in spec.algos}
        effectives: dict[str, list[int]] = {a: [] for a in spec.algos}
        optima: list[int] = []
        cfg = GameConfig.for_size(n, spec.lambda1, spec.lambda2)
        for sample in range(spec.samples):
            context = f"model={spec.model} n={n} sample={sample}"
            try:
                g = _make_graph(spec, n, sample)
                zeros = (0,) * n
                for algo in spec.algos:
                    if algo == "gaa":
                        report = solvers.run_gaa(g, zeros, cfg)
                    elif algo == "gsa":
                        report = solvers.run_gsa(g, zeros, cfg)
                    elif algo == "egsa":
                        report = solvers.run_egsa(g, zeros, cfg)
                    elif algo == "gsa_restarts":
                        rseed = derive_seed(spec.seed, n, sample, _ROLE_RESTART)
                        report = solvers.run_gsa_restarts(g, spec.restarts, rseed, cfg)
                    elif algo == "greedy":
                        profile = baselines.greedy_rdf(g)
                        weights[algo].append(verify.weight(profile))
                        continue
                    else:  # treedp
                        result = baselines.tree_dp_optimum(g)
                        weights[algo].append(result.optimum_weight)
                        optima.append(result.optimum_weight)
                        continue
                    if spec.verify:
                        _verify_output(g, report.final, cfg, f"{context} algo={algo}")
                    weights[algo].append(report.weight)
                    totals[algo].append(report.rounds_total)
                    effectives[algo].append(report.rounds_effective)
            except Exception as exc:
                msg = f"{context} (seed={spec.seed}): {exc}"
                try:
                    wrapped = type(exc)(msg)
                except Exception:
                    raise
                raise wrapped from exc
        mean_total = {
            a: Fraction(sum(v), spec.samples) for a, v in totals.items() if v
        }
        eta = None
        if "gaa" in mean_total and "gsa" in mean_total:
            eta = metric_eta(mean_total["gsa"], mean_total["gaa"], n)
        for algo in spec.algos:
            omega = None
            if optima and algo != "treedp":
                omega = Fraction(
                    sum(metric_omega(w, o) for w, o in zip(weights[algo], optima)),
                    spec.samples,
                )
            rows.append(
                BenchRow(
                    model=spec.model,
                    n=n,
                    algorithm=algo,
                    samples=spec.samples,
                    mean_weight=Fraction(sum(weights[algo]), spec.samples),
                    mean_rounds_total=mean_total.get(algo),
                    mean_rounds_effective=(
                        Fraction(sum(effectives[algo]), spec.samples)
                        if effectives[algo]
                        else None
                    ),
                    eta=eta if algo == "gsa" else None,
                    omega=omega,
                    seed=spec.seed,
                )
            )
    return ExperimentResult(spec=spec, rows=tuple(rows))


def format_fixed(value: Fraction, places: int = 6) -> str:
    """Fixed-point decimal rendering with round-half-even."""
    sign = "-" if value < 0 else ""
    v = -value if value < 0 else value
    scale = 10**places
    q, r = divmod(v.numerator * scale, v.denominator)
    double = 2 * r
    if double > v.denominator or (double == v.denominator and q % 2 == 1):
        q += 1
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{places}d}"


def _cell(value: Fraction | None) -> str:
    return "" if value is None else format_fixed(value)


def emit(result: ExperimentResult, fmt: str = "csv") -> str:
    """Render an experiment result; identical inputs give identical bytes."""
    if fmt == "csv":
        lines = [CSV_HEADER]
        for row in result.rows:
            lines.append(
                ",".join(
                    (
                        row.model,
                        str(row.n),
                        row.algorithm,
                        str(row.samples),
                        format_fixed(row.mean_weight),
                        _cell(row.mean_rounds_total),
                        _cell(row.mean_rounds_effective),
                        _cell(row.eta),
                        _cell(row.omega),
                        str(row.seed),
                    )
                )
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        spec = result.spec
        payload = {
            "meta": {
                "model": spec.model,
                "n_values": list(spec.n_values),
                "samples": spec.samples,
                "algos": list(spec.algos),
                "seed": spec.seed,
                "lambda1": spec.lambda1,
                "lambda2": spec.lambda2,
                "restarts": spec.restarts,
                "eta_definition": _ETA_NOTE,
            },
            "rows": [
                {
                    "model": row.model,
                    "n": row.n,
                    "algorithm": row.algorithm,
                    "samples": row.samples,
                    "mean_weight": format_fixed(row.mean_weight),
                    "mean_rounds_total": _cell(row.mean_rounds_total) or None,
                    "mean_rounds_effective": _cell(row.mean_rounds_effective) or None,
                    "eta": _cell(row.eta) or None,
                    "omega": _cell(row.omega) or None,
                    "seed": row.seed,
                }
                for row in result.rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    raise ParameterError(f"unknown output format {fmt!r}")

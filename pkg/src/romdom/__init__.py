"""Roman domination via a potential game.

Core pieces: immutable graphs and seeded generators (:mod:`.graph`),
exact-integer utilities and the potential (:mod:`.game`), classifiers
and brute-force oracles (:mod:`.verify`), the three convergent dynamics
(:mod:`.solvers`), comparison baselines (:mod:`.baselines`), and the
experiment harness (:mod:`.bench`).
"""

from .baselines import DpStates, greedy_rdf, tree_dp_optimum, tree_dp_table
from .bench import (
    BenchRow,
    ExperimentResult,
    ExperimentSpec,
    emit,
    metric_eta,
    metric_omega,
    run_experiment,
)
from .game import (
    DEFAULT_LAMBDA1,
    DEFAULT_LAMBDA2,
    GameConfig,
    PlayerSnapshot,
    Profile,
    best_response,
    m_value,
    marginal_utility,
    parse_profile,
    potential,
    profile_text,
    random_profile,
    utility,
)
from .graph import (
    Graph,
    from_edge_list,
    gen_ba,
    gen_ba_tree,
    gen_er,
    gen_er_counted,
    gen_random_tree,
    load_graph,
)
from .rng import SplitMix64, derive_seed
from .solvers import (
    Contract,
    RunReport,
    audit_report_segments,
    audit_transitions,
    m_ij,
    propose_contract,
    rdf_to_ne_segments,
    run_egsa,
    run_gaa,
    run_gsa,
    run_gsa_restarts,
    select_movers,
    transition_counts,
    w_value,
)
from .verify import (
    ClassLabel,
    OracleResult,
    all_nash_profiles,
    brute_force_optimum,
    classify,
    enumerate_labels,
    enumerate_optimum,
    find_bad_substructures,
    is_minimal_rdf,
    is_nash,
    is_pareto_optimal_bruteforce,
    is_rdf,
    is_strong_minimal_rdf,
    srdf_gap_ratio,
    weight,
)

__version__ = "0.1.0"

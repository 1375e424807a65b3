"""Convergent dynamics for the Roman domination game.

Three drivers share one round structure:

* ``run_gaa``: asynchronous sweeps. Players take turns in ascending ID
  within a round and adopt their best response immediately when it is a
  strict improvement, so later players see earlier moves.
* ``run_gsa``: synchronous rounds. Every player evaluates its best
  response and marginal utility against the frozen previous profile;
  only the 2-hop priority winners (see :func:`select_movers`) move, all
  at once. The mover set is 2-hop independent, which keeps the round's
  potential gain equal to the sum of the movers' marginal gains and
  rules out the oscillation that unrestricted simultaneous play causes.
* ``run_egsa``: synchronous rounds plus private contracts. Whenever a
  round changes nothing (an equilibrium), white vertices are scanned in
  ascending ID for an eligible coalition deal: the proposer turns
  black, its coalition partners turn white, and the aggregate utility
  gain is provably positive. The run ends at an equilibrium admitting
  no contract.

Every run is deterministic and returns a :class:`RunReport` with full
round-by-round traces for auditing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    CapExceededError,
    ContractInvariantError,
    IsolatedVertexError,
    SegmentBoundaryError,
)
from .game import (
    GameConfig,
    Profile,
    check_profile,
    random_profile,
    utility,
)
from .graph import Graph
from .rng import SplitMix64
from .verify import is_rdf, weight

_TRANSITIONS = ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))


@dataclass(frozen=True)
class Contract:
    """A coalition move proposed by a white vertex.

    ``new_values`` maps the proposer to 2 and every other coalition
    member to 0; ``gain`` is the exact aggregate utility change of the
    coalition, which is positive for every applied contract.
    """

    proposer: int
    coalition: tuple[int, ...]
    new_values: dict[int, int]
    gain: int


@dataclass(frozen=True)
class RunReport:
    """Outcome and full trace of one solver run."""

    graph: Graph
    config: GameConfig
    algo: str
    final: Profile
    weight: int
    rounds_total: int
    rounds_effective: int
    potential_trace: tuple[int, ...]
    x_counts: dict[tuple[int, int], int]
    contracts: tuple[Contract, ...] = ()
    contract_rounds: tuple[int, ...] = ()
    profile_trace: tuple[Profile, ...] = field(default=(), repr=False)

    @property
    def initial(self) -> Profile:
        return self.profile_trace[0]

    def to_record(self) -> dict:
        """Flat serializable record of the run."""
        record = {
            "algo": self.algo,
            "final": "".join(str(c) for c in self.final),
            "weight": self.weight,
            "rounds_total": self.rounds_total,
            "rounds_effective": self.rounds_effective,
        }
        for a, b in _TRANSITIONS:
            record[f"x{a}{b}"] = self.x_counts[(a, b)]
        record["contracts"] = [
            {
                "round": rnd,
                "proposer": ct.proposer,
                "coalition": list(ct.coalition),
                "gain": ct.gain,
            }
            for rnd, ct in zip(self.contract_rounds, self.contracts)
        ]
        record["potential_trace"] = list(self.potential_trace)
        return record


class _Engine:
    """Mutable run state with O(deg) utility evaluation.

    ``cnt2[j]`` caches how many vertices of the closed neighborhood of
    ``j`` currently hold value 2, which makes hypothetical utilities a
    single pass over the closed neighborhood.
    """

    def __init__(self, g: Graph, cfg: GameConfig, start: Profile):
        self.g = g
        self.l1 = cfg.lambda1
        self.l2 = cfg.lambda2
        self.nbar = [g.closed_neighbors(i) for i in range(g.n)]
        self.c = list(start)
        self.cnt2 = [0] * g.n
        for i, ci in enumerate(self.c):
            if ci == 2:
                for j in self.nbar[i]:
                    self.cnt2[j] += 1

    def utility_if(self, i: int, x: int) -> int:
        """Utility of ``i`` if it held ``x``, everyone else unchanged."""
        c = self.c
        cnt2 = self.cnt2
        delta = (1 if x == 2 else 0) - (1 if c[i] == 2 else 0)
        penalty = 0
        for j in self.nbar[i]:
            if cnt2[j] + delta == 0:
                penalty += 2 - (x if j == i else c[j])
        return -self.l1 * x * x - self.l2 * penalty

    def best_response(self, i: int) -> tuple[int, int, int]:
        """(best value, best utility, current utility); stays on ties."""
        current = self.c[i]
        u_current = self.utility_if(i, current)
        best_val, best_u = current, u_current
        for x in (0, 1, 2):
            if x != current:
                u = self.utility_if(i, x)
                if u > best_u:
                    best_val, best_u = x, u
        return best_val, best_u, u_current

    def apply(self, i: int, x: int) -> None:
        old = self.c[i]
        if old == x:
            return
        delta = (1 if x == 2 else 0) - (1 if old == 2 else 0)
        if delta:
            for j in self.nbar[i]:
                self.cnt2[j] += delta
        self.c[i] = x

    def potential(self) -> int:
        sq = 0
        penalty = 0
        for j, cj in enumerate(self.c):
            sq += cj * cj
            if self.cnt2[j] == 0:
                penalty += 2 - cj
        return -self.l1 * sq - self.l2 * penalty

    def profile(self) -> Profile:
        return tuple(self.c)


def _check_inputs(g: Graph, start: Profile) -> None:
    if g.has_isolated_vertex():
        raise IsolatedVertexError("the game requires minimum degree >= 1")
    check_profile(g, start)


def _build_report(
    algo: str,
    g: Graph,
    cfg: GameConfig,
    trace: list[Profile],
    potentials: list[int],
    contracts: list[Contract],
    contract_rounds: list[int],
) -> RunReport:
    x_counts = {pair: 0 for pair in _TRANSITIONS}
    effective = 0
    for t in range(1, len(trace)):
        if trace[t] != trace[t - 1]:
            effective += 1
            for a, b in zip(trace[t - 1], trace[t]):
                if a != b:
                    x_counts[(a, b)] += 1
    final = trace[-1]
    return RunReport(
        graph=g,
        config=cfg,
        algo=algo,
        final=final,
        weight=weight(final),
        rounds_total=len(trace) - 1,
        rounds_effective=effective,
        potential_trace=tuple(potentials),
        x_counts=x_counts,
        contracts=tuple(contracts),
        contract_rounds=tuple(contract_rounds),
        profile_trace=tuple(trace),
    )


def run_gaa(g: Graph, start: Profile, cfg: GameConfig) -> RunReport:
    """Asynchronous best-response sweeps until a sweep changes nothing."""
    _check_inputs(g, start)
    eng = _Engine(g, cfg, start)
    trace = [eng.profile()]
    potentials = [eng.potential()]
    for _ in range(cfg.round_cap):
        for i in range(g.n):
            best_val, best_u, u_cur = eng.best_response(i)
            if best_u > u_cur:
                eng.apply(i, best_val)
        after = eng.profile()
        trace.append(after)
        potentials.append(eng.potential())
        if after == trace[-2]:
            return _build_report("gaa", g, cfg, trace, potentials, [], [])
    raise CapExceededError(
        f"asynchronous sweep did not converge in {cfg.round_cap} rounds"
    )


def select_movers(g: Graph, mu: list[int]) -> set[int]:
    """Players allowed to move this round under the 2-hop priority rule.

    Player ``i`` moves iff it has positive marginal utility and the
    smallest ID among positive-marginal-utility players within its
    closed 2-hop neighborhood. The result is always 2-hop independent.
    """
    if len(mu) != g.n:
        raise ValueError(f"need {g.n} marginal utilities, got {len(mu)}")
    if any(v < 0 for v in mu):
        raise ValueError("marginal utilities must be nonnegative")
    positive = [v > 0 for v in mu]
    movers: set[int] = set()
    for i in range(g.n):
        if not positive[i]:
            continue
        if all(not positive[j] for j in g.two_hop_closed(i) if j < i):
            movers.add(i)
    return movers


def _gsa_round(eng: _Engine, two_hop: list[list[int]]) -> list[tuple[int, int]]:
    """One synchronous round; returns the applied (player, value) moves."""
    n = eng.g.n
    proposals: list[int] = [0] * n
    positive = [False] * n
    for i in range(n):
        best_val, best_u, u_cur = eng.best_response(i)
        proposals[i] = best_val
        positive[i] = best_u > u_cur
    moves: list[tuple[int, int]] = []
    for i in range(n):
        if not positive[i]:
            continue
        qualified = True
        for j in two_hop[i]:
            if j >= i:
                break
            if positive[j]:
                qualified = False
                break
        if qualified:
            moves.append((i, proposals[i]))
    for i, val in moves:
        eng.apply(i, val)
    return moves


def _two_hop_lists(g: Graph) -> list[list[int]]:
    return [sorted(g.two_hop_closed(i)) for i in range(g.n)]


def run_gsa(g: Graph, start: Profile, cfg: GameConfig) -> RunReport:
    """Synchronous rounds with the 2-hop priority rule, until no one moves."""
    _check_inputs(g, start)
    eng = _Engine(g, cfg, start)
    two_hop = _two_hop_lists(g)
    trace = [eng.profile()]
    potentials = [eng.potential()]
    for _ in range(cfg.round_cap):
        moves = _gsa_round(eng, two_hop)
        trace.append(eng.profile())
        potentials.append(eng.potential())
        if not moves:
            return _build_report("gsa", g, cfg, trace, potentials, [], [])
    raise CapExceededError(
        f"synchronous rounds did not converge in {cfg.round_cap} rounds"
    )


def m_ij(g: Graph, profile: Profile, i: int, j: int) -> int:
    """1 when every white vertex depending solely on black ``j`` adjoins ``i``.

    Requires ``j`` to be a black neighbor of ``i``. The dependents of
    ``j`` are its white neighbors whose only black closed-neighbor is
    ``j`` itself; if they are all neighbors of ``i``, then ``i`` turning
    black fully compensates for ``j`` turning white.
    """
    check_profile(g, profile)
    if j not in g.neighbors(i):
        raise ValueError(f"vertex {j} is not a neighbor of {i}")
    if profile[j] != 2:
        raise ValueError(f"vertex {j} must hold value 2")
    adjacency = g.adjacency
    n_i = set(adjacency[i])
    for k in adjacency[j]:
        if profile[k] != 0:
            continue
        blacks = [b for b in g.closed_neighbors(k) if profile[b] == 2]
        if blacks == [j] and k not in n_i:
            return 0
    return 1


def w_value(g: Graph, profile: Profile, i: int) -> int:
    """Contract-eligibility score of ``i``: free gray neighbors count 1,
    replaceable black neighbors count 2."""
    check_profile(g, profile)
    g._check_vertex(i)
    total = 0
    for j in g.adjacency[i]:
        if profile[j] == 1:
            if all(profile[k] != 2 for k in g.closed_neighbors(j)):
                total += 1
        elif profile[j] == 2:
            total += 2 * m_ij(g, profile, i, j)
    return total


def replaceable_blacks(g: Graph, profile: Profile, i: int) -> list[int]:
    """Black neighbors of ``i`` that can jointly turn white once ``i``
    turns black, without stranding any white vertex.

    Candidates are scanned in ascending ID and accepted when every
    white vertex whose entire black support would then be removed lies
    in the closed neighborhood of ``i`` (so the new black compensates
    it; the proposer itself is always compensated since it turns
    black). Checking each candidate against the removals already
    accepted is what makes the *joint* replacement safe: a white vertex
    supported by two replaced blacks is caught when the second one is
    considered, even though neither replacement alone strands it.
    """
    check_profile(g, profile)
    compensated = set(g.closed_neighbors(i))
    removed: set[int] = set()
    accepted: list[int] = []
    for j in g.adjacency[i]:
        if profile[j] != 2:
            continue
        safe = True
        for k in g.adjacency[j]:
            if profile[k] != 0 or k in compensated:
                continue
            support = [b for b in g.closed_neighbors(k) if profile[b] == 2]
            if all(b == j or b in removed for b in support):
                safe = False
                break
        if safe:
            accepted.append(j)
            removed.add(j)
    return accepted


def propose_contract(
    g: Graph, profile: Profile, i: int, cfg: GameConfig | None = None
) -> Contract | None:
    """Build the coalition deal proposed by white vertex ``i``, or ``None``.

    Eligibility: ``i`` is white and its score reaches 3, counting each
    free gray neighbor once and each jointly replaceable black neighbor
    twice (see :func:`replaceable_blacks`; this is the closed-
    neighborhood variant of the :func:`w_value` score, which is what
    lets a proposer absorb a black it alone depends on). The coalition
    is ``i`` plus those neighbors; ``i`` turns black and the rest turn
    white. The gain is the coalition's aggregate utility change, and it
    is provably positive whenever the ambient profile is an
    equilibrium.
    """
    check_profile(g, profile)
    if cfg is None:
        cfg = GameConfig.for_graph(g)
    if profile[i] != 0:
        return None
    blacks = replaceable_blacks(g, profile, i)
    free_grays = sum(
        1
        for j in g.adjacency[i]
        if profile[j] == 1
        and all(profile[k] != 2 for k in g.closed_neighbors(j))
    )
    if free_grays + 2 * len(blacks) < 3:
        return None
    members = [i]
    new_values = {i: 2}
    for j in g.adjacency[i]:
        if profile[j] == 1:
            members.append(j)
            new_values[j] = 0
    for j in blacks:
        members.append(j)
        new_values[j] = 0
    after = list(profile)
    for j, val in new_values.items():
        after[j] = val
    after_profile = tuple(after)
    gain = sum(
        utility(g, after_profile, j, cfg) - utility(g, profile, j, cfg)
        for j in members
    )
    return Contract(
        proposer=i,
        coalition=tuple(sorted(members)),
        new_values=new_values,
        gain=gain,
    )


def run_egsa(g: Graph, start: Profile, cfg: GameConfig) -> RunReport:
    """Synchronous rounds with contract escapes at every equilibrium.

    A no-move round proves the profile is an equilibrium; the first
    eligible contract (ascending proposer ID) is then applied as that
    round's update and the synchronous rounds resume against the
    post-contract profile. Terminates at an equilibrium with no
    eligible contract. Each contract strictly decreases the weight, so
    at most 2n contracts occur and the round cap scales accordingly.
    """
    _check_inputs(g, start)
    eng = _Engine(g, cfg, start)
    two_hop = _two_hop_lists(g)
    trace = [eng.profile()]
    potentials = [eng.potential()]
    contracts: list[Contract] = []
    contract_rounds: list[int] = []
    cap = cfg.round_cap * (2 * g.n + 1)
    for t in range(1, cap + 1):
        moves = _gsa_round(eng, two_hop)
        if moves:
            trace.append(eng.profile())
            potentials.append(eng.potential())
            continue
        current = trace[-1]
        contract = None
        for i in range(g.n):
            if current[i] == 0:
                contract = propose_contract(g, current, i, cfg)
                if contract is not None:
                    break
        if contract is None:
            trace.append(current)
            potentials.append(potentials[-1])
            return _build_report(
                "egsa", g, cfg, trace, potentials, contracts, contract_rounds
            )
        if contract.gain <= 0:
            raise ContractInvariantError(
                f"contract at vertex {contract.proposer} has gain "
                f"{contract.gain}; positive gain is guaranteed at an "
                "equilibrium, so this indicates a bug"
            )
        for j, val in contract.new_values.items():
            eng.apply(j, val)
        contracts.append(contract)
        contract_rounds.append(t)
        trace.append(eng.profile())
        potentials.append(eng.potential())
    raise CapExceededError(f"contract dynamic did not converge in {cap} rounds")


def run_gsa_restarts(
    g: Graph, k: int, seed: int, cfg: GameConfig
) -> RunReport:
    """Best of one all-zeros run plus ``k`` random restarts.

    Restart profiles are uniform i.i.d. over {0,1,2} from the seeded
    stream. Ties on final weight go to the earliest run.
    """
    if k < 0:
        raise ValueError("restart count must be nonnegative")
    rng = SplitMix64(seed)
    best = run_gsa(g, (0,) * g.n, cfg)
    for _ in range(k):
        start = random_profile(g.n, rng)
        report = run_gsa(g, start, cfg)
        if report.weight < best.weight:
            best = report
    return best


def transition_counts(
    report: RunReport, start_round: int, end_round: int
) -> dict[tuple[int, int], int]:
    """Per-pair strategy-change counts over rounds (start, end]."""
    counts = {pair: 0 for pair in _TRANSITIONS}
    trace = report.profile_trace
    for t in range(start_round + 1, end_round + 1):
        for a, b in zip(trace[t - 1], trace[t]):
            if a != b:
                counts[(a, b)] += 1
    return counts


def _weight_drift(counts: dict[tuple[int, int], int]) -> int:
    """Weight change implied by transition counts; audits demand <= 0."""
    return (
        counts[(0, 1)]
        + counts[(1, 2)]
        + 2 * counts[(0, 2)]
        - counts[(1, 0)]
        - counts[(2, 1)]
        - 2 * counts[(2, 0)]
    )


def audit_transitions(report: RunReport) -> bool:
    """Audit a whole run as one RDF-to-equilibrium segment.

    The run must start from an RDF and contain no contract application;
    returns whether the transition counts keep the weight from rising.
    """
    if not report.profile_trace:
        raise SegmentBoundaryError("report carries no profile trace")
    if not is_rdf(report.graph, report.profile_trace[0]):
        raise SegmentBoundaryError("audited segment must start at an RDF")
    if report.contract_rounds:
        raise SegmentBoundaryError(
            "audited segment must not contain contract applications"
        )
    return _weight_drift(report.x_counts) <= 0


def rdf_to_ne_segments(report: RunReport) -> list[tuple[int, int]]:
    """All (start, end) round pairs from an RDF profile to its next
    equilibrium with no contract in between.

    Equilibria sit immediately before each contract round and at the
    final round; every RDF round index inside a contract-free stretch
    opens a segment.
    """
    g = report.graph
    trace = report.profile_trace
    boundaries = list(report.contract_rounds)
    ne_rounds = [t - 1 for t in boundaries] + [report.rounds_total]
    segments: list[tuple[int, int]] = []
    stretch_start = 0
    for ne in ne_rounds:
        for r in range(stretch_start, ne):
            if is_rdf(g, trace[r]):
                segments.append((r, ne))
        stretch_start = ne + 1  # skip over the contract round
    return segments


def audit_report_segments(report: RunReport) -> bool:
    """Check the weight-drift inequality on every RDF-to-equilibrium segment."""
    for start, end in rdf_to_ne_segments(report):
        if _weight_drift(transition_counts(report, start, end)) > 0:
            return False
    return True

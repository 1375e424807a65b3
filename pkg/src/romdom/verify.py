"""Classifiers and oracles for Roman dominating functions.

The vocabulary: a profile is an RDF when every white (value-0) vertex
has a black (value-2) neighbor. It is *minimal* (M-RDF) when no single
decrement keeps it an RDF, and *strong minimal* (S-RDF) when
additionally no "promote one vertex to 2 and zero its gray neighbors"
transform produces a strictly lighter RDF. A *global* optimum (G-RDF)
attains the minimum weight outright.

Everything here is exact and exhaustive where it claims to be: the
oracles enumerate or run a pruned search over the full profile space,
so they are only usable on small graphs (guarded by vertex caps).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .errors import SizeCapError
from .game import (
    GameConfig,
    Profile,
    _best_response_unchecked,
    check_profile,
)
from .graph import Graph

ORACLE_CAP_DEFAULT = 14
ENUM_CAP_DEFAULT = 10
PARETO_CAP_DEFAULT = 10


@dataclass(frozen=True)
class OracleResult:
    """Exact optimum weight together with a witness attaining it."""

    optimum_weight: int
    witness: Profile


@dataclass(frozen=True)
class ClassLabel:
    """Classification flags for one profile.

    ``g_rdf`` and ``pareto`` are ``None`` when the graph exceeds the
    corresponding exhaustive-check cap.
    """

    rdf: bool
    m_rdf: bool
    s_rdf: bool
    ne: bool
    g_rdf: bool | None = None
    pareto: bool | None = None

    @property
    def flags(self) -> tuple[str, ...]:
        names = []
        for name, value in (
            ("RDF", self.rdf),
            ("M_RDF", self.m_rdf),
            ("S_RDF", self.s_rdf),
            ("NE", self.ne),
            ("G_RDF", self.g_rdf),
            ("PARETO", self.pareto),
        ):
            if value:
                names.append(name)
        return tuple(names)


def weight(profile: Profile) -> int:
    """Total weight of a profile (sum of all values)."""
    return sum(profile)


def is_rdf(g: Graph, profile: Profile) -> bool:
    check_profile(g, profile)
    return _is_rdf_unchecked(g, profile)


def _is_rdf_unchecked(g: Graph, profile: Profile) -> bool:
    for v, c in enumerate(profile):
        if c == 0 and not any(profile[u] == 2 for u in g.adjacency[v]):
            return False
    return True


def is_minimal_rdf(g: Graph, profile: Profile) -> bool:
    """RDF such that decrementing any positive vertex breaks the RDF property."""
    check_profile(g, profile)
    if not _is_rdf_unchecked(g, profile):
        return False
    scratch = list(profile)
    for v, c in enumerate(profile):
        if c >= 1:
            scratch[v] = c - 1
            still = _is_rdf_unchecked(g, tuple(scratch))
            scratch[v] = c
            if still:
                return False
    return True


def strong_transform(g: Graph, profile: Profile, i: int) -> Profile:
    """Promote ``i`` to 2 and zero the gray neighbors of ``i``."""
    out = list(profile)
    out[i] = 2
    for j in g.adjacency[i]:
        if profile[j] == 1:
            out[j] = 0
    return tuple(out)


def is_strong_minimal_rdf(g: Graph, profile: Profile) -> bool:
    """M-RDF that no single promote-to-2 transform can strictly improve."""
    check_profile(g, profile)
    if not is_minimal_rdf(g, profile):
        return False
    w = weight(profile)
    for i in range(g.n):
        candidate = strong_transform(g, profile, i)
        if weight(candidate) < w and _is_rdf_unchecked(g, candidate):
            return False
    return True


def is_nash(g: Graph, profile: Profile, cfg: GameConfig) -> bool:
    """True when no player has a strictly improving unilateral deviation."""
    check_profile(g, profile)
    for i in range(g.n):
        _, best_u, u_cur = _best_response_unchecked(g, profile, i, cfg)
        if best_u > u_cur:
            return False
    return True


def find_bad_substructures(g: Graph, profile: Profile) -> list[tuple[str, int]]:
    """Local patterns that never survive in an equilibrium.

    Pattern A: a gray vertex with at least two gray neighbors.
    Pattern B: a white vertex with at least three gray neighbors.
    Returns (pattern, center) pairs in ascending vertex order.
    """
    check_profile(g, profile)
    found: list[tuple[str, int]] = []
    for v, c in enumerate(profile):
        if c == 2:
            continue
        gray_neighbors = sum(1 for u in g.adjacency[v] if profile[u] == 1)
        if c == 1 and gray_neighbors >= 2:
            found.append(("A", v))
        elif c == 0 and gray_neighbors >= 3:
            found.append(("B", v))
    return found


def _nbar_masks(g: Graph) -> list[int]:
    return [(1 << i) | sum(1 << j for j in g.adjacency[i]) for i in range(g.n)]


def brute_force_optimum(g: Graph, cap: int = ORACLE_CAP_DEFAULT) -> OracleResult:
    """Minimum RDF weight by depth-first branch and bound.

    Vertices are assigned in ID order with values tried ascending, so
    the recorded witness is the lexicographically least optimum. The
    bound is admissible; the plain enumeration in
    :func:`enumerate_optimum` cross-checks this search in the tests.
    """
    n = g.n
    if n > cap:
        raise SizeCapError(f"brute force capped at {cap} vertices, got {n}")
    if n == 0:
        return OracleResult(0, ())
    adjacency = g.adjacency
    nbar = [g.closed_neighbors(i) for i in range(n)]
    # finish[v]: depth at which v's coverage options are exhausted.
    finish = [max(v, adjacency[v][-1]) if adjacency[v] else v for v in range(n)]
    finalized_at: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        finalized_at[finish[v]].append(v)
    maxdeg = max(len(a) for a in adjacency)

    values = [0] * n
    cnt2 = [0] * n  # assigned black vertices in each closed neighborhood
    best_weight: int | None = None
    best_profile: Profile | None = None

    def lower_bound(k: int) -> int:
        # Assigned whites that still need a black among unassigned neighbors.
        need_black = any(
            values[v] == 0 and cnt2[v] == 0 for v in range(k)
        )
        uncovered_rest = sum(1 for u in range(k, n) if cnt2[u] == 0)
        bound = 2 if need_black else 0
        if uncovered_rest:
            if maxdeg >= 1:
                per = -(-2 * uncovered_rest // (maxdeg + 1))
            else:
                per = uncovered_rest
            bound = max(bound, per)
        return bound

    def dfs(k: int, w: int) -> None:
        nonlocal best_weight, best_profile
        if k == n:
            if best_weight is None or w < best_weight:
                best_weight = w
                best_profile = tuple(values)
            return
        for val in (0, 1, 2):
            if best_weight is not None and w + val >= best_weight:
                break  # values ascend, nothing further can strictly improve
            values[k] = val
            if val == 2:
                for j in nbar[k]:
                    cnt2[j] += 1
            feasible = all(
                values[v] != 0 or cnt2[v] != 0 for v in finalized_at[k]
            )
            if feasible and (
                best_weight is None
                or w + val + lower_bound(k + 1) < best_weight
            ):
                dfs(k + 1, w + val)
            if val == 2:
                for j in nbar[k]:
                    cnt2[j] -= 1
        values[k] = 0

    dfs(0, 0)
    assert best_weight is not None and best_profile is not None
    return OracleResult(best_weight, best_profile)


def enumerate_optimum(g: Graph, cap: int = ENUM_CAP_DEFAULT) -> OracleResult:
    """Reference optimum by scanning all 3^n profiles in lexicographic order."""
    n = g.n
    if n > cap:
        raise SizeCapError(f"enumeration capped at {cap} vertices, got {n}")
    if n == 0:
        return OracleResult(0, ())
    masks = _nbar_masks(g)
    full = (1 << n) - 1
    best_weight: int | None = None
    best_profile: Profile | None = None
    for prof in product((0, 1, 2), repeat=n):
        w = sum(prof)
        if best_weight is not None and w >= best_weight:
            continue
        covered = 0
        dominated = 0
        for v, c in enumerate(prof):
            if c == 2:
                covered |= masks[v]
            elif c == 1:
                dominated |= 1 << v
        if (covered | dominated) == full:
            best_weight = w
            best_profile = prof
    assert best_weight is not None and best_profile is not None
    return OracleResult(best_weight, best_profile)


class _ProfileSpace:
    """Shared tables over all 3^n profiles of one graph."""

    def __init__(self, g: Graph, cap: int):
        n = g.n
        if n > cap:
            raise SizeCapError(f"enumeration capped at {cap} vertices, got {n}")
        self.g = g
        self.n = n
        self.size = 3**n
        # Index arithmetic matches lexicographic tuple order.
        self.place = [3 ** (n - 1 - v) for v in range(n)]
        self.masks = _nbar_masks(g)
        full = (1 << n) - 1
        profiles: list[Profile] = []
        covered: list[int] = []
        weights: list[int] = []
        rdf: list[bool] = []
        for prof in product((0, 1, 2), repeat=n):
            cov = 0
            dominated = 0
            for v, c in enumerate(prof):
                if c == 2:
                    cov |= self.masks[v]
                elif c == 1:
                    dominated |= 1 << v
            profiles.append(prof)
            covered.append(cov)
            weights.append(sum(prof))
            rdf.append((cov | dominated) == full)
        self.profiles = profiles
        self.covered = covered
        self.weights = weights
        self.rdf = rdf
        self._m_rdf: list[bool] | None = None
        self._s_rdf: list[bool] | None = None

    def index(self, prof: Profile) -> int:
        idx = 0
        for v, c in enumerate(prof):
            idx += c * self.place[v]
        return idx

    def m_rdf_flags(self) -> list[bool]:
        if self._m_rdf is None:
            flags = []
            for idx, prof in enumerate(self.profiles):
                if not self.rdf[idx]:
                    flags.append(False)
                    continue
                minimal = True
                for v, c in enumerate(prof):
                    if c >= 1 and self.rdf[idx - self.place[v]]:
                        minimal = False
                        break
                flags.append(minimal)
            self._m_rdf = flags
        return self._m_rdf

    def s_rdf_flags(self) -> list[bool]:
        if self._s_rdf is None:
            m_rdf = self.m_rdf_flags()
            adjacency = self.g.adjacency
            flags = []
            for idx, prof in enumerate(self.profiles):
                if not m_rdf[idx]:
                    flags.append(False)
                    continue
                strong = True
                w = self.weights[idx]
                for i in range(self.n):
                    tidx = idx + (2 - prof[i]) * self.place[i]
                    for j in adjacency[i]:
                        if prof[j] == 1:
                            tidx -= self.place[j]
                    if self.weights[tidx] < w and self.rdf[tidx]:
                        strong = False
                        break
                flags.append(strong)
            self._s_rdf = flags
        return self._s_rdf

    def potential_table(self, cfg: GameConfig) -> list[int]:
        l1, l2 = cfg.lambda1, cfg.lambda2
        table = []
        for idx, prof in enumerate(self.profiles):
            cov = self.covered[idx]
            sq = 0
            pen = 0
            for v, c in enumerate(prof):
                sq += c * c
                if not (cov >> v) & 1:
                    pen += 2 - c
            table.append(-l1 * sq - l2 * pen)
        return table

    def ne_flags(self, cfg: GameConfig) -> list[bool]:
        # Exact potential game: a deviation improves the deviator's
        # utility iff it increases the potential, so equilibrium checks
        # reduce to potential comparisons along single-coordinate moves.
        pot = self.potential_table(cfg)
        flags = []
        for idx, prof in enumerate(self.profiles):
            p = pot[idx]
            ne = True
            for v, c in enumerate(prof):
                step = self.place[v]
                base = idx - c * step
                for x in (0, 1, 2):
                    if x != c and pot[base + x * step] > p:
                        ne = False
                        break
                if not ne:
                    break
            flags.append(ne)
        return flags

    def utility(self, idx: int, i: int, cfg: GameConfig) -> int:
        prof = self.profiles[idx]
        cov = self.covered[idx]
        ci = prof[i]
        pen = 0
        for j in self.g.closed_neighbors(i):
            if not (cov >> j) & 1:
                pen += 2 - prof[j]
        return -cfg.lambda1 * ci * ci - cfg.lambda2 * pen


def is_pareto_optimal_bruteforce(
    g: Graph,
    profile: Profile,
    cfg: GameConfig,
    cap: int = PARETO_CAP_DEFAULT,
) -> bool:
    """True when no profile weakly improves every player and strictly one.

    Scans the entire profile space, so only valid below the cap.
    """
    check_profile(g, profile)
    space = _ProfileSpace(g, cap)
    base_idx = space.index(profile)
    n = g.n
    base = [space.utility(base_idx, i, cfg) for i in range(n)]
    for idx in range(space.size):
        if idx == base_idx:
            continue
        dominates = True
        strict = False
        for i in range(n):
            u = space.utility(idx, i, cfg)
            if u < base[i]:
                dominates = False
                break
            if u > base[i]:
                strict = True
        if dominates and strict:
            return False
    return True


def srdf_gap_ratio(g: Graph, cap: int = ENUM_CAP_DEFAULT) -> Fraction | None:
    """min weight over (M-RDF minus S-RDF) divided by max S-RDF weight.

    ``None`` when every minimal RDF is already strong minimal.
    """
    space = _ProfileSpace(g, cap)
    m_rdf = space.m_rdf_flags()
    s_rdf = space.s_rdf_flags()
    weakest_only = [
        space.weights[idx]
        for idx in range(space.size)
        if m_rdf[idx] and not s_rdf[idx]
    ]
    if not weakest_only:
        return None
    strong_weights = [
        space.weights[idx] for idx in range(space.size) if s_rdf[idx]
    ]
    return Fraction(min(weakest_only), max(strong_weights))


def enumerate_labels(
    g: Graph, cfg: GameConfig, cap: int = ENUM_CAP_DEFAULT
) -> Iterator[tuple[Profile, ClassLabel]]:
    """Classify every profile of a small graph (Pareto flag omitted)."""
    space = _ProfileSpace(g, cap)
    m_rdf = space.m_rdf_flags()
    s_rdf = space.s_rdf_flags()
    ne = space.ne_flags(cfg)
    rdf_weights = [
        space.weights[idx] for idx in range(space.size) if space.rdf[idx]
    ]
    optimum = min(rdf_weights) if rdf_weights else None
    for idx in range(space.size):
        g_rdf = space.rdf[idx] and space.weights[idx] == optimum
        yield space.profiles[idx], ClassLabel(
            rdf=space.rdf[idx],
            m_rdf=m_rdf[idx],
            s_rdf=s_rdf[idx],
            ne=ne[idx],
            g_rdf=g_rdf,
            pareto=None,
        )


def all_nash_profiles(
    g: Graph, cfg: GameConfig, cap: int = ENUM_CAP_DEFAULT
) -> list[Profile]:
    space = _ProfileSpace(g, cap)
    ne = space.ne_flags(cfg)
    return [space.profiles[idx] for idx in range(space.size) if ne[idx]]


def classify(
    g: Graph,
    profile: Profile,
    cfg: GameConfig,
    oracle_cap: int = ORACLE_CAP_DEFAULT,
    pareto_cap: int = PARETO_CAP_DEFAULT,
) -> ClassLabel:
    """Full classification of one profile; exhaustive flags only under caps."""
    check_profile(g, profile)
    g_rdf: bool | None = None
    if g.n <= oracle_cap:
        optimum = brute_force_optimum(g, oracle_cap).optimum_weight
        g_rdf = is_rdf(g, profile) and weight(profile) == optimum
    pareto: bool | None = None
    if g.n <= pareto_cap:
        pareto = is_pareto_optimal_bruteforce(g, profile, cfg, pareto_cap)
    return ClassLabel(
        rdf=is_rdf(g, profile),
        m_rdf=is_minimal_rdf(g, profile),
        s_rdf=is_strong_minimal_rdf(g, profile),
        ne=is_nash(g, profile, cfg),
        g_rdf=g_rdf,
        pareto=pareto,
    )

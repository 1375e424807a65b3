"""The Roman domination game: profiles, utilities, potential, best responses.

Each vertex is a player choosing a value in {0, 1, 2}. A vertex is
*strongly dominated* when some vertex of its closed neighborhood holds
value 2, and *free* otherwise; the indicator ``m_j`` is 1 exactly on
free vertices. Player ``i``'s utility charges a quadratic cost for its
own value and a penalty for every non-black vertex in its closed
neighborhood that is still free:

    u_i(C) = -lambda1 * c_i**2  -  lambda2 * sum_{j in N[i]} (2 - c_j) * m_j(C)

With ``2*lambda2 < 3*lambda1`` and ``4*lambda1 < 3*lambda2`` the selfish
dynamics land exactly on strong minimal Roman dominating functions. All
arithmetic in this module is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError, ProfileError
from .graph import Graph
from .rng import SplitMix64

DEFAULT_LAMBDA1 = 17
DEFAULT_LAMBDA2 = 24

Profile = tuple[int, ...]


def round_cap(n: int, lambda1: int, lambda2: int) -> int:
    """Round bound for the convergent dynamics on an n-vertex graph.

    ceil((4*lambda1 + 2*lambda2) * n / min(3*lambda1 - 2*lambda2,
    3*lambda2 - 4*lambda1)); the numerator spans the potential range and
    the denominator is the smallest possible strictly-positive gain.
    """
    if n <= 0:
        raise ConfigError("round cap needs a positive vertex count")
    span = (4 * lambda1 + 2 * lambda2) * n
    gain = min(3 * lambda1 - 2 * lambda2, 3 * lambda2 - 4 * lambda1)
    if gain <= 0:
        raise ConfigError(
            f"need 2*lambda2 < 3*lambda1 and 4*lambda1 < 3*lambda2, "
            f"got lambda1={lambda1}, lambda2={lambda2}"
        )
    return -(-span // gain)


@dataclass(frozen=True)
class GameConfig:
    """Exact integer weight constants plus the derived round cap."""

    lambda1: int
    lambda2: int
    round_cap: int

    def __post_init__(self) -> None:
        l1, l2 = self.lambda1, self.lambda2
        if not (isinstance(l1, int) and isinstance(l2, int)):
            raise ConfigError("lambda1 and lambda2 must be integers")
        if l1 <= 0 or l2 <= 0:
            raise ConfigError("lambda1 and lambda2 must be positive")
        # Exact form of 2/3 * lambda2 < lambda1 < 3/4 * lambda2.
        if not (2 * l2 < 3 * l1 and 4 * l1 < 3 * l2):
            raise ConfigError(
                f"need 2*lambda2 < 3*lambda1 and 4*lambda1 < 3*lambda2, "
                f"got lambda1={l1}, lambda2={l2}"
            )
        if self.round_cap < 1:
            raise ConfigError("round_cap must be positive")

    @classmethod
    def for_size(
        cls,
        n: int,
        lambda1: int = DEFAULT_LAMBDA1,
        lambda2: int = DEFAULT_LAMBDA2,
    ) -> "GameConfig":
        return cls(lambda1, lambda2, round_cap(n, lambda1, lambda2))

    @classmethod
    def for_graph(
        cls,
        g: Graph,
        lambda1: int = DEFAULT_LAMBDA1,
        lambda2: int = DEFAULT_LAMBDA2,
    ) -> "GameConfig":
        return cls.for_size(g.n, lambda1, lambda2)

    def min_positive_gain(self) -> int:
        return min(3 * self.lambda1 - 2 * self.lambda2,
                   3 * self.lambda2 - 4 * self.lambda1)


@dataclass(frozen=True)
class PlayerSnapshot:
    """Locally stored state of one player: its value and its m-value."""

    c: int
    m: int


def parse_profile(text: str) -> Profile:
    """Read a profile from its text form, e.g. ``"01202"``."""
    values = []
    for ch in text.strip():
        if ch not in "012":
            raise ProfileError(f"profile characters must be 0/1/2, got {ch!r}")
        values.append(int(ch))
    return tuple(values)


def profile_text(profile: Profile) -> str:
    return "".join(str(c) for c in profile)


def check_profile(g: Graph, profile: Profile) -> None:
    if len(profile) != g.n:
        raise ProfileError(
            f"profile length {len(profile)} does not match {g.n} vertices"
        )
    for c in profile:
        if c not in (0, 1, 2):
            raise ProfileError(f"profile values must be 0/1/2, got {c!r}")


def random_profile(n: int, rng: SplitMix64) -> Profile:
    """Uniform i.i.d. profile over {0,1,2} per vertex."""
    return tuple(rng.randrange(3) for _ in range(n))


def m_value(g: Graph, profile: Profile, j: int) -> int:
    """1 if vertex ``j`` is free (no value 2 in its closed neighborhood)."""
    check_profile(g, profile)
    return _m_value_unchecked(g, profile, j)


def _m_value_unchecked(g: Graph, profile: Profile, j: int) -> int:
    if profile[j] == 2:
        return 0
    for k in g.adjacency[j]:
        if profile[k] == 2:
            return 0
    return 1


def m_vector(g: Graph, profile: Profile) -> list[int]:
    check_profile(g, profile)
    return [_m_value_unchecked(g, profile, j) for j in range(g.n)]


def snapshot(g: Graph, profile: Profile, j: int) -> PlayerSnapshot:
    return PlayerSnapshot(c=profile[j], m=m_value(g, profile, j))


def utility(g: Graph, profile: Profile, i: int, cfg: GameConfig) -> int:
    check_profile(g, profile)
    g._check_vertex(i)
    return _utility_unchecked(g, profile, i, cfg)


def _utility_unchecked(g: Graph, profile: Profile, i: int, cfg: GameConfig) -> int:
    ci = profile[i]
    penalty = 0
    for j in g.closed_neighbors(i):
        penalty += (2 - profile[j]) * _m_value_unchecked(g, profile, j)
    return -cfg.lambda1 * ci * ci - cfg.lambda2 * penalty


def potential(g: Graph, profile: Profile, cfg: GameConfig) -> int:
    """Exact potential: unilateral utility changes equal potential changes.

    pi(C) = -lambda1 * sum c_j^2 - lambda2 * sum (2 - c_j) * m_j(C);
    always within [-(4*lambda1 + 2*lambda2) * n, 0].
    """
    check_profile(g, profile)
    sq = 0
    penalty = 0
    for j, cj in enumerate(profile):
        sq += cj * cj
        penalty += (2 - cj) * _m_value_unchecked(g, profile, j)
    return -cfg.lambda1 * sq - cfg.lambda2 * penalty


def best_response(g: Graph, profile: Profile, i: int, cfg: GameConfig) -> int:
    """Utility-maximizing value for ``i`` with everyone else fixed.

    A player moves only when strictly better off: if the current value
    attains the maximum it is returned. Among two non-current
    maximizers, the smaller value wins.
    """
    check_profile(g, profile)
    g._check_vertex(i)
    return _best_response_unchecked(g, profile, i, cfg)[0]


def _best_response_unchecked(
    g: Graph, profile: Profile, i: int, cfg: GameConfig
) -> tuple[int, int, int]:
    """(best value, best utility, current utility) for player ``i``."""
    current = profile[i]
    u_current = _utility_unchecked(g, profile, i, cfg)
    best_val, best_u = current, u_current
    scratch = list(profile)
    for x in (0, 1, 2):
        if x == current:
            continue
        scratch[i] = x
        u = _utility_unchecked(g, tuple(scratch), i, cfg)
        # Ascending scan: only a strictly larger utility replaces, so
        # the stay rule and the smaller-value tie rule both hold.
        if u > best_u:
            best_val, best_u = x, u
    return best_val, best_u, u_current


def marginal_utility(g: Graph, profile: Profile, i: int, cfg: GameConfig) -> int:
    """Best-response utility minus current utility; always >= 0."""
    check_profile(g, profile)
    g._check_vertex(i)
    _, best_u, u_current = _best_response_unchecked(g, profile, i, cfg)
    return best_u - u_current

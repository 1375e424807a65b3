from __future__ import annotations

from pathlib import Path

import pytest

from romdom.game import GameConfig
from romdom.graph import Graph, gen_er, load_graph
from romdom.rng import SplitMix64, derive_seed

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def p3() -> Graph:
    return load_graph(str(FIXTURES / "p3.graph"))


@pytest.fixture(scope="session")
def c4() -> Graph:
    return load_graph(str(FIXTURES / "c4.graph"))


@pytest.fixture(scope="session")
def p7() -> Graph:
    return load_graph(str(FIXTURES / "p7.graph"))


@pytest.fixture(scope="session")
def h2() -> Graph:
    return load_graph(str(FIXTURES / "h2.graph"))


@pytest.fixture(scope="session")
def star3() -> Graph:
    return load_graph(str(FIXTURES / "star3.graph"))


@pytest.fixture(scope="session")
def k2() -> Graph:
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture(scope="session")
def p4() -> Graph:
    return path_graph(4)


def cfg_for(g: Graph, lambda1: int = 17, lambda2: int = 24) -> GameConfig:
    return GameConfig.for_graph(g, lambda1, lambda2)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def matching_star(k: int) -> Graph:
    """Center 0 adjacent to 2k leaves that pair up into a perfect matching."""
    edges = [(0, i) for i in range(1, 2 * k + 1)]
    edges += [(2 * i - 1, 2 * i) for i in range(1, k + 1)]
    return Graph.from_edges(2 * k + 1, edges)


def random_connected_graph(rng: SplitMix64, lo: int = 4, hi: int = 8) -> Graph:
    """Deterministic connected sample with lo <= n <= hi."""
    while True:
        n = lo + rng.randrange(hi - lo + 1)
        p = 0.25 + 0.1 * rng.randrange(4)
        g = gen_er(n, p, rng.next_u64())
        if g.is_connected():
            return g


def random_small_graph(rng: SplitMix64, lo: int = 3, hi: int = 12) -> Graph:
    """Deterministic no-isolated-vertex sample (not necessarily connected)."""
    n = lo + rng.randrange(hi - lo + 1)
    p = 0.2 + 0.1 * rng.randrange(5)
    return gen_er(n, p, rng.next_u64())


def random_profile_for(g: Graph, rng: SplitMix64) -> tuple[int, ...]:
    return tuple(rng.randrange(3) for _ in range(g.n))


__all__ = [
    "FIXTURES",
    "cfg_for",
    "derive_seed",
    "matching_star",
    "path_graph",
    "random_connected_graph",
    "random_profile_for",
    "random_small_graph",
]

"""Undirected simple graphs: representation, file I/O, random generators.

Vertices are the integers ``0..n-1``. Graphs are immutable after
construction, so they are safe to share freely; every generator is a
pure function of its parameters and a 64-bit seed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import GraphFormatError, ParameterError, ResampleCapError
from .rng import SplitMix64

ER_RESAMPLE_CAP = 1000


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``;
    ``adjacency[i]`` is the ascending tuple of neighbors of ``i``.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphFormatError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(
                    f"edge ({u},{v}) out of range for {n} vertices"
                )
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(
            n=n,
            edges=frozenset(seen),
            adjacency=tuple(tuple(sorted(a)) for a in adj),
        )

    def _check_vertex(self, i: int) -> None:
        if not (0 <= i < self.n):
            raise ValueError(f"vertex {i} out of range for {self.n} vertices")

    def neighbors(self, i: int) -> set[int]:
        """Open neighborhood of ``i`` (never contains ``i``)."""
        self._check_vertex(i)
        return set(self.adjacency[i])

    def closed_neighbors(self, i: int) -> tuple[int, ...]:
        """``i`` followed by its neighbors in ascending order."""
        self._check_vertex(i)
        return (i,) + self.adjacency[i]

    def two_hop_closed(self, i: int) -> set[int]:
        """All vertices within distance 2 of ``i``, including ``i``."""
        self._check_vertex(i)
        out = {i}
        for j in self.adjacency[i]:
            out.add(j)
            out.update(self.adjacency[j])
        return out

    def degree(self, i: int) -> int:
        self._check_vertex(i)
        return len(self.adjacency[i])

    def has_isolated_vertex(self) -> bool:
        return any(len(a) == 0 for a in self.adjacency)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(v)
        return count == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1 and self.is_connected()

    def to_edge_list(self) -> str:
        """Render in the graph file format (header line, then one edge per line)."""
        lines = [f"{self.n} {len(self.edges)}"]
        lines.extend(f"{u} {v}" for u, v in sorted(self.edges))
        return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    """Parse graph-file content.

    Format: first significant line is ``"n m"``; then exactly ``m``
    lines ``"u v"`` with 0-based endpoints. Lines starting with ``#``
    are ignored. Self-loops, duplicate edges, out-of-range IDs, and any
    malformed line are rejected.
    """
    lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"malformed header line: {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"malformed header line: {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("vertex and edge counts must be nonnegative")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}")
    edges: list[tuple[int, int]] = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"malformed edge line: {ln!r}") from exc
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_edge_list(fh.read())


def gen_ba(n: int, m: int, seed: int) -> Graph:
    """Preferential-attachment graph on ``n`` vertices.

    The seed graph is a complete graph on ``m0 = max(m, 2)`` vertices;
    each later vertex attaches to ``m`` distinct existing vertices,
    sampled without replacement with probability proportional to degree
    (degrees snapshotted at the start of the attachment step). The
    result is connected with ``C(m0,2) + (n - m0) * m`` edges.
    """
    if not (1 <= m < n):
        raise ParameterError(f"BA requires 1 <= m < n, got m={m}, n={n}")
    rng = SplitMix64(seed)
    m0 = max(m, 2)
    degree = [0] * n
    edges: list[tuple[int, int]] = []
    for u in range(m0):
        for v in range(u + 1, m0):
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1
    for new in range(m0, n):
        weights = degree[:new]
        total = sum(weights)
        chosen: list[int] = []
        for _ in range(m):
            pick = rng.weighted_index(weights, total)
            chosen.append(pick)
            total -= weights[pick]
            weights[pick] = 0
        for t in chosen:
            edges.append((t, new))
            degree[t] += 1
            degree[new] += 1
    return Graph.from_edges(n, edges)


def gen_ba_tree(n: int, seed: int) -> Graph:
    """Preferential-attachment tree (seed edge plus single attachments)."""
    if n < 2:
        raise ParameterError(f"BA tree requires n >= 2, got n={n}")
    return gen_ba(n, 1, seed)


def gen_er_counted(n: int, p: float, seed: int) -> tuple[Graph, int]:
    """ER graph plus the number of resamples that were needed.

    Each vertex pair is an edge independently with probability ``p``.
    Draws with an isolated vertex are rejected and the whole graph is
    redrawn from the continuing seed stream, so the output distribution
    is G(n, p) conditioned on minimum degree >= 1.
    """
    if not (0.0 < p <= 1.0):
        raise ParameterError(f"ER requires 0 < p <= 1, got p={p}")
    if n < 2:
        raise ParameterError(f"ER with no isolated vertices requires n >= 2, got n={n}")
    rng = SplitMix64(seed)
    for attempt in range(ER_RESAMPLE_CAP + 1):
        edges: list[tuple[int, int]] = []
        isolated = [True] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    edges.append((u, v))
                    isolated[u] = isolated[v] = False
        if not any(isolated):
            return Graph.from_edges(n, edges), attempt
    raise ResampleCapError(
        f"no isolated-vertex-free draw in {ER_RESAMPLE_CAP} resamples (n={n}, p={p})"
    )


def gen_er(n: int, p: float, seed: int) -> Graph:
    graph, _ = gen_er_counted(n, p, seed)
    return graph


def gen_random_tree(n: int, seed: int) -> Graph:
    """Random tree grown by uniform attachment.

    Vertices join in ID order, each attaching to a uniformly chosen
    earlier vertex, so the tree is spanning after ``n - 1`` additions
    and vertex IDs reflect attachment age (as in the other growth
    models here). Unlike preferential attachment, every earlier vertex
    is equally likely to receive the new edge.
    """
    if n < 2:
        raise ParameterError(f"random tree requires n >= 2, got n={n}")
    rng = SplitMix64(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph.from_edges(n, edges)

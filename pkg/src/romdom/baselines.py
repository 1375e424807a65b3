"""Comparison algorithms: a greedy RDF constructor and an exact tree DP.

Both are centralized references for the game dynamics. The greedy
builder repeatedly turns the vertex covering the most still-uncovered
closed neighbors black; the dynamic program computes the true optimum
on trees and is validated against the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IsolatedVertexError, NotATreeError
from .game import Profile
from .graph import Graph
from .verify import OracleResult

_INF = 1 << 60

# Tree DP states for a vertex v within its rooted subtree:
#   A: v holds 2.
#   B: v holds 1.
#   C: v holds 0 and some child holds 2.
#   D: v holds 0 and no child holds 2; a black parent must cover v.
_STATE_A, _STATE_B, _STATE_C, _STATE_D = 0, 1, 2, 3


@dataclass(frozen=True)
class DpStates:
    """Minimal subtree weights per state; unreachable states hold +inf."""

    a: int
    b: int
    c: int
    d: int


def greedy_rdf(g: Graph) -> Profile:
    """Greedy cover: place 2s while one buys at least two uncovered
    vertices, then fill the uncovered remainder with 1s."""
    if g.has_isolated_vertex():
        raise IsolatedVertexError("greedy construction requires minimum degree >= 1")
    uncovered = set(range(g.n))
    values = [0] * g.n
    while True:
        best_v = -1
        best_cov = 1  # a 2 must buy at least two vertices to beat 1s
        for v in range(g.n):
            cov = (v in uncovered) + sum(1 for u in g.adjacency[v] if u in uncovered)
            if cov > best_cov:
                best_v, best_cov = v, cov
        if best_v < 0:
            break
        values[best_v] = 2
        uncovered.discard(best_v)
        uncovered.difference_update(g.adjacency[best_v])
    for u in uncovered:
        values[u] = 1
    return tuple(values)


def _rooted_children(g: Graph, root: int) -> tuple[list[int], list[list[int]]]:
    """DFS order from the root and the child lists it induces."""
    parent = [-1] * g.n
    parent[root] = root
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if parent[v] == -1:
                parent[v] = u
                order.append(v)
                stack.append(v)
    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    return order, children


def _dp_tables(
    g: Graph, root: int
) -> tuple[list[int], list[list[int]], list[tuple[int, int, int, int]], list[int]]:
    if not g.is_tree() or g.n < 2:
        raise NotATreeError("exact tree solver requires a tree with n >= 2")
    order, children = _rooted_children(g, root)
    table: list[tuple[int, int, int, int]] = [(0, 0, 0, 0)] * g.n
    # For state C: the child upgraded to 2 when no child is black for free.
    forced_black_child = [-1] * g.n
    for v in reversed(order):
        a, b, c_sum, d = 2, 1, 0, 0
        extra = _INF
        extra_child = -1
        has_free_black = False
        for u in children[v]:
            ua, ub, uc, ud = table[u]
            best_any = min(ua, ub, uc, ud)
            best_abc = min(ua, ub, uc)
            a += best_any
            b += best_abc
            c_sum += best_abc
            d += min(ub, uc)
            if ua == best_abc:
                has_free_black = True
            elif ua - best_abc < extra:
                extra = ua - best_abc
                extra_child = u
        if not children[v]:
            c = _INF
        elif has_free_black:
            c = c_sum
        else:
            c = min(c_sum + extra, _INF)
            forced_black_child[v] = extra_child
        table[v] = (a, b, c, d)
    return order, children, table, forced_black_child


def tree_dp_table(g: Graph, root: int = 0) -> list[DpStates]:
    """Bottom-up per-vertex state table for a tree rooted at ``root``."""
    _, _, table, _ = _dp_tables(g, root)
    return [DpStates(a=t[0], b=t[1], c=t[2], d=t[3]) for t in table]


def tree_dp_optimum(g: Graph, root: int = 0) -> OracleResult:
    """Exact minimum RDF weight on a tree, with a witness profile."""
    _, children, table, forced_black_child = _dp_tables(g, root)
    ra, rb, rc, _ = table[root]
    answer = min(ra, rb, rc)
    root_state = (ra, rb, rc).index(answer)  # prefers A, then B, then C

    value_of_state = {_STATE_A: 2, _STATE_B: 1, _STATE_C: 0, _STATE_D: 0}
    values = [0] * g.n
    pending = [(root, root_state)]
    while pending:
        v, state = pending.pop()
        values[v] = value_of_state[state]
        forced = forced_black_child[v] if state == _STATE_C else -1
        for u in children[v]:
            ua, ub, uc, ud = table[u]
            if state == _STATE_A:
                options = ((ua, _STATE_A), (ub, _STATE_B), (uc, _STATE_C), (ud, _STATE_D))
            elif state == _STATE_D:
                options = ((ub, _STATE_B), (uc, _STATE_C))
            elif u == forced:
                options = ((ua, _STATE_A),)
            else:
                options = ((ua, _STATE_A), (ub, _STATE_B), (uc, _STATE_C))
            pending.append((u, min(options, key=lambda t: t[0])[1]))
    return OracleResult(optimum_weight=answer, witness=tuple(values))

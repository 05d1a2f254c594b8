"""Exact graph parameters: independence number, connectivity, toughness, bipartiteness."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from prismatic import kernels
from prismatic.errors import BudgetExhausted
from prismatic.graph import Graph, bits

TOUGHNESS_MAX_N = 20

INFINITE = math.inf


@dataclass(frozen=True)
class GraphParams:
    n: int
    alpha: int
    kappa: int
    toughness: Fraction | float | None = None  # None when not computed; INFINITE for complete graphs

    def toughness_str(self) -> str | None:
        return format_toughness(self.toughness)


def format_toughness(t) -> str | None:
    if t is None:
        return None
    if t == INFINITE:
        return "inf"
    return f"{t.numerator}/{t.denominator}"


def _require_nonempty(g: Graph):
    if g.n < 1:
        raise ValueError("parameter undefined for the empty graph")


def independence_number(g: Graph) -> tuple[int, list[int]]:
    """Return alpha(G) and one maximum independent set (sorted)."""
    _require_nonempty(g)
    mask = kernels.max_independent_set(g.adj, g.n)
    witness = bits(mask)
    return len(witness), witness


def _local_connectivity(g: Graph, s: int, t: int) -> tuple[int, list[int]]:
    """Max number of internally disjoint s-t paths and a minimum s-t vertex separator.

    Unit-capacity max-flow on the split graph: vertex x becomes x_in = 2x,
    x_out = 2x + 1 with a capacity-1 arc between them (unbounded for s, t).
    """
    n = g.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a, b, c):
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    for x in range(n):
        arc(2 * x, 2 * x + 1, big if x in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in out[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    reach = set(prev)
    cut = sorted(x for x in range(n) if 2 * x in reach and 2 * x + 1 not in reach)
    return flow, cut


def connectivity(g: Graph) -> tuple[int, list[int] | None]:
    """Vertex connectivity kappa(G) and a minimum vertex cut (None for complete graphs).

    Scheme: with v of minimum degree, kappa is the minimum local connectivity
    over pairs (v, w) for w not adjacent to v, and pairs of non-adjacent
    neighbours of v. A minimum cut either misses v (then it separates v from
    some non-neighbour) or contains v (then it separates two neighbours).
    """
    _require_nonempty(g)
    n = g.n
    if g.is_complete():
        return n - 1, None
    comps = kernels.count_components(g.adj, (1 << n) - 1)
    if comps > 1:
        return 0, []
    v = min(range(n), key=lambda x: (g.degree(x), x))
    best = n - 1
    best_cut = None
    pairs = [(v, w) for w in range(n) if w != v and not g.has_edge(v, w)]
    nb = g.neighbors(v)
    pairs += [(x, y) for i, x in enumerate(nb) for y in nb[i + 1:] if not g.has_edge(x, y)]
    for s, t in pairs:
        k, cut = _local_connectivity(g, s, t)
        if k < best or best_cut is None:
            best, best_cut = k, cut
    return best, best_cut


def toughness(g: Graph) -> tuple[Fraction | float, list[int] | None, int]:
    """Exact toughness with a witness cut and its component count.

    Returns (INFINITE, None, 1) for complete graphs, which have no
    disconnecting set.
    """
    _require_nonempty(g)
    if g.n > TOUGHNESS_MAX_N:
        raise BudgetExhausted(f"toughness enumeration is limited to n <= {TOUGHNESS_MAX_N}")
    found = kernels.toughness_scan(g.adj, g.n)
    if found is None:
        return INFINITE, None, 1
    k, c, mask = found
    return Fraction(k, c), bits(mask), c


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    coloring: list[int] | None = None
    odd_cycle: list[int] | None = None

    def __bool__(self):
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteResult:
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteResult(False, odd_cycle=_odd_cycle(u, w, parent, depth))
    return BipartiteResult(True, coloring=color)


def _odd_cycle(u, w, parent, depth):
    # climb both BFS-tree branches to the common ancestor; u-w closes it
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return left + right[::-1]


def graph_params(g: Graph, with_toughness: bool = False) -> GraphParams:
    alpha, _ = independence_number(g)
    kappa, _ = connectivity(g)
    tough = toughness(g)[0] if with_toughness else None
    return GraphParams(n=g.n, alpha=alpha, kappa=kappa, toughness=tough)

"""Exact search procedures and independent witness checks.

Every search here is exhaustive: ``None`` means no witness exists. Running
out of time raises ``BudgetExhausted`` instead, so a negative answer can be
trusted. The per-search time budget comes from ``PRISMATIC_BUDGET_MS`` unless
a deadline (a ``time.monotonic()`` value) is passed explicitly.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import combinations

from prismatic import kernels
from prismatic.errors import BudgetExhausted, TheoremViolation
from prismatic.graph import Graph, bits

EVEN_CYCLE_MAX_N = 16
EXHAUSTIVE_CACTUS_MAX_N = 14

_UNSET = object()


def deadline_from_env() -> float | None:
    raw = os.environ.get("PRISMATIC_BUDGET_MS", "").strip()
    if not raw:
        return None
    return time.monotonic() + int(raw) / 1000.0


def _resolve(deadline):
    return deadline_from_env() if deadline is _UNSET else deadline


def _check_clock(deadline, what):
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExhausted(f"{what}: time budget exhausted")


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint paths covering V(G); ``endpoints[i]`` is the designated start of path i."""

    paths: tuple[tuple[int, ...], ...]

    @property
    def endpoints(self) -> tuple[int, ...]:
        return tuple(p[0] for p in self.paths)

    def __len__(self):
        return len(self.paths)


def hamilton_cycle(g: Graph, deadline=_UNSET) -> list[int] | None:
    if g.n < 3:
        raise ValueError("a Hamilton cycle needs at least 3 vertices")
    status, cycle = kernels.hamilton_cycle(g.adj, g.n, _resolve(deadline))
    if status == kernels.BUDGET:
        raise BudgetExhausted(f"hamilton_cycle on n={g.n}: time budget exhausted")
    return cycle


def hamilton_path(g: Graph, deadline=_UNSET) -> list[int] | None:
    """Spanning path, found as a Hamilton cycle of G plus one universal vertex."""
    if g.n < 1:
        raise ValueError("hamilton_path needs at least one vertex")
    if g.n == 1:
        return [0]
    if g.n == 2:
        return [0, 1] if g.has_edge(0, 1) else None
    cycle = hamilton_cycle(g.add_universal_clique(1), deadline)
    if cycle is None:
        return None
    i = cycle.index(g.n)
    return cycle[i + 1:] + cycle[:i]


def path_cover(g: Graph, r: int, deadline=_UNSET) -> PathCover | None:
    """At most r disjoint paths covering V(G), or None.

    Adds r pairwise-adjacent vertices joined to everything, looks for a
    Hamilton cycle there, and deletes the added vertices again.
    """
    if r < 1 or g.n < 1:
        raise ValueError("path_cover needs r >= 1 and a non-empty graph")
    big = g.add_universal_clique(r)
    if big.n < 3:
        return PathCover(((0,),))
    cycle = hamilton_cycle(big, deadline)
    if cycle is None:
        return None
    k = next(i for i, v in enumerate(cycle) if v >= g.n)
    rotated = cycle[k:] + cycle[:k]
    paths, run = [], []
    for v in rotated:
        if v >= g.n:
            if run:
                paths.append(tuple(run))
            run = []
        else:
            run.append(v)
    if run:
        paths.append(tuple(run))
    return PathCover(tuple(paths))


def even_cycle_through(g: Graph, s, deadline=_UNSET) -> list[int] | None:
    """An even cycle containing every vertex of ``s``, or None.

    When kappa(G) >= max(3, |s|) an even cycle through s must exist, so an
    empty search there raises TheoremViolation.
    """
    required = sorted(set(s))
    if not required:
        raise ValueError("even_cycle_through needs a non-empty vertex set")
    if g.n > EVEN_CYCLE_MAX_N:
        raise BudgetExhausted(f"even_cycle_through is capped at n <= {EVEN_CYCLE_MAX_N}")
    deadline = _resolve(deadline)
    adj = g.adj
    s0 = required[0]
    need = 0
    for v in required:
        need |= 1 << v
    path = [s0]
    full = (1 << g.n) - 1
    steps = [0]

    def reach_from(cur, free):
        seen = 0
        frontier = adj[cur] & free
        while frontier:
            seen |= frontier
            nxt = 0
            for w in bits(frontier):
                nxt |= adj[w]
            frontier = nxt & free & ~seen
        return seen

    def dfs(cur, visited):
        steps[0] += 1
        if steps[0] % 2048 == 0:
            _check_clock(deadline, "even_cycle_through")
        if len(path) >= 4 and len(path) % 2 == 0 and adj[cur] >> s0 & 1 and not need & ~visited:
            return True
        free = full & ~visited
        region = reach_from(cur, free)
        if need & ~visited & ~region:
            return False
        if not adj[s0] & (region | (1 << cur)):
            return False
        for w in bits(adj[cur] & free):
            path.append(w)
            if dfs(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    if dfs(s0, 1 << s0):
        return list(path)
    from prismatic.invariants import connectivity

    kappa, _ = connectivity(g)
    if kappa >= max(3, len(required)):
        raise TheoremViolation(
            "no even cycle through the given set in a sufficiently connected graph",
            {"n": g.n, "edges": g.edges(), "set": required, "kappa": kappa},
        )
    return None


def bounded_degree_spanning_tree(g: Graph, t: int, deadline=_UNSET) -> list[int] | None:
    """Spanning tree with maximum degree <= t as a parent array (root has -1), or None.

    Enumerates trees in breadth-first generation order from vertex 0: the
    tree vertex at the head of the queue picks its full set of children
    among the current non-tree neighbours. Every spanning tree arises this
    way exactly once, so the search is complete.
    """
    if t < 1 or g.n < 1:
        raise ValueError("bounded_degree_spanning_tree needs t >= 1 and n >= 1")
    n = g.n
    if n == 1:
        return [-1]
    deadline = _resolve(deadline)
    adj = g.adj
    full = (1 << n) - 1
    parent = [-1] * n
    deg = [0] * n
    queue = [0]
    steps = [0]

    def feasible(head, intree):
        # every missing vertex must be reachable from a pending vertex with spare degree
        outside = full & ~intree
        frontier = 0
        for q in queue[head:]:
            if deg[q] < t:
                frontier |= adj[q]
        frontier &= outside
        seen = 0
        while frontier:
            seen |= frontier
            nxt = 0
            for w in bits(frontier):
                nxt |= adj[w]
            frontier = nxt & outside & ~seen
        return seen == outside

    def grow(head, intree):
        if intree == full:
            return True
        if head == len(queue):
            return False
        steps[0] += 1
        if steps[0] % 1024 == 0:
            _check_clock(deadline, "bounded_degree_spanning_tree")
        if not feasible(head, intree):
            return False
        u = queue[head]
        avail = bits(adj[u] & ~intree)
        cap = min(t - deg[u], len(avail))
        for size in range(cap, -1, -1):
            for children in combinations(avail, size):
                for c in children:
                    parent[c] = u
                    deg[c] = 1
                    intree |= 1 << c
                deg[u] += size
                queue.extend(children)
                if grow(head + 1, intree):
                    return True
                del queue[len(queue) - size:]
                deg[u] -= size
                for c in children:
                    parent[c] = -1
                    deg[c] = 0
                    intree &= ~(1 << c)
        return False

    if grow(0, 1):
        return parent
    return None


def exhaustive_even_cactus(g: Graph, deadline=_UNSET):
    """Any spanning even cactus of G by exhaustive edge-subset search, or None.

    A Hamilton path is tried first (it is a cactus with no cycles). The
    negative answer comes from the include/exclude search, which keeps
    every partial subgraph a cactus: an edge inside a component must close
    an even cycle through vertices that lie on no other cycle.
    """
    from prismatic.cactus import EvenCactus, decompose_cactus_edges

    if g.n < 2:
        raise ValueError("exhaustive_even_cactus needs n >= 2")
    if g.n > EXHAUSTIVE_CACTUS_MAX_N:
        raise BudgetExhausted(f"exhaustive_even_cactus is capped at n <= {EXHAUSTIVE_CACTUS_MAX_N}")
    deadline = _resolve(deadline)
    hp = hamilton_path(g, deadline)
    if hp is not None:
        return EvenCactus(cycles=(), paths=(tuple(hp),))
    n = g.n
    full = (1 << n) - 1
    edges = g.edges()
    m = len(edges)
    h = [0] * n
    deg = [0] * n
    oncycle = [0]
    cycles: list[list[int]] = []
    steps = [0]

    def flood(rows, start):
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= rows[w]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def tree_path(u, v):
        prev = {u: None}
        frontier = [u]
        while frontier and v not in prev:
            nxt = []
            for a in frontier:
                for b in bits(h[a]):
                    if b not in prev:
                        prev[b] = a
                        nxt.append(b)
            frontier = nxt
        if v not in prev:
            return None
        out = [v]
        while prev[out[-1]] is not None:
            out.append(prev[out[-1]])
        return out[::-1]

    def finished():
        if flood(h, 0) != full:
            return None
        for v in range(n):
            if deg[v] == 3 and not oncycle[0] >> v & 1:
                return None
        return decompose_cactus_edges(n, h, cycles)

    def search(i):
        steps[0] += 1
        if steps[0] % 1024 == 0:
            _check_clock(deadline, "exhaustive_even_cactus")
        done = finished()
        if done is not None:
            return done
        if i == m:
            return None
        # the remaining addable edges must be able to connect everything
        rows = list(h)
        for u, v in edges[i:]:
            if deg[u] < 3 and deg[v] < 3:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        if flood(rows, 0) != full:
            return None
        u, v = edges[i]
        if deg[u] < 3 and deg[v] < 3:
            p = tree_path(u, v)
            closes = p is not None
            ok = True
            if closes:
                ok = len(p) % 2 == 0 and not any(oncycle[0] >> x & 1 for x in p)
            if ok:
                h[u] |= 1 << v
                h[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
                saved = oncycle[0]
                if closes:
                    cycles.append(p)
                    for x in p:
                        oncycle[0] |= 1 << x
                found = search(i + 1)
                if found is not None:
                    return found
                if closes:
                    cycles.pop()
                oncycle[0] = saved
                h[u] &= ~(1 << v)
                h[v] &= ~(1 << u)
                deg[u] -= 1
                deg[v] -= 1
        return search(i + 1)

    return search(0)


def verify_cycle(g: Graph, cycle, spanning: bool) -> bool:
    """Re-check a cycle witness directly against the adjacency rows."""
    seq = list(cycle)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not isinstance(v, int) or v < 0 or v >= g.n for v in seq):
        return False
    for i, v in enumerate(seq):
        w = seq[(i + 1) % len(seq)]
        if not g.adj[v] >> w & 1:
            return False
    return not spanning or len(seq) == g.n


def verify_path(g: Graph, path, spanning: bool = True) -> bool:
    seq = list(path)
    if not seq or len(set(seq)) != len(seq):
        return False
    if any(not isinstance(v, int) or v < 0 or v >= g.n for v in seq):
        return False
    if any(not g.adj[a] >> b & 1 for a, b in zip(seq, seq[1:])):
        return False
    return not spanning or len(seq) == g.n


def verify_path_cover(g: Graph, cover: PathCover) -> bool:
    seen = []
    for p in cover.paths:
        if not verify_path(g, p, spanning=False):
            return False
        seen.extend(p)
    return sorted(seen) == list(range(g.n))

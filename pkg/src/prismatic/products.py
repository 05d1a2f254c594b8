"""Hamilton cycles in G x C_t, spanning walks and degree-bounded trees, toughness checks."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from prismatic.errors import TheoremViolation
from prismatic.graph import Graph, cartesian_cycle, from_edge_list, product_vertex
from prismatic.invariants import INFINITE, connectivity, independence_number, toughness
from prismatic.oracles import bounded_degree_spanning_tree, hamilton_cycle, verify_cycle


@dataclass(frozen=True)
class SpanningWalk:
    sequence: tuple[int, ...]
    visit_bound: int

    def visits(self) -> Counter:
        return Counter(self.sequence)

    def is_valid(self, g: Graph) -> bool:
        seq = self.sequence
        if g.n == 1:
            return seq == (0,)
        if len(seq) < 2:
            return False
        for a, b in zip(seq, seq[1:] + seq[:1]):
            if not (0 <= a < g.n and 0 <= b < g.n and g.has_edge(a, b)):
                return False
        counts = self.visits()
        return len(counts) == g.n and max(counts.values()) <= self.visit_bound


@dataclass(frozen=True)
class BoundedTree:
    """Spanning tree as a parent array (the root has parent -1)."""

    parent: tuple[int, ...]
    t: int

    def __post_init__(self):
        object.__setattr__(self, "parent", tuple(self.parent))
        if not self._acyclic_spanning():
            raise ValueError("parent array is not a spanning tree")

    def _acyclic_spanning(self) -> bool:
        n = len(self.parent)
        if n == 0 or sum(1 for p in self.parent if p == -1) != 1:
            return False
        if any(not -1 <= p < n or p == i for i, p in enumerate(self.parent)):
            return False
        for v in range(n):
            seen = set()
            while v != -1:
                if v in seen:
                    return False
                seen.add(v)
                v = self.parent[v]
        return True

    @property
    def n(self) -> int:
        return len(self.parent)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p >= 0)

    def graph(self) -> Graph:
        return from_edge_list(self.n, self.edges())

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges():
            deg[a] += 1
            deg[b] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees()) if self.n > 1 else 0

    def is_valid(self, g: Graph | None = None) -> bool:
        if self.max_degree() > self.t:
            return False
        if g is not None:
            return g.n == self.n and all(g.has_edge(a, b) for a, b in self.edges())
        return True

    @classmethod
    def from_graph(cls, tree: Graph, t: int, root: int = 0) -> BoundedTree:
        if tree.m != tree.n - 1:
            raise ValueError("not a tree: wrong edge count")
        parent = [-2] * tree.n
        parent[root] = -1
        stack = [root]
        while stack:
            v = stack.pop()
            for w in tree.neighbors(v):
                if parent[w] == -2:
                    parent[w] = v
                    stack.append(w)
        if -2 in parent:
            raise ValueError("not a tree: disconnected")
        return cls(tuple(parent), t)


def ttree_to_twalk(tree: BoundedTree) -> SpanningWalk:
    """Euler tour of the doubled tree; v appears deg(v) times."""
    if tree.n < 2:
        raise ValueError("ttree_to_twalk needs at least two vertices")
    if not tree.is_valid():
        raise ValueError(f"tree exceeds degree bound {tree.t}")
    children: list[list[int]] = [[] for _ in range(tree.n)]
    root = tree.parent.index(-1)
    for v, p in enumerate(tree.parent):
        if p >= 0:
            children[p].append(v)
    walk: list[int] = []
    # iterative DFS that writes a vertex on entry and after each child returns,
    # dropping the final return to the root so the sequence is cyclic
    stack = [(root, iter(children[root]))]
    walk.append(root)
    while stack:
        v, it = stack[-1]
        child = next(it, None)
        if child is None:
            stack.pop()
            if stack:
                walk.append(stack[-1][0])
            continue
        walk.append(child)
        stack.append((child, iter(children[child])))
    walk.pop()
    return SpanningWalk(tuple(walk), tree.t)


def twalk_to_tree(g: Graph, walk: SpanningWalk) -> BoundedTree:
    """First-visit tree of a spanning walk; degree at most visits + 1."""
    if not walk.is_valid(g):
        raise ValueError("not a valid spanning walk of g")
    seq = walk.sequence
    parent = [-2] * g.n
    parent[seq[0]] = -1
    prev = seq[0]
    for v in seq[1:]:
        if parent[v] == -2:
            parent[v] = prev
        prev = v
    return BoundedTree(tuple(parent), walk.visit_bound + 1)


def _elimination_order(tree: Graph) -> list[tuple[int, int]]:
    """(leaf, neighbour) pairs, removing the highest-id leaf each time."""
    alive = set(range(tree.n))
    deg = [tree.degree(v) for v in range(tree.n)]
    order = []
    while len(alive) > 1:
        leaf = max(v for v in alive if deg[v] == 1)
        (nb,) = [w for w in tree.neighbors(leaf) if w in alive]
        order.append((leaf, nb))
        alive.remove(leaf)
        deg[nb] -= 1
    return order


def _fiber_edge_counts(cycle, n, t) -> list[int]:
    counts = [0] * n
    for (a, i), (b, j) in zip(cycle, cycle[1:] + cycle[:1]):
        if a == b:
            counts[a] += 1
    return counts


def tree_cycle_ham(tree: BoundedTree | Graph, t: int) -> list[tuple[int, int]]:
    """Hamilton cycle of T x C_t as (vertex, level) pairs, by leaf induction."""
    if t < 3:
        raise ValueError("tree_cycle_ham needs t >= 3")
    tg = tree.graph() if isinstance(tree, BoundedTree) else tree
    if tg.n < 1 or tg.m != tg.n - 1:
        raise ValueError("input is not a tree")
    if tg.max_degree() > t:
        raise ValueError(f"max degree {tg.max_degree()} exceeds t = {t}: no Hamilton cycle exists")
    order = _elimination_order(tg)
    root = next(iter(set(range(tg.n)) - {leaf for leaf, _ in order}))
    cycle = [(root, i) for i in range(t)]
    for leaf, v in reversed(order):
        L = len(cycle)
        best = None
        for k in range(L):
            (a, i), (b, j) = cycle[k], cycle[(k + 1) % L]
            if a == b == v:
                low = i if (i + 1) % t == j else j
                if best is None or low < best[0]:
                    best = (low, k, (i + 1) % t == j)
        if best is None:
            raise TheoremViolation("fiber invariant broken: no fiber edge left at the attachment vertex",
                                   {"vertex": v, "t": t})
        low, k, forward = best
        detour = [(leaf, (low - s) % t) for s in range(t)]  # low, low-1, ..., low+1
        if not forward:
            detour.reverse()
        cycle[k + 1:k + 1] = detour
    deg = [tg.degree(v) for v in range(tg.n)]
    counts = _fiber_edge_counts(cycle, tg.n, t)
    for w in range(tg.n):
        if counts[w] < t - deg[w]:
            raise TheoremViolation("fiber invariant violated", {"vertex": w, "fiber_edges": counts[w]})
    return cycle


def verify_product_cycle(g: Graph, t: int, cycle) -> bool:
    """Check (vertex, level) pairs form a Hamilton cycle of g x C_t."""
    try:
        flat = [product_vertex(v, lvl, g.n) for v, lvl in cycle]
    except (TypeError, ValueError):
        return False
    if any(not (0 <= v < g.n and 0 <= lvl < t) for v, lvl in cycle):
        return False
    big = cartesian_cycle(g, t)
    return len(flat) == big.n and verify_cycle(big, flat, spanning=True)


@dataclass(frozen=True)
class ProductCycle:
    t: int
    sequence: tuple[tuple[int, int], ...]
    tree: BoundedTree

    def to_json(self) -> list[list[int]]:
        return [[v, lvl] for v, lvl in self.sequence]


def cyclic_product_certificate(g: Graph, t: int) -> ProductCycle | None:
    """Hamilton cycle of g x C_t when alpha <= (t - 1) kappa; None when that fails."""
    if t < 3:
        raise ValueError("cyclic_product_certificate needs t >= 3")
    if g.n < 1:
        raise ValueError("empty graph")
    alpha, _ = independence_number(g)
    kappa, _ = connectivity(g)
    if alpha > (t - 1) * kappa:
        return None
    parent = bounded_degree_spanning_tree(g, t)
    if parent is None:
        raise TheoremViolation(f"no spanning tree of max degree {t} although alpha <= (t-1) kappa",
                               {"alpha": alpha, "kappa": kappa, "edges": g.edges()})
    tree = BoundedTree(tuple(parent), t)
    cycle = tree_cycle_ham(tree, t)
    if not verify_product_cycle(g, t, cycle):
        raise TheoremViolation("constructed product cycle failed verification", {"t": t})
    return ProductCycle(t, tuple(cycle), tree)


@dataclass(frozen=True)
class ToughnessReport:
    n: int
    toughness: Fraction | float
    complete: bool
    hamilton_bound: bool  # 2t(t+1) >= n
    prism_bound: bool  # 4t(t+1) >= n
    hamiltonian: bool | None  # oracle outcome when hamilton_bound holds
    prism_hamiltonian: bool | None  # pipeline outcome when prism_bound holds
    chain_ok: bool | None  # kappa >= 2 tough and tough <= (n - alpha) / alpha, non-complete graphs

    @property
    def violation(self) -> bool:
        return (self.hamiltonian is False or self.prism_hamiltonian is False
                or self.chain_ok is False)

    def to_json(self) -> dict:
        tough = "inf" if self.toughness == INFINITE else f"{self.toughness.numerator}/{self.toughness.denominator}"
        return {
            "n": self.n, "toughness": tough, "complete": self.complete,
            "hamilton_bound": self.hamilton_bound, "prism_bound": self.prism_bound,
            "hamiltonian": self.hamiltonian, "prism_hamiltonian": self.prism_hamiltonian,
            "chain_ok": self.chain_ok,
        }


def toughness_bounds(tough, n: int) -> tuple[bool, bool]:
    if tough == INFINITE:
        return True, True
    if tough <= 0:
        return False, False
    q = tough * (tough + 1)
    return 2 * q >= n, 4 * q >= n


def toughness_hamilton_check(g: Graph) -> ToughnessReport:
    from prismatic.pipeline import prism_ham_certificate, verify_certificate

    if g.n < 3:
        raise ValueError("toughness_hamilton_check needs n >= 3")
    tough, _, _ = toughness(g)
    complete = g.is_complete()
    ham_ok, prism_ok = toughness_bounds(tough, g.n)
    hamiltonian = prism = chain = None
    if ham_ok:
        hamiltonian = hamilton_cycle(g) is not None
    if prism_ok:
        cert = prism_ham_certificate(g)
        prism = cert.kind != "refuted_hypothesis" and verify_certificate(g, cert)
    if not complete and tough > 0:
        alpha, _ = independence_number(g)
        kappa, _ = connectivity(g)
        chain = kappa >= 2 * tough and tough <= Fraction(g.n - alpha, alpha)
    return ToughnessReport(g.n, tough, complete, ham_ok, prism_ok, hamiltonian, prism, chain)

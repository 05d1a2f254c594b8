"""Spanning even cacti and Hamilton cycles in the prism G x K2.

An even cactus is a connected spanning subgraph of maximum degree 3 made of
pairwise vertex-disjoint even cycles and pairwise vertex-disjoint paths, with
no cycles besides the listed ones. Paths are stored with their attachment
vertex included, so a path meets a cycle only at one of its endpoints.

``prism_ham_from_cactus`` turns such a cactus into a Hamilton cycle of the
prism by splicing per-block cycles:

* an even cycle c1..c2m gives the staircase c1/0 c1/1 c2/1 c2/0 c3/0 ...,
  which uses the vertical edge at every cycle vertex;
* a path p1..pm gives p1/0 .. pm/0 pm/1 .. p1/1, which uses the vertical
  edges at both ends;
* two block cycles sharing a vertex x both contain the vertical edge at x;
  dropping it from both and joining the two Hamilton paths gives one cycle.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from prismatic.errors import InvalidCertificate
from prismatic.graph import Graph, bits, from_edge_list
from prismatic.rng import Xoshiro256


@dataclass(frozen=True)
class EvenCactus:
    cycles: tuple[tuple[int, ...], ...] = ()
    paths: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))
        object.__setattr__(self, "paths", tuple(tuple(p) for p in self.paths))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for c in self.cycles:
            out.extend(zip(c, c[1:] + c[:1]))
        for p in self.paths:
            out.extend(zip(p, p[1:]))
        return out

    def vertices(self) -> set[int]:
        return {v for part in self.cycles + self.paths for v in part}

    def to_json(self) -> dict:
        return {"cycles": [list(c) for c in self.cycles], "paths": [list(p) for p in self.paths]}

    @classmethod
    def from_json(cls, obj: dict) -> EvenCactus:
        return cls(cycles=obj.get("cycles", []), paths=obj.get("paths", []))

    @classmethod
    def from_path(cls, path) -> EvenCactus:
        return cls(cycles=(), paths=(tuple(path),))


@dataclass(frozen=True)
class PrismHamCycle:
    sequence: tuple[tuple[int, int], ...]

    def to_json(self) -> list[list[int]]:
        return [[v, lvl] for v, lvl in self.sequence]

    @classmethod
    def from_json(cls, obj) -> PrismHamCycle:
        return cls(tuple((int(v), int(lvl)) for v, lvl in obj))

    def __len__(self):
        return len(self.sequence)


@dataclass(frozen=True)
class Violation:
    clause: str
    detail: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Ok:
    def __bool__(self):
        return True


def validate_even_cactus(g: Graph, h: EvenCactus) -> Ok | Violation:
    """Check every cactus invariant; return Ok() or the first Violation found."""
    parts = list(h.cycles) + list(h.paths)
    if not parts:
        return Violation("structure", "cactus has no cycles and no paths")
    for c in h.cycles:
        if len(c) < 3:
            return Violation("structure", f"cycle {list(c)} has fewer than 3 vertices")
    for p in h.paths:
        if len(p) == 0:
            return Violation("structure", "empty path")
        if len(p) == 1 and (len(parts) != 1 or g.n != 1):
            return Violation("structure", f"single-vertex path {list(p)} in a larger cactus")
    for part in parts:
        if len(set(part)) != len(part):
            return Violation("structure", f"repeated vertex in {list(part)}")
        if any(not 0 <= v < g.n for v in part):
            return Violation("structure", f"vertex out of range in {list(part)}")

    edges = [frozenset(e) for e in h.edges()]
    for e in edges:
        a, b = tuple(e)
        if not g.has_edge(a, b):
            return Violation("edge-membership", f"{a}-{b} is not an edge of the host graph")
    if len(set(edges)) != len(edges):
        return Violation("edge-overlap", "some edge is listed twice")

    seen: set[int] = set()
    for c in h.cycles:
        if seen & set(c):
            return Violation("cycles-disjoint", f"cycle {list(c)} meets an earlier cycle")
        seen |= set(c)
    seen = set()
    for p in h.paths:
        if seen & set(p):
            return Violation("paths-disjoint", f"path {list(p)} meets an earlier path")
        seen |= set(p)

    for c in h.cycles:
        if len(c) % 2:
            return Violation("odd-cycle", f"cycle {list(c)} has odd length {len(c)}")

    deg = [0] * g.n
    rows = [0] * g.n
    for e in edges:
        a, b = tuple(e)
        deg[a] += 1
        deg[b] += 1
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    worst = max(range(g.n), key=lambda v: deg[v])
    if deg[worst] > 3:
        return Violation("degree", f"vertex {worst} has degree {deg[worst]}")

    verts = h.vertices()
    if verts != set(range(g.n)):
        missing = sorted(set(range(g.n)) - verts)
        return Violation("span", f"vertices not covered: {missing}")

    reached = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in bits(rows[u]):
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if len(reached) != g.n:
        return Violation("connectivity", "cactus is disconnected")

    rank = len(edges) - g.n + 1
    if rank != len(h.cycles):
        return Violation("extra-cycle", f"cycle rank {rank} but {len(h.cycles)} cycles listed")
    return Ok()


@dataclass(frozen=True)
class CactusTree:
    """Blocks of a cactus (cycles first, then paths) joined at shared vertices.

    ``edges`` holds (parent_node, child_node, shared_vertex) in breadth-first
    order from ``root``.
    """

    nodes: tuple[tuple[str, tuple[int, ...]], ...]
    edges: tuple[tuple[int, int, int], ...]
    root: int = 0


def cactus_tree(h: EvenCactus) -> CactusTree:
    nodes = [("cycle", c) for c in h.cycles] + [("path", p) for p in h.paths]
    where: dict[int, list[int]] = {}
    for i, (_, verts) in enumerate(nodes):
        for v in verts:
            where.setdefault(v, []).append(i)
    links: dict[int, list[tuple[int, int]]] = {i: [] for i in range(len(nodes))}
    for v in sorted(where):
        owners = where[v]
        if len(owners) > 2:
            raise InvalidCertificate(f"vertex {v} is shared by more than two blocks")
        if len(owners) == 2:
            a, b = owners
            links[a].append((b, v))
            links[b].append((a, v))
    tree_edges = []
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b, v in links[a]:
            if b in seen:
                continue
            seen.add(b)
            tree_edges.append((a, b, v))
            queue.append(b)
    if len(seen) != len(nodes) or len(tree_edges) != sum(len(x) for x in links.values()) // 2:
        raise InvalidCertificate("block structure is not a tree")
    return CactusTree(nodes=tuple(nodes), edges=tuple(tree_edges), root=0)


def staircase_cycle(cycle) -> list[tuple[int, int]]:
    """Hamilton cycle of C_2m x K2 using all 2m vertical edges."""
    if len(cycle) % 2:
        raise InvalidCertificate("staircase needs an even cycle")
    out = []
    for i, v in enumerate(cycle):
        out.extend([(v, 0), (v, 1)] if i % 2 == 0 else [(v, 1), (v, 0)])
    return out


def path_loop(path) -> list[tuple[int, int]]:
    """Hamilton cycle of P_m x K2 using the vertical edges at both ends (m >= 2)."""
    if len(path) < 2:
        raise InvalidCertificate("path block needs at least two vertices")
    return [(v, 0) for v in path] + [(v, 1) for v in reversed(path)]


def _open_at(seq, x, first_level):
    """Rotate a cycle containing the vertical edge at x into a path from (x, first_level) to (x, 1 - first_level)."""
    a, b = (x, first_level), (x, 1 - first_level)
    i = seq.index(a)
    k = len(seq)
    if seq[(i - 1) % k] == b:
        return seq[i:] + seq[:i]
    if seq[(i + 1) % k] == b:
        rev = seq[::-1]
        j = rev.index(a)
        return rev[j:] + rev[:j]
    raise InvalidCertificate(f"vertical edge at {x} is missing from a block cycle")


def splice(big, block, x):
    """Merge two prism cycles sharing only the fibre of x, dropping the vertical edge at x."""
    left = _open_at(big, x, 1)  # (x,1) ... (x,0)
    right = _open_at(block, x, 0)  # (x,0) ... (x,1)
    return left + right[1:-1]


def prism_ham_from_cactus(g: Graph, h: EvenCactus, on_merge=None) -> PrismHamCycle:
    """Hamilton cycle of prism(g) from a spanning even cactus, by block splicing.

    ``on_merge(covered_vertices, cycle)`` is called after every splice, so
    callers can re-verify intermediate cycles.
    """
    report = validate_even_cactus(g, h)
    if not report:
        raise InvalidCertificate(f"invalid even cactus ({report.clause}): {report.detail}")
    if g.n < 2:
        raise InvalidCertificate("the prism over a single vertex has no Hamilton cycle")
    tree = cactus_tree(h)

    def block(node):
        kind, verts = tree.nodes[node]
        return staircase_cycle(verts) if kind == "cycle" else path_loop(verts)

    current = block(tree.root)
    covered = set(tree.nodes[tree.root][1])
    for parent, child, x in tree.edges:
        current = splice(current, block(child), x)
        covered |= set(tree.nodes[child][1])
        if on_merge is not None:
            on_merge(frozenset(covered), list(current))
    return PrismHamCycle(tuple(current))


def verify_prism_cycle(g: Graph, c: PrismHamCycle) -> bool:
    """Check that c is a Hamilton cycle of G x K2, straight from G's adjacency."""
    seq = list(c.sequence)
    if len(seq) != 2 * g.n or len(seq) < 3:
        return False
    if len(set(seq)) != len(seq):
        return False
    for v, lvl in seq:
        if lvl not in (0, 1) or not 0 <= v < g.n:
            return False
    for i, (v, lvl) in enumerate(seq):
        w, lvl2 = seq[(i + 1) % len(seq)]
        if v == w and lvl != lvl2:
            continue
        if lvl == lvl2 and g.adj[v] >> w & 1:
            continue
        return False
    return True


def decompose_cactus_edges(n: int, rows, cycles) -> EvenCactus | None:
    """Split a cactus subgraph (bitmask rows) into its given cycles plus paths.

    Returns None if what is left after removing cycle edges is not a union of
    vertex-disjoint paths.
    """
    rest = list(rows)
    for c in cycles:
        for a, b in zip(c, list(c[1:]) + [c[0]]):
            rest[a] &= ~(1 << b)
            rest[b] &= ~(1 << a)
    deg = [bin(r).count("1") for r in rest]
    if any(d > 2 for d in deg):
        return None
    on_cycle = {v for c in cycles for v in c}
    seen: set[int] = set()
    paths = []
    for v in range(n):
        if v in seen or deg[v] != 1:
            continue
        walk = [v]
        seen.add(v)
        prev, cur = -1, v
        while True:
            nxt = [w for w in bits(rest[cur]) if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            walk.append(cur)
            seen.add(cur)
        paths.append(tuple(walk))
    for v in range(n):
        if deg[v] == 2 and v not in seen:
            return None  # a leftover cycle among "path" edges
        if deg[v] == 0 and v not in on_cycle:
            if n == 1:
                paths.append((v,))
            else:
                return None
    return EvenCactus(cycles=tuple(tuple(c) for c in cycles), paths=tuple(sorted(paths)))


def random_even_cactus(seed: int, max_vertices: int = 30, extra_edges: bool = True) -> tuple[Graph, EvenCactus]:
    """A random valid even cactus and a host graph containing it.

    Blocks are grown as a tree: paths hang off free cycle vertices, even
    cycles hang off free path ends. Vertices are relabelled randomly and the
    host gets a few extra edges, so the cactus is not trivially the whole graph.
    """
    rng = Xoshiro256(seed)
    target = rng.randint(2, max(2, max_vertices))
    cycles: list[list[int]] = []
    paths: list[list[int]] = []
    free_cycle: list[int] = []
    free_ends: list[int] = []
    n = 0

    def fresh(k):
        nonlocal n
        out = list(range(n, n + k))
        n += k
        return out

    if target >= 4 and rng.random() < 0.7:
        length = 2 * rng.randint(2, min(4, target // 2))
        c = fresh(length)
        cycles.append(c)
        free_cycle.extend(c)
    else:
        p = fresh(rng.randint(2, min(5, target)))
        paths.append(p)
        free_ends.extend([p[0], p[-1]])

    while n < target:
        remaining = target - n
        options = []
        if free_cycle:
            options.append("path")
        if free_ends and remaining >= 3:
            options.append("cycle")
        if not options:
            break
        if rng.choice(options) == "path":
            anchor = free_cycle.pop(rng.randbelow(len(free_cycle)))
            p = [anchor] + fresh(rng.randint(1, min(4, remaining)))
            paths.append(p)
            free_ends.append(p[-1])
        else:
            anchor = free_ends.pop(rng.randbelow(len(free_ends)))
            length = 2 * rng.randint(2, min(4, (remaining + 1) // 2))
            c = [anchor] + fresh(length - 1)
            cycles.append(c)
            free_cycle.extend(c[1:])

    perm = list(range(n))
    rng.shuffle(perm)
    cycles = [[perm[v] for v in c] for c in cycles]
    paths = [[perm[v] for v in p] for p in paths]
    cactus = EvenCactus(cycles=cycles, paths=paths)
    edge_set = {frozenset(e) for e in cactus.edges()}
    if extra_edges and n >= 3:
        for _ in range(rng.randint(0, n)):
            a, b = rng.randbelow(n), rng.randbelow(n)
            if a != b:
                edge_set.add(frozenset((a, b)))
    g = from_edge_list(n, sorted(tuple(sorted(e)) for e in edge_set))
    return g, cactus

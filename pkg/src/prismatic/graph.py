"""Simple undirected graphs on vertices 0..n-1, plus I/O formats and products.

Adjacency is stored as one bitmask per vertex: bit ``v`` of ``adj[u]`` is set
iff ``uv`` is an edge. Graphs are immutable and hashable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from prismatic.errors import GraphFormatError
from prismatic.rng import Xoshiro256

GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n >= 0")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {u} has a neighbour outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at {u}")
            w = row
            while w:
                low = w & -w
                v = low.bit_length() - 1
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                w ^= low

    @property
    def m(self) -> int:
        return sum(bin(row).count("1") for row in self.adj) // 2

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return bits(self.adj[u])

    def degree(self, u: int) -> int:
        return bin(self.adj[u]).count("1")

    def max_degree(self) -> int:
        return max((self.degree(u) for u in range(self.n)), default=0)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(row | (1 << u) == full for u, row in enumerate(self.adj))

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled densely; also returns new->old id map."""
        order = sorted(set(keep))
        index = {old: new for new, old in enumerate(order)}
        rows = []
        for old in order:
            row = 0
            for v in bits(self.adj[old]):
                if v in index:
                    row |= 1 << index[v]
            rows.append(row)
        return Graph(len(order), tuple(rows)), order

    def add_universal_clique(self, r: int) -> Graph:
        """Return G + K_r with every new vertex adjacent to all of V(G) and to each other."""
        n = self.n
        total = n + r
        new_bits = ((1 << r) - 1) << n
        rows = [row | new_bits for row in self.adj]
        full = (1 << total) - 1
        for i in range(r):
            rows.append(full & ~(1 << (n + i)))
        return Graph(total, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# --------------------------------------------------------------------------
# graph6 (short form only, n <= 62)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside the graph6 range")
    if ord(s[0]) == 126:
        raise GraphFormatError("long-form graph6 header (n > 62) is not supported")
    n = ord(s[0]) - 63
    body = s[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 body has {len(body)} chars, expected {(nbits + 5) // 6} for n={n}"
        )
    value = 0
    for ch in body:
        value = (value << 6) | (ord(ch) - 63)
    pad = 6 * len(body) - nbits
    if value & ((1 << pad) - 1):
        raise GraphFormatError("graph6 padding bits are not zero")
    value >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    if not 0 <= g.n <= GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports 0 <= n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    width = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = 0
                width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | GraphFormatError]]:
    """Yield (line_number, raw_line, graph-or-error) for each non-blank line.

    Malformed lines come back as a GraphFormatError value so stream
    consumers can count them and keep going.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, line, parse_graph6(line)
        except GraphFormatError as exc:
            yield lineno, line, exc


# --------------------------------------------------------------------------
# edge-list text: "n m" then m lines "u v"


def parse_edge_list_text(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphFormatError("edge list is empty")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        return from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    """Read a single graph from a file in graph6 or edge-list format."""
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    first = text.strip().splitlines()[0] if text.strip() else ""
    if len(first.split()) == 2 and all(tok.lstrip("-").isdigit() for tok in first.split()):
        return parse_edge_list_text(text)
    return parse_graph6(first)


# --------------------------------------------------------------------------
# products; product vertex (u, i) is numbered u + i*n


def product_vertex(u: int, level: int, n: int) -> int:
    return u + level * n


def split_product_vertex(x: int, n: int) -> tuple[int, int]:
    return x % n, x // n


def _layered(g: Graph, t: int, fiber_edges: Iterable[tuple[int, int]]) -> Graph:
    n = g.n
    rows = [0] * (n * t)
    for level in range(t):
        off = level * n
        for u in range(n):
            rows[off + u] |= g.adj[u] << off
    fiber = list(fiber_edges)
    for u in range(n):
        for i, j in fiber:
            a, b = u + i * n, u + j * n
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return Graph(n * t, tuple(rows))


def prism(g: Graph) -> Graph:
    """G box K2."""
    return _layered(g, 2, [(0, 1)])


def cartesian_cycle(g: Graph, t: int) -> Graph:
    """G box C_t, t >= 3."""
    if t < 3:
        raise ValueError("cartesian_cycle needs t >= 3")
    return _layered(g, t, [(i, (i + 1) % t) for i in range(t)])


def cartesian_complete(g: Graph, t: int) -> Graph:
    """G box K_t, t >= 2."""
    if t < 2:
        raise ValueError("cartesian_complete needs t >= 2")
    return _layered(g, t, [(i, j) for i in range(t) for j in range(i + 1, t)])


# --------------------------------------------------------------------------
# families


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(k: int, a: int) -> Graph:
    """K_{k,a} with parts {0..k-1} and {k..k+a-1}."""
    if k < 1 or a < 1:
        raise ValueError("both part sizes must be at least 1")
    return from_edge_list(k + a, [(i, k + j) for i in range(k) for j in range(a)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def named_graph(name: str) -> Graph:
    """Build a graph from a name such as ``petersen``, ``cycle(5)``, ``path(4)``, ``complete(3)``.

    Also accepts ``bipartite(k,a)`` and ``star(k)``.
    """
    spec = name.strip().lower().replace(" ", "")
    if spec == "petersen":
        return petersen_graph()
    if "(" in spec and spec.endswith(")"):
        head, _, args = spec[:-1].partition("(")
        try:
            params = [int(x) for x in args.split(",")]
        except ValueError as exc:
            raise ValueError(f"bad parameters in {name!r}") from exc
        builders = {
            "cycle": cycle_graph,
            "path": path_graph,
            "complete": complete_graph,
            "bipartite": complete_bipartite,
            "star": star_graph,
        }
        if head in builders:
            return builders[head](*params)
    raise ValueError(f"unknown graph name {name!r}")


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) driven by xoshiro256** (see prismatic.rng).

    Pairs are visited in the order (0,1), (0,2), ..., (1,2), ... and each
    consumes exactly one draw, so the output depends only on (n, p, seed).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    rng = Xoshiro256(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return from_edge_list(n, edges)

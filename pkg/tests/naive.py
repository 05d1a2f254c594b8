"""Brute-force reference implementations used as test oracles.

Deliberately simple and slow; nothing here is shared with the library code
beyond the Graph container itself.
"""
from fractions import Fraction
from itertools import combinations, permutations
from pathlib import Path

from prismatic.graph import read_graph6_lines

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_graphs(n):
    with open(FIXTURES / f"graphs_n{n}.g6") as fh:
        for _, line, g in read_graph6_lines(fh):
            yield line, g


def graphs_upto(lo, hi):
    for n in range(lo, hi + 1):
        yield from fixture_graphs(n)


def adjacency_sets(g):
    return [set(w for w in range(g.n) if g.adj[v] >> w & 1) for v in range(g.n)]


def components(g, removed=frozenset()):
    adj = adjacency_sets(g)
    left = [v for v in range(g.n) if v not in removed]
    seen, count = set(), 0
    for s in left:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def alpha(g):
    adj = adjacency_sets(g)
    for size in range(g.n, 0, -1):
        for sub in combinations(range(g.n), size):
            if all(b not in adj[a] for a, b in combinations(sub, 2)):
                return size
    return 0


def kappa(g):
    for size in range(g.n - 1):
        for sub in combinations(range(g.n), size):
            if components(g, frozenset(sub)) >= 2:
                return size
    return g.n - 1


def toughness(g):
    best = None
    for size in range(g.n - 1):
        for sub in combinations(range(g.n), size):
            c = components(g, frozenset(sub))
            if c >= 2:
                val = Fraction(size, c)
                if best is None or val < best:
                    best = val
    return best  # None for complete graphs


def hamiltonian_by_permutations(g):
    if g.n < 3:
        return False
    adj = adjacency_sets(g)
    for perm in permutations(range(1, g.n)):
        seq = (0,) + perm
        if perm[0] < perm[-1] and all(seq[i + 1] in adj[seq[i]] for i in range(g.n - 1)) and 0 in adj[seq[-1]]:
            return True
    return False


def hamiltonian_by_dp(g):
    """Held-Karp reachability over (subset, endpoint) states."""
    n = g.n
    if n < 3:
        return False
    adj = adjacency_sets(g)
    reach = [0] * (1 << n)  # reach[S] = bitmask of endpoints v with a 0..v path covering S
    reach[1] = 1
    for s in range(1, 1 << n):
        if not s & 1 or not reach[s]:
            continue
        ends = reach[s]
        for v in range(n):
            if ends >> v & 1:
                for w in adj[v]:
                    if not s >> w & 1:
                        reach[s | 1 << w] |= 1 << w
    full = (1 << n) - 1
    return any(reach[full] >> v & 1 and 0 in adj[v] for v in range(1, n))


def is_tree(g):
    return g.n >= 1 and g.m == g.n - 1 and components(g) == 1

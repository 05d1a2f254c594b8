"""Pure-Python hot kernels over bitmask adjacency.

These are the reference implementations; ``_ckernels.pyx`` mirrors them line
for line with C integer types. Both backends must return identical results
(tests/test_kernels.py checks this).
"""
import time

NONE = 0
FOUND = 1
BUDGET = 2

_CLOCK_EVERY = 4096


def popcount(x):
    return bin(x).count("1")


def count_components(adj, alive):
    """Number of connected components of the subgraph induced on ``alive``."""
    count = 0
    rest = alive
    while rest:
        frontier = rest & -rest
        seen = frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            v = low.bit_length() - 1
            new = adj[v] & alive & ~seen
            seen |= new
            frontier |= new
        rest &= ~seen
        count += 1
    return count


def _structure_ok(adj, cur, start, unvis):
    """Cut-vertex test for a cur->start Hamilton path through all of ``unvis``.

    H is induced on unvis + {cur, start}. Necessary: H connected; H - cur and
    H - start connected; for w in unvis, H - w has at most two components,
    and when it has two, cur and start lie in different ones.
    """
    hmask = unvis | (1 << cur) | (1 << start)
    disc = {cur: 0}
    low = {cur: 0}
    size = {}
    order = 1
    root_children = 0
    stack = [(cur, adj[cur] & hmask)]
    parent_of = {cur: -1}
    separating = {}
    while stack:
        v, pending = stack[-1]
        if pending:
            b = pending & -pending
            stack[-1] = (v, pending ^ b)
            w = b.bit_length() - 1
            if w in disc:
                if w != parent_of[v] and disc[w] < low[v]:
                    low[v] = disc[w]
                continue
            disc[w] = low[w] = order
            order += 1
            parent_of[w] = v
            if v == cur:
                root_children += 1
                if root_children > 1:
                    return False
            stack.append((w, adj[w] & hmask))
        else:
            stack.pop()
            size[v] = order - disc[v]
            p = parent_of[v]
            if p >= 0:
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != cur and low[v] >= disc[p]:
                    if p == start:
                        return False
                    if p in separating:
                        return False
                    separating[p] = v
    if order != popcount(hmask):
        return False
    ds = disc[start]
    for w, c in separating.items():
        if not disc[c] <= ds < disc[c] + size[c]:
            return False
    return True


def _two_connected(adj, n):
    """True iff the graph on 0..n-1 is connected and has no cut vertex (n >= 3)."""
    full = (1 << n) - 1
    if count_components(adj, full) != 1:
        return False
    for v in range(n):
        if count_components(adj, full & ~(1 << v)) != 1:
            return False
    return True


def hamilton_cycle(adj, n, deadline=None):
    """Exhaustive backtracking for a Hamilton cycle.

    Returns (status, cycle). status FOUND comes with the vertex sequence,
    NONE means no Hamilton cycle exists, BUDGET means the deadline
    (a time.monotonic() value) passed first.
    """
    if n < 3:
        return NONE, None
    if not _two_connected(adj, n):
        return NONE, None
    full = (1 << n) - 1
    start = min(range(n), key=lambda v: (popcount(adj[v]), v))
    path = [start]
    nodes = [0]
    timed_out = [False]

    def extend(cur, visited):
        if visited == full:
            return bool(adj[cur] >> start & 1)
        nodes[0] += 1
        if deadline is not None and nodes[0] % _CLOCK_EVERY == 0 and time.monotonic() > deadline:
            timed_out[0] = True
            return False
        unvis = full & ~visited
        base = unvis | (1 << cur) | (1 << start)
        forced = -1
        rest = unvis
        while rest:
            b = rest & -rest
            rest ^= b
            w = b.bit_length() - 1
            d = popcount(adj[w] & base)
            if d < 2:
                return False
            if d == 2 and cur != start and adj[w] >> cur & 1:
                if forced >= 0:
                    return False
                forced = w
        if cur != start:
            if not adj[start] & unvis:
                return False
            if not _structure_ok(adj, cur, start, unvis):
                return False
        cand = (1 << forced) if forced >= 0 else adj[cur] & unvis
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            path.append(w)
            if extend(w, visited | b):
                return True
            path.pop()
            if timed_out[0]:
                return False
        return False

    found = extend(start, 1 << start)
    if found:
        return FOUND, list(path)
    if timed_out[0]:
        return BUDGET, None
    return NONE, None


def _color_sort(comp, cand):
    """Greedy colouring of the complement restricted to ``cand``.

    Returns vertices ordered by colour class and the colour number of each;
    colour number bounds the independent set still reachable.
    """
    order = []
    colors = []
    uncolored = cand
    k = 0
    while uncolored:
        k += 1
        q = uncolored
        while q:
            b = q & -q
            v = b.bit_length() - 1
            uncolored &= ~b
            q &= ~b & ~comp[v]
            order.append(v)
            colors.append(k)
    return order, colors


def max_independent_set(adj, n):
    """Maximum independent set as a bitmask (branch and bound, colouring bound).

    Max clique in the complement, MCQ style: greedy colouring of the
    complement yields cliques of G, so the number of colour classes bounds
    how many more independent vertices can be added.
    """
    if n == 0:
        return 0
    full = (1 << n) - 1
    comp = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    best = [0, 0]

    def expand(cand, chosen, size):
        order, colors = _color_sort(comp, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best[0]:
                return
            v = order[i]
            nxt = cand & comp[v]
            if nxt:
                expand(nxt, chosen | (1 << v), size + 1)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = chosen | (1 << v)
            cand &= ~(1 << v)

    expand(full, 0, 0)
    return best[1]


def toughness_scan(adj, n):
    """Minimise |S| / c(G - S) over all S with c(G - S) >= 2.

    Returns (|S|, c, S_mask) for the first minimiser in increasing mask
    order, or None when no such S exists (complete graphs).
    """
    full = (1 << n) - 1
    best = None
    for s in range(1 << n):
        k = popcount(s)
        if k > n - 2:
            continue
        if best is not None and k * best[1] >= best[0] * (n - k):
            # G - S has at most n - k components
            continue
        c = count_components(adj, full & ~s)
        if c >= 2 and (best is None or k * best[1] < best[0] * c):
            best = (k, c, s)
    return best

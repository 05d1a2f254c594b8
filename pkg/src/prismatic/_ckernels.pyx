# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors prismatic._pykernels for graphs with n <= 64."""
import time

ctypedef unsigned long long u64

cdef int NONE = 0
cdef int FOUND = 1
cdef int BUDGET = 2
cdef int CLOCK_EVERY = 4096

MAX_N = 64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popc(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit_index(u64 x) nogil:
    return __builtin_ctzll(x)


cdef inline u64 bit(int v) nogil:
    return (<u64>1) << v


cdef inline u64 full_mask(int n) nogil:
    if n >= 64:
        return ~(<u64>0)
    return (bit(n)) - 1


cdef int c_count_components(u64* adj, u64 alive) nogil:
    cdef int count = 0
    cdef u64 rest = alive
    cdef u64 frontier, seen, low, new
    cdef int v
    while rest:
        frontier = rest & (~rest + 1)
        seen = frontier
        while frontier:
            low = frontier & (~frontier + 1)
            frontier ^= low
            v = lowbit_index(low)
            new = adj[v] & alive & ~seen
            seen |= new
            frontier |= new
        rest &= ~seen
        count += 1
    return count


def count_components(adj, alive):
    cdef u64 a[64]
    cdef int i
    for i in range(len(adj)):
        a[i] = adj[i]
    return c_count_components(a, alive)


cdef bint c_structure_ok(u64* adj, int cur, int start, u64 unvis) nogil:
    cdef u64 hmask = unvis | bit(cur) | bit(start)
    cdef int disc[64]
    cdef int low[64]
    cdef int size[64]
    cdef int parent[64]
    cdef int sep_child[64]
    cdef u64 pending[64]
    cdef int stack[64]
    cdef int sp = 0
    cdef int order = 1
    cdef int root_children = 0
    cdef int i, v, w, p
    cdef u64 b, visited = bit(cur)
    for i in range(64):
        sep_child[i] = -1
    disc[cur] = 0
    low[cur] = 0
    parent[cur] = -1
    pending[cur] = adj[cur] & hmask
    stack[0] = cur
    sp = 1
    while sp > 0:
        v = stack[sp - 1]
        if pending[v]:
            b = pending[v] & (~pending[v] + 1)
            pending[v] ^= b
            w = lowbit_index(b)
            if visited & b:
                if w != parent[v] and disc[w] < low[v]:
                    low[v] = disc[w]
                continue
            visited |= b
            disc[w] = order
            low[w] = order
            order += 1
            parent[w] = v
            if v == cur:
                root_children += 1
                if root_children > 1:
                    return False
            pending[w] = adj[w] & hmask
            stack[sp] = w
            sp += 1
        else:
            sp -= 1
            size[v] = order - disc[v]
            p = parent[v]
            if p >= 0:
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != cur and low[v] >= disc[p]:
                    if p == start:
                        return False
                    if sep_child[p] >= 0:
                        return False
                    sep_child[p] = v
    if order != popc(hmask):
        return False
    cdef int ds = disc[start]
    cdef int c
    cdef u64 rest = hmask
    while rest:
        b = rest & (~rest + 1)
        rest ^= b
        w = lowbit_index(b)
        c = sep_child[w]
        if c >= 0 and not (disc[c] <= ds < disc[c] + size[c]):
            return False
    return True


cdef bint c_two_connected(u64* adj, int n) nogil:
    cdef u64 full = full_mask(n)
    cdef int v
    if c_count_components(adj, full) != 1:
        return False
    for v in range(n):
        if c_count_components(adj, full & ~bit(v)) != 1:
            return False
    return True


cdef struct HamCtx:
    u64* adj
    int n
    u64 full
    int start
    int* path
    int depth
    long long nodes
    bint timed_out
    bint has_deadline
    double deadline


cdef bint ham_extend(HamCtx* ctx, int cur, u64 visited):
    cdef u64* adj = ctx.adj
    cdef int start = ctx.start
    cdef u64 unvis, base, rest, b, cand
    cdef int w, d, forced
    if visited == ctx.full:
        return (adj[cur] >> start) & 1
    ctx.nodes += 1
    if ctx.has_deadline and ctx.nodes % CLOCK_EVERY == 0:
        if time.monotonic() > ctx.deadline:
            ctx.timed_out = True
            return False
    unvis = ctx.full & ~visited
    base = unvis | bit(cur) | bit(start)
    forced = -1
    rest = unvis
    while rest:
        b = rest & (~rest + 1)
        rest ^= b
        w = lowbit_index(b)
        d = popc(adj[w] & base)
        if d < 2:
            return False
        if d == 2 and cur != start and (adj[w] >> cur) & 1:
            if forced >= 0:
                return False
            forced = w
    if cur != start:
        if not (adj[start] & unvis):
            return False
        if not c_structure_ok(adj, cur, start, unvis):
            return False
    if forced >= 0:
        cand = bit(forced)
    else:
        cand = adj[cur] & unvis
    while cand:
        b = cand & (~cand + 1)
        cand ^= b
        w = lowbit_index(b)
        ctx.path[ctx.depth] = w
        ctx.depth += 1
        if ham_extend(ctx, w, visited | b):
            return True
        ctx.depth -= 1
        if ctx.timed_out:
            return False
    return False


def hamilton_cycle(adj, int n, deadline=None):
    if n > 64:
        raise ValueError("compiled kernel supports n <= 64")
    cdef u64 a[64]
    cdef int path[64]
    cdef int i, v, best_deg, deg
    if n < 3:
        return NONE, None
    for i in range(n):
        a[i] = adj[i]
    if not c_two_connected(a, n):
        return NONE, None
    cdef int start = 0
    best_deg = 1000
    for v in range(n):
        deg = popc(a[v])
        if deg < best_deg:
            best_deg = deg
            start = v
    cdef HamCtx ctx
    ctx.adj = a
    ctx.n = n
    ctx.full = full_mask(n)
    ctx.start = start
    ctx.path = path
    path[0] = start
    ctx.depth = 1
    ctx.nodes = 0
    ctx.timed_out = False
    ctx.has_deadline = deadline is not None
    ctx.deadline = deadline if deadline is not None else 0.0
    if ham_extend(&ctx, start, bit(start)):
        return FOUND, [path[i] for i in range(ctx.depth)]
    if ctx.timed_out:
        return BUDGET, None
    return NONE, None


cdef int color_sort(u64* comp, u64 cand, int* order, int* colors) nogil:
    cdef u64 uncolored = cand, q, b
    cdef int k = 0, cnt = 0, v
    while uncolored:
        k += 1
        q = uncolored
        while q:
            b = q & (~q + 1)
            v = lowbit_index(b)
            uncolored &= ~b
            q &= ~b & ~comp[v]
            order[cnt] = v
            colors[cnt] = k
            cnt += 1
    return cnt


cdef void mis_expand(u64* comp, u64 cand, u64 chosen, int size, int* best_size, u64* best_set) nogil:
    cdef int order[64]
    cdef int colors[64]
    cdef int cnt = color_sort(comp, cand, order, colors)
    cdef int i, v
    cdef u64 nxt
    i = cnt - 1
    while i >= 0:
        if size + colors[i] <= best_size[0]:
            return
        v = order[i]
        nxt = cand & comp[v]
        if nxt:
            mis_expand(comp, nxt, chosen | bit(v), size + 1, best_size, best_set)
        elif size + 1 > best_size[0]:
            best_size[0] = size + 1
            best_set[0] = chosen | bit(v)
        cand &= ~bit(v)
        i -= 1


def max_independent_set(adj, int n):
    if n > 64:
        raise ValueError("compiled kernel supports n <= 64")
    if n == 0:
        return 0
    cdef u64 comp[64]
    cdef u64 full = full_mask(n)
    cdef int v
    for v in range(n):
        comp[v] = full & ~(<u64>adj[v]) & ~bit(v)
    cdef int best_size = 0
    cdef u64 best_set = 0
    mis_expand(comp, full, 0, 0, &best_size, &best_set)
    return best_set


def toughness_scan(adj, int n):
    if n > 30:
        raise ValueError("subset scan is limited to n <= 30")
    cdef u64 a[64]
    cdef int i
    for i in range(n):
        a[i] = adj[i]
    cdef u64 full = full_mask(n)
    cdef u64 s, total = bit(n)
    cdef int k, c
    cdef long long bk = -1, bc = 0
    cdef u64 bs = 0
    s = 0
    while s < total:
        k = popc(s)
        if k <= n - 2:
            if bk < 0 or k * bc < bk * (n - k):
                c = c_count_components(a, full & ~s)
                if c >= 2 and (bk < 0 or k * bc < bk * c):
                    bk = k
                    bc = c
                    bs = s
        s += 1
    if bk < 0:
        return None
    return (int(bk), int(bc), int(bs))

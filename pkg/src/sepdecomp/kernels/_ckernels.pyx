# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python search kernels (n <= 62).

Same contracts and tie-breaks as ``_pykernels``: ascending separator size,
lexicographic separator order, lexicographically smallest A side.  Masks are
single machine words here, so graphs must fit in 62 vertices; treewidth
additionally allocates 2^n bytes and is capped at n <= 28.
"""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "compiled"

MAX_N = 62
_TW_MAX_N = 28

ctypedef unsigned long long u64


cdef inline int _popcnt(u64 x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _lowbit_index(u64 x) nogil:
    cdef int i = 0
    while not (x >> i) & 1:
        i += 1
    return i


cdef u64 _component(u64 *adj, u64 universe, int start) nogil:
    cdef u64 comp = (<u64>1) << start
    cdef u64 frontier = comp
    cdef u64 nxt
    cdef u64 f
    cdef int v
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = _lowbit_index(f)
            f &= f - 1
            nxt |= adj[v]
        frontier = nxt & universe & ~comp
        comp |= frontier
    return comp


cdef int _components(u64 *adj, u64 universe, u64 *out) nogil:
    """Components of `universe`, ordered by lowest vertex.  Returns count."""
    cdef int count = 0
    cdef u64 rest = universe
    cdef u64 comp
    while rest:
        comp = _component(adj, universe, _lowbit_index(rest))
        out[count] = comp
        count += 1
        rest &= ~comp
    return count


cdef inline bint _sum_window(int *sizes, int start, int count, int lo, int hi) nogil:
    """Is some subset sum of sizes[start:count] within [lo, hi]?"""
    cdef u64 ach = 1
    cdef u64 window
    cdef int i, lo2
    if hi > 62:
        hi = 62  # subset sums never exceed n <= 62
    if hi < lo or hi < 0:
        return 0
    lo2 = lo if lo > 0 else 0
    for i in range(start, count):
        ach |= ach << sizes[i]
    window = (((<u64>1) << (hi - lo2 + 1)) - 1) << lo2
    return (ach & window) != 0


cdef int _lex_min_a_side(u64 z_mask, u64 *comps, int *weights, int count,
                         int lo, int hi, u64 *a_out) nogil:
    """Same greedy as the pure kernel; returns 1 and fills a_out on success."""
    cdef u64 a_mask = z_mask
    cdef int cur = 0
    cdef int i
    if not _sum_window(weights, 0, count, lo, hi):
        return 0
    for i in range(count):
        if lo <= cur <= hi:
            a_out[0] = a_mask
            return 1
        if _sum_window(weights, i + 1, count,
                       lo - cur - weights[i], hi - cur - weights[i]):
            a_mask |= comps[i]
            cur += weights[i]
    a_out[0] = a_mask
    return 1


cdef class _Scratch:
    cdef u64 *adj
    cdef u64 *comps
    cdef int *weights
    cdef int n

    def __cinit__(self, int n, adj_masks):
        cdef int i
        self.n = n
        self.adj = <u64 *>malloc(n * sizeof(u64)) if n else NULL
        self.comps = <u64 *>malloc(n * sizeof(u64)) if n else NULL
        self.weights = <int *>malloc(n * sizeof(int)) if n else NULL
        if n and (self.adj is NULL or self.comps is NULL or self.weights is NULL):
            raise MemoryError()
        for i in range(n):
            self.adj[i] = adj_masks[i]

    def __dealloc__(self):
        free(self.adj)
        free(self.comps)
        free(self.weights)


cdef bint _next_combination(int *idx, int k, int n) nogil:
    """Advance k ascending indices in lexicographic order; 0 when exhausted."""
    cdef int i = k - 1
    while i >= 0 and idx[i] == n - k + i:
        i -= 1
    if i < 0:
        return 0
    idx[i] += 1
    while i + 1 < k:
        idx[i + 1] = idx[i] + 1
        i += 1
    return 1


cdef int _search(int n, _Scratch s, u64 w_mask, int max_order,
                 u64 *z_out, u64 *a_out) except -2:
    """Shared driver for the two minimum-separation searches.

    The plain balanced search is the W-balanced search with W = V, so both
    entry points funnel here with the appropriate w_mask.  Returns the
    separator size, or -1 when nothing of order <= max_order exists.
    """
    cdef u64 full = ((<u64>1) << n) - 1 if n else 0
    cdef int w_total = _popcnt(w_mask)
    cdef int hi = (2 * w_total) // 3
    cdef int k, i, count, lo
    cdef u64 z_mask, a_mask
    cdef int *idx = <int *>malloc((max_order + 1) * sizeof(int))
    if idx is NULL:
        raise MemoryError()
    try:
        for k in range(min(max_order, n) + 1):
            for i in range(k):
                idx[i] = i
            while True:
                z_mask = 0
                for i in range(k):
                    z_mask |= (<u64>1) << idx[i]
                lo = _popcnt(w_mask & ~z_mask) - hi
                count = _components(s.adj, full & ~z_mask, s.comps)
                for i in range(count):
                    s.weights[i] = _popcnt(s.comps[i] & w_mask)
                if _lex_min_a_side(z_mask, s.comps, s.weights, count,
                                   lo, hi, &a_mask):
                    z_out[0] = z_mask
                    a_out[0] = a_mask
                    return k
                if k == 0 or not _next_combination(idx, k, n):
                    break
        return -1
    finally:
        free(idx)


def min_balanced_separation(n, adj_masks, max_order):
    """(order, z_mask, a_mask) of the minimum balanced separation, or None."""
    if n > MAX_N:
        raise ValueError(f"compiled kernels handle n <= {MAX_N}, got {n}")
    cdef u64 full = ((<u64>1) << <int>n) - 1 if n else 0
    cdef u64 z_mask = 0, a_mask = 0
    s = _Scratch(n, adj_masks)
    cdef int k = _search(n, s, full, min(int(max_order), int(n)),
                         &z_mask, &a_mask)
    if k < 0:
        return None
    return k, int(z_mask), int(a_mask)


def min_w_balanced_separation(n, adj_masks, w_mask, max_order):
    """Like min_balanced_separation but balancing only vertices of W."""
    if n > MAX_N:
        raise ValueError(f"compiled kernels handle n <= {MAX_N}, got {n}")
    cdef u64 z_mask = 0, a_mask = 0
    s = _Scratch(n, adj_masks)
    cdef int k = _search(n, s, <u64>w_mask, min(int(max_order), int(n)),
                         &z_mask, &a_mask)
    if k < 0:
        return None
    return k, int(z_mask), int(a_mask)


def separation_number(n, adj_masks):
    """max over induced subgraphs of the minimum balanced-separation order."""
    if n > MAX_N:
        raise ValueError(f"compiled kernels handle n <= {MAX_N}, got {n}")
    if n == 0:
        return 0
    cdef _Scratch s = _Scratch(n, adj_masks)
    cdef int best = 0
    cdef u64 sub
    cdef int nn, hi, lo, k, i, count, found
    cdef int *idx = <int *>malloc(n * sizeof(int))
    cdef int *verts = <int *>malloc(n * sizeof(int))
    cdef u64 z_mask, rest
    if idx is NULL or verts is NULL:
        free(idx)
        free(verts)
        raise MemoryError()
    try:
        for sub in range(1, ((<u64>1) << n)):
            nn = _popcnt(sub)
            if (nn + 2) // 3 <= best:
                continue
            rest = sub
            i = 0
            while rest:
                verts[i] = _lowbit_index(rest)
                rest &= rest - 1
                i += 1
            hi = (2 * nn) // 3
            k = best
            while True:
                lo = nn - k - hi
                found = 0
                for i in range(k):
                    idx[i] = i
                while True:
                    z_mask = 0
                    for i in range(k):
                        z_mask |= (<u64>1) << verts[idx[i]]
                    count = _components(s.adj, sub & ~z_mask, s.comps)
                    for i in range(count):
                        s.weights[i] = _popcnt(s.comps[i])
                    if _sum_window(s.weights, 0, count, lo, hi):
                        found = 1
                        break
                    if k == 0 or not _next_combination(idx, k, nn):
                        break
                if found:
                    break
                k += 1
            if k > best:
                best = k
        return best
    finally:
        free(idx)
        free(verts)


def treewidth(n, adj_masks):
    """Exact treewidth DP over elimination prefixes -> (tw, order)."""
    if n > _TW_MAX_N:
        raise ValueError(f"compiled treewidth handles n <= {_TW_MAX_N}, got {n}")
    if n == 0:
        return -1, ()
    cdef _Scratch s = _Scratch(n, adj_masks)
    cdef u64 size = (<u64>1) << n
    cdef signed char *opt = <signed char *>malloc(size)
    cdef signed char *choice = <signed char *>malloc(size)
    cdef u64 sub, prev, reach, f, nbr
    cdef int v, u, q, cost, best_cost, best_v, pos
    if opt is NULL or choice is NULL:
        free(opt)
        free(choice)
        raise MemoryError()
    try:
        opt[0] = -1
        for sub in range(1, size):
            best_cost = n
            best_v = -1
            f = sub
            while f:
                v = _lowbit_index(f)
                f &= f - 1
                prev = sub ^ ((<u64>1) << v)
                reach = _component(s.adj, sub, v)
                nbr = 0
                while reach:
                    u = _lowbit_index(reach)
                    reach &= reach - 1
                    nbr |= s.adj[u]
                q = _popcnt(nbr & ~sub)
                cost = opt[prev] if opt[prev] > q else q
                if cost < best_cost:
                    best_cost = cost
                    best_v = v
            opt[sub] = <signed char>best_cost
            choice[sub] = <signed char>best_v
        order = [0] * n
        sub = size - 1
        for pos in range(n - 1, -1, -1):
            v = choice[sub]
            order[pos] = v
            sub ^= (<u64>1) << v
        return int(opt[size - 1]), tuple(order)
    finally:
        free(opt)
        free(choice)

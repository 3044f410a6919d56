"""Pure-Python search kernels over bitmask adjacency.

These are the hot inner loops: minimum balanced / W-balanced separation
search, separation number, and exact treewidth.  A Cython twin with the
same contracts lives in ``_ckernels.pyx``; ``sepdecomp.kernels`` picks one
at import time.  All functions here work for arbitrary n via Python big
ints; the compiled twin is limited to n <= 62.

Graphs come in as ``(n, adj_masks)`` where ``adj_masks[v]`` is the neighbor
bitmask of vertex v.  Vertex sets are bitmasks throughout.
"""

from __future__ import annotations

from itertools import combinations

IMPLEMENTATION = "python"


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def component_mask(adj_masks, universe: int, start: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj_masks[v]
        frontier = nxt & universe & ~comp
        comp |= frontier
    return comp


def components_in(adj_masks, universe: int) -> list[int]:
    """Component masks inside `universe`, ordered by lowest vertex."""
    out = []
    rest = universe
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = component_mask(adj_masks, universe, start)
        out.append(comp)
        rest &= ~comp
    return out


def _sum_window_reachable(sizes, lo: int, hi: int) -> bool:
    """Is some subset sum of `sizes` within [lo, hi]?"""
    if hi < lo or hi < 0:
        return False
    ach = 1
    for s in sizes:
        ach |= ach << s
    window = ((1 << (hi - max(lo, 0) + 1)) - 1) << max(lo, 0)
    return bool(ach & window)


def _lex_min_a_side(z_mask: int, comps, weights, lo: int, hi: int):
    """Lex-smallest A side (by sorted vertex tuple) over feasible groupings.

    A = Z + union of chosen components; a grouping is feasible when the
    chosen components' total weight lands in [lo, hi].  Components must be
    ordered by lowest vertex.  Returns None if no grouping is feasible.

    Greedy justification: candidates share Z, and the undecided component
    with the smallest vertex dominates the lex comparison, except that the
    "stop here" candidate (no further components) is a prefix of all
    extensions and therefore beats them.
    """
    if not _sum_window_reachable(weights, lo, hi):
        return None
    a_mask = z_mask
    cur = 0
    for i, comp in enumerate(comps):
        if lo <= cur <= hi:
            return a_mask
        rest = weights[i + 1 :]
        if _sum_window_reachable(rest, lo - cur - weights[i], hi - cur - weights[i]):
            a_mask |= comp
            cur += weights[i]
    assert lo <= cur <= hi
    return a_mask


def _grouping_feasible(adj_masks, universe: int, z_mask: int, lo: int, hi: int) -> bool:
    sizes = [_popcount(c) for c in components_in(adj_masks, universe & ~z_mask)]
    return _sum_window_reachable(sizes, lo, hi)


def min_balanced_separation(n, adj_masks, max_order):
    """Minimum-order balanced separation by exhaustive separator search.

    Returns (order, z_mask, a_mask) with the deterministic tie-break
    (smallest order, lex-smallest separator, lex-smallest A side), or None
    if no balanced separation of order <= max_order exists.  The B side is
    the complement of (a_mask minus z_mask).
    """
    full = (1 << n) - 1
    hi = (2 * n) // 3
    for k in range(min(max_order, n) + 1):
        lo = n - k - hi  # both strict sides must be <= 2n/3
        for zs in combinations(range(n), k):
            z_mask = 0
            for v in zs:
                z_mask |= 1 << v
            comps = components_in(adj_masks, full & ~z_mask)
            weights = [_popcount(c) for c in comps]
            a_mask = _lex_min_a_side(z_mask, comps, weights, lo, hi)
            if a_mask is not None:
                return k, z_mask, a_mask
    return None


def min_w_balanced_separation(n, adj_masks, w_mask, max_order):
    """Like min_balanced_separation but balancing only vertices of W."""
    full = (1 << n) - 1
    w_total = _popcount(w_mask)
    hi = (2 * w_total) // 3
    for k in range(min(max_order, n) + 1):
        for zs in combinations(range(n), k):
            z_mask = 0
            for v in zs:
                z_mask |= 1 << v
            lo = _popcount(w_mask & ~z_mask) - hi
            comps = components_in(adj_masks, full & ~z_mask)
            weights = [_popcount(c & w_mask) for c in comps]
            a_mask = _lex_min_a_side(z_mask, comps, weights, lo, hi)
            if a_mask is not None:
                return k, z_mask, a_mask
    return None


def separation_number(n, adj_masks) -> int:
    """max over induced subgraphs of the minimum balanced-separation order."""
    if n == 0:
        return 0
    best = 0
    for sub in range(1, 1 << n):
        nn = _popcount(sub)
        if (nn + 2) // 3 <= best:
            # (Z, V) with |Z| = ceil(nn/3) is always balanced
            continue
        verts = list(_bits(sub))
        hi = (2 * nn) // 3
        k = best
        while True:
            lo = nn - k - hi
            found = False
            for zs in combinations(verts, k):
                z_mask = 0
                for v in zs:
                    z_mask |= 1 << v
                if _grouping_feasible(adj_masks, sub, z_mask, lo, hi):
                    found = True
                    break
            if found:
                break
            k += 1
        best = max(best, k)
    return best


def treewidth(n, adj_masks):
    """Exact treewidth via DP over subsets of elimination prefixes.

    Returns (tw, elimination_order).
    """
    if n == 0:
        return -1, ()
    size = 1 << n
    opt = [0] * size
    choice = [0] * size
    opt[0] = -1
    for sub in range(1, size):
        best_cost = n
        best_v = -1
        for v in _bits(sub):
            prev = sub ^ (1 << v)
            reach = component_mask(adj_masks, prev | (1 << v), v)
            nbr = 0
            for u in _bits(reach):
                nbr |= adj_masks[u]
            q = _popcount(nbr & ~sub)
            cost = max(opt[prev], q)
            if cost < best_cost:
                best_cost = cost
                best_v = v
        opt[sub] = best_cost
        choice[sub] = best_v
    order = [0] * n
    sub = size - 1
    for pos in range(n - 1, -1, -1):
        v = choice[sub]
        order[pos] = v
        sub ^= 1 << v
    return opt[size - 1], tuple(order)

"""W-sequences: nested vertex sets linked to W by disjoint path families.

A W-sequence of width w is a chain W = W_0 ⊆ ... ⊆ W_{l+1} where each new
layer contributes exactly w fresh vertices linked to W by vertex-disjoint
paths inside the layer, the final layer contributes fewer than w, and a
separator of that final deficit size cuts everything beyond W_l off from W.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyWError, WidthOutOfRangeError
from .graph import Graph, VertexSet, _check_vertices, induced_subgraph
from .menger import VertexPath, disjoint_paths, separates


@dataclass(frozen=True)
class WSequence:
    levels: tuple[VertexSet, ...]  # W_0 .. W_{l+1}
    width_w: int
    z_set: VertexSet
    witness_paths: tuple[tuple[VertexPath, ...], ...]  # per level

    @property
    def ell(self) -> int:
        return len(self.levels) - 2

    @property
    def deltas(self) -> tuple[VertexSet, ...]:
        prev: VertexSet = frozenset()
        out = []
        for lvl in self.levels:
            out.append(lvl - prev)
            prev = lvl
        return tuple(out)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(d) for d in self.deltas)


def build_w_sequence(G: Graph, W: Iterable[int], w: int) -> WSequence:
    """Construct a W-sequence of width w by repeated Menger applications.

    Each round finds up to w vertex-disjoint (V\\W_i)-W paths; the last
    vertex of each path outside W_i joins the next layer, with the tail of
    the path (trimmed at its first W vertex) as the linking witness.  A
    round with fewer than w paths ends the sequence; its minimum separator
    becomes Z.
    """
    W = _check_vertices(G, W)
    if not W:
        raise EmptyWError("W must be non-empty")
    if not (1 <= w <= len(W)):
        raise WidthOutOfRangeError(f"w must be in 1..|W|, got {w}")
    levels = [W]
    witness = [tuple(VertexPath((v,)) for v in sorted(W))]
    current = set(W)
    while True:
        outside = frozenset(range(G.n)) - current
        res = disjoint_paths(G, outside, W, w)
        r = len(res.paths)
        if r < w:
            z = res.separator if res.separator is not None else frozenset()
            # r disjoint (V\W_l)-W paths each need a separator vertex, so a
            # size-r separator lives on them, inside W_{l+1}
            new_level, tails = _extend(current, res.paths, W)
            levels.append(frozenset(new_level))
            witness.append(tails)
            assert len(z) == r, "Menger separator size must equal path count"
            assert z <= levels[-1], "separator must lie inside the last layer"
            return WSequence(
                levels=tuple(levels), width_w=w, z_set=frozenset(z),
                witness_paths=tuple(witness),
            )
        new_level, tails = _extend(current, res.paths, W)
        current = new_level
        levels.append(frozenset(new_level))
        witness.append(tails)


def _extend(current: set, paths, W: frozenset):
    new_level = set(current)
    tails = []
    for p in paths:
        vs = p.vertices
        start = max(i for i, v in enumerate(vs) if v not in current)
        end = min(i for i, v in enumerate(vs) if i > start and v in W)
        new_level.add(vs[start])
        tails.append(VertexPath(vs[start : end + 1]))
    return new_level, tuple(tails)


def validate_w_sequence(G: Graph, ws: WSequence) -> tuple[bool, list[str]]:
    """Re-verify every defining condition independently.

    Returns (ok, violated tags).  Tags: nesting, (a)-(e), paths (structural
    checks on the stored witness paths).
    """
    violated: list[str] = []
    levels = ws.levels
    if len(levels) < 2:
        violated.append("nesting")
        return False, violated
    for lo, hi in zip(levels, levels[1:]):
        if not lo <= hi:
            violated.append("nesting")
            break
    W = levels[0]
    ell = ws.ell
    sizes = ws.sizes
    if not W:
        violated.append("(a)")
    if any(sizes[i] != ws.width_w for i in range(1, ell + 1)):
        violated.append("(b)")
    if not (0 <= sizes[ell + 1] <= ws.width_w - 1):
        violated.append("(c)")
    # (d): the flow value inside G[W_i] must reach s_i
    deltas = ws.deltas
    for i, (lvl, delta) in enumerate(zip(levels, deltas)):
        if not (delta <= lvl and W <= lvl):
            violated.append("(d)")
            break
        H, new_to_old = induced_subgraph(G, lvl)
        old_to_new = {o: n for n, o in new_to_old.items()}
        res = disjoint_paths(
            H, [old_to_new[v] for v in delta], [old_to_new[v] for v in W],
            cap=len(delta),
        )
        if len(res.paths) < sizes[i]:
            violated.append("(d)")
            break
    if not _witness_paths_ok(G, ws):
        violated.append("paths")
    z = ws.z_set
    if (
        len(z) != sizes[ell + 1]
        or not z <= levels[ell + 1]
        or not separates(G, z, frozenset(range(G.n)) - levels[ell], W)
    ):
        violated.append("(e)")
    return not violated, violated


def _witness_paths_ok(G: Graph, ws: WSequence) -> bool:
    if len(ws.witness_paths) != len(ws.levels):
        return False
    W = ws.levels[0]
    deltas = ws.deltas
    for lvl, delta, fam in zip(ws.levels, deltas, ws.witness_paths):
        if len(fam) != len(delta):
            return False
        used: set[int] = set()
        for p in fam:
            vs = p.vertices
            if not vs or vs[0] not in delta or vs[-1] not in W:
                return False
            if any(v not in lvl for v in vs):
                return False
            if len(set(vs)) != len(vs) or used & set(vs):
                return False
            for u, v in zip(vs, vs[1:]):
                if not G.has_edge(u, v):
                    return False
            used |= set(vs)
    return True

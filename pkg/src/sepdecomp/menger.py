"""Vertex-disjoint S-T paths and matching minimum separators.

Unit-vertex-capacity max flow via vertex splitting with breadth-first
augmentation.  Neighbor order is ascending vertex id throughout, so the
returned paths and separator are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import VertexOutOfRangeError
from .graph import Graph, VertexSet


@dataclass(frozen=True)
class VertexPath:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        # path length = number of edges
        return len(self.vertices) - 1

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]


@dataclass(frozen=True)
class PathResult:
    paths: tuple[VertexPath, ...]
    separator: Optional[VertexSet]


def _check(G: Graph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for v in S:
        if not (0 <= v < G.n):
            raise VertexOutOfRangeError(v, G.n)
    return S


# Flow network node ids: 2v = v_in, 2v+1 = v_out, then source and sink.
def _flow_network(G: Graph, avoid: frozenset[int], S: frozenset[int], T: frozenset[int]):
    src = 2 * G.n
    snk = 2 * G.n + 1
    big = G.n + 1
    cap: dict[int, dict[int, int]] = {i: {} for i in range(2 * G.n + 2)}

    def add(u, v, c):
        cap[u][v] = c
        cap[v].setdefault(u, 0)

    for v in range(G.n):
        if v in avoid:
            continue
        add(2 * v, 2 * v + 1, 1)
        for u in G.adjacency[v]:
            if u not in avoid:
                add(2 * v + 1, 2 * u, big)
    for v in sorted(S):
        add(src, 2 * v, 1)
    for v in sorted(T):
        add(2 * v + 1, snk, 1)
    return cap, src, snk


def _augment(cap, src, snk) -> bool:
    parent = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == snk:
            break
        for v in sorted(cap[u]):
            if v not in parent and cap[u][v] > 0:
                parent[v] = u
                queue.append(v)
    if snk not in parent:
        return False
    v = snk
    while v != src:
        u = parent[v]
        cap[u][v] -= 1
        cap[v][u] += 1
        v = u
    return True


def disjoint_paths(G: Graph, S: Iterable[int], T: Iterable[int], cap: int) -> PathResult:
    """Up to `cap` pairwise vertex-disjoint S-T paths.

    Every vertex of S∩T yields a length-0 path (emitted first, ascending).
    When fewer than `cap` paths exist, a minimum separator of matching size
    is returned; it contains S∩T and removing it destroys all S-T paths.
    """
    S = _check(G, S)
    T = _check(G, T)
    common = sorted(S & T)
    if cap <= len(common):
        return PathResult(
            tuple(VertexPath((v,)) for v in common[:cap]), None
        )
    avoid = frozenset(common)
    S2 = S - avoid
    T2 = T - avoid
    net, src, snk = _flow_network(G, avoid, S2, T2)
    want = cap - len(common)
    flow = 0
    while flow < want and _augment(net, src, snk):
        flow += 1

    paths = [VertexPath((v,)) for v in common]
    # flow on an original arc = original capacity minus residual; with unit
    # vertex capacities every carried arc has flow exactly 1
    big = G.n + 1
    flow_on: set[tuple[int, int]] = set()
    for u in net:
        for w, residual in net[u].items():
            if _forward(u, w, src, snk, G.n):
                cap0 = big if u % 2 == 1 and w % 2 == 0 and w != snk and u != src else 1
                if cap0 - residual > 0:
                    flow_on.add((u, w))
    for v in sorted(S2):
        if (src, 2 * v) not in flow_on:
            continue
        walk = [v]
        node = 2 * v
        while node != snk:
            nxt = None
            for w in sorted(net[node]):
                if (node, w) in flow_on:
                    nxt = w
                    break
            assert nxt is not None, "flow decomposition lost a unit"
            flow_on.remove((node, nxt))
            if nxt != snk and nxt % 2 == 0:
                walk.append(nxt // 2)
            node = nxt
        paths.append(VertexPath(tuple(walk)))

    if flow == want:
        return PathResult(tuple(paths), None)

    # residual reachability gives the minimum cut, hence the separator
    reach = {src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v, c in net[u].items():
            if c > 0 and v not in reach:
                reach.add(v)
                queue.append(v)
    sep = set(common)
    for v in range(G.n):
        if v in avoid:
            continue
        vin, vout = 2 * v, 2 * v + 1
        if vin in reach and vout not in reach:
            sep.add(v)
    for v in S2:
        if 2 * v not in reach and net[src].get(2 * v) == 0:
            sep.add(v)
    for v in T2:
        if 2 * v + 1 in reach and net[2 * v + 1].get(snk) == 0:
            sep.add(v)
    assert len(sep) == len(paths), "min cut does not certify the flow value"
    return PathResult(tuple(paths), frozenset(sep))


def _forward(node: int, w: int, src: int, snk: int, n: int) -> bool:
    """Is node->w an arc of the original network (not a pure residual)?"""
    if node == src:
        return w != snk and w % 2 == 0
    if w == snk:
        return node % 2 == 1
    if node % 2 == 0:
        return w == node + 1
    return w % 2 == 0 and w != node - 1


def separates(G: Graph, Z: Iterable[int], S: Iterable[int], T: Iterable[int]) -> bool:
    """True iff every S-T path of G meets Z."""
    Z = _check(G, Z)
    S = _check(G, S)
    T = _check(G, T)
    if not (S & T) <= Z:
        return False
    blocked = Z
    frontier = sorted(S - blocked)
    seen = set(frontier)
    targets = T - blocked
    if seen & targets:
        return False
    while frontier:
        nxt = []
        for u in frontier:
            for v in G.adjacency[u]:
                if v not in seen and v not in blocked:
                    if v in targets:
                        return False
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return True

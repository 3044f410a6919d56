"""Independent oracles and property checkers.

Everything here exists to certify the constructive pipeline from the
outside: exact treewidth with a validating witness, the exact-rational
inequality relating a W-sequence to an arbitrary separation of its top
level, the sep <= tw + 1 cross-check, and a corpus runner producing
JSON-serializable reports.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional

from . import generators, kernels
from .constructor import construct
from .decomposition import RootedTreeDecomposition, validate_decomposition, width
from .errors import (
    InvalidInputError,
    PreconditionFailedError,
    SizeLimitExceededError,
)
from .graph import Graph, Separation, VertexSet, induced_subgraph, is_separation
from .separations import make_oracle, separation_number
from .wsequence import WSequence, validate_w_sequence

EXACT_LIMIT_TREEWIDTH = 14


@dataclass(frozen=True)
class TreewidthResult:
    value: int
    elimination_order: tuple[int, ...]
    decomposition: RootedTreeDecomposition

    def __int__(self) -> int:
        return self.value


def _witness_from_elimination(G: Graph, order: tuple[int, ...]) -> RootedTreeDecomposition:
    """Tree decomposition read off an elimination order.

    Bag i is the eliminated vertex plus its current (fill-graph) neighbors;
    its parent is the bag of the earliest-eliminated such neighbor, or the
    next bag when the vertex ends up isolated.
    """
    n = G.n
    if n == 0:
        return RootedTreeDecomposition(0, (-1,), (frozenset(),))
    adj = [set(G.neighbors(v)) for v in range(n)]
    position = {v: i for i, v in enumerate(order)}
    bags: list[VertexSet] = []
    neigh_sets: list[set[int]] = []
    alive = set(range(n))
    for v in order:
        alive.discard(v)
        nb = adj[v] & alive
        bags.append(frozenset({v} | nb))
        neigh_sets.append(nb)
        for u in nb:
            adj[u] |= nb - {u}
            adj[u].discard(v)
    parents = [-1] * n
    for i in range(n - 1):
        nb = neigh_sets[i]
        parents[i] = min(position[u] for u in nb) if nb else i + 1
    return RootedTreeDecomposition(n, tuple(parents), tuple(bags))


def treewidth_exact(G: Graph, exact_limit: int = EXACT_LIMIT_TREEWIDTH) -> TreewidthResult:
    """Exact treewidth by subset DP, with a validated witness decomposition."""
    if G.n > exact_limit:
        raise SizeLimitExceededError(G.n, exact_limit, "exact treewidth")
    value, order = kernels.treewidth(G.n, G.adj_masks)
    td = _witness_from_elimination(G, order)
    ok, violations = validate_decomposition(G, td)
    assert ok, violations
    assert width(td) == value, (width(td), value)
    return TreewidthResult(value, order, td)


@dataclass(frozen=True)
class ZWCheck:
    holds: bool
    lhs: Fraction
    rhs: Fraction
    secondary_holds: bool
    secondary_rhs: Fraction


def check_zw_inequality(G: Graph, ws: WSequence, ab: Separation) -> ZWCheck:
    """|W \\ B| + |Z \\ B| against (13/6)|A \\ B|/(l+2) + 3|A n B|.

    `ab` must be a separation of the induced subgraph on the W-sequence's
    top level, given in G's vertex ids.  Also evaluates the weaker
    2|A \\ B|/(l+1) + 3|A n B| bound as a secondary flag.
    """
    ok, tags = validate_w_sequence(G, ws)
    if not ok:
        raise PreconditionFailedError(f"invalid W-sequence: {tags}")
    ell = ws.ell
    if ell < 1:
        raise PreconditionFailedError("requires l >= 1")
    top = ws.levels[ell + 1]
    if not (ab.a_side | ab.b_side) == top:
        raise PreconditionFailedError("separation does not cover the top level")
    H, new_to_old = induced_subgraph(G, top)
    old_to_new = {o: nw for nw, o in new_to_old.items()}
    local = Separation(
        frozenset(old_to_new[v] for v in ab.a_side),
        frozenset(old_to_new[v] for v in ab.b_side),
    )
    if not is_separation(H, local):
        raise PreconditionFailedError("not a separation of the top level")
    A, B = ab.a_side, ab.b_side
    W = ws.levels[0]
    Z = ws.z_set
    lhs = Fraction(len(W - B) + len(Z - B))
    rhs = Fraction(13, 6) * len(A - B) / (ell + 2) + 3 * len(A & B)
    secondary_rhs = Fraction(2) * len(A - B) / (ell + 1) + 3 * len(A & B)
    return ZWCheck(lhs <= rhs, lhs, rhs, lhs <= secondary_rhs, secondary_rhs)


def check_sep_le_tw(G: Graph, exact_limit: int = EXACT_LIMIT_TREEWIDTH) -> bool:
    """sep(G) <= tw(G) + 1, both sides exact."""
    sep = separation_number(G, exact_limit=exact_limit)
    tw = treewidth_exact(G, exact_limit=exact_limit).value
    return sep <= tw + 1


# ---------------------------------------------------------------------------
# Corpus runner
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InstanceSpec:
    kind: str  # path | cycle | tree | grid | complete | gnp
    params: dict
    a: Optional[int] = None  # None: exact when small, else structural
    graph_id: Optional[str] = None

    def ident(self) -> str:
        if self.graph_id:
            return self.graph_id
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.kind}({inner})"


@dataclass(frozen=True)
class SuiteConfig:
    instances: tuple[InstanceSpec, ...]
    exact_limit: int = 14
    seed: int = 0
    debug_assertions: bool = True


@dataclass
class InstanceRecord:
    graph_id: str
    n: int
    m: int
    a_used: Optional[int] = None
    sep: Optional[int] = None
    tw: Optional[int] = None
    width: Optional[int] = None
    bound_num: Optional[int] = None
    bound_den: Optional[int] = None
    validated: bool = False
    bound_ok: bool = False
    passed: bool = False
    assertions: int = 0
    oracle_calls: int = 0
    elapsed_ms: float = 0.0
    error: Optional[str] = None

    def to_json(self) -> dict[str, Any]:
        return dict(self.__dict__)


@dataclass
class SuiteReport:
    records: list[InstanceRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "total": len(self.records),
            "failures": sum(not r.passed for r in self.records),
            "records": [r.to_json() for r in self.records],
        }


def structural_a(kind: str, G: Graph) -> Optional[int]:
    """Known-correct separation numbers for structured families."""
    if kind == "path" or kind == "tree":
        return 1
    if kind == "cycle":
        return 1 if G.n <= 3 else 2
    if kind == "complete":
        return -(-G.n // 3)
    return None


def _choose_a(spec: InstanceSpec, G: Graph, exact_limit: int) -> int:
    if spec.a is not None:
        return spec.a
    if G.n == 0:
        raise InvalidInputError("empty graph in suite")
    if G.n <= exact_limit:
        return separation_number(G, exact_limit=exact_limit)
    a = structural_a(spec.kind, G)
    if a is None:
        # smallest a that is never below ceil(n/3)-capped necessity but
        # always sufficient: fall back to the trivial upper bound
        a = -(-G.n // 3)
    return a


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Run construct + validation over the configured corpus.

    Per-instance failures are recorded, never raised; the report is
    deterministic given the config (including its seed).
    """
    report = SuiteReport()
    for idx, spec in enumerate(config.instances):
        record = InstanceRecord(graph_id=spec.ident(), n=0, m=0)
        report.records.append(record)
        start = time.perf_counter()
        try:
            G = generators.generate(
                spec.kind, spec.params, seed=config.seed * 10007 + idx
            )
            record.n, record.m = G.n, G.m
            a = _choose_a(spec, G, config.exact_limit)
            record.a_used = a
            if G.n <= config.exact_limit:
                record.sep = separation_number(G, exact_limit=config.exact_limit)
                record.tw = treewidth_exact(G, exact_limit=config.exact_limit).value
            rep = construct(
                G, a, {min(range(G.n))}, debug_assertions=config.debug_assertions
            )
            record.width = rep.width
            record.bound_num = rep.bound_num
            record.bound_den = rep.bound_den
            record.oracle_calls = rep.recursion_stats.oracle_calls
            record.assertions = len(rep.assertion_log)
            ok, _ = validate_decomposition(G, rep.decomposition)
            record.validated = ok
            record.bound_ok = (
                rep.bound_den * (rep.width + 1) <= rep.bound_num
                and rep.bound_den * rep.width < rep.bound_num
            )
            record.passed = ok and record.bound_ok
        except Exception as exc:  # noqa: BLE001 - suite must never abort
            record.error = f"{type(exc).__name__}: {exc}"
            record.passed = False
        record.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report

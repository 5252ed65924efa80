"""Interval-degree factors: feasibility criterion and flow construction.

Two independent routes that validate each other:

* ``heinrich_check`` decides existence of a subgraph with
  a_v <= deg_H(v) <= b_v by scanning disjoint vertex-set pairs (A, B)
  against sum_{v in A}(a_v - deg_{G-B}(v)) <= sum_{v in B} b_v. The
  criterion applies when a_v < b_v everywhere or the graph is bipartite.
* ``gf_factor_flow`` builds such a subgraph by max-flow with lower bounds:
  direct on bipartite inputs, via a vertex-split doubled network plus
  Euler-decomposition rounding of half-integral edges otherwise.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .errors import BudgetExceeded, SpecInvalid
from .factor_search import FactorSolution
from .graph import Graph, bipartition
from .oracle import OracleBudget, first_l_factor

HEINRICH_MAX_VERTICES = 16
DEFAULT_ORACLE_LIMIT = 2 ** 18


@dataclass(frozen=True)
class IntervalSpec:
    """Per-vertex degree interval [a_v, b_v], 0 <= a_v <= b_v <= deg(v)."""

    lows: tuple[int, ...]
    highs: tuple[int, ...]

    @staticmethod
    def build(g: Graph, lows: Union[int, Sequence[int]], highs: Union[int, Sequence[int]]) -> "IntervalSpec":
        lo = tuple([lows] * g.n) if isinstance(lows, int) else tuple(lows)
        hi = tuple([highs] * g.n) if isinstance(highs, int) else tuple(highs)
        if len(lo) != g.n or len(hi) != g.n:
            raise SpecInvalid("interval bounds must cover every vertex")
        for v in range(g.n):
            if not (0 <= lo[v] <= hi[v] <= g.degree(v)):
                raise SpecInvalid(
                    f"vertex {v}: need 0 <= {lo[v]} <= {hi[v]} <= deg={g.degree(v)}")
        return IntervalSpec(lows=lo, highs=hi)

    def allowed_sets(self) -> list[frozenset]:
        return [frozenset(range(a, b + 1)) for a, b in zip(self.lows, self.highs)]

    def strict_gap(self) -> bool:
        return all(a < b for a, b in zip(self.lows, self.highs))


@dataclass(frozen=True)
class HeinrichWitness:
    """Disjoint sets violating the interval-factor inequality (lhs > rhs)."""

    A: tuple[int, ...]
    B: tuple[int, ...]
    lhs: int
    rhs: int


@dataclass(frozen=True)
class HeinrichResult:
    applicable: bool
    feasible: Optional[bool] = None
    witness: Optional[HeinrichWitness] = None
    note: str = ""


def evaluate_inequality(g: Graph, spec: IntervalSpec, A, B) -> tuple[int, int]:
    """(lhs, rhs) of the criterion for explicit sets A, B."""
    bset = set(B)
    lhs = sum(spec.lows[v] - sum(1 for w in g.adj[v] if w not in bset) for v in A)
    rhs = sum(spec.highs[v] for v in B)
    return lhs, rhs


def _neighbor_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _infeasible_somewhere(g: Graph, spec: IntervalSpec) -> bool:
    """2^n scan over B, pairing each B with its worst A."""
    n = g.n
    masks = _neighbor_masks(g)
    for bmask in range(1 << n):
        rhs = 0
        for v in range(n):
            if bmask >> v & 1:
                rhs += spec.highs[v]
        lhs = 0
        nb = ~bmask
        for v in range(n):
            if not (bmask >> v & 1):
                term = spec.lows[v] - bin(masks[v] & nb).count("1")
                if term > 0:
                    lhs += term
        if lhs > rhs:
            return True
    return False


def _first_witness(g: Graph, spec: IntervalSpec) -> HeinrichWitness:
    """First violating (A, B) in base-3 counter order.

    Vertex 0 is the least significant digit; digit 0 = neither,
    1 = A, 2 = B.
    """
    n = g.n
    masks = _neighbor_masks(g)
    digits = [0] * n
    for code in range(1, 3 ** n):
        c = code
        for v in range(n):
            digits[v] = c % 3
            c //= 3
        bmask = 0
        for v in range(n):
            if digits[v] == 2:
                bmask |= 1 << v
        lhs = 0
        rhs = 0
        nb = ~bmask
        for v in range(n):
            if digits[v] == 1:
                lhs += spec.lows[v] - bin(masks[v] & nb).count("1")
            elif digits[v] == 2:
                rhs += spec.highs[v]
        if lhs > rhs:
            A = tuple(v for v in range(n) if digits[v] == 1)
            B = tuple(v for v in range(n) if digits[v] == 2)
            return HeinrichWitness(A=A, B=B, lhs=lhs, rhs=rhs)
    raise AssertionError("witness search ran dry after a positive scan")


def heinrich_check(
    g: Graph,
    spec: IntervalSpec,
    *,
    max_vertices: int = HEINRICH_MAX_VERTICES,
) -> HeinrichResult:
    """Decide interval-factor existence by the disjoint-pair inequality.

    Semantics match scanning all 3^n assignments of vertices to
    {A, B, neither}; the returned witness is the first violation in
    base-3 counter order (vertex 0 least significant).
    """
    if g.n > max_vertices:
        raise BudgetExceeded(f"criterion scan limited to n <= {max_vertices}")
    applicable = spec.strict_gap() or bipartition(g) is not None
    note = "" if applicable else "criterion not applicable: needs a_v < b_v everywhere or a bipartite graph"
    if not _infeasible_somewhere(g, spec):
        return HeinrichResult(applicable=applicable, feasible=True, note=note)
    witness = _first_witness(g, spec)
    return HeinrichResult(applicable=applicable, feasible=False, witness=witness, note=note)


def _feasible_flow(num_nodes: int, arcs: list[tuple[int, int, int, int]]) -> Optional[list[int]]:
    """Feasible flow with lower bounds via one max-flow call.

    ``arcs`` entries are (u, v, low, cap); returns per-arc flows or None.
    Standard transform: shifted capacities, excess node S, deficit node T,
    and a cap-infinity return arc. No two arcs share an endpoint pair.
    """
    S = num_nodes
    T = num_nodes + 1
    demand = [0] * num_nodes
    rows, cols, caps = [], [], []
    for u, v, low, cap in arcs:
        if low > cap:
            return None
        demand[v] += low
        demand[u] -= low
        if cap - low > 0:
            rows.append(u)
            cols.append(v)
            caps.append(cap - low)
    total_pos = sum(d for d in demand if d > 0)
    if total_pos == 0 and not rows:
        return [low for _, _, low, _ in arcs]
    inf = sum(caps) + total_pos + 1
    for v, d in enumerate(demand):
        if d > 0:
            rows.append(S)
            cols.append(v)
            caps.append(d)
        elif d < 0:
            rows.append(v)
            cols.append(T)
            caps.append(-d)
    mat = csr_matrix(
        (np.array(caps, dtype=np.int64), (np.array(rows), np.array(cols))),
        shape=(num_nodes + 2, num_nodes + 2))
    result = maximum_flow(mat, S, T)
    if result.flow_value != total_pos:
        return None
    flow = result.flow
    out = []
    for u, v, low, cap in arcs:
        f = int(flow[u, v]) if cap - low > 0 else 0
        out.append(low + max(0, f))
    return out


def _bipartite_flow_factor(g: Graph, spec: IntervalSpec) -> Optional[FactorSolution]:
    bip = bipartition(g)
    s = g.n
    t = g.n + 1
    arcs: list[tuple[int, int, int, int]] = []
    for v in sorted(bip.X):
        arcs.append((s, v, spec.lows[v], spec.highs[v]))
    for v in sorted(bip.Y):
        arcs.append((v, t, spec.lows[v], spec.highs[v]))
    arcs.append((t, s, 0, sum(spec.highs) + 1))  # circulation return arc
    edge_arc_start = len(arcs)
    for u, v in g.edges:
        x, y = (u, v) if u in bip.X else (v, u)
        arcs.append((x, y, 0, 1))
    flows = _feasible_flow(g.n + 2, arcs)
    if flows is None:
        return None
    chosen = [g.edges[i] for i, f in enumerate(flows[edge_arc_start:]) if f == 1]
    return FactorSolution.from_edges(g, chosen)


def _split_flow_halves(g: Graph, spec: IntervalSpec) -> Optional[tuple[list[int], list[int]]]:
    """Doubled network: arc u_out -> v_in per direction of each edge.

    Returns (full_edges, half_edges) as edge-index lists, or None when the
    relaxation itself is infeasible (certifying no factor exists).
    """
    out0 = 0
    in0 = g.n
    s = 2 * g.n
    t = 2 * g.n + 1
    arcs: list[tuple[int, int, int, int]] = []
    for v in range(g.n):
        arcs.append((s, out0 + v, spec.lows[v], spec.highs[v]))
    for v in range(g.n):
        arcs.append((in0 + v, t, spec.lows[v], spec.highs[v]))
    arcs.append((t, s, 0, 2 * sum(spec.highs) + 1))  # circulation return arc
    first_dir = len(arcs)
    for u, v in g.edges:
        arcs.append((out0 + u, in0 + v, 0, 1))
        arcs.append((out0 + v, in0 + u, 0, 1))
    flows = _feasible_flow(2 * g.n + 2, arcs)
    if flows is None:
        return None
    full, half = [], []
    for i in range(g.m):
        picked = flows[first_dir + 2 * i] + flows[first_dir + 2 * i + 1]
        if picked == 2:
            full.append(i)
        elif picked == 1:
            half.append(i)
    return full, half


def _euler_round(g: Graph, spec: IntervalSpec, full: list[int], half: list[int]) -> Optional[list[int]]:
    """Promote/demote half edges along Euler trails, keeping all windows.

    Doubled degrees stay within [2a, 2b] throughout; odd circuits move
    their start by +-1, which needs a_v < b_v there. Returns promoted edge
    indices or None when a +-1 step has no room.
    """
    # val2[v] = 2 * (full degree) + (pending half edges)
    val2 = [0] * g.n
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i in full:
        u, v = g.edges[i]
        val2[u] += 2
        val2[v] += 2
    for i in half:
        u, v = g.edges[i]
        val2[u] += 1
        val2[v] += 1
        adj[u].append((v, i))
        adj[v].append((u, i))
    for ns in adj.values():
        ns.sort()
    used = set()
    remaining = {v: len(ns) for v, ns in adj.items()}

    def walk_from(start: int) -> list[int]:
        """Greedy maximal trail; from an odd vertex it ends at an odd one."""
        trail = []
        v = start
        while True:
            nxt = None
            for w, i in adj[v]:
                if i not in used:
                    nxt = (w, i)
                    break
            if nxt is None:
                return trail
            used.add(nxt[1])
            remaining[v] -= 1
            remaining[nxt[0]] -= 1
            trail.append(nxt[1])
            v = nxt[0]

    # Peel open trails until no odd-degree vertex remains; each extraction
    # turns exactly its two endpoints even.
    trails: list[tuple[int, list[int]]] = []
    for v in sorted(adj):
        while remaining[v] % 2 == 1:
            trails.append((v, walk_from(v)))
    circuits: list[tuple[int, list[int]]] = []
    for v in sorted(adj):
        while any(i not in used for _, i in adj[v]):
            t = walk_from(v)
            if t:
                circuits.append((v, t))

    promoted: list[int] = []

    def apply(seq: list[int], start_promote: bool) -> None:
        promote = start_promote
        for i in seq:
            u, v = g.edges[i]
            if promote:
                promoted.append(i)
                val2[u] += 1
                val2[v] += 1
            else:
                val2[u] -= 1
                val2[v] -= 1
            promote = not promote

    for _, seq in trails:
        apply(seq, True)
    ok = True
    for start, seq in circuits:
        if len(seq) % 2 == 0:
            apply(seq, True)
            continue
        if val2[start] + 2 <= 2 * spec.highs[start]:
            apply(seq, True)
        elif val2[start] - 2 >= 2 * spec.lows[start]:
            apply(seq, False)
        else:
            ok = False
            break
    if not ok:
        return None
    for v in range(g.n):
        if val2[v] % 2 or not (2 * spec.lows[v] <= val2[v] <= 2 * spec.highs[v]):
            return None
    return promoted


def gf_factor_flow(
    g: Graph,
    spec: IntervalSpec,
    *,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
) -> Optional[FactorSolution]:
    """Construct a subgraph with a_v <= deg(v) <= b_v, or None if none exists.

    Exact on bipartite graphs and whenever a_v < b_v everywhere. Outside
    both hypotheses a failed rounding falls back to exhaustive search below
    ``oracle_limit`` and raises BudgetExceeded past it.
    """
    if bipartition(g) is not None:
        return _bipartite_flow_factor(g, spec)
    relaxed = _split_flow_halves(g, spec)
    if relaxed is None:
        return None
    full, half = relaxed
    promoted = _euler_round(g, spec, full, half)
    if promoted is not None:
        edges = [g.edges[i] for i in full] + [g.edges[i] for i in promoted]
        sol = FactorSolution.from_edges(g, edges)
        assert all(spec.lows[v] <= sol.degrees[v] <= spec.highs[v] for v in range(g.n))
        return sol
    if spec.strict_gap():
        raise AssertionError("rounding failed despite per-vertex slack")
    if 2 ** g.m > oracle_limit:
        raise BudgetExceeded(
            "rounding failed outside the slack hypothesis and the graph "
            "exceeds the exhaustive fallback budget")
    found = first_l_factor(g, spec.allowed_sets(), OracleBudget(oracle_limit))
    if found is None:
        return None
    return FactorSolution.from_edges(g, found)

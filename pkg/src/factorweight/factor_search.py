"""Deficiency-descent local search for degree-list factors.

The solver keeps a spanning subgraph H plus, per vertex, one active window
[a_v, b_v] drawn from the vertex's allowed-degree runs. The deficiency
sum(max(0, a_v - deg_H(v))) strictly decreases on every accepted move:

1. alternation along a walk that alternates non-H/H edges from a deficient
   vertex (an even-parity endpoint with deg_H > a_v sheds an edge, an
   odd-parity endpoint with deg_H < b_v gains one);
2. downward window re-choice, shedding edges toward odd-endpoint vertices;
3. upward window re-choice, adding edges toward even-endpoint vertices,
   one of which is first made deficient by a lateral alternation.

Walk search runs over directed-edge states. A shortest alternating walk can
in rare cases traverse one undirected edge in both directions, so every
candidate move is re-validated on a copy (degree caps hold, deficiency
strictly drops) before it is committed; toggling uses the odd-multiplicity
edge set of the walk. If all walk candidates fail validation, a budgeted
DFS over genuine edge-disjoint trails runs before the state is declared
stuck.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .degree_lists import DegreeListSpec, SpecValidation, validate_spec
from .errors import Infeasible, InternalBoundExceeded, NoMoveAvailable, PreconditionViolated, SpecInvalid
from .graph import Graph, connected_components, induced_subgraph
from .oracle import OracleBudget, first_l_factor

DFS_TRAIL_BUDGET = 200_000
DEFAULT_ORACLE_LIMIT = 2 ** 18


class FactorState:
    """Mutable search state: H, per-vertex window choice, degree cache.

    Each solve owns its state exclusively; clones share the immutable
    graph/spec/window tables.
    """

    __slots__ = ("graph", "spec", "windows", "run_index", "in_h", "deg_h", "incident")

    def __init__(self, graph, spec, windows, run_index, in_h, deg_h, incident):
        self.graph = graph
        self.spec = spec
        self.windows = windows
        self.run_index = run_index
        self.in_h = in_h
        self.deg_h = deg_h
        self.incident = incident

    @classmethod
    def initial(cls, graph: Graph, spec: DegreeListSpec) -> "FactorState":
        if len(spec.anchors) != graph.n:
            raise SpecInvalid(f"spec covers {len(spec.anchors)} vertices, graph has {graph.n}")
        windows = tuple(spec.windows(v) for v in range(graph.n))
        incident = tuple(
            tuple((w, graph.edge_index[(min(v, w), max(v, w))]) for w in graph.adj[v])
            for v in range(graph.n))
        return cls(
            graph=graph,
            spec=spec,
            windows=windows,
            run_index=[0] * graph.n,
            in_h=bytearray(graph.m),
            deg_h=[0] * graph.n,
            incident=incident,
        )

    def clone(self) -> "FactorState":
        return FactorState(
            graph=self.graph,
            spec=self.spec,
            windows=self.windows,
            run_index=list(self.run_index),
            in_h=bytearray(self.in_h),
            deg_h=list(self.deg_h),
            incident=self.incident,
        )

    def anchor(self, v: int) -> int:
        """a_v: low end of the active window."""
        return self.windows[v][self.run_index[v]][0]

    def bound(self, v: int) -> int:
        """b_v: high end of the active window."""
        return self.windows[v][self.run_index[v]][1]

    def h_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for i, e in enumerate(self.graph.edges) if self.in_h[i])

    def deficiency(self) -> int:
        return sum(
            max(0, self.anchor(v) - self.deg_h[v]) for v in range(self.graph.n))

    def toggle_edge(self, eidx: int) -> None:
        u, v = self.graph.edges[eidx]
        if self.in_h[eidx]:
            self.in_h[eidx] = 0
            self.deg_h[u] -= 1
            self.deg_h[v] -= 1
        else:
            self.in_h[eidx] = 1
            self.deg_h[u] += 1
            self.deg_h[v] += 1

    def set_h(self, edges: Sequence[tuple[int, int]]) -> None:
        """Replace H wholesale (test/setup helper)."""
        self.in_h = bytearray(self.graph.m)
        self.deg_h = [0] * self.graph.n
        for u, v in edges:
            self.toggle_edge(self.graph.edge_index[(min(u, v), max(u, v))])

    def set_window(self, v: int, index: int) -> None:
        if not (0 <= index < len(self.windows[v])):
            raise ValueError(f"vertex {v} has {len(self.windows[v])} windows")
        self.run_index[v] = index

    def deficient_vertices(self) -> list[int]:
        return [v for v in range(self.graph.n) if self.deg_h[v] < self.anchor(v)]


def compute_deficiency(state: FactorState) -> int:
    """sum_v max(0, a_v - deg_H(v)), degrees recounted from H itself."""
    deg = [0] * state.graph.n
    for i, (u, v) in enumerate(state.graph.edges):
        if state.in_h[i]:
            deg[u] += 1
            deg[v] += 1
    return sum(max(0, state.anchor(v) - deg[v]) for v in range(state.graph.n))


@dataclass(frozen=True)
class ReachabilitySets:
    """Alternating-walk closure from the deficient start set.

    A holds even-parity endpoints (including every deficient vertex, via
    the empty walk), B odd-parity endpoints. Walks are directed-edge
    sequences; they are certificates to be re-validated, not trusted.
    When every vertex keeps b_v > a_v the two sets are disjoint.
    """

    A: frozenset
    B: frozenset
    even_trail: dict = field(repr=False)
    odd_trail: dict = field(repr=False)
    candidates: tuple = field(repr=False, default=())


def _reconstruct(parent: dict, key) -> tuple:
    walk = []
    while key is not None:
        walk.append(key)
        key = parent[key]
    walk.reverse()
    return tuple(walk)


def _toggle_set(state: FactorState, walk) -> list[int]:
    counts: Counter = Counter()
    index = state.graph.edge_index
    for a, b in walk:
        counts[index[(a, b) if a < b else (b, a)]] += 1
    return sorted(e for e, c in counts.items() if c % 2 == 1)


def _try_toggle(state: FactorState, eidxs, *, strict: bool = True) -> Optional[FactorState]:
    """Clone-and-toggle if degree caps hold and deficiency drops (or holds)."""
    if not eidxs:
        return None
    delta: dict[int, int] = {}
    for e in eidxs:
        u, v = state.graph.edges[e]
        sign = -1 if state.in_h[e] else 1
        delta[u] = delta.get(u, 0) + sign
        delta[v] = delta.get(v, 0) + sign
    old_part = 0
    new_part = 0
    for v, dd in delta.items():
        nd = state.deg_h[v] + dd
        if nd < 0 or nd > state.bound(v):
            return None
        a = state.anchor(v)
        old_part += max(0, a - state.deg_h[v])
        new_part += max(0, a - nd)
    if strict and new_part >= old_part:
        return None
    if not strict and new_part > old_part:
        return None
    out = state.clone()
    for e in eidxs:
        out.toggle_edge(e)
    return out


def _explore(state: FactorState, *, inline: bool) -> tuple[Optional[FactorState], ReachabilitySets]:
    """BFS over directed-edge states.

    With ``inline`` True, the first candidate whose toggle validates is
    applied immediately and returned; otherwise the full closure is built
    and candidates are kept for apply_move.
    """
    start = state.deficient_vertices()
    even_first: dict[int, tuple] = {v: () for v in start}
    odd_first: dict[int, tuple] = {}
    even_seen = set(start)
    odd_seen = set()
    parent: dict = {}
    candidates: list = []
    queue = deque()
    for v0 in sorted(start):
        for w, e in state.incident[v0]:
            if not state.in_h[e]:
                key = (v0, w)
                if key not in parent:
                    parent[key] = None
                    queue.append((key, e))
    while queue:
        key, e = queue.popleft()
        tail, head = key
        via_h = bool(state.in_h[e])
        if via_h:
            if head not in even_seen:
                even_seen.add(head)
                even_first[head] = _reconstruct(parent, key)
            if state.deg_h[head] > state.anchor(head):
                walk = _reconstruct(parent, key)
                if inline:
                    moved = _try_toggle(state, _toggle_set(state, walk))
                    if moved is not None:
                        return moved, ReachabilitySets(
                            A=frozenset(even_seen), B=frozenset(odd_seen),
                            even_trail=even_first, odd_trail=odd_first)
                candidates.append(("even", head, walk))
        else:
            if head not in odd_seen:
                odd_seen.add(head)
                odd_first[head] = _reconstruct(parent, key)
            if state.deg_h[head] < state.bound(head):
                walk = _reconstruct(parent, key)
                if inline:
                    moved = _try_toggle(state, _toggle_set(state, walk))
                    if moved is not None:
                        return moved, ReachabilitySets(
                            A=frozenset(even_seen), B=frozenset(odd_seen),
                            even_trail=even_first, odd_trail=odd_first)
                candidates.append(("odd", head, walk))
        for w, e2 in state.incident[head]:
            if bool(state.in_h[e2]) != via_h:
                nxt = (head, w)
                if nxt not in parent:
                    parent[nxt] = key
                    queue.append((nxt, e2))
    sets = ReachabilitySets(
        A=frozenset(even_seen),
        B=frozenset(odd_seen),
        even_trail=even_first,
        odd_trail=odd_first,
        candidates=tuple(candidates),
    )
    # Disjointness is a property of stable states (no alternation pending):
    # there deg <= a on A and deg = b on B cannot meet when b > a.
    if not candidates and all(
            state.bound(v) > state.anchor(v) for v in range(state.graph.n)):
        assert not (sets.A & sets.B), "A/B overlap at a stable all-slack state"
    return None, sets


def reachability_sets(state: FactorState) -> ReachabilitySets:
    """Full alternating-walk closure; requires a deficient vertex."""
    if not state.deficient_vertices():
        raise PreconditionViolated("no deficient vertex: reachability undefined")
    _, sets = _explore(state, inline=False)
    return sets


def _dfs_trail_move(state: FactorState, budget: int = DFS_TRAIL_BUDGET) -> Optional[FactorState]:
    """Exact edge-disjoint trail search for an alternation move."""
    steps = 0
    for v0 in sorted(state.deficient_vertices()):
        # stack entries: (vertex, last_edge_in_h, used_mask, walk)
        stack = [(v0, None, 0, ())]
        while stack:
            steps += 1
            if steps > budget:
                return None
            v, last_h, used, walk = stack.pop()
            for w, e in reversed(state.incident[v]):
                if used >> e & 1:
                    continue
                edge_h = bool(state.in_h[e])
                if last_h is None:
                    if edge_h:
                        continue
                elif edge_h == last_h:
                    continue
                nwalk = walk + ((v, w),)
                if edge_h:
                    if state.deg_h[w] > state.anchor(w):
                        moved = _try_toggle(state, _toggle_set(state, nwalk))
                        if moved is not None:
                            return moved
                else:
                    if state.deg_h[w] < state.bound(w):
                        moved = _try_toggle(state, _toggle_set(state, nwalk))
                        if moved is not None:
                            return moved
                stack.append((w, edge_h, used | (1 << e), nwalk))
    return None


def _downward_move(state: FactorState, sets: ReachabilitySets) -> Optional[FactorState]:
    for v in sorted(sets.A):
        ri = state.run_index[v]
        if ri == 0 or state.deg_h[v] >= state.anchor(v):
            continue
        hi2 = state.windows[v][ri - 1][1]
        need = max(0, state.deg_h[v] - hi2)
        removable = sorted(
            e for w, e in state.incident[v] if state.in_h[e] and w in sets.B)
        if len(removable) < need:
            continue
        trial = state.clone()
        trial.run_index[v] = ri - 1
        for e in removable[:need]:
            trial.toggle_edge(e)
        ok = all(trial.deg_h[x] <= trial.bound(x) for x in range(state.graph.n))
        if ok and trial.deficiency() < state.deficiency():
            return trial
    return None


def _upward_move(state: FactorState, sets: ReachabilitySets) -> Optional[FactorState]:
    base_def = state.deficiency()
    for v in sorted(sets.B):
        ri = state.run_index[v]
        if ri + 1 >= len(state.windows[v]):
            continue
        lo2 = state.windows[v][ri + 1][0]
        partners = [(w, e) for w, e in state.incident[v]
                    if not state.in_h[e] and w in sets.A]
        for w_main, e_main in partners:
            trial = state.clone()
            if trial.deg_h[w_main] >= trial.anchor(w_main):
                # lateral preparation: shed one H edge at w_main first
                walk = sets.even_trail.get(w_main)
                if not walk:
                    continue
                prep = _toggle_set(trial, walk)
                if e_main in prep:
                    continue
                prepared = _try_toggle(trial, prep, strict=False)
                if prepared is None or prepared.deg_h[w_main] >= prepared.anchor(w_main):
                    continue
                trial = prepared
            trial.run_index[v] = ri + 1
            need = lo2 - trial.deg_h[v]
            added = 0
            order = [(w_main, e_main)] + [
                (w, e) for w, e in partners if e != e_main]
            for w, e in order:
                if added == need:
                    break
                if trial.in_h[e]:
                    continue
                if trial.deg_h[w] + 1 <= trial.bound(w) and trial.deg_h[v] + 1 <= trial.bound(v):
                    trial.toggle_edge(e)
                    added += 1
            if added == need and trial.deficiency() < base_def:
                return trial
    return None


def apply_move(state: FactorState, sets: ReachabilitySets) -> FactorState:
    """Apply the highest-priority strictly deficiency-reducing move.

    Priority: walk alternation, then downward window re-choice with
    removals toward B, then upward re-choice with additions toward A.
    Raises NoMoveAvailable when nothing validates.
    """
    if state.deficiency() == 0:
        raise PreconditionViolated("deficiency already zero")
    failed_alternation = False
    for _, _, walk in sets.candidates:
        moved = _try_toggle(state, _toggle_set(state, walk))
        if moved is not None:
            return moved
        failed_alternation = True
    if failed_alternation:
        moved = _dfs_trail_move(state)
        if moved is not None:
            return moved
    moved = _downward_move(state, sets)
    if moved is not None:
        return moved
    moved = _upward_move(state, sets)
    if moved is not None:
        return moved
    raise NoMoveAvailable("no deficiency-reducing move from this state")


@dataclass(frozen=True)
class FactorSolution:
    """Spanning subgraph meeting every vertex's allowed-degree list."""

    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]

    @staticmethod
    def from_edges(g: Graph, edges) -> "FactorSolution":
        deg = [0] * g.n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        return FactorSolution(edges=tuple(sorted(edges)), degrees=tuple(deg))

    def satisfies(self, g: Graph, spec: DegreeListSpec) -> bool:
        fresh = FactorSolution.from_edges(g, self.edges)
        return all(
            fresh.degrees[v] in spec.allowed(v) for v in range(g.n))


def _solver_step(state: FactorState) -> FactorState:
    moved, sets = _explore(state, inline=True)
    if moved is not None:
        return moved
    failed_alternation = bool(sets.candidates)
    if failed_alternation:
        moved = _dfs_trail_move(state)
        if moved is not None:
            return moved
    moved = _downward_move(state, sets)
    if moved is not None:
        return moved
    moved = _upward_move(state, sets)
    if moved is not None:
        return moved
    raise NoMoveAvailable("no deficiency-reducing move from this state")


def _oracle_fallback(
    g: Graph,
    spec: DegreeListSpec,
    state: FactorState,
    oracle_limit: int,
    stall_reason: str,
) -> FactorSolution:
    """Keep satisfied components, exhaustively re-solve deficient ones."""
    allowed = spec.allowed_all()
    kept: list[tuple[int, int]] = []
    for comp in connected_components(g):
        comp_set = set(comp)
        comp_def = sum(
            max(0, state.anchor(v) - state.deg_h[v]) for v in comp)
        comp_edges = [e for e in g.edges if e[0] in comp_set]
        if comp_def == 0:
            kept.extend(
                e for e in comp_edges
                if state.in_h[g.edge_index[e]])
            continue
        sub, mapping = induced_subgraph(g, comp)
        if 2 ** sub.m > oracle_limit:
            raise Infeasible(
                f"{stall_reason}; component of size {sub.n} exceeds the "
                f"exhaustive fallback budget", certified=False)
        sub_allowed = [allowed[mapping[v]] for v in range(sub.n)]
        found = first_l_factor(sub, sub_allowed, OracleBudget(oracle_limit))
        if found is None:
            raise Infeasible(
                f"component {comp} has no subgraph meeting its degree lists "
                f"(exhaustive scan)", certified=True)
        kept.extend((mapping[u], mapping[v]) for u, v in found)
    solution = FactorSolution.from_edges(g, kept)
    if not solution.satisfies(g, spec):
        raise InternalBoundExceeded("fallback produced an invalid factor")
    return solution


def solve_list_factor(
    g: Graph,
    spec: DegreeListSpec,
    *,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
    on_move=None,
) -> FactorSolution:
    """Find a spanning subgraph with deg_H(v) in the allowed list of v.

    Starts from H empty with every window at its lowest run and descends.
    Presets whose hypotheses validate are guaranteed to converge; a stall
    there raises InternalBoundExceeded (an engine bug, not an input
    property). Other specs fall back to exhaustive per-component search
    below ``oracle_limit`` enumerations; Infeasible carries whether the
    negative answer was certified.
    """
    validation: SpecValidation = validate_spec(g, spec)
    state = FactorState.initial(g, spec)
    cap = 4 * sum(g.degrees()) + 4
    moves = 0
    stall: Optional[str] = None
    while state.deficiency() > 0:
        if moves >= cap:
            if validation.proof_backed:
                raise InternalBoundExceeded(
                    f"validated spec did not converge within {cap} moves")
            stall = f"move cap {cap} reached"
            break
        try:
            state = _solver_step(state)
        except NoMoveAvailable:
            if validation.proof_backed:
                raise InternalBoundExceeded(
                    "validated spec reached a stuck state") from None
            stall = "no deficiency-reducing move"
            break
        moves += 1
        if on_move is not None:
            on_move(state)
    if stall is None:
        solution = FactorSolution.from_edges(g, state.h_edges())
        if not solution.satisfies(g, spec):
            raise InternalBoundExceeded("solver output fails the degree post-scan")
        return solution
    return _oracle_fallback(g, spec, state, oracle_limit, stall)

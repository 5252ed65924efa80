"""Cyclic-group edge weightings realizing prescribed vertex sums.

``realize_targets`` hits arbitrary per-vertex residue targets mod r, one
component at a time: assign every non-tree edge 0, walk a BFS tree bottom-up
fixing each vertex through its parent edge, then cancel the root's residual
defect by pushing +x/-x alternately around an odd closed walk (non-bipartite
components; the defect is doubled by precondition) or observe it is already
zero (bipartite components balance part sums by precondition).

On top of that, ``vertex_coloring_weighting_zr`` builds integer weightings
with labels 1..r whose induced sums properly color the graph, by choosing
targets from a proper coloring and repairing sum parity through class
permutations, a low-degree recolor, or an alternative-coloring search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import (
    DEFAULT_COLORING_NODE_LIMIT,
    ColorClasses,
    proper_coloring_exact,
    proper_colorings,
)
from .errors import (
    BudgetExceeded,
    ColoringUnavailable,
    Obstructed,
    PreconditionViolated,
)
from .graph import (
    Graph,
    bipartition,
    connected_components,
    find_odd_closed_walk,
    induced_subgraph,
    is_nice,
)
from .weighting import INTEGER, RESIDUE, EdgeWeighting, is_vertex_coloring

ALT_COLORING_LIMIT = 100_000


def is_doubled(s: int, r: int) -> bool:
    """True iff s = 2h (mod r) for some residue h: always for odd r,
    exactly the even residues for even r."""
    return True if r % 2 == 1 else s % 2 == 0


def doubled_residues(r: int) -> frozenset:
    return frozenset(x for x in range(r) if is_doubled(x, r))


@dataclass(frozen=True)
class GroupTargetProblem:
    """Prescribed residue target per vertex over the cyclic group mod r."""

    graph: Graph
    modulus: int
    targets: tuple[int, ...]

    def validate(self) -> None:
        g, r, t = self.graph, self.modulus, self.targets
        if r < 1:
            raise PreconditionViolated("modulus must be >= 1")
        if len(t) != g.n:
            raise PreconditionViolated("targets must cover every vertex")
        for comp in connected_components(g):
            if len(comp) == 1:
                if t[comp[0]] % r != 0:
                    raise PreconditionViolated(
                        f"isolated vertex {comp[0]} must target 0, got {t[comp[0]]}")
                continue
            sub, mapping = induced_subgraph(g, comp)
            bip = bipartition(sub)
            if bip is not None:
                sx = sum(t[mapping[v]] for v in bip.X) % r
                sy = sum(t[mapping[v]] for v in bip.Y) % r
                if sx != sy:
                    raise PreconditionViolated(
                        f"bipartite component {comp}: part sums {sx} != {sy} (mod {r})")
            else:
                total = sum(t[v] for v in comp) % r
                if not is_doubled(total, r):
                    raise PreconditionViolated(
                        f"component {comp}: target sum {total} is not doubled mod {r}")


def residue_sums(g: Graph, w: EdgeWeighting) -> tuple[int, ...]:
    if w.domain != RESIDUE:
        raise ValueError("residue_sums expects residue labels")
    sums = [0] * g.n
    for (u, v), lab in w.weights.items():
        sums[u] = (sums[u] + lab) % w.size
        sums[v] = (sums[v] + lab) % w.size
    return tuple(sums)


def realize_targets(problem: GroupTargetProblem) -> EdgeWeighting:
    """Residue weighting whose per-vertex sums equal the targets exactly."""
    problem.validate()
    g, r, t = problem.graph, problem.modulus, problem.targets
    weights = {e: 0 for e in g.edges}
    sums = [0] * g.n

    def bump(u: int, v: int, delta: int) -> None:
        key = (u, v) if u < v else (v, u)
        weights[key] = (weights[key] + delta) % r
        sums[u] = (sums[u] + delta) % r
        sums[v] = (sums[v] + delta) % r

    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        root = comp[0]
        parent: dict[int, int] = {root: -1}
        order = [root]
        for u in order:
            for w_ in g.adj[u]:
                if w_ not in parent:
                    parent[w_] = u
                    order.append(w_)
        for v in reversed(order[1:]):
            bump(v, parent[v], (t[v] - sums[v]) % r)
        defect = (t[root] - sums[root]) % r
        if defect == 0:
            continue
        sub, mapping = induced_subgraph(g, comp)
        if bipartition(sub) is not None:
            raise AssertionError(
                "balanced bipartite component left a root defect")
        if r % 2 == 1:
            x = (defect * pow(2, -1, r)) % r
        else:
            assert defect % 2 == 0, "doubled-sum precondition violated"
            x = defect // 2  # the smaller of the two solutions of 2x = defect
        if x:
            walk = find_odd_closed_walk(g, root)
            sign = 1
            for a, b in walk:
                bump(a, b, (sign * x) % r)
                sign = -sign
    assert all(sums[v] == t[v] % r for v in range(g.n)), "target scan failed"
    return EdgeWeighting(weights=weights, domain=RESIDUE, size=r)


def _swap_colors(classes: ColorClasses, i: int, j: int) -> ColorClasses:
    remap = {i: j, j: i}
    return ColorClasses(
        k=classes.k,
        assignment=tuple(remap.get(c, c) for c in classes.assignment))


def parity_normalize_coloring(classes: ColorClasses, r: int) -> ColorClasses:
    """Permute class colors so that sum(color * size) becomes even.

    Follows the swap schedules of the even-modulus constructions; empty
    classes count as even. Raises Obstructed when r = 2 (mod 4) and every
    class has odd size (no permutation can fix the parity then).
    """
    if r % 2 == 1:
        raise ValueError("parity normalization applies to even moduli")
    if classes.k != r:
        raise ValueError(f"expected exactly {r} classes, got {classes.k}")
    sizes = classes.sizes()
    if classes.weighted_size_sum() % 2 == 0:
        return classes
    if r % 4 == 0:
        even_odd = [c for c in range(1, r + 1, 2) if sizes[c - 1] % 2 == 0]
        odd_even = [c for c in range(2, r + 1, 2) if sizes[c - 1] % 2 == 1]
        if odd_even:
            out = _swap_colors(classes, even_odd[0], odd_even[0])
        else:
            odd_odd = [c for c in range(1, r + 1, 2) if sizes[c - 1] % 2 == 1]
            out = _swap_colors(classes, odd_odd[0], 2)
    else:
        even_classes = [c for c in range(1, r + 1) if sizes[c - 1] % 2 == 0]
        if not even_classes:
            raise Obstructed(
                "every class has odd size; no color permutation fixes the parity")
        i = even_classes[0]
        odd_odd = [c for c in range(1, r + 1, 2) if sizes[c - 1] % 2 == 1 and c != i]
        if i % 2 == 0:
            out = _swap_colors(classes, odd_odd[0], i)
        else:
            even_even = [c for c in range(2, r + 1, 2) if sizes[c - 1] % 2 == 0]
            if even_even:
                out = _swap_colors(classes, odd_odd[0], even_even[0])
            else:
                out = _swap_colors(classes, i, 2)
    assert out.weighted_size_sum() % 2 == 0
    return out


def _values_avoiding(k: int, beta: int, target: int, r: int) -> Optional[list[int]]:
    """k residues, none equal to beta, summing to target mod r."""
    if k == 0:
        return [] if target % r == 0 else None
    if r == 2:
        v = 1 - beta
        return [v] * k if (k * v) % 2 == target % 2 else None
    if k == 1:
        val = target % r
        return [val] if val != beta else None
    gamma = 0 if beta != 0 else 1
    rest = (target - gamma * (k - 2)) % r
    for x1 in range(r):
        if x1 == beta:
            continue
        x2 = (rest - x1) % r
        if x2 != beta:
            return [gamma] * (k - 2) + [x1, x2]
    return None


def _balanced_bipartite_targets(xs: list[int], ys: list[int], r: int) -> Optional[dict[int, int]]:
    """Proper residue targets on a connected bipartite component with
    balanced part sums; None only when r = 2 and both parts are odd."""
    for vary, unif in ((xs, ys), (ys, xs)):
        for beta in range(r):
            vals = _values_avoiding(len(vary), beta, (len(unif) * beta) % r, r)
            if vals is not None:
                out = {v: beta for v in unif}
                out.update(zip(vary, vals))
                return out
    return None


def _even_class_coloring_search(sub: Graph, r: int, limit: int) -> tuple[Optional[ColorClasses], bool]:
    """Look for a proper r-coloring with an even-sized class.

    Returns (coloring or None, exhaustive flag): exhaustive means the whole
    coloring space was enumerated without finding one.
    """
    examined = 0
    try:
        for assignment in proper_colorings(sub, r):
            examined += 1
            if examined > limit:
                return None, False
            cand = ColorClasses(k=r, assignment=assignment)
            if any(sz % 2 == 0 for sz in cand.sizes()):
                return cand, True
    except BudgetExceeded:
        return None, False
    return None, True


def _component_coloring_targets(
    sub: Graph,
    r: int,
    node_limit: int,
    alt_limit: int,
) -> list[int]:
    """Residue targets for a non-bipartite component, colors as residues."""
    classes = proper_coloring_exact(sub, r, node_limit)
    if classes is None:
        raise ColoringUnavailable(f"component is not {r}-colorable")
    if r % 2 == 0 and classes.weighted_size_sum() % 2 == 1:
        if r % 4 == 0:
            classes = parity_normalize_coloring(classes, r)
        else:
            sizes = classes.sizes()
            if any(sz % 2 == 0 for sz in sizes):
                classes = parity_normalize_coloring(classes, r)
            elif sub.min_degree() <= r - 2:
                classes = _recolor_low_degree_vertex(sub, classes, r)
                if classes.weighted_size_sum() % 2 == 1:
                    classes = parity_normalize_coloring(classes, r)
            else:
                found, exhaustive = _even_class_coloring_search(sub, r, alt_limit)
                if found is None:
                    scope = "exhaustively" if exhaustive else "within the search budget"
                    raise Obstructed(
                        f"every proper {r}-coloring found {scope} has all-odd classes")
                classes = found
                if classes.weighted_size_sum() % 2 == 1:
                    classes = parity_normalize_coloring(classes, r)
    return [c % r for c in classes.assignment]


def _recolor_low_degree_vertex(sub: Graph, classes: ColorClasses, r: int) -> ColorClasses:
    """Move one min-degree vertex to a color absent from its neighborhood."""
    v = min(range(sub.n), key=lambda x: (sub.degree(x), x))
    taken = {classes.assignment[w] for w in sub.adj[v]} | {classes.assignment[v]}
    free = [c for c in range(1, r + 1) if c not in taken]
    assert free, "degree bound promised a missing color"
    assignment = list(classes.assignment)
    assignment[v] = free[0]
    out = ColorClasses(k=r, assignment=tuple(assignment))
    assert out.is_proper(sub)
    return out


def vertex_coloring_weighting_zr(
    g: Graph,
    r: int,
    *,
    coloring_node_limit: int = DEFAULT_COLORING_NODE_LIMIT,
    alt_coloring_limit: int = ALT_COLORING_LIMIT,
) -> EdgeWeighting:
    """Integer weighting, labels 1..r, whose induced sums properly color g.

    Per component: proper targets are chosen (coloring residues on
    non-bipartite components, balanced part values on bipartite ones),
    realized as a residue weighting, then lifted to labels 1..r (residue 0
    becomes r). Adjacent sums stay distinct because they differ mod r.
    Raises Obstructed when no case applies and ColoringUnavailable when
    some component is not r-colorable.
    """
    if r < 1:
        raise ValueError("modulus must be >= 1")
    if not is_nice(g):
        raise PreconditionViolated("a single-edge component cannot be distinguished")
    targets = [0] * g.n
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        sub, mapping = induced_subgraph(g, comp)
        bip = bipartition(sub)
        if bip is not None:
            xs = sorted(mapping[v] for v in bip.X)
            ys = sorted(mapping[v] for v in bip.Y)
            chosen = _balanced_bipartite_targets(xs, ys, r)
            if chosen is None:
                raise Obstructed(
                    f"bipartite component {comp}: both parts odd with modulus 2")
            for v, val in chosen.items():
                targets[v] = val
        else:
            local = _component_coloring_targets(
                sub, r, coloring_node_limit, alt_coloring_limit)
            for new_v, val in enumerate(local):
                targets[mapping[new_v]] = val
    problem = GroupTargetProblem(graph=g, modulus=r, targets=tuple(targets))
    residue_w = realize_targets(problem)
    lifted = {e: (lab if lab >= 1 else r) for e, lab in residue_w.weights.items()}
    out = EdgeWeighting(weights=lifted, domain=INTEGER, size=r)
    assert all((out.weights[e] - residue_w.weights[e]) % r == 0 for e in g.edges)
    assert is_vertex_coloring(g, out), "residue-distinct targets must lift properly"
    return out

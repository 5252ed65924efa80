import random

import pytest

from factorweight.coloring import ColorClasses, proper_colorings
from factorweight.errors import (
    ColoringUnavailable,
    Obstructed,
    PreconditionViolated,
)
from factorweight.generators import (
    random_connected_nonbipartite,
    random_planar_triangulation,
    wheel,
)
from factorweight.graph import Graph
from factorweight.group_weighting import (
    GroupTargetProblem,
    is_doubled,
    parity_normalize_coloring,
    realize_targets,
    residue_sums,
    vertex_coloring_weighting_zr,
)
from factorweight.oracle import enumerate_weightings
from factorweight.weighting import induced_coloring, is_vertex_coloring

from conftest import cycle_graph, k_complete


# --- target realization ---------------------------------------------------

def test_triangle_targets_mod3():
    k3 = k_complete(3)
    w = realize_targets(GroupTargetProblem(k3, 3, (1, 2, 0)))
    assert residue_sums(k3, w) == (1, 2, 0)


def test_tree_zero_targets_give_zero_weights():
    tree = Graph.from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)])
    w = realize_targets(GroupTargetProblem(tree, 5, (0,) * 6))
    assert all(v == 0 for v in w.weights.values())


def test_balanced_bipartite_targets_mod2():
    c4 = cycle_graph(4)
    w = realize_targets(GroupTargetProblem(c4, 2, (1, 1, 0, 0)))
    assert residue_sums(c4, w) == (1, 1, 0, 0)


def test_unbalanced_bipartite_targets_rejected():
    c4 = cycle_graph(4)
    with pytest.raises(PreconditionViolated):
        realize_targets(GroupTargetProblem(c4, 2, (1, 0, 0, 0)))


def test_undoubled_sum_rejected_even_modulus():
    k3 = k_complete(3)
    with pytest.raises(PreconditionViolated):
        realize_targets(GroupTargetProblem(k3, 4, (1, 0, 0)))


def test_isolated_vertex_must_target_zero():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(PreconditionViolated):
        realize_targets(GroupTargetProblem(g, 3, (0, 0, 0, 1)))


def test_realizer_random_doubled_targets():
    rng = random.Random(2024)
    for trial in range(120):
        n = rng.randint(3, 12)
        g = random_connected_nonbipartite(n, rng.uniform(0.3, 0.6), seed=trial)
        r = rng.choice([3, 4, 5, 6, 8])
        t = [rng.randrange(r) for _ in range(n)]
        if not is_doubled(sum(t) % r, r):
            t[0] = (t[0] + 1) % r
        w = realize_targets(GroupTargetProblem(g, r, tuple(t)))
        assert residue_sums(g, w) == tuple(x % r for x in t)


# --- parity normalization --------------------------------------------------

def test_normalize_returns_even_input_unchanged():
    cc = ColorClasses(k=4, assignment=(1, 2, 2, 3, 4))  # sizes (1,2,1,1), sum 12
    assert parity_normalize_coloring(cc, 4) == cc


def test_normalize_swaps_one_pair():
    cc = ColorClasses(k=4, assignment=(1, 1, 2, 3, 4))  # sizes (2,1,1,1), sum 11
    out = parity_normalize_coloring(cc, 4)
    assert out.sizes() == (1, 2, 1, 1)
    assert out.weighted_size_sum() % 2 == 0


def test_normalize_mod2_all_odd_is_obstructed():
    cc = ColorClasses(k=2, assignment=(1, 2, 1, 2, 1, 2))  # sizes (3,3)
    with pytest.raises(Obstructed):
        parity_normalize_coloring(cc, 2)


def test_normalize_rejects_odd_modulus():
    cc = ColorClasses(k=3, assignment=(1, 2, 3))
    with pytest.raises(ValueError):
        parity_normalize_coloring(cc, 3)


def test_normalize_random_inputs_keep_partition():
    rng = random.Random(5)
    for r in (4, 6, 8):
        for _ in range(40):
            n = rng.randint(1, 10)
            assignment = tuple(rng.randint(1, r) for _ in range(n))
            cc = ColorClasses(k=r, assignment=assignment)
            if r % 4 == 2 and all(s % 2 for s in cc.sizes()):
                continue
            out = parity_normalize_coloring(cc, r)
            assert out.weighted_size_sum() % 2 == 0
            assert sorted(out.sizes()) == sorted(cc.sizes())


# --- full pipeline ----------------------------------------------------------

def test_k4_four_labels():
    g = k_complete(4)
    w = vertex_coloring_weighting_zr(g, 4)
    assert w.size == 4
    assert all(1 <= lab <= 4 for lab in w.weights.values())
    assert is_vertex_coloring(g, w)


def test_odd_modulus_route():
    g = cycle_graph(5)
    w = vertex_coloring_weighting_zr(g, 3)
    assert is_vertex_coloring(g, w)


def test_wheel_and_planar():
    g = wheel(5)
    assert is_vertex_coloring(g, vertex_coloring_weighting_zr(g, 4))
    h = random_planar_triangulation(18, seed=1)
    assert is_vertex_coloring(h, vertex_coloring_weighting_zr(h, 4))


def test_mixed_components_even_modulus():
    # one bipartite component, one odd-cycle component, one isolated vertex
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 3),
                             (4, 5), (5, 6), (4, 6)])
    w = vertex_coloring_weighting_zr(g, 4)
    assert is_vertex_coloring(g, w)


def test_star_component_balancing():
    # both parts odd at modulus 4: needs the non-uniform part assignment
    g = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    w = vertex_coloring_weighting_zr(g, 4)
    assert is_vertex_coloring(g, w)


def test_c6_mod2_obstructed_and_oracle_confirms():
    c6 = cycle_graph(6)
    with pytest.raises(Obstructed):
        vertex_coloring_weighting_zr(c6, 2)
    count, _ = enumerate_weightings(c6, 2, "vc")
    assert count == 0
    assert all(
        all(s % 2 == 1 for s in ColorClasses(k=2, assignment=a).sizes())
        for a in proper_colorings(c6, 2))


def test_not_nice_rejected():
    g = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(PreconditionViolated):
        vertex_coloring_weighting_zr(g, 4)


def test_under_chromatic_budget():
    with pytest.raises(ColoringUnavailable):
        vertex_coloring_weighting_zr(k_complete(5), 4)


def test_labels_preserve_residues():
    g = k_complete(4)
    w = vertex_coloring_weighting_zr(g, 4)
    sums = induced_coloring(g, w)
    # adjacent integer sums differ because they differ mod 4
    for u, v in g.edges:
        assert sums[u] % 4 != sums[v] % 4


def test_obstructed_implies_every_coloring_all_odd():
    # scan all <=8-vertex graphs whose pipeline reports an obstruction at r=2
    rng = random.Random(11)
    seen_obstructed = 0
    for trial in range(60):
        n = rng.randint(4, 8)
        g = random_connected_nonbipartite(n, 0.4, seed=trial) if rng.random() < 0.3 else cycle_graph(2 * rng.randint(2, 4))
        try:
            w = vertex_coloring_weighting_zr(g, 2)
            assert is_vertex_coloring(g, w)
        except Obstructed:
            seen_obstructed += 1
            for a in proper_colorings(g, 2):
                assert all(s % 2 == 1 for s in ColorClasses(k=2, assignment=a).sizes())
        except ColoringUnavailable:
            pass
    assert seen_obstructed > 0

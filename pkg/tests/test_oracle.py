import random

import pytest

from factorweight.errors import BudgetExceeded
from factorweight.graph import Graph
from factorweight.oracle import (
    ADJACENT_VD,
    VERTEX_COLORING,
    OracleBudget,
    enumerate_l_factors,
    enumerate_weightings,
    first_l_factor,
    first_weighting,
)

from conftest import cycle_graph, k_complete, path_graph


def test_path_all_two_weightings_work():
    count, witness = enumerate_weightings(path_graph(3), 2, VERTEX_COLORING)
    assert count == 4
    assert witness is not None
    assert witness.weights == {(0, 1): 1, (1, 2): 1}  # base-k counter first


def test_even_cycle_has_no_proper_two_weighting():
    count, witness = enumerate_weightings(cycle_graph(6), 2, VERTEX_COLORING)
    assert count == 0 and witness is None


def test_single_edge_never_avd():
    k2 = Graph.from_edges(2, [(0, 1)])
    assert enumerate_weightings(k2, 2, ADJACENT_VD) == (0, None)


def test_factor_counts():
    c4 = cycle_graph(4)
    count, witness = enumerate_l_factors(c4, [frozenset({1})] * 4)
    assert count == 2
    assert witness == ((0, 3), (1, 2))  # mask 6 beats mask 9
    k3 = k_complete(3)
    assert enumerate_l_factors(k3, [frozenset({2})] * 3)[0] == 1
    assert enumerate_l_factors(k3, [frozenset({3})] * 3)[0] == 0


def test_counts_invariant_under_relabeling():
    rng = random.Random(13)
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])
    base_w = enumerate_weightings(g, 2, VERTEX_COLORING)[0]
    base_f = enumerate_l_factors(g, [frozenset({1, 2})] * 5)[0]
    for _ in range(5):
        perm = list(range(5))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert enumerate_weightings(h, 2, VERTEX_COLORING)[0] == base_w
        lists = [None] * 5
        for v in range(5):
            lists[perm[v]] = frozenset({1, 2})
        assert enumerate_l_factors(h, lists)[0] == base_f


def test_first_witness_deterministic():
    g = cycle_graph(4)
    a = enumerate_weightings(g, 2, VERTEX_COLORING)
    b = enumerate_weightings(g, 2, VERTEX_COLORING)
    assert a == b
    assert first_weighting(g, 2, VERTEX_COLORING) == a[1]
    assert first_l_factor(g, [frozenset({1})] * 4) == ((0, 3), (1, 2))


def test_budget_enforced_up_front():
    g = k_complete(6)
    with pytest.raises(BudgetExceeded):
        enumerate_weightings(g, 3, VERTEX_COLORING, OracleBudget(max_enumerations=100))


def test_budget_accumulates_across_calls():
    budget = OracleBudget(max_enumerations=20)
    enumerate_weightings(path_graph(3), 2, VERTEX_COLORING, budget)  # 4 used
    enumerate_weightings(path_graph(3), 2, VERTEX_COLORING, budget)  # 8 used
    with pytest.raises(BudgetExceeded):
        enumerate_weightings(cycle_graph(4), 2, VERTEX_COLORING, budget)  # needs 16

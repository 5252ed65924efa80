import random

import pytest

from factorweight.errors import BudgetExceeded, SpecInvalid
from factorweight.graph import Graph, bipartition
from factorweight.interval_factor import (
    IntervalSpec,
    evaluate_inequality,
    gf_factor_flow,
    heinrich_check,
)
from factorweight.oracle import enumerate_l_factors

from conftest import cycle_graph, k_complete, path_graph, star_graph


def test_path_with_tight_intervals_is_feasible():
    g = path_graph(3)
    spec = IntervalSpec.build(g, [1, 2, 1], [1, 2, 1])
    res = heinrich_check(g, spec)
    assert res.applicable and res.feasible
    sol = gf_factor_flow(g, spec)
    assert sol.edges == g.edges  # the whole path


def test_star_witness_is_first_in_counter_order():
    g = star_graph(3)
    spec = IntervalSpec.build(g, [3, 0, 0, 0], [3, 0, 0, 0])
    res = heinrich_check(g, spec)
    assert res.feasible is False
    w = res.witness
    assert (w.A, w.B) == ((0,), (1,))
    assert (w.lhs, w.rhs) == (1, 0)
    # the witness re-evaluates from scratch
    assert evaluate_inequality(g, spec, w.A, w.B) == (1, 0)
    assert gf_factor_flow(g, spec) is None


def test_empty_sets_never_violate():
    g = cycle_graph(4)
    spec = IntervalSpec.build(g, 1, 2)
    assert evaluate_inequality(g, spec, (), ()) == (0, 0)


def test_flow_examples():
    c4 = cycle_graph(4)
    pm = gf_factor_flow(c4, IntervalSpec.build(c4, 1, 1))
    assert pm is not None and sorted(pm.degrees) == [1, 1, 1, 1]
    k3 = k_complete(3)
    tri = gf_factor_flow(k3, IntervalSpec.build(k3, 2, 2))
    assert tri.edges == k3.edges


def test_interval_bounds_validation():
    with pytest.raises(SpecInvalid):
        IntervalSpec.build(cycle_graph(4), 1, 3)  # above degree
    with pytest.raises(SpecInvalid):
        IntervalSpec.build(cycle_graph(4), 2, 1)  # inverted


def test_criterion_size_limit():
    g = path_graph(17)
    with pytest.raises(BudgetExceeded):
        heinrich_check(g, IntervalSpec.build(g, 0, 1))


def test_applicability_labeling():
    k3 = k_complete(3)
    res = heinrich_check(k3, IntervalSpec.build(k3, 2, 2))
    assert not res.applicable
    assert "not applicable" in res.note


def random_interval_spec(g, rng):
    bip = bipartition(g)
    force_gap = bip is None or rng.random() < 0.5
    lows, highs = [], []
    for v in range(g.n):
        d = g.degree(v)
        if force_gap:
            if d == 0:
                return None
            a = rng.randint(0, d - 1)
            b = rng.randint(a + 1, d)
        else:
            a = rng.randint(0, d)
            b = rng.randint(a, d)
        lows.append(a)
        highs.append(b)
    return IntervalSpec.build(g, lows, highs)


def test_three_way_agreement_random_sample():
    rng = random.Random(424242)
    trials = 0
    while trials < 250:
        n = rng.randint(1, 6)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        spec = random_interval_spec(g, rng)
        if spec is None:
            continue
        trials += 1
        h = heinrich_check(g, spec)
        sol = gf_factor_flow(g, spec)
        count, _ = enumerate_l_factors(g, spec.allowed_sets())
        assert h.feasible == (sol is not None) == (count > 0)
        if sol is not None:
            assert all(
                spec.lows[v] <= sol.degrees[v] <= spec.highs[v] for v in range(n))
        if h.witness is not None:
            lhs, rhs = evaluate_inequality(g, spec, h.witness.A, h.witness.B)
            assert lhs > rhs and (lhs, rhs) == (h.witness.lhs, h.witness.rhs)

"""Shared fixtures: deterministic hypothesis profile, graph corpora, builders."""

from itertools import combinations, permutations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from factorweight.graph import Graph

settings.register_profile(
    "det",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("det")


def k_complete(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def labeled_graphs(n):
    """Every labeled simple graph on n vertices."""
    slots = list(combinations(range(n), 2))
    for mask in range(2 ** len(slots)):
        yield Graph.from_edges(
            n, [slots[j] for j in range(len(slots)) if mask >> j & 1])


def _nonisomorphic_levels(max_n):
    levels = {1: [Graph.from_edges(1, [])]}
    for n in range(2, max_n + 1):
        slots = list(combinations(range(n), 2))
        sindex = {e: i for i, e in enumerate(slots)}
        maps = [
            tuple(sindex[tuple(sorted((perm[u], perm[v])))] for u, v in slots)
            for perm in permutations(range(n))
        ]
        seen = {}
        for g in levels[n - 1]:
            base = 0
            for u, v in g.edges:
                base |= 1 << sindex[(u, v)]
            for ext in range(2 ** (n - 1)):
                mask = base
                for i in range(n - 1):
                    if ext >> i & 1:
                        mask |= 1 << sindex[(i, n - 1)]
                canon = min(
                    sum(1 << pm[j] for j in range(len(slots)) if mask >> j & 1)
                    for pm in maps)
                if canon not in seen:
                    seen[canon] = Graph.from_edges(
                        n, [slots[i] for i in range(len(slots)) if mask >> i & 1])
        levels[n] = list(seen.values())
    return levels


@pytest.fixture(scope="session")
def noniso_graphs_to_6():
    """One representative per isomorphism class, n = 1..6 (208 graphs)."""
    levels = _nonisomorphic_levels(6)
    assert [len(levels[n]) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    return [g for n in range(1, 7) for g in levels[n]]


@st.composite
def graph_strategy(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    slots = list(combinations(range(n), 2))
    if slots:
        mask = draw(st.integers(min_value=0, max_value=2 ** len(slots) - 1))
    else:
        mask = 0
    return Graph.from_edges(
        n, [slots[i] for i in range(len(slots)) if mask >> i & 1])

import pytest
from hypothesis import given

from factorweight.errors import MalformedInputError, PreconditionViolated
from factorweight.graph import (
    Graph,
    bipartition,
    component_count,
    connected_components,
    encode_graph6,
    find_odd_closed_walk,
    induced_subgraph,
    is_nice,
    isolated_vertices,
    parse_edge_list,
    parse_graph6,
)

from conftest import cycle_graph, graph_strategy, k_complete, labeled_graphs, path_graph


# --- edge-list parsing ---------------------------------------------------

def test_parse_path():
    g = parse_edge_list("0 1\n1 2")
    assert g.n == 3
    assert g.edges == ((0, 1), (1, 2))


def test_parse_header_allows_isolated_vertices():
    g = parse_edge_list("n 4\n0 1")
    assert g.n == 4
    assert g.m == 1
    assert isolated_vertices(g) == [2, 3]


def test_parse_duplicate_edges_collapse():
    g = parse_edge_list("0 1\n0 1")
    assert g.n == 2
    assert g.edges == ((0, 1),)


@pytest.mark.parametrize("text", ["0", "0 1 2", "a b", "0 -1"])
def test_parse_malformed_lines(text):
    with pytest.raises(MalformedInputError):
        parse_edge_list(text)


def test_parse_self_loop_rejected():
    with pytest.raises(MalformedInputError):
        parse_edge_list("3 3")


def test_parse_id_beyond_declared_n():
    with pytest.raises(MalformedInputError):
        parse_edge_list("n 2\n0 5")


# --- graph6 --------------------------------------------------------------

def reference_graph6_decode(s):
    """Independent decoder: bit-string over the column-major upper triangle."""
    vals = [ord(ch) - 63 for ch in s]
    assert all(0 <= v <= 63 for v in vals)
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] < 63:
        n, body = (vals[1] << 12) | (vals[2] << 6) | vals[3], vals[4:]
    else:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    bits = "".join(format(v, "06b") for v in body)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    return n, sorted(edges)


@pytest.mark.parametrize("text,n,edges", [
    ("A_", 2, [(0, 1)]),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("?", 0, []),
])
def test_graph6_frozen_cases(text, n, edges):
    assert reference_graph6_decode(text) == (n, edges)
    g = parse_graph6(text)
    assert (g.n, list(g.edges)) == (n, edges)


def test_graph6_invalid_character():
    with pytest.raises(MalformedInputError):
        parse_graph6("A\x20")


def test_graph6_truncated_body():
    with pytest.raises(MalformedInputError):
        parse_graph6("D")  # n=5 needs ceil(10/6)=2 body bytes


def test_graph6_trailing_garbage():
    with pytest.raises(MalformedInputError):
        parse_graph6("A__")


def test_graph6_roundtrip_exhaustive_small():
    for n in range(6):
        for g in labeled_graphs(n):
            enc = encode_graph6(g)
            assert reference_graph6_decode(enc) == (g.n, list(g.edges))
            assert parse_graph6(enc) == g


@given(graph_strategy(max_n=9))
def test_graph6_roundtrip_random(g):
    assert parse_graph6(encode_graph6(g)) == g


def test_graph6_roundtrip_seven_vertices_sample():
    import random
    rng = random.Random(17)
    slots = [(i, j) for i in range(7) for j in range(i + 1, 7)]
    for _ in range(300):
        mask = rng.randrange(2 ** len(slots))
        g = Graph.from_edges(7, [slots[i] for i in range(len(slots)) if mask >> i & 1])
        assert parse_graph6(encode_graph6(g)) == g


def test_graph6_extended_size_form():
    g = path_graph(70)
    enc = encode_graph6(g)
    assert enc.startswith("~")
    assert parse_graph6(enc) == g


# --- structure queries ---------------------------------------------------

@given(graph_strategy(max_n=9))
def test_degree_sum_is_twice_edges(g):
    assert sum(g.degrees()) == 2 * g.m


def test_bipartition_examples():
    assert bipartition(cycle_graph(4)) is not None
    bip = bipartition(cycle_graph(4))
    assert {frozenset(bip.X), frozenset(bip.Y)} == {frozenset({0, 2}), frozenset({1, 3})}
    assert bipartition(k_complete(3)) is None
    p3 = path_graph(3)
    bip = bipartition(p3)
    assert set(bip.X) == {0, 2} and set(bip.Y) == {1}


@given(graph_strategy(max_n=8))
def test_bipartition_crossing_or_odd_walk(g):
    bip = bipartition(g)
    if bip is not None:
        assert all((u in bip.X) != (v in bip.X) for u, v in g.edges)
    else:
        roots = [comp[0] for comp in connected_components(g)]
        walks = []
        for r in roots:
            try:
                walks.append(find_odd_closed_walk(g, r))
            except PreconditionViolated:
                pass
        assert walks  # some component is non-bipartite
        for walk in walks:
            assert len(walk) % 2 == 1
            assert walk[0][0] == walk[-1][1]
            assert all(g.has_edge(a, b) for a, b in walk)
            assert all(walk[i][1] == walk[i + 1][0] for i in range(len(walk) - 1))


def test_is_nice_cases():
    assert is_nice(Graph.from_edges(2, [(0, 1)])) is False
    assert is_nice(k_complete(3)) is True
    k2_plus_k3 = Graph.from_edges(5, [(0, 1), (2, 3), (2, 4), (3, 4)])
    assert is_nice(k2_plus_k3) is False
    assert is_nice(Graph.from_edges(3, []))  # isolated vertices are fine


def test_find_odd_closed_walk_examples():
    walk = find_odd_closed_walk(k_complete(3), 0)
    assert walk == [(0, 1), (1, 2), (2, 0)]
    walk5 = find_odd_closed_walk(cycle_graph(5), 2)
    assert len(walk5) == 5
    assert walk5[0][0] == 2 and walk5[-1][1] == 2
    with pytest.raises(PreconditionViolated):
        find_odd_closed_walk(cycle_graph(4), 0)


def test_components_and_induced():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (4, 5)])
    comps = connected_components(g)
    assert comps == [[0, 1, 2], [3], [4, 5]]
    assert component_count(g) == 3
    sub, mapping = induced_subgraph(g, [4, 5])
    assert sub.edges == ((0, 1),)
    assert mapping == [4, 5]


def test_relabel_preserves_structure():
    g = path_graph(4)
    h = g.relabel([3, 2, 1, 0])
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert h.edges == ((0, 1), (1, 2), (2, 3))

"""Deterministic seeded graph generators for experiments and tests."""

from __future__ import annotations

import random

from .graph import Graph, bipartition, connected_components, is_nice


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def wheel(rim: int) -> Graph:
    """Hub joined to every vertex of a rim cycle."""
    if rim < 3:
        raise ValueError("wheels need a rim of at least 3")
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(rim, i) for i in range(rim)]
    return Graph.from_edges(rim + 1, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_with_min_degree(n: int, p: float, floor_deg: int, seed: int) -> Graph:
    """ER graph repaired upward until every degree reaches ``floor_deg``."""
    if floor_deg >= n:
        raise ValueError("degree floor must be below n")
    rng = random.Random(seed)
    es = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    g = Graph.from_edges(n, es)
    for v in range(n):
        deficit = floor_deg - g.degree(v)
        if deficit > 0:
            cands = [u for u in range(n)
                     if u != v and (min(u, v), max(u, v)) not in es]
            rng.shuffle(cands)
            for u in cands[:deficit]:
                es.add((min(u, v), max(u, v)))
            g = Graph.from_edges(n, es)
    assert g.min_degree() >= floor_deg
    return g


def random_bipartite(nx: int, ny: int, p: float, floor_deg: int, seed: int) -> Graph:
    """Bipartite ER on parts of size nx, ny, repaired to a degree floor."""
    if floor_deg > min(nx, ny):
        raise ValueError("degree floor must not exceed the smaller part")
    rng = random.Random(seed)
    es = {(i, nx + j) for i in range(nx) for j in range(ny) if rng.random() < p}
    g = Graph.from_edges(nx + ny, es)
    for v in range(nx + ny):
        deficit = floor_deg - g.degree(v)
        if deficit > 0:
            if v < nx:
                cands = [nx + j for j in range(ny) if (v, nx + j) not in es]
            else:
                cands = [i for i in range(nx) if (i, v) not in es]
            rng.shuffle(cands)
            for u in cands[:deficit]:
                es.add((min(u, v), max(u, v)))
            g = Graph.from_edges(nx + ny, es)
    assert g.min_degree() >= floor_deg
    return g


def random_planar_triangulation(n: int, seed: int) -> Graph:
    """Planar triangulation grown by splitting random faces of a triangle."""
    if n < 3:
        raise ValueError("triangulations need at least 3 vertices")
    rng = random.Random(seed)
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2), (0, 1, 2)]  # both sides of the starting triangle
    for v in range(3, n):
        idx = rng.randrange(len(faces))
        a, b, c = faces.pop(idx)
        for u in (a, b, c):
            edges.add((min(u, v), max(u, v)))
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    return Graph.from_edges(n, sorted(edges))


def random_k_colorable(n: int, k: int, p: float, seed: int) -> Graph:
    """Random graph with a planted proper k-partition (edges cross classes)."""
    rng = random.Random(seed)
    part = [rng.randrange(k) for _ in range(n)]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if part[i] != part[j] and rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_nonbipartite(n: int, p: float, seed: int) -> Graph:
    """Connected graph containing an odd cycle, by deterministic retry."""
    if n < 3:
        raise ValueError("need at least a triangle")
    for attempt in range(10_000):
        g = random_graph(n, p, seed * 10_007 + attempt)
        if len(connected_components(g)) == 1 and bipartition(g) is None:
            return g
    raise RuntimeError("generator failed to hit a connected non-bipartite graph")


def random_nice_k_colorable(n: int, k: int, p: float, seed: int) -> Graph:
    """Nice (no single-edge component) planted k-colorable graph."""
    for attempt in range(10_000):
        g = random_k_colorable(n, k, p, seed * 10_007 + attempt)
        if is_nice(g):
            return g
    raise RuntimeError("generator failed to hit a nice graph")

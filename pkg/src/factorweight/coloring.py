"""Exact proper vertex coloring at desk scale."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import BudgetExceeded
from .graph import Graph

DEFAULT_COLORING_NODE_LIMIT = 2_000_000


@dataclass(frozen=True)
class ColorClasses:
    """Proper coloring as a total map vertex -> color in 1..k.

    Classes may be empty: sizes() always reports k entries.
    """

    k: int
    assignment: tuple[int, ...]

    def sizes(self) -> tuple[int, ...]:
        counts = [0] * self.k
        for c in self.assignment:
            counts[c - 1] += 1
        return tuple(counts)

    def color_class(self, color: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.assignment) if c == color)

    def is_proper(self, g: Graph) -> bool:
        if len(self.assignment) != g.n:
            return False
        if any(not (1 <= c <= self.k) for c in self.assignment):
            return False
        return all(self.assignment[u] != self.assignment[v] for u, v in g.edges)

    def weighted_size_sum(self) -> int:
        """Sum of color * class size over all colors."""
        return sum(i * ni for i, ni in enumerate(self.sizes(), start=1))


def proper_coloring_exact(
    g: Graph,
    k: int,
    node_limit: int = DEFAULT_COLORING_NODE_LIMIT,
) -> Optional[ColorClasses]:
    """Backtracking k-coloring, most-saturated-vertex-first, degree ties.

    Deterministic for fixed input. Returns None when no proper k-coloring
    exists; raises BudgetExceeded past ``node_limit`` search nodes.
    """
    if k < 1:
        raise ValueError("color budget must be >= 1")
    n = g.n
    if n == 0:
        return ColorClasses(k=k, assignment=())
    colors = [0] * n
    # neighbor_color_counts[v][c] = colored neighbors of v wearing c
    ncc = [[0] * (k + 1) for _ in range(n)]
    saturation = [0] * n
    degrees = g.degrees()
    uncolored = set(range(n))
    nodes = 0

    def pick() -> int:
        best = None
        best_key = None
        for v in uncolored:
            key = (-saturation[v], -degrees[v], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def assign(v: int, c: int, delta: int) -> None:
        for w in g.adj[v]:
            row = ncc[w]
            before = row[c] > 0
            row[c] += delta
            after = row[c] > 0
            if before != after:
                saturation[w] += 1 if after else -1

    def solve(colored: int, used: int) -> bool:
        nonlocal nodes
        if colored == n:
            return True
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(f"coloring search passed {node_limit} nodes")
        v = pick()
        uncolored.discard(v)
        limit = min(k, used + 1)
        for c in range(1, limit + 1):
            if ncc[v][c] == 0:
                colors[v] = c
                assign(v, c, +1)
                if solve(colored + 1, max(used, c)):
                    return True
                assign(v, c, -1)
                colors[v] = 0
        uncolored.add(v)
        return False

    if solve(0, 0):
        return ColorClasses(k=k, assignment=tuple(colors))
    return None


def proper_colorings(g: Graph, k: int, node_limit: int = DEFAULT_COLORING_NODE_LIMIT) -> Iterator[tuple[int, ...]]:
    """Yield every proper k-coloring (vertex order 0..n-1, colors ascending).

    No symmetry breaking: permuted-color copies are distinct outputs.
    """
    n = g.n
    if n == 0:
        yield ()
        return
    colors = [0] * n
    nodes = 0

    def rec(v: int):
        nonlocal nodes
        if v == n:
            yield tuple(colors)
            return
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(f"coloring enumeration passed {node_limit} nodes")
        for c in range(1, k + 1):
            if all(colors[w] != c for w in g.adj[v] if w < v):
                colors[v] = c
                yield from rec(v + 1)
                colors[v] = 0

    yield from rec(0)

"""Edge weightings, induced vertex sums, and distinguishing verdicts."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graph import Graph

INTEGER = "integer"
RESIDUE = "residue"


@dataclass(frozen=True, eq=False)
class EdgeWeighting:
    """Total map edge -> label.

    ``domain`` is "integer" (labels 1..size) or "residue" (labels mod size).
    Keys are (u, v) with u < v. Treat instances as immutable (and
    unhashable: equality is by content).
    """

    weights: dict = field(repr=False)
    domain: str = INTEGER
    size: int = 0

    def label(self, u: int, v: int) -> int:
        return self.weights[(u, v) if u < v else (v, u)]

    def items(self):
        return sorted(self.weights.items())

    def is_total_on(self, g: Graph) -> bool:
        return set(self.weights) == set(g.edges)

    def __eq__(self, other):
        if not isinstance(other, EdgeWeighting):
            return NotImplemented
        return (self.domain, self.size, self.items()) == (other.domain, other.size, other.items())


def induced_coloring(g: Graph, w: EdgeWeighting) -> tuple[int, ...]:
    """Per-vertex integer sums c(v) of incident labels."""
    if w.domain != INTEGER:
        raise ValueError("induced_coloring expects integer labels")
    sums = [0] * g.n
    for u, v in g.edges:
        try:
            lab = w.weights[(u, v)]
        except KeyError:
            raise KeyError(f"edge ({u},{v}) has no label") from None
        sums[u] += lab
        sums[v] += lab
    return tuple(sums)


def multiset_signatures(g: Graph, w: EdgeWeighting) -> tuple[Counter, ...]:
    """Per-vertex multiset of incident labels, as label -> multiplicity."""
    sigs = [Counter() for _ in range(g.n)]
    for u, v in g.edges:
        lab = w.weights[(u, v)]
        sigs[u][lab] += 1
        sigs[v][lab] += 1
    return tuple(sigs)


def is_vertex_coloring(g: Graph, w: EdgeWeighting) -> bool:
    """True iff adjacent vertices get distinct induced sums."""
    sums = induced_coloring(g, w)
    return all(sums[u] != sums[v] for u, v in g.edges)


def is_adjacent_vd(g: Graph, w: EdgeWeighting) -> bool:
    """True iff adjacent vertices get distinct label multisets."""
    sigs = multiset_signatures(g, w)
    return all(sigs[u] != sigs[v] for u, v in g.edges)

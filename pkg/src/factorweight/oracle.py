"""Exhaustive ground-truth searchers: all k^m weightings, all 2^m subgraphs.

Enumeration orders are fixed so that counts and first witnesses are
reproducible: edges sorted by (min endpoint, max endpoint); weightings in
base-k counter order with the first edge as the most significant digit;
edge subsets as binary masks with bit j = edge j.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .errors import BudgetExceeded
from .graph import Graph
from .weighting import EdgeWeighting, INTEGER

VERTEX_COLORING = "vc"
ADJACENT_VD = "avd"

DEFAULT_BUDGET = 2 ** 30


@dataclass
class OracleBudget:
    max_enumerations: int = DEFAULT_BUDGET
    used: int = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.max_enumerations:
            raise BudgetExceeded(
                f"oracle budget exhausted ({self.used} > {self.max_enumerations})")

    def require(self, amount: int) -> None:
        if self.used + amount > self.max_enumerations:
            raise BudgetExceeded(
                f"enumeration of size {amount} exceeds oracle budget "
                f"({self.max_enumerations - self.used} left)")


def _weighting_satisfies(g: Graph, labels: Sequence[int], predicate: str) -> bool:
    if predicate == VERTEX_COLORING:
        sums = [0] * g.n
        for (u, v), lab in zip(g.edges, labels):
            sums[u] += lab
            sums[v] += lab
        return all(sums[u] != sums[v] for u, v in g.edges)
    if predicate == ADJACENT_VD:
        sigs: list[dict] = [{} for _ in range(g.n)]
        for (u, v), lab in zip(g.edges, labels):
            sigs[u][lab] = sigs[u].get(lab, 0) + 1
            sigs[v][lab] = sigs[v].get(lab, 0) + 1
        return all(sigs[u] != sigs[v] for u, v in g.edges)
    raise ValueError(f"unknown predicate {predicate!r}")


def enumerate_weightings(
    g: Graph,
    k: int,
    predicate: str,
    budget: Optional[OracleBudget] = None,
) -> tuple[int, Optional[EdgeWeighting]]:
    """Exact count of satisfying k-weightings plus the first witness."""
    budget = budget or OracleBudget()
    budget.require(k ** g.m)
    count = 0
    witness = None
    for labels in product(range(1, k + 1), repeat=g.m):
        budget.charge()
        if _weighting_satisfies(g, labels, predicate):
            count += 1
            if witness is None:
                witness = EdgeWeighting(
                    weights=dict(zip(g.edges, labels)), domain=INTEGER, size=k)
    return count, witness


def first_weighting(
    g: Graph,
    k: int,
    predicate: str,
    budget: Optional[OracleBudget] = None,
) -> Optional[EdgeWeighting]:
    """First satisfying weighting in counter order, or None (exhaustive)."""
    budget = budget or OracleBudget()
    budget.require(k ** g.m)
    for labels in product(range(1, k + 1), repeat=g.m):
        budget.charge()
        if _weighting_satisfies(g, labels, predicate):
            return EdgeWeighting(weights=dict(zip(g.edges, labels)), domain=INTEGER, size=k)
    return None


def _mask_degrees(g: Graph, mask: int) -> list[int]:
    deg = [0] * g.n
    j = 0
    while mask:
        if mask & 1:
            u, v = g.edges[j]
            deg[u] += 1
            deg[v] += 1
        mask >>= 1
        j += 1
    return deg


def enumerate_l_factors(
    g: Graph,
    allowed: Sequence[frozenset],
    budget: Optional[OracleBudget] = None,
) -> tuple[int, Optional[tuple[tuple[int, int], ...]]]:
    """Exact count of edge subsets H with deg_H(v) in allowed[v] for all v.

    The first witness (smallest mask) is returned as a sorted edge tuple.
    """
    budget = budget or OracleBudget()
    budget.require(2 ** g.m)
    count = 0
    witness = None
    for mask in range(2 ** g.m):
        budget.charge()
        deg = _mask_degrees(g, mask)
        if all(deg[v] in allowed[v] for v in range(g.n)):
            count += 1
            if witness is None:
                witness = tuple(e for j, e in enumerate(g.edges) if mask >> j & 1)
    return count, witness


def first_l_factor(
    g: Graph,
    allowed: Sequence[frozenset],
    budget: Optional[OracleBudget] = None,
) -> Optional[tuple[tuple[int, int], ...]]:
    """First L-factor in mask order, or None when none exists (exhaustive)."""
    budget = budget or OracleBudget()
    budget.require(2 ** g.m)
    for mask in range(2 ** g.m):
        budget.charge()
        deg = _mask_degrees(g, mask)
        if all(deg[v] in allowed[v] for v in range(g.n)):
            return tuple(e for j, e in enumerate(g.edges) if mask >> j & 1)
    return None

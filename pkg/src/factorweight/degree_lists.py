"""Per-vertex allowed-degree lists and their hypothesis validators.

Five kinds of specification share one representation:

* ``pair``    anchors (a-, a+), list {a-, a-+1, a+, a++1}, constants (c1,c2,c3)
* ``pairc``   anchors (a-, a+), same list, single constant c
* ``triple``  anchors (a1, a2, a3), list {a1, a1+1, a2, a2+1, a3, a3+1}
* ``bip2``    anchors (a-, a+), exact list {a-, a+}, sides X/Y, constant c
* ``generic`` anchors = the explicit allowed set

``validate_spec`` reports whether the guarantee hypotheses of the matching
construction hold, preserving strict vs non-strict comparisons verbatim;
arithmetic is exact over Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Optional, Sequence, Union

from .errors import SpecInvalid
from .graph import Bipartition, Graph

PAIR = "pair"
PAIR_C = "pairc"
TRIPLE = "triple"
BIP2 = "bip2"
GENERIC = "generic"

DEFAULT_PAIR_CONSTANTS = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))
DEFAULT_SINGLE_CONSTANT = Fraction(1, 2)

TRIPLE_WINDOWS = (
    (Fraction(3, 10), Fraction(4, 10)),
    (Fraction(4, 10), Fraction(6, 10)),
    (Fraction(6, 10), Fraction(7, 10)),
)

IntOrSeq = Union[int, Sequence[int]]


def _per_vertex(g: Graph, value: IntOrSeq, name: str) -> tuple[int, ...]:
    if isinstance(value, int):
        return tuple(value for _ in range(g.n))
    out = tuple(int(x) for x in value)
    if len(out) != g.n:
        raise SpecInvalid(f"{name} has {len(out)} entries for {g.n} vertices")
    return out


@dataclass(frozen=True)
class DegreeListSpec:
    kind: str
    anchors: tuple[tuple[int, ...], ...]
    constants: tuple[Fraction, ...] = ()
    sides: Optional[tuple[str, ...]] = None

    def allowed(self, v: int) -> frozenset:
        """Expanded allowed-degree set at v."""
        a = self.anchors[v]
        if self.kind in (PAIR, PAIR_C, TRIPLE):
            vals = set()
            for x in a:
                vals.add(x)
                vals.add(x + 1)
            return frozenset(vals)
        return frozenset(a)

    def allowed_all(self) -> tuple[frozenset, ...]:
        return tuple(self.allowed(v) for v in range(len(self.anchors)))

    def windows(self, v: int) -> tuple[tuple[int, int], ...]:
        """Maximal runs [lo, hi] of consecutive allowed degrees at v."""
        vals = sorted(self.allowed(v))
        runs = []
        lo = hi = vals[0]
        for x in vals[1:]:
            if x == hi + 1:
                hi = x
            else:
                runs.append((lo, hi))
                lo = hi = x
        runs.append((lo, hi))
        return tuple(runs)


def _check_anchor_ranges(g: Graph, anchors) -> None:
    for v, a in enumerate(anchors):
        d = g.degree(v)
        for x in a:
            if not (0 <= x <= d):
                raise SpecInvalid(f"anchor {x} at vertex {v} outside [0, deg={d}]")


def pair_spec(
    g: Graph,
    lows: IntOrSeq,
    highs: IntOrSeq,
    constants: tuple[Fraction, Fraction, Fraction] = DEFAULT_PAIR_CONSTANTS,
) -> DegreeListSpec:
    lo = _per_vertex(g, lows, "lows")
    hi = _per_vertex(g, highs, "highs")
    anchors = tuple((a, b) if a <= b else (b, a) for a, b in zip(lo, hi))
    _check_anchor_ranges(g, anchors)
    return DegreeListSpec(kind=PAIR, anchors=anchors, constants=tuple(constants))


def pair_single_c_spec(
    g: Graph,
    lows: IntOrSeq,
    highs: IntOrSeq,
    c: Fraction = DEFAULT_SINGLE_CONSTANT,
) -> DegreeListSpec:
    lo = _per_vertex(g, lows, "lows")
    hi = _per_vertex(g, highs, "highs")
    anchors = tuple((a, b) if a <= b else (b, a) for a, b in zip(lo, hi))
    _check_anchor_ranges(g, anchors)
    return DegreeListSpec(kind=PAIR_C, anchors=anchors, constants=(Fraction(c),))


def triple_spec(g: Graph, a1: IntOrSeq, a2: IntOrSeq, a3: IntOrSeq) -> DegreeListSpec:
    t1 = _per_vertex(g, a1, "a1")
    t2 = _per_vertex(g, a2, "a2")
    t3 = _per_vertex(g, a3, "a3")
    anchors = tuple(tuple(sorted(t)) for t in zip(t1, t2, t3))
    _check_anchor_ranges(g, anchors)
    return DegreeListSpec(kind=TRIPLE, anchors=anchors)


def bipartite_two_value_spec(
    g: Graph,
    bip: Bipartition,
    y_lows: IntOrSeq,
    y_highs: IntOrSeq,
    c: Fraction = DEFAULT_SINGLE_CONSTANT,
) -> DegreeListSpec:
    """Exact two-value lists: X side forced to (floor(c d), floor(c d)+1)."""
    c = Fraction(c)
    ylo = _per_vertex(g, y_lows, "y_lows")
    yhi = _per_vertex(g, y_highs, "y_highs")
    anchors = []
    sides = []
    for v in range(g.n):
        if v in bip.X:
            base = floor(c * g.degree(v))
            anchors.append((base, base + 1))
            sides.append("X")
        else:
            a, b = ylo[v], yhi[v]
            anchors.append((a, b) if a <= b else (b, a))
            sides.append("Y")
    spec = DegreeListSpec(
        kind=BIP2, anchors=tuple(anchors), constants=(c,), sides=tuple(sides))
    _check_anchor_ranges(g, spec.anchors)
    return spec


def generic_spec(g: Graph, lists: Sequence[Sequence[int]]) -> DegreeListSpec:
    if len(lists) != g.n:
        raise SpecInvalid(f"{len(lists)} lists for {g.n} vertices")
    anchors = []
    for v, vals in enumerate(lists):
        vs = tuple(sorted(set(int(x) for x in vals)))
        if not vs:
            raise SpecInvalid(f"empty allowed set at vertex {v}")
        anchors.append(vs)
    spec = DegreeListSpec(kind=GENERIC, anchors=tuple(anchors))
    _check_anchor_ranges(g, spec.anchors)
    return spec


@dataclass(frozen=True)
class SpecCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class SpecValidation:
    kind: str
    checks: tuple[SpecCheck, ...]

    @property
    def hypotheses_hold(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def proof_backed(self) -> bool:
        """True when a convergence guarantee applies to the solver run."""
        return self.hypotheses_hold and self.kind in (PAIR, PAIR_C, TRIPLE)

    def failures(self) -> tuple[SpecCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def _vertex_check(name: str, v: int, ok: bool, detail: str) -> SpecCheck:
    return SpecCheck(name=f"{name}[v{v}]", ok=ok, detail=detail)


def validate_spec(g: Graph, spec: DegreeListSpec) -> SpecValidation:
    """Report whether the guarantee hypotheses of spec's kind hold on g."""
    checks: list[SpecCheck] = []
    if spec.kind == PAIR:
        c1, c2, c3 = spec.constants
        checks.append(SpecCheck("0<c1<c2<c3<1", 0 < c1 < c2 < c3 < 1, f"c=({c1},{c2},{c3})"))
        lhs = c3 - c1 * (1 - c3) / (1 - c1)
        checks.append(SpecCheck("c3-c1(1-c3)/(1-c1)<=c2", lhs <= c2, f"{lhs}<= {c2}"))
        checks.append(SpecCheck("c1>=c3*c2", c1 >= c3 * c2, f"{c1}>={c3 * c2}"))
        for v in range(g.n):
            d = g.degree(v)
            am, ap = spec.anchors[v]
            ok = c1 * d <= am <= c2 * d <= ap <= c3 * d
            checks.append(_vertex_check(
                "c1*d<=a-<=c2*d<=a+<=c3*d", v, ok, f"d={d} a=({am},{ap})"))
    elif spec.kind == TRIPLE:
        (w1l, w1h), (w2l, w2h), (w3l, w3h) = TRIPLE_WINDOWS
        for v in range(g.n):
            d = g.degree(v)
            a1, a2, a3 = spec.anchors[v]
            ok = (w1l * d <= a1 <= w1h * d <= a2 <= w2h * d <= a3 <= w3h * d)
            checks.append(_vertex_check(
                "3d/10<=a1<=4d/10<=a2<=6d/10<=a3<=7d/10", v, ok,
                f"d={d} a=({a1},{a2},{a3})"))
    elif spec.kind == PAIR_C:
        (c,) = spec.constants
        checks.append(SpecCheck("0<c<2/3", 0 < c < Fraction(2, 3), f"c={c}"))
        for v in range(g.n):
            d = g.degree(v)
            am, ap = spec.anchors[v]
            ok1 = am <= c * d <= ap and ap < d
            ok2 = ap <= min(c * d + (1 - c) * am + 1, Fraction(am + 1, c) + 1)
            checks.append(_vertex_check(
                "a-<=c*d<=a+<d", v, ok1, f"d={d} a=({am},{ap})"))
            checks.append(_vertex_check(
                "a+<=min(c*d+(1-c)a-+1,(a-+1)/c+1)", v, ok2, f"d={d} a=({am},{ap})"))
    elif spec.kind == BIP2:
        (c,) = spec.constants
        checks.append(SpecCheck("0<c<2/3", 0 < c < Fraction(2, 3), f"c={c}"))
        sides_ok = spec.sides is not None and all(
            spec.sides[u] != spec.sides[v] for u, v in g.edges)
        checks.append(SpecCheck("sides form a bipartition", sides_ok, ""))
        for v in range(g.n):
            d = g.degree(v)
            am, ap = spec.anchors[v]
            if spec.sides and spec.sides[v] == "X":
                ok = am == floor(c * d) and ap == am + 1
                checks.append(_vertex_check(
                    "X: a-=floor(c*d), a+=a-+1", v, ok, f"d={d} a=({am},{ap})"))
            else:
                ok1 = am <= floor(c * d) <= ap
                ok2 = ap <= min(c * d + (1 - c) * am + 1, Fraction(am, c) + 1)
                checks.append(_vertex_check(
                    "Y: a-<=floor(c*d)<=a+", v, ok1, f"d={d} a=({am},{ap})"))
                checks.append(_vertex_check(
                    "Y: a+<=min(c*d+(1-c)a-+1,a-/c+1)", v, ok2, f"d={d} a=({am},{ap})"))
    elif spec.kind == GENERIC:
        checks.append(SpecCheck("generic lists carry no guarantee", False, "unguaranteed"))
    else:
        raise SpecInvalid(f"unknown spec kind {spec.kind!r}")
    return SpecValidation(kind=spec.kind, checks=tuple(checks))

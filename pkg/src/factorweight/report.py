"""Canonical text reports and witness documents.

Field order is fixed so byte-for-byte diffs are meaningful. A witness
document is self-contained: the graph (graph6), the claim kind, and the
payload needed to re-verify it from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import MalformedInputError
from .graph import Graph, encode_graph6, isolated_vertices, parse_graph6
from .weighting import INTEGER, EdgeWeighting

FACTOR_KIND = "factor"
WEIGHTING_KIND = "weighting"


def _edge_token(e: tuple[int, int]) -> str:
    return f"{e[0]}-{e[1]}"


def _parse_edge_token(tok: str) -> tuple[int, int]:
    try:
        a, b = tok.split("-")
        u, v = int(a), int(b)
    except ValueError:
        raise MalformedInputError(f"bad edge token {tok!r}") from None
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WitnessDoc:
    """Serializable claim: a factor's edge set or a full edge weighting."""

    kind: str
    graph6: str
    lists: Optional[tuple[tuple[int, ...], ...]] = None   # factor kind
    edges: Optional[tuple[tuple[int, int], ...]] = None   # factor kind
    labels_max: Optional[int] = None                      # weighting kind
    weights: Optional[tuple[tuple[tuple[int, int], int], ...]] = None

    def graph(self) -> Graph:
        return parse_graph6(self.graph6)

    def render(self) -> str:
        lines = [f"kind: {self.kind}", f"graph6: {self.graph6}"]
        if self.kind == FACTOR_KIND:
            lst = " ".join(
                f"{v}:{','.join(map(str, vals))}" for v, vals in enumerate(self.lists))
            lines.append(f"lists: {lst or '-'}")
            lines.append(
                "edges: " + (" ".join(_edge_token(e) for e in self.edges) or "-"))
        else:
            lines.append(f"labels-max: {self.labels_max}")
            body = " ".join(f"{_edge_token(e)}={lab}" for e, lab in self.weights)
            lines.append(f"weights: {body or '-'}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse(text: str) -> "WitnessDoc":
        fields = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if ": " not in line and not line.endswith(":"):
                raise MalformedInputError(f"bad witness line {line!r}")
            key, _, value = line.partition(":")
            fields[key.strip()] = value.strip()
        kind = fields.get("kind")
        graph6 = fields.get("graph6")
        if kind not in (FACTOR_KIND, WEIGHTING_KIND) or graph6 is None:
            raise MalformedInputError("witness must declare kind and graph6")
        if kind == FACTOR_KIND:
            lists_txt = fields.get("lists", "-")
            lists: list[tuple[int, ...]] = []
            if lists_txt != "-":
                for part in lists_txt.split():
                    v, _, vals = part.partition(":")
                    lists.append(tuple(int(x) for x in vals.split(",")))
            edges_txt = fields.get("edges", "-")
            edges = tuple(
                _parse_edge_token(t) for t in edges_txt.split()) if edges_txt != "-" else ()
            return WitnessDoc(kind=kind, graph6=graph6,
                              lists=tuple(lists), edges=edges)
        labels_max = int(fields.get("labels-max", "0"))
        weights_txt = fields.get("weights", "-")
        weights = []
        if weights_txt != "-":
            for tok in weights_txt.split():
                et, _, lab = tok.partition("=")
                weights.append((_parse_edge_token(et), int(lab)))
        return WitnessDoc(kind=kind, graph6=graph6,
                          labels_max=labels_max, weights=tuple(weights))

    @staticmethod
    def for_factor(g: Graph, lists, edges) -> "WitnessDoc":
        return WitnessDoc(
            kind=FACTOR_KIND,
            graph6=encode_graph6(g),
            lists=tuple(tuple(sorted(vals)) for vals in lists),
            edges=tuple(sorted(edges)),
        )

    @staticmethod
    def for_weighting(g: Graph, w: EdgeWeighting) -> "WitnessDoc":
        return WitnessDoc(
            kind=WEIGHTING_KIND,
            graph6=encode_graph6(g),
            labels_max=w.size,
            weights=tuple(sorted(w.weights.items())),
        )

    def to_weighting(self) -> EdgeWeighting:
        return EdgeWeighting(
            weights=dict(self.weights), domain=INTEGER, size=self.labels_max)


@dataclass
class Report:
    """One command's outcome in canonical key-value lines."""

    command: str
    graph: Optional[Graph] = None
    verdict: str = ""
    witness: Optional[WitnessDoc] = None
    checks: list = field(default_factory=list)  # (name, passed) pairs
    notes: list = field(default_factory=list)
    time_ms: int = 0

    def add_check(self, name: str, passed: bool) -> None:
        self.checks.append((name, passed))

    def all_checks_pass(self) -> bool:
        return all(ok for _, ok in self.checks)

    def render(self) -> str:
        if self.witness is not None and not self.all_checks_pass():
            raise AssertionError("a witness may only ship with an all-pass transcript")
        lines = [f"command: {self.command}"]
        if self.graph is not None:
            g = self.graph
            hist: dict[int, int] = {}
            for d in g.degrees():
                hist[d] = hist.get(d, 0) + 1
            hist_txt = " ".join(f"{d}:{c}" for d, c in sorted(hist.items())) or "-"
            iso = isolated_vertices(g)
            lines.append(f"input.vertices: {g.n}")
            lines.append(f"input.edges: {g.m}")
            lines.append(f"input.degree-histogram: {hist_txt}")
            lines.append(f"input.isolated: {' '.join(map(str, iso)) or '-'}")
        lines.append(f"verdict: {self.verdict}")
        for note in self.notes:
            lines.append(f"note: {note}")
        if self.witness is not None:
            for wline in self.witness.render().rstrip("\n").splitlines():
                lines.append(f"witness.{wline}")
        for name, ok in self.checks:
            lines.append(f"check.{name}: {'pass' if ok else 'fail'}")
        lines.append(f"time-ms: {self.time_ms}")
        return "\n".join(lines) + "\n"

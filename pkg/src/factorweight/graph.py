"""Immutable simple-graph core: construction, text formats, structure queries.

Vertices are dense 0-indexed integers. Graphs are value objects: two graphs
compare equal iff they have the same vertex count and edge set. All queries
here are pure functions, safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections import deque
from typing import Iterable, Optional, Sequence

from .errors import MalformedInputError, PreconditionViolated


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` is deduplicated, each pair stored as (u, v) with u < v, sorted
    by (u, v). ``adj`` mirrors the edge set symmetrically with sorted
    neighbor tuples.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    edge_index: dict = field(compare=False, repr=False)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        seen = set()
        for u, v in edges:
            if u == v:
                raise MalformedInputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInputError(f"edge ({u},{v}) outside vertex range [0,{n})")
            seen.add((u, v) if u < v else (v, u))
        ordered = tuple(sorted(seen))
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in ordered:
            neighbors[u].append(v)
            neighbors[v].append(u)
        adj = tuple(tuple(sorted(ns)) for ns in neighbors)
        index = {e: i for i, e in enumerate(ordered)}
        return Graph(n=n, edges=ordered, adj=adj, edge_index=index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ns) for ns in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph with vertex v renamed perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)


@dataclass(frozen=True)
class Bipartition:
    """Parts X, Y covering all vertices, every edge crossing between them."""

    X: frozenset
    Y: frozenset

    def side(self, v: int) -> str:
        return "X" if v in self.X else "Y"


def parse_edge_list(text: str) -> Graph:
    """Parse line-oriented "u v" pairs, optionally preceded by "n <count>".

    Duplicate edges collapse; without a header the vertex count is
    1 + max id (0 for no edges).
    """
    declared: Optional[int] = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if first and parts[0] == "n":
            if len(parts) != 2:
                raise MalformedInputError(f"line {lineno}: bad header {line!r}")
            try:
                declared = int(parts[1])
            except ValueError:
                raise MalformedInputError(f"line {lineno}: bad header {line!r}") from None
            if declared < 0:
                raise MalformedInputError(f"line {lineno}: negative vertex count")
            first = False
            continue
        first = False
        if len(parts) != 2:
            raise MalformedInputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInputError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise MalformedInputError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise MalformedInputError(f"line {lineno}: self-loop at {u}")
        if declared is not None and (u >= declared or v >= declared):
            raise MalformedInputError(f"line {lineno}: vertex id >= declared n={declared}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = declared if declared is not None else max_id + 1
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def _g6_decode_size(s: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed) from a graph6 size prefix."""
    if not s:
        raise MalformedInputError("empty graph6 string")
    if s[0] != 126:  # short form
        return s[0] - 63, 1
    if len(s) >= 2 and s[1] != 126:
        if len(s) < 4:
            raise MalformedInputError("truncated graph6 size field")
        n = 0
        for b in s[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(s) < 8:
        raise MalformedInputError("truncated graph6 size field")
    n = 0
    for b in s[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def parse_graph6(text: str) -> Graph:
    """Decode one graph6-encoded graph (short and extended size forms)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    data = s.encode("ascii", errors="replace")
    for b in data:
        if not (63 <= b <= 126):
            raise MalformedInputError(f"invalid graph6 character {chr(b)!r}")
    n, consumed = _g6_decode_size(data)
    body = data[consumed:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise MalformedInputError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    bits = []
    for b in body:
        val = b - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode to graph6 (column-major upper triangle, 6-bit groups)."""
    n = g.n
    if n <= 62:
        prefix = [n + 63]
    elif n <= 258047:
        prefix = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        prefix = [126, 126] + [63 + ((n >> (6 * s)) & 63) for s in range(5, -1, -1)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(prefix + body).decode("ascii")


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def component_count(g: Graph) -> int:
    return len(connected_components(g))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph on the given vertices.

    Returns (subgraph, mapping) where mapping[new_id] = old_id.
    """
    mapping = sorted(vertices)
    pos = {old: new for new, old in enumerate(mapping)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph.from_edges(len(mapping), edges), mapping


def bipartition(g: Graph) -> Optional[Bipartition]:
    """2-color the graph if possible; isolated vertices land in X.

    Returns None when some component contains an odd cycle.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    xs = frozenset(v for v in range(g.n) if color[v] == 0)
    ys = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(X=xs, Y=ys)


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if not g.adj[v]]


def is_nice(g: Graph) -> bool:
    """True iff no connected component is a single edge.

    Isolated vertices do not hurt; report them via isolated_vertices.
    """
    for comp in connected_components(g):
        if len(comp) == 2 and g.has_edge(comp[0], comp[1]):
            return False
    return True


def find_odd_closed_walk(g: Graph, root: int) -> list[tuple[int, int]]:
    """Closed odd-length walk at ``root`` as a list of directed edges.

    The walk follows tree paths to the lexicographically smallest
    same-color edge found by BFS 2-coloring; edges may repeat.
    Raises PreconditionViolated when root's component is bipartite.
    """
    color = {root: 0}
    parent = {root: None}
    queue = deque([root])
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in g.adj[u]:
            if w not in color:
                color[w] = 1 - color[u]
                parent[w] = u
                queue.append(w)
    conflict = None
    for u, v in g.edges:
        if u in color and v in color and color[u] == color[v]:
            conflict = (u, v)
            break
    if conflict is None:
        raise PreconditionViolated(f"component of vertex {root} is bipartite")
    u, v = conflict

    def path_to_root(x: int) -> list[int]:
        out = [x]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    down_to_u = list(reversed(path_to_root(u)))   # root .. u
    back = path_to_root(v)                        # v .. root
    walk: list[tuple[int, int]] = []
    walk.extend(zip(down_to_u, down_to_u[1:]))
    walk.append((u, v))
    walk.extend(zip(back, back[1:]))
    assert len(walk) % 2 == 1
    assert walk[0][0] == root and walk[-1][1] == root
    return walk

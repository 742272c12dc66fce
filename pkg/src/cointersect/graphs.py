"""Simple undirected graphs on integer vertices, plus the generators used throughout.

Vertices are 0-based. Edges are stored once, in (min, max) order; self-loops
are rejected and duplicates collapse silently. Instances are immutable after
construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(canon)
        adj = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def non_edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if v not in self._adj[u]:
                    out.append((u, v))
        return out

    def adjacency_masks(self) -> list[int]:
        """Row bitmasks: bit v of row u is set iff (u,v) is an edge."""
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return rows


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated "u v" lines into a Graph.

    Lines starting with '#' are comments. An optional first data line
    "n <N>" fixes the vertex count; otherwise n = 1 + max vertex index.
    Duplicate edges collapse; a self-loop or non-integer token is an error
    reported with its line number.
    """
    declared_n: Optional[int] = None
    pairs: list[tuple[int, int]] = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not seen_data and tokens[0] == "n":
            if len(tokens) != 2:
                raise ValueError(f"line {lineno}: header must be 'n <N>'")
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer vertex count {tokens[1]!r}") from None
            if declared_n < 0:
                raise ValueError(f"line {lineno}: negative vertex count")
            seen_data = True
            continue
        seen_data = True
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token in {raw!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex index")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at vertex {u}")
        pairs.append((u, v))
    max_idx = max((max(u, v) for u, v in pairs), default=-1)
    n = declared_n if declared_n is not None else max_idx + 1
    if declared_n is not None and max_idx >= declared_n:
        raise ValueError(f"edge endpoint {max_idx} exceeds declared n={declared_n}")
    return Graph(n, pairs)


def render_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list; always emits the header so n round-trips."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    touched = set()
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
        touched.add(u)
        touched.add(v)
    for v in range(g.n):
        if v not in touched:
            lines.append(f"  {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generators


def star(n: int) -> Graph:
    _require_positive(n, "star")
    return Graph(n, [(0, v) for v in range(1, n)])


def path(n: int) -> Graph:
    _require_positive(n, "path")
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def complete(n: int) -> Graph:
    _require_positive(n, "complete")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(n1: int, n2: int) -> Graph:
    _require_positive(n1, "complete_bipartite")
    _require_positive(n2, "complete_bipartite")
    return Graph(n1 + n2, [(u, n1 + v) for u in range(n1) for v in range(n2)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Parts are consecutive vertex ranges in the order given."""
    if not sizes:
        raise ValueError("need at least one part")
    for s in sizes:
        _require_positive(s, "complete_multipartite")
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    edges = []
    for p in range(len(sizes)):
        for q in range(p + 1, len(sizes)):
            for u in range(offsets[p], offsets[p + 1]):
                for v in range(offsets[q], offsets[q + 1]):
                    edges.append((u, v))
    return Graph(offsets[-1], edges)


def knn_minus_matching(n: int) -> Graph:
    """K_{n,n} with the perfect matching (u_i, v_i) removed: edges (u_i, v_j), i != j."""
    _require_positive(n, "knn_minus_matching")
    return Graph(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


# Friendship network of a 34-member karate club; 78 edges, 1-based in the
# original study, stored 0-based here. Faction labels live in fixtures.
_KARATE_EDGES_1BASED = [
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 11),
    (1, 12), (1, 13), (1, 14), (1, 18), (1, 20), (1, 22), (1, 32),
    (2, 3), (2, 4), (2, 8), (2, 14), (2, 18), (2, 20), (2, 22), (2, 31),
    (3, 4), (3, 8), (3, 9), (3, 10), (3, 14), (3, 28), (3, 29), (3, 33),
    (4, 8), (4, 13), (4, 14),
    (5, 7), (5, 11),
    (6, 7), (6, 11), (6, 17),
    (7, 17),
    (9, 31), (9, 33), (9, 34),
    (10, 34),
    (14, 34),
    (15, 33), (15, 34),
    (16, 33), (16, 34),
    (19, 33), (19, 34),
    (20, 34),
    (21, 33), (21, 34),
    (23, 33), (23, 34),
    (24, 26), (24, 28), (24, 30), (24, 33), (24, 34),
    (25, 26), (25, 28), (25, 32),
    (26, 32),
    (27, 30), (27, 34),
    (28, 34),
    (29, 32), (29, 34),
    (30, 33), (30, 34),
    (31, 33), (31, 34),
    (32, 33), (32, 34),
    (33, 34),
]


def karate() -> Graph:
    return Graph(34, [(u - 1, v - 1) for u, v in _KARATE_EDGES_1BASED])


_FAMILIES = {
    "star": (star, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "complete_multipartite": (complete_multipartite, None),
    "knn_minus_matching": (knn_minus_matching, 1),
    "karate": (karate, 0),
}


def generate(family: str, params: Sequence[int] = ()) -> Graph:
    """Dispatch on family name; see _FAMILIES for the accepted names."""
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}")
    fn, arity = _FAMILIES[family]
    if arity is None:
        return fn(tuple(params))
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# ---------------------------------------------------------------------------
# Predicates


def is_triangle_free(g: Graph) -> bool:
    masks = g.adjacency_masks()
    return all(masks[u] & masks[v] == 0 for u, v in g.edges)


def complement(g: Graph) -> Graph:
    return Graph(g.n, g.non_edges())


def is_bipartite(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Two-color via BFS; returns (side0, side1) sorted, or None.

    Deterministic: components are explored from their smallest vertex, which
    always lands on side 0, so isolated vertices end up in side 0.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in sorted(g.neighbors(u)):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = [v for v in range(g.n) if color[v] == 0]
    side1 = [v for v in range(g.n) if color[v] == 1]
    return side0, side1


def _require_positive(n: int, name: str) -> None:
    if n < 1:
        raise ValueError(f"{name} needs a positive size, got {n}")

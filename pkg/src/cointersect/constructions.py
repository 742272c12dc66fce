"""Explicit representations for stars, paths, cycles, bipartite and multipartite graphs.

The path/cycle constructions assign one (a, b) feature pair per edge so
that the pairs are pairwise distinct and every vertex ends up holding
exactly the pairs of its incident edges; sharing a pair then means sharing
an edge, which is the whole correctness argument. For cycles this amounts
to finding a closed tour of distinct cells in the alpha x beta grid in
which consecutive cells agree in a coordinate; the classic zigzag (with its
reordered final two groups when the number of groups is odd) is one such
tour, and a small case analysis supplies tours for all the remaining
parameter shapes with alpha * beta > n.
"""

from __future__ import annotations

from typing import Optional

from .cir import Cir
from .graphs import Graph, is_bipartite
from .packings import ResolvablePacking


def construct_star(n: int, alpha: int, beta: int) -> Cir:
    """Center holds both full alphabets; each leaf holds one distinct pair."""
    _check_sizes(alpha, beta)
    if n < 1:
        raise ValueError("star needs n >= 1")
    if alpha * beta < n - 1:
        raise ValueError(f"alpha*beta = {alpha * beta} < {n - 1} leaves; no assignment exists")
    pairs = [(frozenset(range(alpha)), frozenset(range(beta)))]
    for leaf in range(n - 1):
        pairs.append((frozenset({leaf // beta}), frozenset({leaf % beta})))
    return Cir.from_lists(alpha, beta, pairs)


def _path_edge_cells(m: int, alpha: int, beta: int) -> list[tuple[int, int]]:
    """Zigzag pairs for m consecutive edges: groups of beta share an a-label,
    the b-sequence alternates ascending/descending so group boundaries agree."""
    cells = []
    for i in range(m):
        grp, pos = divmod(i, beta)
        b = pos if grp % 2 == 0 else beta - 1 - pos
        cells.append((grp, b))
    return cells


def _vertex_sets_from_path_cells(n: int, cells) -> list[tuple[set, set]]:
    sets: list[tuple[set, set]] = [(set(), set()) for _ in range(n)]
    for i, (a, b) in enumerate(cells):
        for v in (i, i + 1):
            sets[v][0].add(a)
            sets[v][1].add(b)
    return sets


def construct_path(n: int, alpha: int, beta: int) -> Cir:
    if n < 1:
        raise ValueError("path needs n >= 1")
    _check_sizes(alpha, beta)
    if alpha * beta < n - 1:
        raise ValueError(f"alpha*beta = {alpha * beta} < {n - 1} edges; no assignment exists")
    cells = _path_edge_cells(n - 1, alpha, beta)
    return Cir.from_lists(alpha, beta, _vertex_sets_from_path_cells(n, cells))


def _cycle_cells_zigzag(n: int, alpha: int, beta: int, corrected: bool = True) -> list[tuple[int, int]]:
    """Edge cells for a cycle with alpha full groups of beta edges (alpha*beta == n).

    With an odd group count the plain zigzag hands the wrap vertex two
    a-labels and two b-labels, so two of its four feature pairs collide with
    interior edges; the corrected variant reorders the last two groups'
    b-sequences to end on b1/b0, restoring the two-pair property. Pass
    corrected=False to reproduce the broken assignment.
    """
    cells = []
    for g in range(alpha):
        if corrected and alpha % 2 == 1 and g == alpha - 2:
            order = list(range(beta - 1, 1, -1)) + [0, 1]
        elif corrected and alpha % 2 == 1 and g == alpha - 1:
            order = list(range(1, beta)) + [0]
        elif g % 2 == 0:
            order = list(range(beta))
        else:
            order = list(range(beta - 1, -1, -1))
        cells.extend((g, b) for b in order)
    assert len(cells) == n
    return cells


def _rook_cycle(n: int, alpha: int, beta: int) -> Optional[list[tuple[int, int]]]:
    """A cyclic tour of n distinct grid cells, consecutive cells sharing a coordinate.

    Handles every alpha, beta >= 2 with n <= alpha * beta except n == 3 on a
    2 x 2 grid, which has no such triangle (the caller falls back to the
    complete-graph assignment there).
    """
    if n == 3:
        if beta >= 3:
            return [(0, 0), (0, 1), (0, 2)]
        if alpha >= 3:
            return [(0, 0), (1, 0), (2, 0)]
        return None
    if n <= beta:
        return [(0, j) for j in range(n)]
    if n <= alpha:
        return [(i, 0) for i in range(n)]

    if beta == 2:
        # Two-row helper works in a 2 x alpha grid with cells (col, row);
        # col is the a-coordinate here, row the b-coordinate.
        return _rook_cycle_two_rows(n, alpha)
    # beta >= 3: near-equal runs over r rows, entry/exit columns properly
    # colored around the cycle (two colors when r is even, three otherwise).
    r = -(-n // beta)
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    colors = [i % 2 for i in range(r)]
    if r % 2 == 1:
        colors[-1] = 2
    cells = []
    for row in range(r):
        enter, leave = colors[row], colors[(row + 1) % r]
        middle = [c for c in range(beta) if c not in (enter, leave)]
        seq = [enter] + middle[: sizes[row] - 2] + [leave]
        cells.extend((row, c) for c in seq)
    return cells


def _rook_cycle_two_rows(n: int, width: int) -> list[tuple[int, int]]:
    """Tour of n distinct cells in a 2 x width grid (called transposed from above).

    Two-cell runs per column alternate entry rows; odd leftovers become
    single cells spliced in at row-matching boundaries.
    """
    if n % 2 == 0:
        k = n // 2
        if k % 2 == 0:
            runs = [(col, [col % 2, 1 - col % 2]) for col in range(k)]
        else:
            runs = [(col, [col % 2, 1 - col % 2]) for col in range(k - 1)]
            # Splice the two single cells of the last column at boundaries
            # whose row matches: after run 0 (row 1) and after run 1 (row 0).
            runs = [runs[0], (k - 1, [1]), runs[1], (k - 1, [0])] + runs[2:]
    else:
        k2 = (n - 1) // 2
        if k2 % 2 == 0:
            runs = [(col, [col % 2, 1 - col % 2]) for col in range(k2)]
            runs = [runs[0], (k2, [1])] + runs[1:]
        else:
            runs = [(col, [col % 2, 1 - col % 2]) for col in range(k2 - 1)]
            runs = [runs[0], (k2 - 1, [1]), (k2, [1]), runs[1], (k2 - 1, [0])] + runs[2:]
    cells = [(col, row) for col, rows in runs for row in rows]
    assert len(cells) == n
    return cells


def construct_cycle(n: int, alpha: int, beta: int, corrected: bool = True) -> Cir:
    """Representation of the n-cycle using alphabets of sizes alpha, beta.

    Requires alpha * beta >= n (for n >= 4; the triangle is complete and
    accepts any sizes). corrected=False exposes the uncorrected zigzag for
    odd group counts, which deliberately fails verification; it is accepted
    only in the exact-fit case.
    """
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    _check_sizes(alpha, beta)
    if n == 3:
        one = [({0}, {0})] * 3
        return Cir.from_lists(alpha, beta, one)
    if alpha * beta < n:
        raise ValueError(f"alpha*beta = {alpha * beta} < {n} edges; no assignment exists")

    if not corrected:
        if alpha * beta != n or alpha < 2:
            raise ValueError("the uncorrected zigzag is defined only for alpha*beta == n, alpha >= 2")
        cells = _cycle_cells_zigzag(n, alpha, beta, corrected=False)
    elif alpha == 1:
        # One shared a-label; distinct b-labels per edge realize the cycle alone.
        cells = [(0, i) for i in range(n)]
    elif beta == 1:
        cells = [(i, 0) for i in range(n)]
    elif alpha * beta == n:
        if alpha % 2 == 1 and beta == 2:
            cells = [(a, b) for b, a in _cycle_cells_zigzag(n, beta, alpha)]
        else:
            cells = _cycle_cells_zigzag(n, alpha, beta)
    else:
        cells = _rook_cycle(n, alpha, beta)
        if cells is None:  # unreachable for n >= 4 given alpha*beta >= n
            raise ValueError(f"no assignment for cycle({n}) at ({alpha},{beta})")

    sets: list[tuple[set, set]] = [(set(), set()) for _ in range(n)]
    for i, (a, b) in enumerate(cells):
        for v in (i, (i + 1) % n):
            sets[v][0].add(a)
            sets[v][1].add(b)
    return Cir.from_lists(alpha, beta, sets)


def construct_bipartite(g: Graph) -> Cir:
    """One a-label per left vertex, one b-label per right vertex.

    A left vertex holds its own a-label and the b-labels of its neighbors;
    a right vertex mirrors that. Total features = |V(g)|.
    """
    parts = is_bipartite(g)
    if parts is None:
        raise ValueError("graph is not bipartite")
    left, right = parts
    a_index = {u: i for i, u in enumerate(left)}
    b_index = {v: i for i, v in enumerate(right)}
    alpha, beta = max(1, len(left)), max(1, len(right))
    pairs: list[tuple[set, set]] = [(set(), set()) for _ in range(g.n)]
    for u in left:
        pairs[u][0].add(a_index[u])
        for w in g.neighbors(u):
            pairs[u][1].add(b_index[w])
    for v in right:
        pairs[v][1].add(b_index[v])
        for w in g.neighbors(v):
            pairs[v][0].add(a_index[w])
    return Cir.from_lists(alpha, beta, pairs)


def construct_knn(n: int, t: int, s: int) -> Cir:
    """(t, t*s*s) representation of K_{n,n} for n = t*s.

    B-labels sit in an s x (t*s) matrix; rows partition them into s blocks of
    size t*s and columns into t*s blocks of size s, any row meeting any
    column exactly once. Left vertex i = i_a * s + i_b takes ({a_{i_a}},
    row_{i_b}); right vertex j takes the full A plus column_j.
    """
    if t < 1 or s < 1 or n != t * s:
        raise ValueError(f"need n == t*s with t, s >= 1; got n={n}, t={t}, s={s}")
    ts = t * s
    rows = [frozenset(r * ts + c for c in range(ts)) for r in range(s)]
    cols = [frozenset(r * ts + c for r in range(s)) for c in range(ts)]
    pairs = []
    for i in range(n):
        i_a, i_b = divmod(i, s)
        pairs.append((frozenset({i_a}), rows[i_b]))
    full_a = frozenset(range(t))
    for j in range(n):
        pairs.append((full_a, cols[j]))
    return Cir.from_lists(t, t * s * s, pairs)


def construct_multipartite(packing: ResolvablePacking, r: int) -> Cir:
    """(n, n) representation of the complete r-partite graph with parts of size n = k^2.

    Part l reads off parallel class l: vertex (l, i, j) takes the a-labels of
    block i and the b-labels of block j. Within a part one coordinate always
    falls in disjoint blocks of the same class; across parts both coordinates
    are blocks from different classes and meet in exactly one point.
    """
    if r < 2:
        raise ValueError("need r >= 2 parts")
    if packing.class_count < r:
        raise ValueError(f"packing has {packing.class_count} classes < r = {r}")
    k = packing.block_size
    npart = k * k
    if packing.point_count != npart:
        raise ValueError("packing must live on k^2 points")
    pairs = []
    for ell in range(r):
        blocks = sorted(packing.classes[ell], key=sorted)
        if len(blocks) != k:
            raise ValueError(f"class {ell} does not have k = {k} blocks")
        for i in range(k):
            for j in range(k):
                pairs.append((blocks[i], blocks[j]))
    return Cir.from_lists(npart, npart, pairs)


def _check_sizes(alpha: int, beta: int) -> None:
    if alpha < 1 or beta < 1:
        raise ValueError("alphabets must have at least one feature each")

"""Cointersection representations: the core data model and its operations.

A representation assigns each vertex v a pair of feature subsets
(A_v, B_v), A_v over an alphabet of size alpha and B_v over a disjoint
alphabet of size beta. Two vertices are meant to be adjacent exactly when
both their A-sets and their B-sets intersect; `verify` reports the pairs
where a graph disagrees with that rule, and everything else here is built
on top of that predicate.

Empty per-vertex sets are legal (they simply never intersect anything);
alphabet sizes are parameters, so labels may go unused.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import Graph


@dataclass(frozen=True)
class Cir:
    """Per-vertex feature-set pairs over alphabets of size alpha and beta."""

    alpha: int
    beta: int
    a_sets: tuple[frozenset[int], ...]
    b_sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("alphabets must be nonempty (alpha, beta >= 1)")
        if len(self.a_sets) != len(self.b_sets):
            raise ValueError("a_sets and b_sets must cover the same vertices")
        for s in self.a_sets:
            if s and (min(s) < 0 or max(s) >= self.alpha):
                raise ValueError(f"A-feature out of range in {sorted(s)}")
        for s in self.b_sets:
            if s and (min(s) < 0 or max(s) >= self.beta):
                raise ValueError(f"B-feature out of range in {sorted(s)}")

    @property
    def n(self) -> int:
        return len(self.a_sets)

    @property
    def total_features(self) -> int:
        return self.alpha + self.beta

    @classmethod
    def from_lists(cls, alpha: int, beta: int,
                   pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> "Cir":
        a_sets, b_sets = [], []
        for a, b in pairs:
            a_sets.append(frozenset(a))
            b_sets.append(frozenset(b))
        return cls(alpha, beta, tuple(a_sets), tuple(b_sets))

    def masks(self) -> tuple[list[int], list[int]]:
        """Feature sets as bitmasks, for fast pairwise intersection tests."""
        am = [sum(1 << a for a in s) for s in self.a_sets]
        bm = [sum(1 << b for b in s) for s in self.b_sets]
        return am, bm

    def swapped(self) -> "Cir":
        return Cir(self.beta, self.alpha, self.b_sets, self.a_sets)

    def padded(self, alpha: int, beta: int) -> "Cir":
        """Same assignment viewed inside larger alphabets."""
        if alpha < self.alpha or beta < self.beta:
            raise ValueError("padding cannot shrink an alphabet")
        return Cir(alpha, beta, self.a_sets, self.b_sets)

    def relabeled(self, a_perm: Sequence[int], b_perm: Sequence[int]) -> "Cir":
        """Apply label permutations (a -> a_perm[a], b -> b_perm[b])."""
        if sorted(a_perm) != list(range(self.alpha)) or sorted(b_perm) != list(range(self.beta)):
            raise ValueError("relabeling must permute each alphabet")
        a_sets = tuple(frozenset(a_perm[a] for a in s) for s in self.a_sets)
        b_sets = tuple(frozenset(b_perm[b] for b in s) for s in self.b_sets)
        return Cir(self.alpha, self.beta, a_sets, b_sets)

    def to_json(self) -> str:
        doc = {
            "alpha": self.alpha,
            "beta": self.beta,
            "vertices": [
                {"A": sorted(a), "B": sorted(b)}
                for a, b in zip(self.a_sets, self.b_sets)
            ],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Cir":
        doc = json.loads(text)
        try:
            pairs = [(v["A"], v["B"]) for v in doc["vertices"]]
            return cls.from_lists(int(doc["alpha"]), int(doc["beta"]), pairs)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed representation document: {exc}") from None


@dataclass(frozen=True)
class Score:
    """Unordered vertex pairs whose edge-ness matches the representation."""

    matched: int
    total: int

    def __post_init__(self):
        if not 0 <= self.matched <= self.total:
            raise ValueError("matched must lie in [0, total]")

    @property
    def perfect(self) -> bool:
        return self.matched == self.total


def verify(g: Graph, r: Cir) -> list[tuple[int, int]]:
    """Pairs (u, v) where adjacency disagrees with double intersection; [] = valid."""
    if r.n != g.n:
        raise ValueError(f"representation covers {r.n} vertices, graph has {g.n}")
    am, bm = r.masks()
    adj = g.adjacency_masks()
    bad = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            together = (am[u] & am[v]) != 0 and (bm[u] & bm[v]) != 0
            if together != bool(adj[u] >> v & 1):
                bad.append((u, v))
    return bad


def score(g: Graph, r: Cir) -> Score:
    total = g.n * (g.n - 1) // 2
    return Score(matched=total - len(verify(g, r)), total=total)


@dataclass(frozen=True)
class CommunityReport:
    """Vertex sets per feature and per feature pair."""

    a_communities: tuple[frozenset[int], ...]
    b_communities: tuple[frozenset[int], ...]
    pair_communities: dict[tuple[int, int], frozenset[int]]


def communities(r: Cir) -> CommunityReport:
    """One community per feature (its holders) and one per (a, b) pair.

    For a valid representation of a graph, the pair communities are cliques
    and together cover every edge, which is exactly what makes alpha*beta an
    upper bound on the number of cliques needed to cover the graph.
    """
    a_comm = tuple(frozenset(v for v in range(r.n) if a in r.a_sets[v]) for a in range(r.alpha))
    b_comm = tuple(frozenset(v for v in range(r.n) if b in r.b_sets[v]) for b in range(r.beta))
    pairs = {}
    for a in range(r.alpha):
        for b in range(r.beta):
            pairs[(a, b)] = a_comm[a] & b_comm[b]
    return CommunityReport(a_comm, b_comm, pairs)


def graph_from_assignment(r: Cir) -> Graph:
    """The graph a representation generates: edges exactly where both sides intersect."""
    am, bm = r.masks()
    edges = [
        (u, v)
        for u in range(r.n)
        for v in range(u + 1, r.n)
        if (am[u] & am[v]) != 0 and (bm[u] & bm[v]) != 0
    ]
    return Graph(r.n, edges)


def mirror_from_clique_cover(g: Graph, cover: Sequence[Iterable[int]]) -> Cir:
    """(k, 1) representation from an edge clique cover with k cliques.

    Vertex v receives the indices of the cliques containing it on the A side
    and the single shared B-label. Vertices in no clique keep an empty A-set,
    which verifies because all their pairs are non-edges.
    """
    cliques = [sorted(set(c)) for c in cover]
    for idx, cl in enumerate(cliques):
        for u, v in itertools.combinations(cl, 2):
            if not g.has_edge(u, v):
                raise ValueError(f"clique {idx} contains non-edge ({u},{v})")
    covered = set()
    for cl in cliques:
        covered.update(itertools.combinations(cl, 2))
    missing = [e for e in g.sorted_edges() if e not in covered]
    if missing:
        raise ValueError(f"cover misses edges {missing[:5]}{'...' if len(missing) > 5 else ''}")
    a_sets = [set() for _ in range(g.n)]
    for idx, cl in enumerate(cliques):
        for v in cl:
            a_sets[v].add(idx)
    return Cir.from_lists(max(1, len(cliques)), 1, [(a, {0}) for a in a_sets])


# ---------------------------------------------------------------------------
# Equivalence and alignment


def _community_multiset(sets: Sequence[frozenset[int]], size: int, n: int):
    comms = [frozenset(v for v in range(n) if lbl in sets[v]) for lbl in range(size)]
    return sorted(comms, key=lambda c: (len(c), sorted(c)))


def equivalent(r1: Cir, r2: Cir) -> bool:
    """True iff label permutations (plus an A/B swap when alpha == beta) map r1 to r2.

    A permutation sending label x to label y is usable exactly when x's
    community in r1 equals y's community in r2, so the search over
    permutations collapses to comparing the community multisets; this is the
    community-size pruning taken to its limit and stays exact.
    """
    if r1.n != r2.n:
        raise ValueError("representations cover different vertex counts")

    def plain(p: Cir, q: Cir) -> bool:
        if p.alpha != q.alpha or p.beta != q.beta:
            return False
        return (_community_multiset(p.a_sets, p.alpha, p.n) == _community_multiset(q.a_sets, q.alpha, q.n)
                and _community_multiset(p.b_sets, p.beta, p.n) == _community_multiset(q.b_sets, q.beta, q.n))

    if plain(r1, r2):
        return True
    if r1.alpha == r1.beta == r2.alpha == r2.beta:
        return plain(r1, r2.swapped())
    return False


def _jaccard(s: frozenset, t: frozenset) -> float:
    if not s and not t:
        return 1.0
    return len(s & t) / len(s | t)


def _side_alignment(ref_sets, cand_sets, size: int) -> list[int]:
    """Permutation (cand label -> ref label) maximizing the summed Jaccard.

    Exhaustive and exact up to size 8; beyond that, an assignment on the
    per-label intersection-count gain matrix, which is a good proxy but can
    be off when set sizes vary a lot.
    """
    n = len(ref_sets)
    if size <= 8:
        best_perm, best_val = None, -1.0
        labels = list(range(size))
        for perm in itertools.permutations(labels):
            val = 0.0
            for v in range(n):
                mapped = frozenset(perm[x] for x in cand_sets[v])
                val += _jaccard(ref_sets[v], mapped)
            if val > best_val + 1e-12:
                best_val, best_perm = val, perm
        return list(best_perm)
    from scipy.optimize import linear_sum_assignment

    gain = [[0] * size for _ in range(size)]
    for v in range(n):
        for x in cand_sets[v]:
            for y in ref_sets[v]:
                gain[x][y] += 1
    rows, cols = linear_sum_assignment([[-g for g in row] for row in gain])
    perm = [0] * size
    for x, y in zip(rows, cols):
        perm[x] = y
    return perm


def align_jaccard(reference: Cir, candidate: Cir) -> tuple[Cir, float]:
    """Relabel candidate's features to best match reference, per side.

    Returns the relabeled candidate and the average over vertices of
    (J(A_v, A'_v) + J(B_v, B'_v)) / 2 with J(empty, empty) = 1.
    """
    if reference.n != candidate.n:
        raise ValueError("representations cover different vertex counts")
    if (reference.alpha, reference.beta) != (candidate.alpha, candidate.beta):
        raise ValueError("alphabet sizes must match; pad the smaller one first")
    a_perm = _side_alignment(reference.a_sets, candidate.a_sets, reference.alpha)
    b_perm = _side_alignment(reference.b_sets, candidate.b_sets, reference.beta)
    moved = candidate.relabeled(a_perm, b_perm)
    total = 0.0
    for v in range(reference.n):
        total += _jaccard(reference.a_sets[v], moved.a_sets[v])
        total += _jaccard(reference.b_sets[v], moved.b_sets[v])
    return moved, total / (2 * reference.n) if reference.n else 1.0

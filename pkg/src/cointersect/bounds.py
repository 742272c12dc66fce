"""Minimum edge clique covers (theta_1) and bounds on the two-alphabet optimum.

theta_1 is computed exactly where affordable: triangle-free graphs need
|E| cliques outright, and everything else goes through maximal-clique
enumeration plus branch-and-bound set cover, NP-hard in general and
therefore gated by a size limit. The two-alphabet bounds are formula
evaluators around theta_1: the product lower bound, the one-extra-feature
upper bound, the bipartite order bound, and the bounded-degree /
complement-sparse / chordal expressions, the last three reported as numbers
only since their proofs are not constructive at reasonable cost.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, is_bipartite, is_triangle_free

DEFAULT_EXACT_LIMIT = 20


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques, via pivoting Bron-Kerbosch; output sorted for determinism."""
    out: list[frozenset[int]] = []
    adj = g._adj

    def expand(clique: set[int], cand: set[int], excl: set[int]) -> None:
        if not cand and not excl:
            out.append(frozenset(clique))
            return
        pivot = max(cand | excl, key=lambda w: (len(adj[w] & cand), -w))
        for v in sorted(cand - adj[pivot]):
            expand(clique | {v}, cand & adj[v], excl & adj[v])
            cand.remove(v)
            excl.add(v)

    expand(set(), set(range(g.n)), set())
    return sorted(out, key=lambda c: (len(c), sorted(c)))


def greedy_clique_cover(g: Graph) -> list[frozenset[int]]:
    """Edge clique cover grown greedily around uncovered edges; an upper bound on theta_1."""
    uncovered = set(g.edges)
    adj = g._adj
    cover: list[frozenset[int]] = []
    for u, v in g.sorted_edges():
        if (u, v) not in uncovered:
            continue
        clique = {u, v}
        common = adj[u] & adj[v]
        # Prefer extensions that eat the most uncovered edges; ties to low index.
        while common:
            best = max(sorted(common),
                       key=lambda w: sum(1 for x in clique if (min(w, x), max(w, x)) in uncovered))
            clique.add(best)
            common &= adj[best]
        cover.append(frozenset(clique))
        for a, b in itertools.combinations(sorted(clique), 2):
            uncovered.discard((a, b))
    return cover


def theta1_greedy(g: Graph) -> int:
    return len(greedy_clique_cover(g))


def min_edge_clique_cover(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> list[frozenset[int]]:
    """A minimum edge clique cover, exact.

    Triangle-free graphs are answered directly with their edge set (every
    clique is an edge, so nothing smaller exists). Otherwise the instance
    must have at most `limit` vertices and is solved by branch and bound
    over maximal cliques: restricting to maximal cliques is safe because any
    cover clique can be enlarged without uncovering anything.
    """
    if not g.edges:
        return []
    if is_triangle_free(g):
        return [frozenset(e) for e in g.sorted_edges()]
    if g.n > limit:
        raise ValueError(
            f"exact cover limited to n <= {limit} on graphs with triangles; "
            "use theta1_greedy for an upper bound")

    cliques = [c for c in maximal_cliques(g) if len(c) >= 2]
    edge_list = g.sorted_edges()
    edge_idx = {e: i for i, e in enumerate(edge_list)}
    clique_masks = []
    for c in cliques:
        m = 0
        for e in itertools.combinations(sorted(c), 2):
            m |= 1 << edge_idx[e]
        clique_masks.append(m)
    full = (1 << len(edge_list)) - 1
    by_edge = [[i for i, m in enumerate(clique_masks) if m >> e & 1]
               for e in range(len(edge_list))]
    max_cover = max(m.bit_count() for m in clique_masks)

    best_cover = greedy_clique_cover(g)
    incumbent = len(best_cover)
    chosen: list[int] = []

    def branch(covered: int) -> None:
        nonlocal best_cover, incumbent
        if covered == full:
            if len(chosen) < incumbent:
                incumbent = len(chosen)
                best_cover = [cliques[i] for i in chosen]
            return
        uncovered = full & ~covered
        if len(chosen) + math.ceil(uncovered.bit_count() / max_cover) >= incumbent:
            return
        # Branch on the uncovered edge with the fewest covering cliques.
        e, fan = -1, None
        probe = uncovered
        while probe:
            cand = (probe & -probe).bit_length() - 1
            k = sum(1 for i in by_edge[cand] if clique_masks[i] & uncovered)
            if fan is None or k < fan:
                e, fan = cand, k
            probe &= probe - 1
            if fan <= 1:
                break
        for ci in sorted(by_edge[e], key=lambda i: -(clique_masks[i] & uncovered).bit_count()):
            chosen.append(ci)
            branch(covered | clique_masks[ci])
            chosen.pop()

    branch(0)
    return best_cover


def theta1_exact(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> int:
    return len(min_edge_clique_cover(g, limit))


def thetac_lower(theta1: int) -> int:
    """min {alpha + beta : alpha * beta >= theta1}, the product lower bound.

    0 edges need 0 cliques, reported as 0 here; actual representations still
    pay alpha + beta >= 2 for the two nonempty alphabets.
    """
    if theta1 < 0:
        raise ValueError("theta1 must be nonnegative")
    if theta1 == 0:
        return 0
    best = 1 + theta1
    for a in range(1, math.isqrt(theta1) + 2):
        best = min(best, a + math.ceil(theta1 / a))
    return best


@dataclass(frozen=True)
class UpperBound:
    name: str
    value: float
    ceiling: int
    applicable: bool

    def as_dict(self) -> dict:
        return {"name": self.name, "value": self.value,
                "ceiling": self.ceiling, "applicable": self.applicable}


@dataclass(frozen=True)
class BoundsReport:
    theta1: int
    theta1_is_exact: bool
    lower_thetac: int
    upper_candidates: tuple[UpperBound, ...]

    def as_dict(self) -> dict:
        return {
            "theta1": {"value": self.theta1, "exact": self.theta1_is_exact},
            "lower_thetac": self.lower_thetac,
            "upper_candidates": [u.as_dict() for u in self.upper_candidates],
        }


def f_upper_bound(d: int, r: int, s: int, n: int) -> float:
    """Bounded-degree upper bound for an r-type rule with largest clause s.

    Evaluates s * ((8 d^(2s+2))^(1/s) + d - 1) * n^(1/s) + r - s.
    """
    if min(d, r, s, n) < 1 or s > r:
        raise ValueError("need d, r, s, n >= 1 and s <= r")
    c_prime = (8 * d ** (2 * s + 2)) ** (1.0 / s) + d - 1
    return s * c_prime * n ** (1.0 / s) + r - s


def thetac_upper_bounds(g: Graph,
                        theta1: Optional[int] = None,
                        theta1_is_exact: bool = True,
                        chordal_clique_size: Optional[int] = None,
                        complement_degree: Optional[int] = None) -> list[UpperBound]:
    """All upper-bound formulas, each tagged with applicability.

    theta1 may be an upper bound rather than the exact value (pass
    theta1_is_exact=False); 1 + theta1 stays valid either way. The chordal
    and complement-sparse expressions only appear when their parameters are
    supplied, since recognizing those structures is out of scope.
    """
    if theta1 is None:
        raise ValueError("supply theta1 (exact or an upper bound)")
    out = []
    out.append(UpperBound("one_plus_theta1", float(1 + theta1), 1 + theta1, True))
    bip = is_bipartite(g)
    out.append(UpperBound("bipartite_order", float(g.n), g.n, bip is not None))
    d = g.max_degree()
    if d >= 1 and g.n >= 1:
        val = 16.0 * d ** 2.5 * math.sqrt(g.n)
        out.append(UpperBound(f"bounded_degree(d={d})", val, math.ceil(val), True))
    if complement_degree is not None:
        val = 1 + 2 * math.e ** 2 * (complement_degree + 1) ** 2 * math.log(g.n)
        out.append(UpperBound(f"complement_sparse(d={complement_degree})",
                              val, math.ceil(val), True))
    if chordal_clique_size is not None:
        val = float(g.n - chordal_clique_size + 2)
        out.append(UpperBound(f"chordal(r={chordal_clique_size})",
                              val, math.ceil(val), True))
    return out


def bounds_report(g: Graph,
                  exact_limit: int = DEFAULT_EXACT_LIMIT,
                  chordal_clique_size: Optional[int] = None,
                  complement_degree: Optional[int] = None) -> BoundsReport:
    """theta_1 (exact when affordable, greedy otherwise) plus both bound directions."""
    try:
        t1 = theta1_exact(g, exact_limit)
        exact = True
    except ValueError:
        t1 = theta1_greedy(g)
        exact = False
    uppers = thetac_upper_bounds(g, theta1=t1, theta1_is_exact=exact,
                                 chordal_clique_size=chordal_clique_size,
                                 complement_degree=complement_degree)
    # The product bound needs a true lower bound on theta1; a greedy value is not one.
    lower = thetac_lower(t1) if exact else (0 if not g.edges else 2)
    return BoundsReport(t1, exact, lower, tuple(uppers))

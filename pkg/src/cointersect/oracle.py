"""Brute-force ground truth on tiny instances.

Deliberately dumb: every vertex ranges over every (A-subset, B-subset)
pair, in a fixed lexicographic order, and the only shortcut is abandoning a
prefix once two already-assigned vertices violate the adjacency rule --
such a prefix cannot extend to a valid assignment, so the search stays
complete. No symmetry reasoning, no solver: this module exists to check
the clever code, and limits keep it affordable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .bounds import maximal_cliques
from .cir import Cir, equivalent
from .graphs import Graph, is_triangle_free


class LimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_n: int = 5
    max_total_features: int = 6
    max_nodes: Optional[int] = None  # search-tree nodes; None = unlimited

    def admit(self, n: int, total_features: int) -> None:
        if n > self.max_n:
            raise LimitExceeded(f"oracle limited to n <= {self.max_n}, got {n}")
        if total_features > self.max_total_features:
            raise LimitExceeded(
                f"oracle limited to {self.max_total_features} features, asked for {total_features}")


def _code_tables(alpha: int, beta: int) -> tuple[list[int], int]:
    """meet_rows[c1] has bit c2 set iff codes c1, c2 intersect on both sides.

    A code packs (a_mask, b_mask) as a_mask * 2^beta + b_mask; code order is
    the lexicographic assignment order used everywhere in this module.
    """
    n_codes = 1 << (alpha + beta)
    bmask_all = (1 << beta) - 1
    meet_rows = [0] * n_codes
    for c1 in range(n_codes):
        a1, b1 = c1 >> beta, c1 & bmask_all
        row = 0
        for c2 in range(n_codes):
            a2, b2 = c2 >> beta, c2 & bmask_all
            if (a1 & a2) and (b1 & b2):
                row |= 1 << c2
        meet_rows[c1] = row
    return meet_rows, n_codes


def _cir_from_codes(codes, alpha: int, beta: int) -> Cir:
    pairs = []
    bmask_all = (1 << beta) - 1
    for c in codes:
        am, bm = c >> beta, c & bmask_all
        pairs.append(({a for a in range(alpha) if am >> a & 1},
                      {b for b in range(beta) if bm >> b & 1}))
    return Cir.from_lists(alpha, beta, pairs)


def _search(g: Graph, alpha: int, beta: int, limits: OracleLimits,
            collect: Optional[list] = None) -> Optional[Cir]:
    """First valid assignment in lexicographic order, or None.

    With `collect` given, exhausts the space instead and appends every valid
    assignment (as a Cir) to it.
    """
    limits.admit(g.n, alpha + beta)
    meet_rows, n_codes = _code_tables(alpha, beta)
    adj = g.adjacency_masks()
    n = g.n
    codes = [0] * n
    nodes = 0

    def consistent(k: int, c: int) -> bool:
        for i in range(k):
            meets = meet_rows[codes[i]] >> c & 1
            if meets != adj[i] >> k & 1:
                return False
        return True

    def rec(k: int) -> Optional[Cir]:
        nonlocal nodes
        nodes += 1
        if limits.max_nodes is not None and nodes > limits.max_nodes:
            raise LimitExceeded(f"oracle search exceeded {limits.max_nodes} nodes")
        if k == n:
            found = _cir_from_codes(codes, alpha, beta)
            if collect is not None:
                collect.append(found)
                return None
            return found
        for c in range(n_codes):
            if consistent(k, c):
                codes[k] = c
                hit = rec(k + 1)
                if hit is not None:
                    return hit
        return None

    return rec(0)


def brute_cir_exists(g: Graph, alpha: int, beta: int,
                     limits: OracleLimits = OracleLimits()) -> Optional[Cir]:
    return _search(g, alpha, beta, limits)


def brute_theta_c(g: Graph, limits: OracleLimits = OracleLimits()) -> tuple[int, Cir]:
    """Smallest total feature count by exhaustion over totals, then splits, then assignments."""
    limits.admit(g.n, 2)
    for total in range(2, limits.max_total_features + 1):
        for alpha in range(1, total // 2 + 1):
            witness = _search(g, alpha, total - alpha, limits)
            if witness is not None:
                return total, witness
    raise LimitExceeded(
        f"no representation with at most {limits.max_total_features} features")


def brute_theta1(g: Graph, limits: OracleLimits = OracleLimits()) -> int:
    """Smallest edge clique cover size by trying all subsets of maximal cliques, ascending."""
    if g.n > limits.max_n + 4:  # covers are cheaper than assignments; still keep a lid on it
        raise LimitExceeded(f"brute_theta1 limited to n <= {limits.max_n + 4}")
    if not g.edges:
        return 0
    if is_triangle_free(g):
        return len(g.edges)
    cliques = maximal_cliques(g)
    edges = set(g.edges)
    edge_sets = [frozenset(itertools.combinations(sorted(c), 2)) & edges for c in cliques]
    for size in range(1, len(cliques) + 1):
        for combo in itertools.combinations(range(len(cliques)), size):
            covered = set()
            for i in combo:
                covered |= edge_sets[i]
            if covered == edges:
                return size
    raise AssertionError("unreachable: all maximal cliques always cover")


def enumerate_optimal_cirs(g: Graph, alpha: int, beta: int,
                           limits: OracleLimits = OracleLimits()) -> list[Cir]:
    """One representative per equivalence class of valid (alpha, beta) assignments."""
    found: list[Cir] = []
    _search(g, alpha, beta, limits, collect=found)
    reps: list[Cir] = []
    for cand in found:
        if not any(equivalent(cand, rep) for rep in reps):
            reps.append(cand)
    return reps

"""Connection rules given by a Boolean formula over feature-type intersections.

A rule f(x_1..x_r) in disjunctive normal form governs adjacency: literal
x_i reads "the type-i feature sets of the two endpoints intersect", and an
edge must be present exactly where f evaluates true. AND of two variables
recovers the two-alphabet model; OR collapses to plain intersection;
negation of a single variable is intersection on the complement graph.

For monotone rules, replacing x_i by the alphabet size alpha_i, OR by +,
and AND by * gives the clique-count polynomial g_f, and minimizing
sum(alpha_i) subject to g_f >= theta1 is an integer-programming lower bound
on the total feature count. That minimum is computed here by plain bounded
enumeration, exact by exhaustion, rather than by any stationary-point
analysis.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

from .cir import Score
from .graphs import Graph
from .rng import SplitMix64

Literal = tuple[int, bool]  # (0-based variable, negated)


@dataclass(frozen=True)
class DnfFormula:
    var_count: int
    clauses: tuple[frozenset[Literal], ...]

    @property
    def monotone(self) -> bool:
        return all(not neg for cl in self.clauses for _, neg in cl)

    @property
    def max_clause_size(self) -> int:
        return max(len(cl) for cl in self.clauses)

    def evaluate(self, truths: Sequence[bool]) -> bool:
        return any(all(truths[v] != neg for v, neg in cl) for cl in self.clauses)

    def render(self) -> str:
        parts = []
        for cl in sorted(self.clauses, key=lambda c: sorted(c)):
            lits = [("!" if neg else "") + f"x{v + 1}" for v, neg in sorted(cl)]
            parts.append(" & ".join(lits))
        return " | ".join(parts)


_TOKEN = re.compile(r"\s*(!|&|\||x\d+)")


def parse_dnf(text: str, require_full: bool = False) -> DnfFormula:
    """Parse clauses joined by '|', literals joined by '&', literal = ['!'] 'x' <1-based index>.

    In monotone formulas a clause whose literal set contains another clause's
    is redundant and is dropped with a warning. require_full insists every
    variable appear exactly once in every clause.
    """
    pos = 0
    tokens: list[tuple[str, int]] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ValueError(f"bad token at position {pos}: {text[pos:pos + 10]!r}")
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    if not tokens:
        raise ValueError("empty formula")

    clauses: list[frozenset[Literal]] = []
    current: dict[int, bool] = {}
    negate = False
    expect_literal = True
    var_count = 0

    def close_clause(at: int) -> None:
        nonlocal current
        if not current:
            raise ValueError(f"empty clause at position {at}")
        clauses.append(frozenset(current.items()))
        current = {}

    for tok, at in tokens:
        if tok == "!":
            if not expect_literal or negate:
                raise ValueError(f"misplaced '!' at position {at}")
            negate = True
        elif tok.startswith("x"):
            if not expect_literal:
                raise ValueError(f"missing operator before {tok!r} at position {at}")
            idx = int(tok[1:])
            if idx < 1:
                raise ValueError(f"variable index must be 1-based, got {tok!r} at position {at}")
            v = idx - 1
            if v in current and current[v] != negate:
                raise ValueError(f"contradictory literal x{idx} at position {at}")
            current[v] = negate
            var_count = max(var_count, idx)
            negate = False
            expect_literal = False
        elif tok == "&":
            if expect_literal:
                raise ValueError(f"misplaced '&' at position {at}")
            expect_literal = True
        elif tok == "|":
            if expect_literal:
                raise ValueError(f"misplaced '|' at position {at}")
            close_clause(at)
            expect_literal = True
    if expect_literal:
        raise ValueError("formula ends mid-clause")
    close_clause(len(text))

    if require_full:
        for cl in clauses:
            if {v for v, _ in cl} != set(range(var_count)):
                raise ValueError("full mode: every variable must appear exactly once per clause")

    monotone = all(not neg for cl in clauses for _, neg in cl)
    if monotone:
        kept = []
        for cl in clauses:
            if any(other < cl for other in clauses):
                warnings.warn(f"dropping redundant clause implied by a sub-clause: "
                              f"{sorted(v + 1 for v, _ in cl)}", stacklevel=2)
                continue
            if cl not in kept:
                kept.append(cl)
        clauses = kept
    clauses = sorted(set(clauses), key=lambda c: sorted(c))
    return DnfFormula(var_count, tuple(clauses))


@dataclass(frozen=True)
class GeneralAssignment:
    """Per-vertex tuple of feature subsets, one per feature type."""

    sizes: tuple[int, ...]
    sets: tuple[tuple[frozenset[int], ...], ...]

    def __post_init__(self):
        for per_vertex in self.sets:
            if len(per_vertex) != len(self.sizes):
                raise ValueError("every vertex needs one subset per feature type")
            for i, s in enumerate(per_vertex):
                if s and (min(s) < 0 or max(s) >= self.sizes[i]):
                    raise ValueError(f"type-{i} feature out of range")

    @property
    def n(self) -> int:
        return len(self.sets)

    def masks(self) -> list[list[int]]:
        return [[sum(1 << x for x in s) for s in per_vertex] for per_vertex in self.sets]


def verify_f(g: Graph, asg: GeneralAssignment, f: DnfFormula) -> list[tuple[int, int]]:
    """Pairs whose adjacency disagrees with f over the intersection predicates."""
    if asg.n != g.n:
        raise ValueError("assignment covers a different vertex count")
    if len(asg.sizes) != f.var_count:
        raise ValueError(f"formula has {f.var_count} types, assignment has {len(asg.sizes)}")
    masks = asg.masks()
    adj = g.adjacency_masks()
    bad = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            truths = [bool(masks[u][i] & masks[v][i]) for i in range(f.var_count)]
            if f.evaluate(truths) != bool(adj[u] >> v & 1):
                bad.append((u, v))
    return bad


def score_f(g: Graph, asg: GeneralAssignment, f: DnfFormula) -> Score:
    total = g.n * (g.n - 1) // 2
    return Score(matched=total - len(verify_f(g, asg, f)), total=total)


def g_f(f: DnfFormula, alphas: Sequence[int]) -> int:
    """The clique-count polynomial: sum over clauses of the product of their sizes."""
    if not f.monotone:
        raise ValueError("g_f is defined for monotone formulas only")
    if len(alphas) != f.var_count:
        raise ValueError("need one size per variable")
    if any(a < 0 for a in alphas):
        raise ValueError("sizes must be nonnegative")
    return sum(math.prod(alphas[v] for v, _ in cl) for cl in f.clauses)


def ip_lower_bound(f: DnfFormula, theta1: int,
                   cap: Optional[int] = None) -> tuple[int, tuple[int, ...]]:
    """min sum(alpha) s.t. g_f(alpha) >= theta1, integer alpha_i >= 1; exact by enumeration.

    Any feasible solution can clamp every coordinate to theta1 without losing
    feasibility (g_f is monotone and already one coordinate at theta1 makes
    its clause large enough), so capping the search there is safe; the
    default keeps one unit of slack. Totals ascend and, within a total,
    vectors are tried in lexicographic order, so the reported witness is the
    lexicographically smallest one at the optimum.
    """
    if not f.monotone:
        raise ValueError("the lower bound applies to monotone formulas only")
    if theta1 < 1:
        raise ValueError("theta1 must be at least 1")
    cap = cap if cap is not None else 1 + theta1
    r = f.var_count

    def search(total: int) -> Optional[tuple[int, ...]]:
        vec: list[int] = []

        def rec(i: int, left: int) -> Optional[tuple[int, ...]]:
            if i == r:
                if left == 0 and g_f(f, vec) >= theta1:
                    return tuple(vec)
                return None
            if g_f(f, vec + [cap] * (r - i)) < theta1:
                return None
            lo = max(1, left - cap * (r - i - 1))
            hi = min(cap, left - (r - i - 1))
            for a in range(lo, hi + 1):
                vec.append(a)
                hit = rec(i + 1, left - a)
                if hit is not None:
                    return hit
                vec.pop()
            return None

        return rec(0, total)

    for total in range(r, r * cap + 1):
        hit = search(total)
        if hit is not None:
            return total, hit
    raise AssertionError("unreachable: setting one coordinate to theta1 is always feasible")


def split_intersection_assignment(sets: Sequence[frozenset[int]], size: int,
                                  cut: int) -> GeneralAssignment:
    """Split one intersection assignment into two types at label `cut`.

    Under the OR rule the result represents the same graph: the union of the
    type intersections equals the original intersection.
    """
    if not 1 <= cut < size:
        raise ValueError("cut must fall strictly inside the alphabet")
    per_vertex = []
    for s in sets:
        per_vertex.append((frozenset(x for x in s if x < cut),
                           frozenset(x - cut for x in s if x >= cut)))
    return GeneralAssignment((cut, size - cut), tuple(per_vertex))


def anneal_f(g: Graph, f: DnfFormula, sizes: Sequence[int],
             c: float = 10.0, b: float = 50.0, rounds: Optional[int] = None,
             seed: int = 0) -> tuple[GeneralAssignment, Score]:
    """Single-vertex resampling chain for a general rule; same acceptance as anneal().

    Each round redraws the full tuple of nonempty subsets at one random
    vertex. Deterministic for a fixed seed.
    """
    if len(sizes) != f.var_count:
        raise ValueError("need one alphabet size per variable")
    if any(s < 1 for s in sizes):
        raise ValueError("alphabet sizes must be positive")
    n = g.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    rng = SplitMix64(seed)
    total_rounds = rounds if rounds is not None else max(1, math.ceil(b * n * math.log(max(n, 2))))
    if total_rounds < 1:
        raise ValueError("rounds must be at least 1")
    adj = g.adjacency_masks()
    r = f.var_count
    masks = [[rng.nonempty_mask(sizes[i]) for i in range(r)] for _ in range(n)]

    def pair_ok(mu, mv, edge: bool) -> bool:
        truths = [bool(mu[i] & mv[i]) for i in range(r)]
        return f.evaluate(truths) == edge

    def contrib(u: int, mu) -> int:
        row = adj[u]
        return sum(pair_ok(mu, masks[v], bool(row >> v & 1))
                   for v in range(n) if v != u)

    matched = sum(contrib(u, masks[u]) for u in range(n)) // 2
    total = n * (n - 1) // 2
    best_masks = [list(m) for m in masks]
    best_matched = matched

    for _ in range(total_rounds):
        u = rng.below(n)
        proposal = [rng.nonempty_mask(sizes[i]) for i in range(r)]
        delta = contrib(u, proposal) - contrib(u, masks[u])
        if delta >= 0 or rng.uniform01() < math.exp(c * delta):
            masks[u] = proposal
            matched += delta
            if matched > best_matched:
                best_matched = matched
                best_masks = [list(m) for m in masks]

    sets = tuple(
        tuple(frozenset(x for x in range(sizes[i]) if best_masks[v][i] >> x & 1)
              for i in range(r))
        for v in range(n)
    )
    return GeneralAssignment(tuple(sizes), sets), Score(best_matched, total)

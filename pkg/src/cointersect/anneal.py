"""Randomized search for high-scoring representations at fixed alphabet sizes.

One chain: start from uniform random nonempty feature sets, then repeatedly
redraw a single random vertex's pair of sets and accept the move with
probability min(1, exp(c * (new score - old score))) -- improvements and
ties always pass, a drop of delta passes with probability exp(c * delta).
The best assignment ever accepted is tracked and returned.

Scoring counts the vertex pairs whose adjacency matches the representation,
and a single-vertex move only touches the pairs through that vertex, so
each round costs O(n) mask operations instead of a full rescore. The number
of rounds defaults to ceil(b * n * ln n); the default multiplier is
calibrated so that exact-fit instances (alphabet product equal to the
clique-cover number) converge reliably, which takes far more rounds than
loose fits do.

Everything is reproducible: the chain consumes a fixed-order stream from a
seeded SplitMix64 (vertex, new A-mask, new B-mask, then the acceptance draw
only when the move is not an improvement), and restarts use seed + restart
index, ties resolved toward the lowest seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .cir import Cir, Score
from .graphs import Graph
from .rng import SplitMix64


@dataclass(frozen=True)
class AnnealParams:
    alpha: int
    beta: int
    c: float = 10.0
    b: float = 5000.0
    rounds: Optional[int] = None
    seed: int = 0
    trace_every: int = 0

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("alphabets must be nonempty")
        if self.c <= 0:
            raise ValueError("mixing exponent must be positive")
        if self.rounds is not None and self.rounds < 1:
            raise ValueError("rounds must be at least 1")
        if self.b <= 0:
            raise ValueError("rounds multiplier must be positive")

    def effective_rounds(self, n: int) -> int:
        if self.rounds is not None:
            return self.rounds
        return max(1, math.ceil(self.b * n * math.log(max(n, 2))))


@dataclass(frozen=True)
class AnnealResult:
    best: Cir
    best_score: Score
    rounds: int
    seed: int
    trace: tuple[tuple[int, int], ...] = ()


def _match_count(u: int, am_u: int, bm_u: int, a_masks, b_masks, adj_row: int, n: int) -> int:
    """Pairs through u whose adjacency agrees with the masks."""
    good = 0
    for v in range(n):
        if v == u:
            continue
        meets = (am_u & a_masks[v]) != 0 and (bm_u & b_masks[v]) != 0
        good += meets == bool(adj_row >> v & 1)
    return good


def anneal(g: Graph, params: AnnealParams) -> AnnealResult:
    n = g.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    rng = SplitMix64(params.seed)
    rounds = params.effective_rounds(n)
    adj = g.adjacency_masks()
    alpha, beta = params.alpha, params.beta

    a_masks = [0] * n
    b_masks = [0] * n
    for v in range(n):
        a_masks[v] = rng.nonempty_mask(alpha)
        b_masks[v] = rng.nonempty_mask(beta)

    matched = sum(_match_count(u, a_masks[u], b_masks[u], a_masks, b_masks, adj[u], n)
                  for u in range(n)) // 2
    total = n * (n - 1) // 2

    best_a = list(a_masks)
    best_b = list(b_masks)
    best_matched = matched
    trace: list[tuple[int, int]] = []
    if params.trace_every:
        trace.append((0, best_matched))

    for rnd in range(1, rounds + 1):
        u = rng.below(n)
        new_a = rng.nonempty_mask(alpha)
        new_b = rng.nonempty_mask(beta)
        old_contrib = _match_count(u, a_masks[u], b_masks[u], a_masks, b_masks, adj[u], n)
        new_contrib = _match_count(u, new_a, new_b, a_masks, b_masks, adj[u], n)
        delta = new_contrib - old_contrib
        accept = delta >= 0 or rng.uniform01() < math.exp(params.c * delta)
        if accept:
            a_masks[u] = new_a
            b_masks[u] = new_b
            matched += delta
            if matched > best_matched:
                best_matched = matched
                best_a = list(a_masks)
                best_b = list(b_masks)
        if params.trace_every and rnd % params.trace_every == 0:
            trace.append((rnd, best_matched))
    if params.trace_every and (not trace or trace[-1][0] != rounds):
        trace.append((rounds, best_matched))

    best = Cir.from_lists(alpha, beta, [
        ({a for a in range(alpha) if best_a[v] >> a & 1},
         {b for b in range(beta) if best_b[v] >> b & 1})
        for v in range(n)
    ])
    return AnnealResult(best, Score(best_matched, total), rounds, params.seed,
                        tuple(trace))


def multi_restart(g: Graph, params: AnnealParams, restarts: int = 1) -> AnnealResult:
    """Best of `restarts` independent chains seeded seed, seed+1, ...

    Deterministic regardless of execution order: the winner is the highest
    score, ties to the lowest seed.
    """
    if restarts < 1:
        raise ValueError("need at least one restart")
    best: Optional[AnnealResult] = None
    for r in range(restarts):
        run = anneal(g, AnnealParams(
            alpha=params.alpha, beta=params.beta, c=params.c, b=params.b,
            rounds=params.rounds, seed=params.seed + r,
            trace_every=params.trace_every))
        if best is None or run.best_score.matched > best.best_score.matched:
            best = run
    return best

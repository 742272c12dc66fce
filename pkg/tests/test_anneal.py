import math

import pytest

from cointersect.anneal import AnnealParams, AnnealResult, anneal, multi_restart
from cointersect.cir import score, verify
from cointersect.graphs import Graph, generate
from cointersect.rng import SplitMix64


def test_determinism_bit_identical():
    g = generate("path", [8])
    p = AnnealParams(alpha=2, beta=3, seed=42, rounds=400, trace_every=50)
    r1 = anneal(g, p)
    r2 = anneal(g, p)
    assert r1 == r2
    assert r1.best.to_json() == r2.best.to_json()


def test_rounds_zero_rejected_one_returns_initial():
    with pytest.raises(ValueError):
        AnnealParams(alpha=2, beta=2, rounds=0)
    g = generate("path", [5])
    res = anneal(g, AnnealParams(alpha=2, beta=2, seed=3, rounds=1))
    assert res.rounds == 1


def test_default_round_count_formula():
    p = AnnealParams(alpha=2, beta=2)
    assert p.effective_rounds(13) == math.ceil(p.b * 13 * math.log(13))


def test_best_score_matches_full_rescore():
    g = generate("cycle", [9])
    res = anneal(g, AnnealParams(alpha=3, beta=3, seed=5, rounds=2000))
    assert score(g, res.best).matched == res.best_score.matched


def test_all_sets_nonempty_always():
    g = generate("complete_bipartite", [3, 4])
    res = anneal(g, AnnealParams(alpha=3, beta=2, seed=9, rounds=1500))
    assert all(res.best.a_sets[v] and res.best.b_sets[v] for v in range(g.n))


def test_trace_is_nondecreasing():
    g = generate("path", [10])
    res = anneal(g, AnnealParams(alpha=3, beta=3, seed=1, rounds=3000, trace_every=100))
    values = [s for _, s in res.trace]
    assert values == sorted(values)
    assert res.trace[0][0] == 0 and res.trace[-1][0] == 3000


def test_perfect_score_reachable_small():
    g = generate("path", [5])
    res = anneal(g, AnnealParams(alpha=2, beta=2, seed=2, rounds=4000))
    assert res.best_score.perfect
    assert verify(g, res.best) == []


def test_acceptance_probability_matches_exponential():
    # Frequency of accepting a controlled negative delta ~ exp(c * delta),
    # within 3 standard errors.
    c, delta, trials = 10.0, -0.2, 100_000
    rng = SplitMix64(123)
    accepted = sum(rng.uniform01() < math.exp(c * delta) for _ in range(trials))
    p = math.exp(c * delta)
    se = math.sqrt(p * (1 - p) / trials)
    assert abs(accepted / trials - p) < 3 * se


def test_alpha_one_reduces_to_single_alphabet_intersection():
    # With alpha = 1 every vertex holds the lone A-label, so the A-side test
    # always passes and the score is the pure B-side intersection score.
    g = generate("cycle", [6])
    res = anneal(g, AnnealParams(alpha=1, beta=4, seed=7, rounds=2000))
    assert all(a == frozenset({0}) for a in res.best.a_sets)
    bm = [sum(1 << b for b in s) for s in res.best.b_sets]
    adj = g.adjacency_masks()
    matched = sum((bool(bm[u] & bm[v])) == bool(adj[u] >> v & 1)
                  for u in range(g.n) for v in range(u + 1, g.n))
    assert matched == res.best_score.matched


def test_multi_restart_never_worse_and_deterministic():
    g = generate("path", [9])
    p = AnnealParams(alpha=2, beta=4, seed=10, rounds=300)
    single = anneal(g, p)
    multi = multi_restart(g, p, restarts=6)
    assert multi.best_score.matched >= single.best_score.matched
    assert multi == multi_restart(g, p, restarts=6)
    assert multi_restart(g, p, restarts=1) == single


def test_multi_restart_tie_breaks_to_lowest_seed():
    g = Graph(2, [(0, 1)])  # any nonempty assignment is perfect
    p = AnnealParams(alpha=1, beta=1, seed=77, rounds=1)
    res = multi_restart(g, p, restarts=5)
    assert res.seed == 77

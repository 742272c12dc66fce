import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cointersect import fixtures as fx
from cointersect.cir import (Cir, Score, align_jaccard, communities, equivalent,
                             graph_from_assignment, mirror_from_clique_cover,
                             score, verify)
from cointersect.graphs import Graph, generate
from cointersect.rng import SplitMix64


def random_cir(alpha, beta, n, seed):
    rng = SplitMix64(seed)
    pairs = []
    for _ in range(n):
        am, bm = rng.mask(alpha), rng.mask(beta)
        pairs.append(({a for a in range(alpha) if am >> a & 1},
                      {b for b in range(beta) if bm >> b & 1}))
    return Cir.from_lists(alpha, beta, pairs)


# -- verify / score ----------------------------------------------------------


def test_five_person_assignment_is_valid():
    assert verify(fx.FIVE_PERSON_GRAPH, fx.FIVE_PERSON_CIR) == []


def test_empty_sets_on_edgeless_graph_verify():
    r = Cir.from_lists(1, 1, [(set(), set())] * 4)
    assert verify(Graph(4), r) == []


def test_p5_unique_assignment_verifies():
    assert verify(generate("path", [5]), fx.P5_UNIQUE_CIR) == []


def test_vertex_count_mismatch_rejected():
    with pytest.raises(ValueError):
        verify(Graph(3), fx.P5_UNIQUE_CIR)


def test_score_perfect_iff_no_violations():
    s = score(fx.FIVE_PERSON_GRAPH, fx.FIVE_PERSON_CIR)
    assert s.matched == s.total == 10


def test_score_all_empty_on_triangle():
    r = Cir.from_lists(1, 1, [(set(), set())] * 3)
    assert score(generate("complete", [3]), r) == Score(0, 3)


def test_score_recount_after_breaking_one_vertex():
    g = generate("path", [5])
    broken = Cir(2, 2, fx.P5_UNIQUE_CIR.a_sets[:3] + (frozenset(),) + fx.P5_UNIQUE_CIR.a_sets[4:],
                 fx.P5_UNIQUE_CIR.b_sets)
    bad = verify(g, broken)
    assert all(3 in pair for pair in bad)
    assert score(g, broken).matched == 10 - len(bad)


# -- communities -------------------------------------------------------------


def test_five_person_b0_community():
    rep = communities(fx.FIVE_PERSON_CIR)
    assert rep.b_communities[0] == frozenset({0, 1, 2, 3})
    assert rep.a_communities[1] == frozenset({2, 3, 4})


def test_single_feature_community_is_everyone():
    r = Cir.from_lists(1, 1, [({0}, {0})] * 5)
    rep = communities(r)
    assert rep.a_communities[0] == frozenset(range(5))


def test_pair_communities_of_valid_cir_are_cliques():
    from cointersect.constructions import construct_knn
    r = construct_knn(6, 2, 3)
    g = generate("complete_bipartite", [6, 6])
    rep = communities(r)
    for members in rep.pair_communities.values():
        for u, v in itertools.combinations(sorted(members), 2):
            assert g.has_edge(u, v)


def test_pair_communities_form_a_cover_bounding_theta1():
    from cointersect.bounds import theta1_exact
    for r, g in ((fx.FIVE_PERSON_CIR, fx.FIVE_PERSON_GRAPH),
                 (fx.P5_UNIQUE_CIR, generate("path", [5])),
                 (fx.C4_UNIQUE_CIR, generate("cycle", [4]))):
        rep = communities(r)
        covered = set()
        for members in rep.pair_communities.values():
            covered.update(itertools.combinations(sorted(members), 2))
        assert covered >= g.edges
        assert r.alpha * r.beta >= theta1_exact(g)


# -- graph_from_assignment ---------------------------------------------------


def test_table1_truth_generates_22_edges():
    g = fx.table1_graph()
    assert g.n == 12 and len(g.edges) == 22
    assert verify(g, fx.TABLE1_SAT_CIR) == []


def test_shared_pair_gives_complete_graph():
    r = Cir.from_lists(1, 1, [({0}, {0})] * 4)
    assert graph_from_assignment(r) == generate("complete", [4])


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=30, deadline=None)
def test_assignment_roundtrip(seed):
    r = random_cir(3, 2, 6, seed)
    assert verify(graph_from_assignment(r), r) == []


# -- mirror construction -----------------------------------------------------


def test_mirror_from_cover_fig1():
    r = mirror_from_clique_cover(fx.FIG_INTERSECTION_GRAPH, fx.FIG_INTERSECTION_COVER)
    assert (r.alpha, r.beta) == (3, 1)
    assert verify(fx.FIG_INTERSECTION_GRAPH, r) == []


def test_mirror_single_clique_complete():
    g = generate("complete", [4])
    r = mirror_from_clique_cover(g, [range(4)])
    assert (r.alpha, r.beta) == (1, 1)
    assert verify(g, r) == []


def test_mirror_greedy_cover_c5():
    from cointersect.bounds import greedy_clique_cover
    g = generate("cycle", [5])
    cover = greedy_clique_cover(g)
    assert len(cover) == 5
    assert verify(g, mirror_from_clique_cover(g, cover)) == []


def test_mirror_rejects_uncovered_edge():
    with pytest.raises(ValueError, match="misses"):
        mirror_from_clique_cover(fx.FIVE_PERSON_GRAPH, [frozenset({0, 1, 2})])


def test_mirror_rejects_non_clique():
    with pytest.raises(ValueError, match="non-edge"):
        mirror_from_clique_cover(generate("path", [3]), [frozenset({0, 1, 2})])


# -- equivalence -------------------------------------------------------------


def test_relabeled_copy_is_equivalent():
    r = fx.P5_UNIQUE_CIR
    assert equivalent(r, r.relabeled([1, 0], [0, 1]))
    assert equivalent(r, r.relabeled([1, 0], [1, 0]))


def test_p7_pair_not_equivalent():
    assert not equivalent(fx.P7_CIR_A, fx.P7_CIR_B)


def test_swap_counts_when_square():
    r = Cir.from_lists(1, 1, [({0}, {0})] * 3)
    assert equivalent(r, r.swapped())
    lop = Cir.from_lists(1, 2, [({0}, {0, 1})] * 3)
    assert not equivalent(lop, Cir.from_lists(1, 2, [({0}, {0})] * 3))


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=25, deadline=None)
def test_equivalence_relation_on_random_triples(seed):
    r1 = random_cir(2, 2, 4, seed)
    r2 = r1.relabeled([1, 0], [0, 1])
    r3 = r2.swapped()
    assert equivalent(r1, r1)
    assert equivalent(r1, r2) == equivalent(r2, r1)
    if equivalent(r1, r2) and equivalent(r2, r3):
        assert equivalent(r1, r3)


# -- alignment ---------------------------------------------------------------


def test_align_shuffled_labels_recovers_perfect_score():
    ref = fx.TABLE1_TRUTH_CIR
    cand = ref.relabeled([2, 0, 3, 1], [4, 3, 2, 1, 0])
    moved, val = align_jaccard(ref, cand)
    assert val == pytest.approx(1.0)
    assert moved == ref


def test_align_table1_columns_below_one():
    ref = fx.TABLE1_TRUTH_CIR
    cand = fx.TABLE1_SAT_CIR.padded(4, 5)
    _, val = align_jaccard(ref, cand)
    assert val < 1.0


def test_align_matches_bruteforce_on_small_instances():
    for seed in range(6):
        ref = random_cir(3, 3, 5, seed)
        cand = random_cir(3, 3, 5, seed + 100)
        _, got = align_jaccard(ref, cand)
        best = -1.0
        for pa in itertools.permutations(range(3)):
            for pb in itertools.permutations(range(3)):
                moved = cand.relabeled(list(pa), list(pb))
                tot = 0.0
                for v in range(5):
                    for refs, cands in ((ref.a_sets, moved.a_sets), (ref.b_sets, moved.b_sets)):
                        s, t = refs[v], cands[v]
                        tot += 1.0 if not s and not t else len(s & t) / len(s | t)
                best = max(best, tot / 10)
        assert got == pytest.approx(best)


def test_align_size_mismatch_rejected():
    with pytest.raises(ValueError):
        align_jaccard(fx.TABLE1_TRUTH_CIR, fx.TABLE1_SAT_CIR)


# -- serialization -----------------------------------------------------------


def test_json_roundtrip_canonical():
    r = fx.FIVE_PERSON_CIR
    text = r.to_json()
    assert Cir.from_json(text) == r
    assert Cir.from_json(text).to_json() == text


def test_json_rejects_garbage():
    with pytest.raises(ValueError):
        Cir.from_json('{"alpha": 2}')


def test_cir_validates_ranges():
    with pytest.raises(ValueError):
        Cir.from_lists(1, 1, [({1}, {0})])
    with pytest.raises(ValueError):
        Cir.from_lists(0, 1, [])

import pytest

from cointersect import fixtures as fx
from cointersect.cir import verify
from cointersect.constructions import (construct_bipartite, construct_cycle,
                                       construct_knn, construct_multipartite,
                                       construct_path, construct_star)
from cointersect.graphs import generate
from cointersect.packings import affine_plane, packing_three_classes


def assert_valid(g, r):
    assert verify(g, r) == []


# -- stars ---------------------------------------------------------------------


def test_star_exact_fit():
    r = construct_star(5, 2, 2)
    assert_valid(generate("star", [5]), r)
    leaf_pairs = {(tuple(r.a_sets[v]), tuple(r.b_sets[v])) for v in range(1, 5)}
    assert len(leaf_pairs) == 4


def test_star_all_pairs_used():
    assert_valid(generate("star", [10]), construct_star(10, 3, 3))


def test_star_too_small_rejected():
    with pytest.raises(ValueError):
        construct_star(5, 1, 3)


# -- paths ---------------------------------------------------------------------


def test_path_13_3_4_shape():
    r = construct_path(13, 3, 4)
    assert_valid(generate("path", [13]), r)
    # interior group boundaries carry two a-labels and one b-label
    assert r.a_sets[4] == frozenset({0, 1}) and len(r.b_sets[4]) == 1


def test_path_single_group():
    assert_valid(generate("path", [4]), construct_path(4, 1, 3))


def test_path_short_last_group():
    r = construct_path(8, 3, 3)
    assert_valid(generate("path", [8]), r)


def test_path_too_small_rejected():
    with pytest.raises(ValueError):
        construct_path(13, 2, 5)


# -- cycles ----------------------------------------------------------------------


def test_cycle_9_3_3_matches_reference():
    assert construct_cycle(9, 3, 3) == fx.C9_CIR


def test_cycle_uncorrected_zigzag_fails_at_known_pair():
    r = construct_cycle(9, 3, 3, corrected=False)
    bad = verify(generate("cycle", [9]), r)
    assert (0, 3) in bad
    assert r.a_sets[0] & r.a_sets[3] == {0}
    assert r.b_sets[0] & r.b_sets[3] == {2}


def test_cycle_even_groups_no_correction():
    assert_valid(generate("cycle", [8]), construct_cycle(8, 2, 4))


def test_cycle_alpha_one_delegates_to_single_row():
    r = construct_cycle(6, 1, 6)
    assert_valid(generate("cycle", [6]), r)
    assert all(a == frozenset({0}) for a in r.a_sets)


def test_cycle_triangle_is_complete():
    assert_valid(generate("cycle", [3]), construct_cycle(3, 1, 1))
    assert_valid(generate("cycle", [3]), construct_cycle(3, 2, 2))


def test_cycle_slack_and_odd_shapes():
    for n, a, b in [(5, 2, 3), (6, 3, 2), (7, 3, 3), (10, 5, 2), (11, 3, 4),
                    (13, 4, 4), (9, 2, 5), (17, 5, 4), (21, 5, 5)]:
        assert_valid(generate("cycle", [n]), construct_cycle(n, a, b))


def test_cycle_too_small_rejected():
    with pytest.raises(ValueError):
        construct_cycle(9, 2, 4)


# -- bipartite -------------------------------------------------------------------


def test_bipartite_k33():
    g = generate("complete_bipartite", [3, 3])
    r = construct_bipartite(g)
    assert (r.alpha, r.beta) == (3, 3)
    assert_valid(g, r)


def test_bipartite_km33_uses_2n_features():
    g = generate("knn_minus_matching", [3])
    r = construct_bipartite(g)
    assert r.alpha + r.beta == 6
    assert_valid(g, r)


def test_bipartite_c4():
    g = generate("cycle", [4])
    r = construct_bipartite(g)
    assert (r.alpha, r.beta) == (2, 2)
    assert_valid(g, r)


def test_bipartite_rejects_odd_cycle():
    with pytest.raises(ValueError, match="bipartite"):
        construct_bipartite(generate("cycle", [5]))


# -- balanced complete bipartite ---------------------------------------------------


def test_knn_fig9_shape():
    r = construct_knn(6, 2, 3)
    assert (r.alpha, r.beta) == (2, 18)
    assert_valid(generate("complete_bipartite", [6, 6]), r)


def test_knn_square_case_degree_property():
    for n in range(1, 11):
        r = construct_knn(n, n, 1)
        g = generate("complete_bipartite", [n, n])
        assert (r.alpha, r.beta) == (n, n)
        assert_valid(g, r)
        for v in range(2 * n):
            assert len(r.a_sets[v]) * len(r.b_sets[v]) == g.degree(v)
        for u, w in g.edges:
            assert len(r.a_sets[u] & r.a_sets[w]) == 1
            assert len(r.b_sets[u] & r.b_sets[w]) == 1


def test_knn_4_2_2():
    r = construct_knn(4, 2, 2)
    assert (r.alpha, r.beta) == (2, 8)  # beta = t * s^2
    assert_valid(generate("complete_bipartite", [4, 4]), r)


def test_knn_rejects_bad_factorization():
    with pytest.raises(ValueError):
        construct_knn(6, 4, 2)


# -- multipartite ------------------------------------------------------------------


def test_multipartite_order3_four_parts():
    cir = construct_multipartite(affine_plane(3), 4)
    assert (cir.alpha, cir.beta) == (9, 9)
    assert_valid(generate("complete_multipartite", [9, 9, 9, 9]), cir)


def test_multipartite_three_class_any_k():
    for k in (2, 3, 4):
        cir = construct_multipartite(packing_three_classes(k), 3)
        n = k * k
        assert cir.alpha + cir.beta == 2 * n
        assert_valid(generate("complete_multipartite", [n, n, n]), cir)


def test_multipartite_two_parts_k2():
    cir = construct_multipartite(affine_plane(2), 2)
    assert cir.alpha + cir.beta == 8
    assert_valid(generate("complete_multipartite", [4, 4]), cir)


def test_multipartite_needs_enough_classes():
    with pytest.raises(ValueError, match="classes"):
        construct_multipartite(packing_three_classes(3), 4)
    with pytest.raises(ValueError):
        construct_multipartite(affine_plane(3), 1)

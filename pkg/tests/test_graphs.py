import pytest
from hypothesis import given, strategies as st

from cointersect.graphs import (Graph, complement, generate, is_bipartite,
                                is_triangle_free, karate, parse_edge_list,
                                render_edge_list, to_dot)


def test_parse_two_edge_path():
    g = parse_edge_list("0 1\n1 2")
    assert g.n == 3
    assert g.edges == {(0, 1), (1, 2)}


def test_parse_header_fixes_n():
    g = parse_edge_list("n 5\n0 1")
    assert g.n == 5
    assert g.edges == {(0, 1)}
    assert g.degree(4) == 0


def test_parse_comments_and_duplicates():
    g = parse_edge_list("# a comment\n0 1\n1 0\n0 1\n")
    assert g.edges == {(0, 1)}


def test_parse_rejects_self_loop_with_line_number():
    with pytest.raises(ValueError, match="line 2"):
        parse_edge_list("0 1\n3 3")


def test_parse_rejects_non_integer_token():
    with pytest.raises(ValueError, match="line 1"):
        parse_edge_list("0 x")


def test_parse_rejects_endpoint_beyond_declared_n():
    with pytest.raises(ValueError):
        parse_edge_list("n 2\n0 5")


def test_karate_size():
    g = karate()
    assert g.n == 34
    assert len(g.edges) == 78


def test_generate_star():
    g = generate("star", [5])
    assert len(g.edges) == 4
    assert all(0 in e for e in g.edges)


def test_generate_k222_edge_count():
    g = generate("complete_multipartite", [2, 2, 2])
    assert len(g.edges) == 12


def test_knn_minus_matching_small():
    g = generate("knn_minus_matching", [3])
    assert g.n == 6 and len(g.edges) == 6
    assert is_triangle_free(g)
    assert all(g.degree(v) == 2 for v in range(6))


def test_knn_edge_count_matches_square():
    for n in range(1, 7):
        assert len(generate("complete_bipartite", [n, n]).edges) == n * n


def test_triangle_free_cycle9():
    assert is_triangle_free(generate("cycle", [9]))
    assert not is_triangle_free(generate("complete", [3]))


def test_bipartite_k66():
    parts = is_bipartite(generate("complete_bipartite", [6, 6]))
    assert parts is not None
    assert sorted(map(len, parts)) == [6, 6]
    assert is_bipartite(generate("cycle", [5])) is None


def test_complement_of_complete_is_empty():
    assert complement(generate("complete", [4])).edges == frozenset()


def test_generate_rejects_bad_sizes():
    with pytest.raises(ValueError):
        generate("star", [0])
    with pytest.raises(ValueError):
        generate("cycle", [2])
    with pytest.raises(ValueError):
        generate("unknown_family", [3])


def test_dot_output_lists_edges_and_isolated():
    g = parse_edge_list("n 3\n0 1")
    dot = to_dot(g)
    assert "0 -- 1;" in dot and "2;" in dot


@given(st.integers(0, 12), st.data())
def test_roundtrip_random_graphs(n, data):
    pairs = []
    if n >= 2:
        all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        pairs = data.draw(st.lists(st.sampled_from(all_pairs), max_size=20))
    g = Graph(n, pairs)
    assert parse_edge_list(render_edge_list(g)) == g


@pytest.mark.parametrize("family,params", [
    ("star", [7]), ("path", [9]), ("cycle", [5]), ("complete", [4]),
    ("complete_bipartite", [2, 3]), ("complete_multipartite", [2, 2, 2]),
    ("knn_minus_matching", [4]), ("karate", []),
])
def test_roundtrip_generated(family, params):
    g = generate(family, params)
    assert parse_edge_list(render_edge_list(g)) == g

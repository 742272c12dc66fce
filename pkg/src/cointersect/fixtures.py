"""Reference graphs, representations, and designs used as golden test data.

Everything here is 0-based. The five-person social graph comes with the
hobby/city assignment it illustrates; the karate-club network carries the
post-split faction membership used as community ground truth.
"""

from __future__ import annotations

from .cir import Cir, graph_from_assignment
from .graphs import Graph, karate
from .packings import ResolvablePacking

# Triangle {0,1,2} with pendant edges (2,3) and (2,4); its smallest edge
# clique cover has three cliques.
FIG_INTERSECTION_GRAPH = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4)])
FIG_INTERSECTION_COVER = [frozenset({0, 1, 2}), frozenset({2, 3}), frozenset({2, 4})]

# Five people; hobbies A = {fishing, soccer}, cities B = {Hanoi, Champaign}.
# Person 3 (index 2) and person 4 (index 3) share soccer and Hanoi, hence the
# edge; person 3 and person 5 share soccer only, hence no edge. Four features
# suffice and are necessary for this graph.
FIVE_PERSON_GRAPH = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
FIVE_PERSON_CIR = Cir.from_lists(2, 2, [
    ({0}, {0}),
    ({0}, {0, 1}),
    ({0, 1}, {0}),
    ({1}, {0, 1}),
    ({1}, {1}),
])
FIVE_PERSON_THETA_C = 4

# The unique balanced optimum for the 5-vertex path.
P5_UNIQUE_CIR = Cir.from_lists(2, 2, [
    ({0}, {0}),
    ({0}, {0, 1}),
    ({0, 1}, {1}),
    ({1}, {0, 1}),
    ({1}, {0}),
])

# The unique balanced optimum for the 4-cycle.
C4_UNIQUE_CIR = Cir.from_lists(2, 2, [
    ({0, 1}, {0}),
    ({0}, {0, 1}),
    ({0, 1}, {1}),
    ({1}, {0, 1}),
])

# Two optimal (2,3) representations of the 7-vertex path that no relabeling
# maps onto each other: vertices 0 and 4 share no feature in the first and
# share b0 in the second.
P7_CIR_A = Cir.from_lists(2, 3, [
    ({0}, {0}),
    ({0}, {0, 1}),
    ({0}, {1, 2}),
    ({0, 1}, {2}),
    ({1}, {2, 1}),
    ({1}, {1, 0}),
    ({1}, {0}),
])
P7_CIR_B = Cir.from_lists(2, 3, [
    ({0}, {0}),
    ({0}, {0, 1}),
    ({0}, {1, 2}),
    ({0, 1}, {2}),
    ({1}, {2, 0}),
    ({1}, {0, 1}),
    ({1}, {1}),
])

# Expected output of construct_cycle(9, 3, 3): ascending group, then the two
# reordered groups that keep vertex 0 down to two feature pairs.
C9_CIR = Cir.from_lists(3, 3, [
    ({2, 0}, {0}),
    ({0}, {0, 1}),
    ({0}, {1, 2}),
    ({0, 1}, {2}),
    ({1}, {2, 0}),
    ({1}, {0, 1}),
    ({1, 2}, {1}),
    ({2}, {1, 2}),
    ({2}, {2, 0}),
])

# Optimal representations of K_{n,n} minus a perfect matching at n = 2, 3,
# meeting the product lower bound 2n - 1. Vertex order matches
# knn_minus_matching: u_0..u_{n-1}, then v_0..v_{n-1}.
KM22_CIR = Cir.from_lists(1, 2, [
    ({0}, {0}),
    ({0}, {1}),
    ({0}, {1}),
    ({0}, {0}),
])
KM33_CIR = Cir.from_lists(2, 3, [
    ({0}, {0, 1}),
    ({1}, {0, 1}),
    ({0, 1}, {2}),
    ({1}, {0, 2}),
    ({0}, {0, 2}),
    ({0, 1}, {1}),
])

# Twelve-vertex synthetic network: the generating (4,5) assignment and the
# more compact (3,5) representation of the same graph found by exact search.
# Vertex 0 holds ({a2}, {b1}); that pins both assignments to one graph.
TABLE1_TRUTH_CIR = Cir.from_lists(4, 5, [
    ({2}, {1}),
    ({0, 2}, {0, 2}),
    ({2}, {1, 3}),
    ({2, 3}, {1, 3}),
    ({0}, {2, 3}),
    ({0, 3}, {0, 3}),
    ({1}, {2, 3}),
    ({2, 3}, {0, 3, 4}),
    ({1}, {0, 1}),
    ({0, 1}, {1, 2}),
    ({1}, {0, 3, 4}),
    ({2}, {0, 1, 3}),
])
TABLE1_SAT_CIR = Cir.from_lists(3, 5, [
    ({2}, {1}),
    ({0, 1, 2}, {0, 2}),
    ({2}, {1, 3}),
    ({2}, {1, 4}),
    ({0, 1}, {2}),
    ({1, 2}, {2, 4}),
    ({0, 1}, {3}),
    ({2}, {0, 3, 4}),
    ({0, 1}, {1}),
    ({0}, {0, 1, 2, 3}),
    ({1}, {1, 3}),
    ({2}, {0, 1}),
])
TABLE1_THETA_C = 8


def table1_graph() -> Graph:
    return graph_from_assignment(TABLE1_TRUTH_CIR)


# 2-(9,3,1) resolvable packing with four parallel classes (an affine plane
# of order 3), as row/column/diagonal/anti-diagonal triples of a 3x3 grid.
FIG_ORDER3_PACKING = ResolvablePacking(
    point_count=9,
    block_size=3,
    classes=(
        (frozenset({0, 1, 2}), frozenset({3, 4, 5}), frozenset({6, 7, 8})),
        (frozenset({0, 3, 6}), frozenset({1, 4, 7}), frozenset({2, 5, 8})),
        (frozenset({0, 4, 8}), frozenset({1, 5, 6}), frozenset({2, 3, 7})),
        (frozenset({0, 5, 7}), frozenset({1, 3, 8}), frozenset({2, 4, 6})),
    ),
)

# 2-(16,4,1) resolvable packing with three parallel classes: rows, columns,
# and broken diagonals of a 4x4 grid.
FIG_ORDER4_THREE_CLASS_PACKING = ResolvablePacking(
    point_count=16,
    block_size=4,
    classes=(
        (frozenset({0, 1, 2, 3}), frozenset({4, 5, 6, 7}),
         frozenset({8, 9, 10, 11}), frozenset({12, 13, 14, 15})),
        (frozenset({0, 4, 8, 12}), frozenset({1, 5, 9, 13}),
         frozenset({2, 6, 10, 14}), frozenset({3, 7, 11, 15})),
        (frozenset({0, 5, 10, 15}), frozenset({1, 6, 11, 12}),
         frozenset({2, 7, 8, 13}), frozenset({3, 4, 9, 14})),
    ),
)

# Faction membership for the karate club during the dispute (0-based).
# Member 8 sided with the president even though he later joined the
# instructor's club; the supporter split is what community recovery targets.
KARATE_INSTRUCTOR_FACTION = frozenset(
    {0, 1, 2, 3, 4, 5, 6, 7, 10, 11, 12, 13, 16, 17, 19, 21})
KARATE_PRESIDENT_FACTION = frozenset(range(34)) - KARATE_INSTRUCTOR_FACTION


def karate_graph() -> Graph:
    return karate()

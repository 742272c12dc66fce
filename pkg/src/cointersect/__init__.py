"""Cointersection representations of graphs.

A representation assigns each vertex two feature sets over disjoint
alphabets so that adjacency coincides with "both sets intersect". This
package computes exact optima (via an embedded CDCL solver), evaluates the
known bounds, builds explicit representations for standard graph families,
approximates on larger inputs by simulated annealing, and generalizes the
adjacency rule to arbitrary DNF formulas over feature types.
"""

__version__ = "0.1.0"

from .anneal import AnnealParams, AnnealResult, anneal, multi_restart
from .bounds import (BoundsReport, bounds_report, f_upper_bound, min_edge_clique_cover,
                     theta1_exact, theta1_greedy, thetac_lower, thetac_upper_bounds)
from .booleanf import (DnfFormula, GeneralAssignment, anneal_f, g_f, ip_lower_bound,
                       parse_dnf, score_f, verify_f)
from .cir import (Cir, CommunityReport, Score, align_jaccard, communities, equivalent,
                  graph_from_assignment, mirror_from_clique_cover, score, verify)
from .constructions import (construct_bipartite, construct_cycle, construct_knn,
                            construct_multipartite, construct_path, construct_star)
from .graphs import Graph, complement, generate, is_bipartite, is_triangle_free, karate, parse_edge_list, render_edge_list
from .oracle import OracleLimits, brute_cir_exists, brute_theta1, brute_theta_c, enumerate_optimal_cirs
from .packings import ResolvablePacking, affine_plane, is_design, packing_three_classes, verify_packing
from .rng import SplitMix64
from .sat import (CnfInstance, ExactResult, SatResult, SearchAborted, VarMap, cir_exists,
                  decode, encode, export_dimacs, import_model, theta_c_exact)

__all__ = [name for name in dir() if not name.startswith("_")]

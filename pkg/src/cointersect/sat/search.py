"""Optimal representation search: binary search on the total feature count.

Feasibility is monotone in the total: a representation never breaks when an
unused feature is appended to either alphabet, so if some split of total t
works then some split of t+1 works too (pad either side). That soundness of
binary search is stated here because it is what the search relies on; the
test suite exercises the padding argument directly.

At a given total t, only splits with alpha <= beta and alpha * beta >=
theta1 can possibly work (the pair communities of a valid representation
form an edge clique cover), so anything else is skipped without a solver
call. Probes run smallest alpha first and the first satisfiable split wins,
which also fixes which witness is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ..bounds import theta1_exact, theta1_greedy, thetac_lower
from ..cir import Cir
from ..graphs import Graph, is_bipartite
from .encode import encode, decode
from .solver import SatResult, Solver


class SearchAborted(RuntimeError):
    """A solver probe hit its resource limit; no wrong answer is reported instead."""


@dataclass(frozen=True)
class ExactResult:
    theta_c: int
    alpha: int
    beta: int
    witness: Cir
    theta1_lower: int
    theta1_is_exact: bool


def cir_exists(g: Graph, alpha: int, beta: int,
               conflict_limit: Optional[int] = None,
               time_limit: Optional[float] = None) -> tuple[SatResult, Optional[Cir]]:
    """Decide existence of an (alpha, beta) representation; decoded witness on SAT."""
    inst = encode(g, alpha, beta)
    res, model = Solver(inst.var_count, inst.clauses).solve(conflict_limit, time_limit)
    if res is SatResult.SAT:
        return res, decode(model, g, alpha, beta, inst.var_map)
    return res, None


def theta_c_exact(g: Graph,
                  theta1_lower: Optional[int] = None,
                  theta1_upper: Optional[int] = None,
                  exact_limit: int = 20,
                  conflict_limit: Optional[int] = None,
                  time_limit: Optional[float] = None,
                  probe_hook=None) -> ExactResult:
    """Minimum total feature count, with a verified witness.

    theta1 bounds may be supplied (e.g. from the caller's own analysis);
    otherwise theta_1 is computed exactly when affordable and bracketed by
    the greedy cover when not. Probing the upper end is safe: a cover of
    size theta1_upper yields a (1, theta1_upper) representation, so the
    bracket always contains a satisfiable total.
    """
    t1_exact = False
    if theta1_lower is None or theta1_upper is None:
        try:
            t1 = theta1_exact(g, exact_limit)
            theta1_lower = theta1_upper = t1
            t1_exact = True
        except ValueError:
            theta1_lower = theta1_lower if theta1_lower is not None else (1 if g.edges else 0)
            theta1_upper = theta1_upper if theta1_upper is not None else theta1_greedy(g)
    else:
        t1_exact = theta1_lower == theta1_upper

    lo = max(2, thetac_lower(theta1_lower))
    hi = 1 + theta1_upper
    parts = is_bipartite(g)
    if parts is not None:
        hi = min(hi, max(2, g.n))
    hi = max(hi, lo)

    probes: dict[tuple[int, int], SatResult] = {}

    def split_sat(alpha: int, beta: int) -> SatResult:
        key = (alpha, beta)
        if key not in probes:
            if probe_hook is not None:
                probe_hook(alpha, beta)
            res, cir = cir_exists(g, alpha, beta, conflict_limit, time_limit)
            probes[key] = res
            if res is SatResult.SAT:
                witnesses[key] = cir
        return probes[key]

    witnesses: dict[tuple[int, int], Cir] = {}

    def total_sat(t: int) -> Optional[tuple[int, int]]:
        """Smallest-alpha satisfiable split at total t, or None if all fail."""
        unknown = False
        for alpha in range(1, t // 2 + 1):
            beta = t - alpha
            if alpha * beta < theta1_lower:
                continue
            res = split_sat(alpha, beta)
            if res is SatResult.SAT:
                return alpha, beta
            if res is SatResult.UNKNOWN:
                unknown = True
        if unknown:
            raise SearchAborted(
                f"solver limit hit at total {t}; raise the budget for a definite answer")
        return None

    best: Optional[tuple[int, int]] = None
    while lo < hi:
        mid = (lo + hi) // 2
        found = total_sat(mid)
        if found is not None:
            best = found
            hi = mid
        else:
            lo = mid + 1
    if best is None or best[0] + best[1] != lo:
        best = total_sat(lo)
        if best is None:
            raise SearchAborted(
                f"no representation found up to total {hi}; bounds contract violated")
    alpha, beta = best
    return ExactResult(lo, alpha, beta, witnesses[(alpha, beta)],
                       theta1_lower, t1_exact)

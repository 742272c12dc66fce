"""A complete CDCL satisfiability solver.

Small but real: two-watched-literal propagation, first-UIP conflict
analysis with activity (VSIDS) branching, phase saving, Luby restarts, and
glue-based learned-clause reduction. Everything is deterministic: ties in
the branching heap break on variable index, and the only resource limit
that affects the three-valued answer is an explicit conflict or wall-clock
budget, reported as UNKNOWN rather than a guess.
"""

from __future__ import annotations

import time
from enum import Enum
from heapq import heappop, heappush
from typing import Iterable, Optional, Sequence


class SatResult(Enum):
    SAT = "sat"
    UNSAT = "unsat"
    UNKNOWN = "unknown"


_RESCALE = 1e100


def _luby(i: int) -> int:
    # Luby sequence 1,1,2,1,1,2,4,...; i is 1-based.
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while (1 << k) - 1 != i:
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1
    return 1 << (k - 1)


class Solver:
    def __init__(self, var_count: int, clauses: Iterable[Sequence[int]]):
        self.nvars = var_count
        self.values = [0] * (var_count + 1)   # 0 unassigned, +1 true, -1 false
        self.level = [0] * (var_count + 1)
        self.reason: list[Optional[list[int]]] = [None] * (var_count + 1)
        self.saved = [-1] * (var_count + 1)   # saved phase, default negative
        self.activity = [0.0] * (var_count + 1)
        self.var_inc = 1.0
        self.heap: list[tuple[float, int]] = []
        self.watches: list[list[list[int]]] = [[] for _ in range(2 * var_count + 2)]
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.learnts: list[list[int]] = []
        self.lbd: dict[int, int] = {}
        self.ok = True
        self.conflicts = 0

        for clause in clauses:
            lits = sorted(set(clause), key=abs)
            if any(-l in lits for l in lits):
                continue  # tautology
            if not lits:
                self.ok = False
                return
            if len(lits) == 1:
                if not self._enqueue(lits[0], None):
                    self.ok = False
                    return
            else:
                self._attach(list(lits))
        for v in range(1, var_count + 1):
            heappush(self.heap, (0.0, v))

    # -- basic machinery ----------------------------------------------------

    @staticmethod
    def _widx(lit: int) -> int:
        return 2 * lit if lit > 0 else -2 * lit + 1

    def _lit_value(self, lit: int) -> int:
        return self.values[lit] if lit > 0 else -self.values[-lit]

    def _attach(self, clause: list[int]) -> None:
        self.watches[self._widx(clause[0])].append(clause)
        self.watches[self._widx(clause[1])].append(clause)

    def _enqueue(self, lit: int, reason: Optional[list[int]]) -> bool:
        val = self._lit_value(lit)
        if val == 1:
            return True
        if val == -1:
            return False
        var = abs(lit)
        self.values[var] = 1 if lit > 0 else -1
        self.level[var] = len(self.trail_lim)
        self.reason[var] = reason
        self.trail.append(lit)
        return True

    def _propagate(self) -> Optional[list[int]]:
        while self.qhead < len(self.trail):
            lit = self.trail[self.qhead]
            self.qhead += 1
            falsified = -lit
            ws = self.watches[self._widx(falsified)]
            kept = []
            i = 0
            while i < len(ws):
                clause = ws[i]
                i += 1
                if clause[0] == falsified:
                    clause[0], clause[1] = clause[1], clause[0]
                first = clause[0]
                if self._lit_value(first) == 1:
                    kept.append(clause)
                    continue
                moved = False
                for k in range(2, len(clause)):
                    if self._lit_value(clause[k]) != -1:
                        clause[1], clause[k] = clause[k], clause[1]
                        self.watches[self._widx(clause[1])].append(clause)
                        moved = True
                        break
                if moved:
                    continue
                kept.append(clause)
                if self._lit_value(first) == -1:
                    kept.extend(ws[i:])
                    self.watches[self._widx(falsified)] = kept
                    return clause
                self._enqueue(first, clause)
            self.watches[self._widx(falsified)] = kept
        return None

    def _bump(self, var: int) -> None:
        self.activity[var] += self.var_inc
        if self.activity[var] > _RESCALE:
            for v in range(1, self.nvars + 1):
                self.activity[v] *= 1e-100
            self.var_inc *= 1e-100
        heappush(self.heap, (-self.activity[var], var))

    def _backtrack(self, target_level: int) -> None:
        if len(self.trail_lim) <= target_level:
            return
        cut = self.trail_lim[target_level]
        for lit in reversed(self.trail[cut:]):
            var = abs(lit)
            self.saved[var] = self.values[var]
            self.values[var] = 0
            self.reason[var] = None
            heappush(self.heap, (-self.activity[var], var))
        del self.trail[cut:]
        del self.trail_lim[target_level:]
        self.qhead = cut

    def _analyze(self, conflict: list[int]) -> tuple[list[int], int]:
        current = len(self.trail_lim)
        learnt = [0]  # placeholder for the asserting literal
        seen = bytearray(self.nvars + 1)
        counter = 0
        clause = conflict
        idx = len(self.trail) - 1
        resolve_var = 0
        while True:
            for q in clause:
                v = abs(q)
                if v == resolve_var or seen[v] or self.level[v] == 0:
                    continue
                seen[v] = 1
                self._bump(v)
                if self.level[v] >= current:
                    counter += 1
                else:
                    learnt.append(q)
            while not seen[abs(self.trail[idx])]:
                idx -= 1
            p = self.trail[idx]
            resolve_var = abs(p)
            seen[resolve_var] = 0
            counter -= 1
            idx -= 1
            if counter == 0:
                learnt[0] = -p
                break
            clause = self.reason[resolve_var]
        # Cheap minimization: drop literals implied by the rest of the clause.
        marked = bytearray(self.nvars + 1)
        for q in learnt[1:]:
            marked[abs(q)] = 1
        trimmed = [learnt[0]]
        for q in learnt[1:]:
            r = self.reason[abs(q)]
            if r is None or any(abs(x) != abs(q) and not marked[abs(x)] and self.level[abs(x)] > 0
                                for x in r):
                trimmed.append(q)
        learnt = trimmed
        if len(learnt) == 1:
            return learnt, 0
        bt = max(self.level[abs(q)] for q in learnt[1:])
        for k in range(1, len(learnt)):
            if self.level[abs(learnt[k])] == bt:
                learnt[1], learnt[k] = learnt[k], learnt[1]
                break
        return learnt, bt

    def _reduce_db(self) -> None:
        keep, drop = [], []
        scored = sorted(self.learnts, key=lambda c: (self.lbd.get(id(c), 9), len(c)))
        half = len(scored) // 2
        for i, c in enumerate(scored):
            locked = self.reason[abs(c[0])] is c
            if locked or self.lbd.get(id(c), 9) <= 3 or i < half:
                keep.append(c)
            else:
                drop.append(c)
        dropset = {id(c) for c in drop}
        if not dropset:
            return
        for w in range(2, 2 * self.nvars + 2):
            self.watches[w] = [c for c in self.watches[w] if id(c) not in dropset]
        for c in drop:
            self.lbd.pop(id(c), None)
        self.learnts = keep

    # -- main loop ----------------------------------------------------------

    def solve(self, conflict_limit: Optional[int] = None,
              time_limit: Optional[float] = None) -> tuple[SatResult, Optional[list[bool]]]:
        if not self.ok:
            return SatResult.UNSAT, None
        if self._propagate() is not None:
            return SatResult.UNSAT, None
        max_learnts = max(1000, 2 * len(self.learnts) + self.nvars)
        restart_idx = 1
        budget = self.conflicts + 100 * _luby(restart_idx)
        deadline = time.monotonic() + time_limit if time_limit is not None else None
        while True:
            conflict = self._propagate()
            if conflict is not None:
                self.conflicts += 1
                if not self.trail_lim:
                    return SatResult.UNSAT, None
                learnt, bt = self._analyze(conflict)
                self._backtrack(bt)
                if len(learnt) == 1:
                    if not self._enqueue(learnt[0], None):
                        return SatResult.UNSAT, None
                else:
                    self._attach(learnt)
                    self.learnts.append(learnt)
                    self.lbd[id(learnt)] = len({self.level[abs(q)] for q in learnt})
                    self._enqueue(learnt[0], learnt)
                self.var_inc /= 0.95
                if conflict_limit is not None and self.conflicts >= conflict_limit:
                    return SatResult.UNKNOWN, None
                if deadline is not None and time.monotonic() > deadline:
                    return SatResult.UNKNOWN, None
                continue
            if len(self.trail) == self.nvars:
                model = [False] * (self.nvars + 1)
                for v in range(1, self.nvars + 1):
                    model[v] = self.values[v] > 0
                return SatResult.SAT, model
            if self.conflicts >= budget:
                restart_idx += 1
                budget = self.conflicts + 100 * _luby(restart_idx)
                self._backtrack(0)
                continue
            if len(self.learnts) > max_learnts:
                self._reduce_db()
                max_learnts = int(max_learnts * 1.15)
            # Decide: highest-activity unassigned variable, saved phase.
            var = 0
            while self.heap:
                act, v = heappop(self.heap)
                if self.values[v] == 0 and -act == self.activity[v]:
                    var = v
                    break
            if var == 0:
                for v in range(1, self.nvars + 1):
                    if self.values[v] == 0:
                        var = v
                        break
            self.trail_lim.append(len(self.trail))
            self._enqueue(var if self.saved[var] > 0 else -var, None)


def solve(var_count: int, clauses: Iterable[Sequence[int]],
          conflict_limit: Optional[int] = None,
          time_limit: Optional[float] = None) -> tuple[SatResult, Optional[list[bool]]]:
    """One-shot interface over Solver."""
    return Solver(var_count, clauses).solve(conflict_limit, time_limit)

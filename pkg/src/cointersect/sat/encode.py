"""CNF encoding of "does an (alpha, beta) representation of this graph exist".

Variables x[u,a] / y[u,b] say vertex u holds feature a / b. Each edge gets
definition variables A[u,v,a] <-> (x[u,a] & x[v,a]) and B[u,v,b] likewise,
plus the two clauses demanding some A and some B witness. Each non-edge
gets C[u,v], D[u,v] with (~C | ~D) and clauses forcing C as soon as the
A-sets meet and D as soon as the B-sets meet, together saying the pair
cannot meet on both sides. The instance is satisfiable iff a representation
exists, and any model decodes straight into one.

The variable layout is fixed (x block, y block, per-edge A then B blocks,
per-non-edge C then D blocks, edges and non-edges in sorted order) so that
exported DIMACS files are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..cir import Cir, verify
from ..graphs import Graph


@dataclass(frozen=True)
class VarMap:
    n: int
    alpha: int
    beta: int
    edges: tuple[tuple[int, int], ...]
    non_edges: tuple[tuple[int, int], ...]

    def x(self, u: int, a: int) -> int:
        return 1 + u * self.alpha + a

    def y(self, u: int, b: int) -> int:
        return 1 + self.n * self.alpha + u * self.beta + b

    def edge_a(self, edge_idx: int, a: int) -> int:
        return 1 + self.n * (self.alpha + self.beta) + edge_idx * self.alpha + a

    def edge_b(self, edge_idx: int, b: int) -> int:
        return (1 + self.n * (self.alpha + self.beta) + len(self.edges) * self.alpha
                + edge_idx * self.beta + b)

    def c(self, non_edge_idx: int) -> int:
        return (1 + self.n * (self.alpha + self.beta)
                + len(self.edges) * (self.alpha + self.beta) + non_edge_idx)

    def d(self, non_edge_idx: int) -> int:
        return self.c(non_edge_idx) + len(self.non_edges)

    @property
    def var_count(self) -> int:
        return (self.n * (self.alpha + self.beta)
                + len(self.edges) * (self.alpha + self.beta)
                + 2 * len(self.non_edges))

    def layout_comments(self) -> list[str]:
        return [
            f"vertex-feature vars: x(u,a) = 1 + u*{self.alpha} + a for u<{self.n}, a<{self.alpha}",
            f"                     y(u,b) = {1 + self.n * self.alpha} + u*{self.beta} + b for b<{self.beta}",
            f"edge witness vars:   A(e,a) from {self.edge_a(0, 0) if self.edges else '-'}, "
            f"B(e,b) from {self.edge_b(0, 0) if self.edges else '-'}, edges sorted",
            f"non-edge vars:       C from {self.c(0) if self.non_edges else '-'}, "
            f"D from {self.d(0) if self.non_edges else '-'}, non-edges sorted",
        ]


@dataclass
class CnfInstance:
    var_count: int
    clauses: list[tuple[int, ...]]
    var_map: VarMap

    def __post_init__(self):
        for cl in self.clauses:
            if not cl:
                raise ValueError("empty clause at construction")
            if any(v == 0 or abs(v) > self.var_count for v in cl):
                raise ValueError(f"literal out of range in {cl}")


def encode(g: Graph, alpha: int, beta: int) -> CnfInstance:
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be at least 1")
    vm = VarMap(g.n, alpha, beta, tuple(g.sorted_edges()), tuple(g.non_edges()))
    clauses: list[tuple[int, ...]] = []
    for e, (u, v) in enumerate(vm.edges):
        for a in range(alpha):
            A = vm.edge_a(e, a)
            clauses.append((-A, vm.x(u, a)))
            clauses.append((-A, vm.x(v, a)))
            clauses.append((A, -vm.x(u, a), -vm.x(v, a)))
        for b in range(beta):
            B = vm.edge_b(e, b)
            clauses.append((-B, vm.y(u, b)))
            clauses.append((-B, vm.y(v, b)))
            clauses.append((B, -vm.y(u, b), -vm.y(v, b)))
        clauses.append(tuple(vm.edge_a(e, a) for a in range(alpha)))
        clauses.append(tuple(vm.edge_b(e, b) for b in range(beta)))
    for ne, (u, v) in enumerate(vm.non_edges):
        clauses.append((-vm.c(ne), -vm.d(ne)))
        for a in range(alpha):
            clauses.append((vm.c(ne), -vm.x(u, a), -vm.x(v, a)))
        for b in range(beta):
            clauses.append((vm.d(ne), -vm.y(u, b), -vm.y(v, b)))
    return CnfInstance(vm.var_count, clauses, vm)


def export_dimacs(inst: CnfInstance) -> str:
    lines = [f"c (alpha,beta)=({inst.var_map.alpha},{inst.var_map.beta}) "
             f"n={inst.var_map.n} edges={len(inst.var_map.edges)}"]
    lines.extend(f"c {c}" for c in inst.var_map.layout_comments())
    lines.append(f"p cnf {inst.var_count} {len(inst.clauses)}")
    for cl in inst.clauses:
        lines.append(" ".join(str(lit) for lit in cl) + " 0")
    return "\n".join(lines) + "\n"


def import_model(text: str, inst: CnfInstance) -> list[bool]:
    """Parse a satisfying-assignment listing and validate it against the instance.

    Accepts solver-style output: literals separated by whitespace, optional
    'v ' line prefixes, optional trailing 0;  's ...' and 'c ...' lines are
    ignored. Unmentioned variables default to false. Raises if any clause is
    left unsatisfied.
    """
    values = [False] * (inst.var_count + 1)
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line[0] in "sc#":
            continue
        if line.startswith("v "):
            line = line[2:]
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                continue
            if abs(lit) > inst.var_count:
                raise ValueError(f"literal {lit} out of range")
            values[abs(lit)] = lit > 0
    for cl in inst.clauses:
        if not any(values[abs(l)] == (l > 0) for l in cl):
            raise ValueError(f"model does not satisfy clause {cl}")
    return values


def decode(model: Sequence[bool], g: Graph, alpha: int, beta: int, vm: VarMap) -> Cir:
    """Read the vertex-feature variables out of a model; re-verified, always."""
    pairs = []
    for u in range(g.n):
        a_set = {a for a in range(alpha) if model[vm.x(u, a)]}
        b_set = {b for b in range(beta) if model[vm.y(u, b)]}
        pairs.append((a_set, b_set))
    r = Cir.from_lists(alpha, beta, pairs)
    bad = verify(g, r)
    if bad:
        raise AssertionError(f"decoded representation fails verification at {bad[:3]}")
    return r

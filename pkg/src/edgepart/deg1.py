"""Degree-1 edge partitions through 2-SAT.

Every crossing pair ``p`` gets a variable ``x_p``: its first edge carries the
literal ``x_p`` and its second edge ``not x_p``; a literal is true when its
edge is red. At every vertex at most one incident crossed edge may be red,
which is a pairwise at-most-one constraint over the literals there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import EdgeColoring, OnePlaneGraph, require_valid

Literal = tuple[int, bool]  # (variable, positive?)
Clause = tuple[Literal, Literal]


@dataclass
class TwoSatInstance:
    num_vars: int
    clauses: list[Clause] = field(default_factory=list)
    literal_of_edge: dict[int, Literal] = field(default_factory=dict)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        for clause in self.clauses:
            lits = [str(v + 1) if pos else str(-(v + 1)) for v, pos in clause]
            lines.append(" ".join(lits) + " 0")
        return "\n".join(lines) + "\n"


def build_2sat(g: OnePlaneGraph) -> TwoSatInstance:
    require_valid(g)
    inst = TwoSatInstance(len(g.crossings))
    for p, cp in enumerate(g.crossings):
        inst.literal_of_edge[cp.e1] = (p, True)
        inst.literal_of_edge[cp.e2] = (p, False)
    at_vertex: list[list[Literal]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        lit = inst.literal_of_edge.get(e)
        if lit is not None:
            at_vertex[u].append(lit)
            at_vertex[v].append(lit)
    for lits in at_vertex:
        for (a, pa), (b, pb) in combinations(lits, 2):
            inst.clauses.append(((a, not pa), (b, not pb)))
    return inst


def _node(lit: Literal) -> int:
    v, pos = lit
    return 2 * v + (0 if pos else 1)


def solve_2sat(inst: TwoSatInstance) -> list[bool] | None:
    """Satisfying assignment via strongly connected components, or None if UNSAT.

    Tarjan numbers components in reverse topological order; a variable is set
    true when its positive literal's component comes later topologically.
    """
    n = 2 * inst.num_vars
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in inst.clauses:
        # (a or b): not a -> b, not b -> a
        adj[_node(a) ^ 1].append(_node(b))
        adj[_node(b) ^ 1].append(_node(a))
    comp = _tarjan(adj)
    value = []
    for v in range(inst.num_vars):
        if comp[2 * v] == comp[2 * v + 1]:
            return None
        value.append(comp[2 * v] < comp[2 * v + 1])
    return value


def _tarjan(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def partition_deg1(g: OnePlaneGraph) -> EdgeColoring | None:
    """A degree-1 partition of ``g`` or None when none exists."""
    inst = build_2sat(g)
    value = solve_2sat(inst)
    if value is None:
        return None
    red = [cp.e1 if value[p] else cp.e2 for p, cp in enumerate(g.crossings)]
    return EdgeColoring.from_red(g.m, red)

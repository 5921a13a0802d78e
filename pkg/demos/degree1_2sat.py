"""Red degree 1 as 2-SAT: one Boolean per crossing pair, one clause per two crossed edges at a vertex.

Run: python3 demos/degree1_2sat.py
"""

from __future__ import annotations

from edgepart import build_2sat, partition_deg1
from edgepart.drawing import GraphBuilder
from edgepart.graph import OnePlaneGraph
from edgepart.gadgets import fan_of_crossings, kite


def literal_star() -> OnePlaneGraph:
    """A vertex with three crossed edges seeing the literals x, not y, z."""
    b = GraphBuilder()
    v = b.add_vertex(0, 0)
    arms = [((2, 0), True), ((0, 2), False), ((-2, 0), True)]
    for (dx, dy), positive in arms:
        far = b.add_vertex(dx, dy)
        p = b.add_vertex(dx / 2 - dy / 4, dy / 2 + dx / 4)
        q = b.add_vertex(dx / 2 + dy / 4, dy / 2 - dx / 4)
        mine, other = b.add_edge(v, far), b.add_edge(p, q)
        b.declare_crossing(*((mine, other) if positive else (other, mine)))
    return b.build()


def show(name: str, g) -> None:
    col = partition_deg1(g)
    verdict = "no degree-1 partition" if col is None else f"red edges {col.red_edges()}"
    print(f"{name}: {len(g.crossings)} pairs, {len(build_2sat(g).clauses)} clauses -> {verdict}")


def main() -> None:
    inst = build_2sat(literal_star())

    def fmt(lit: tuple[int, bool]) -> str:
        return ("" if lit[1] else "not ") + "xyz"[lit[0]]

    print("clauses at the star's centre:")
    for a, b in inst.clauses:
        print(f"  ({fmt(a)} or {fmt(b)})")
    print("DIMACS:")
    print(inst.to_dimacs(), end="")

    show("single kite", kite().graph)
    for k in (2, 3):
        show(f"fan of {k} crossings at two vertices", fan_of_crossings(k).graph)


if __name__ == "__main__":
    main()

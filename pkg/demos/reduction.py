"""From a planar 3-SAT formula to a graph with a degree-2 partition iff the formula holds.

Run: python3 demos/reduction.py
"""

from __future__ import annotations

from edgepart import decide_k, is_nic, validate
from edgepart.gadgets import reduce_planar3sat
from edgepart.io import format_planar3sat, parse_planar3sat

FORMULAS = [
    "vars x y\nabove x y\nbelow -x\n",
    "vars x\nabove x\nbelow -x\n",
    "vars x y\nabove x y\nabove -x -y\nbelow x -y\n",
]


def main() -> None:
    for text in FORMULAS:
        phi = parse_planar3sat(text)
        gad = reduce_planar3sat(phi)
        g = gad.graph
        res = decide_k(g, 2, gad.caps)
        print(format_planar3sat(phi).replace("\n", "; ").rstrip("; "))
        print(f"  graph: {g.n} vertices, {len(g.crossings)} pairs, valid={validate(g).ok}, NIC={is_nic(g)}")
        print(f"  brute-force SAT: {phi.brute_force_sat()}; degree-2 partition: {res.status.value}")

    full = reduce_planar3sat(parse_planar3sat(FORMULAS[1]), "full").graph
    print(f"with blobs instead of caps the second graph has {full.n} vertices and {len(full.crossings)} pairs")


if __name__ == "__main__":
    main()

"""A family where red degree 3 cannot be beaten, checked by exhaustive search.

Run: python3 demos/lower_bound.py
"""

from __future__ import annotations

from edgepart import decide_k, min_k, partition_deg3
from edgepart.gadgets import lower_bound_family


def main() -> None:
    g = lower_bound_family(7)
    print(f"kites on every edge of a 7-vertex triangulation: {g.n} vertices, {len(g.crossings)} crossing pairs")
    print(f"search space: 2^{len(g.crossings)} = {2 ** len(g.crossings)} colorings")

    res2 = decide_k(g, 2)
    print(f"red degree <= 2 possible? {res2.status.value} ({res2.nodes_explored} search nodes)")

    k, col = min_k(g)
    print(f"smallest achievable max red degree: {k}")

    cert = partition_deg3(g, check_3connected=False)
    print(f"the degree-3 construction reaches max red degree {max(cert.coloring.red_degrees(g))}")

    big = lower_bound_family(200, make_3connected=True)
    cert = partition_deg3(big)
    print(f"3-connected variant with {big.n} vertices: max red degree {max(cert.coloring.red_degrees(big))}")


if __name__ == "__main__":
    main()

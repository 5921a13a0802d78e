"""Split a random NIC-plane graph into two crossing-free halves, red degree <= 3.

Run: python3 demos/degree3_partition.py [seed]
"""

from __future__ import annotations

import sys
from collections import Counter

from edgepart import check_partition, partition_deg3
from edgepart.gadgets import random_nic


def main(seed: int = 7) -> None:
    g = random_nic(seed, base_size=60, kite_fraction=0.6)
    print(f"random NIC-plane graph: {g.n} vertices, {g.m} edges, {len(g.crossings)} crossing pairs")

    cert = partition_deg3(g, check_3connected=False)
    res = check_partition(g, cert.coloring, 3)
    print(f"red edges: {len(cert.coloring.red_edges())} (one per crossing pair)")
    print(f"both color classes crossing-free: {res.valid}; max red degree: {res.max_red_degree}")

    hist = Counter(cert.coloring.red_degrees(g))
    print("red-degree histogram:", dict(sorted(hist.items())))

    # the choice for the first pair, read off the 3-orientation of its 4-cycle
    if g.crossings:
        cp = g.crossings[0]
        pick = sorted(cert.chosen_pair[0])
        print(f"pair 0 crosses edges {g.edges[cp.e1]} and {g.edges[cp.e2]}; red edge joins {pick}")
        for v in pick:
            red = next(e for (x, e) in cert.charge if x == v and e in cp.edges())
            print(f"  vertex {v} pays for red edge {red} with its outgoing cycle edge {cert.charge[v, red]}")

    tri, ori = cert.triangulation, cert.orientation
    outdeg = Counter(ori.outdegrees(tri.n))
    print(f"triangulated skeleton: {tri.n} vertices, {len(tri.edges)} edges (3V-6 = {3 * tri.n - 6})")
    print("3-orientation outdegrees:", dict(sorted(outdeg.items())))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 7)

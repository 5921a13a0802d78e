from __future__ import annotations

import itertools
import math
from typing import Mapping

import pytest

from edgepart.drawing import GraphBuilder
from edgepart.graph import CrossingPair, EdgeColoring, OnePlaneGraph


# ---------------------------------------------------------------------------
# Fixture graphs
# ---------------------------------------------------------------------------


def make_k1() -> OnePlaneGraph:
    """Single kite, written out by hand (vertices clockwise 0..3 around the crossing)."""
    return OnePlaneGraph(
        4,
        [(0, 2), (1, 3), (0, 1), (1, 2), (2, 3), (3, 0)],
        [CrossingPair(0, 1, (0, 1, 2, 3))],
        rotations=[[2, 0, 5], [3, 1, 2], [4, 0, 3], [5, 1, 4]],
    )


def make_literal_star(signs: tuple[bool, ...]) -> OnePlaneGraph:
    """A vertex ``v`` with one crossed edge per entry of ``signs``.

    Entry ``i`` True puts the first edge of crossing pair ``i`` at ``v``,
    False the second, so the literal seen at ``v`` is ``x_i`` or ``not x_i``.
    """
    b = GraphBuilder()
    v = b.add_vertex(0.0, 0.0)
    k = len(signs)
    for i, positive in enumerate(signs):
        th = 2 * math.pi * i / k
        ux, uy = math.cos(th), math.sin(th)
        px, py = -uy, ux
        far = b.add_vertex(2 * ux, 2 * uy)
        p = b.add_vertex(ux + 0.4 * px, uy + 0.4 * py)
        q = b.add_vertex(ux - 0.4 * px, uy - 0.4 * py)
        mine = b.add_edge(v, far)
        other = b.add_edge(p, q)
        if positive:
            b.declare_crossing(mine, other)
        else:
            b.declare_crossing(other, mine)
    return b.build()


@pytest.fixture
def k1() -> OnePlaneGraph:
    return make_k1()


# ---------------------------------------------------------------------------
# Independent brute force
# ---------------------------------------------------------------------------


def all_partitions(g: OnePlaneGraph, k: int, caps: Mapping[int, int] | None = None):
    """Every valid degree-k coloring by plain enumeration of the 2^p choices."""
    caps = caps or {}
    out = []
    for bits in itertools.product((0, 1), repeat=len(g.crossings)):
        red = [cp.e1 if b == 0 else cp.e2 for cp, b in zip(g.crossings, bits)]
        deg = [0] * g.n
        for e in red:
            for x in g.edges[e]:
                deg[x] += 1
        if all(d <= min(k, caps.get(v, k)) for v, d in enumerate(deg)):
            out.append(EdgeColoring.from_red(g.m, red))
    return out


def brute_min_k(g: OnePlaneGraph) -> int:
    best = None
    for bits in itertools.product((0, 1), repeat=len(g.crossings)):
        deg = [0] * g.n
        for cp, b in zip(g.crossings, bits):
            for x in g.edges[cp.e1 if b == 0 else cp.e2]:
                deg[x] += 1
        mx = max(deg, default=0)
        best = mx if best is None else min(best, mx)
    return best if best is not None else 0


# ---------------------------------------------------------------------------
# Acceptance summary lines
# ---------------------------------------------------------------------------

ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])

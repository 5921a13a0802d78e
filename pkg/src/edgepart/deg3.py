"""Degree-3 edge partitions of NIC-plane graphs.

Pipeline: crossing augmentation, plane skeleton, triangulation, 3-orientation,
then one red edge per crossing pair chosen from the orientation of the pair's
four cycle edges. Both endpoints of the red edge own an outgoing cycle edge of
that pair, and in a NIC-plane graph no cycle edge belongs to two pairs, so the
red degree of a vertex never exceeds its out-degree (at most 3).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .augment import Triangulation, crossing_augment, skeleton, triangulate
from .graph import (
    EdgeColoring,
    GraphError,
    OnePlaneGraph,
    check_partition,
    is_3connected,
    is_nic,
)
from .orient import Orientation, compute_3orientation


class NotNICError(GraphError):
    pass


@dataclass(frozen=True)
class Deg3Certificate:
    coloring: EdgeColoring
    # crossing index -> the endpoint pair joined by the red edge
    chosen_pair: tuple[frozenset[int], ...]
    # (vertex, red edge) -> cycle edge (augmented-graph id) leaving that vertex
    charge: dict[tuple[int, int], int]
    # the triangulated skeleton and its 3-orientation the choice was read from
    triangulation: Triangulation
    orientation: Orientation


def choose_red_pair(
    cycle_orientation: Sequence[tuple[int, int]],
    pair_uv: tuple[int, int],
    pair_wz: tuple[int, int],
) -> frozenset[int]:
    """Pick the non-adjacent pair of the 4-cycle whose vertices both have an out-edge in it.

    ``cycle_orientation`` holds the four cycle edges as (tail, head). If both
    pairs qualify, the one containing the smallest vertex id wins.
    """
    out: dict[int, int] = {x: 0 for x in (*pair_uv, *pair_wz)}
    for tail, head in cycle_orientation:
        if tail not in out or head not in out:
            raise ValueError("cycle edge outside the crossing pair's endpoints")
        out[tail] += 1
    good = [frozenset(p) for p in (pair_uv, pair_wz) if all(out[x] >= 1 for x in p)]
    if not good:
        raise AssertionError(f"no qualifying pair for cycle orientation {list(cycle_orientation)}")
    return min(good, key=min)


def partition_deg3(g: OnePlaneGraph, *, check_3connected: bool = True) -> Deg3Certificate:
    """Colour one edge of every crossing pair red so that red degrees stay <= 3.

    Requires a NIC-plane graph with a rotation system whose skeleton is
    connected. 3-connectivity is only checked (O(n*m)) and reported as a
    warning when absent.
    """
    g.require_rotations()
    if not is_nic(g):
        raise NotNICError("NIC required")
    if check_3connected and not is_3connected(g):
        warnings.warn("graph is not 3-connected; computing the partition anyway", stacklevel=2)

    aug = crossing_augment(g)
    sk = skeleton(aug)
    to_skel = {e: i for i, e in enumerate(sk.origin)}
    outer_dart = None
    if g.outer is not None and g.outer[1] in to_skel:
        v, e = g.outer
        outer_dart = (v, g.other(e, v))
    tri = triangulate(sk, outer_dart)
    ori = compute_3orientation(tri)

    red: list[int] = []
    chosen: list[frozenset[int]] = []
    charge: dict[tuple[int, int], int] = {}
    for cp, cyc in zip(g.crossings, aug.cycle_edges_of):
        dirs = [ori.direction[to_skel[e]] for e in cyc]
        uv, wz = g.edges[cp.e1], g.edges[cp.e2]
        pick = choose_red_pair(dirs, uv, wz)
        e_red = cp.e1 if frozenset(uv) == pick else cp.e2
        red.append(e_red)
        chosen.append(pick)
        for x in pick:
            charge[(x, e_red)] = min(e for e, (tail, _) in zip(cyc, dirs) if tail == x)

    coloring = EdgeColoring.from_red(g.m, red)
    res = check_partition(g, coloring, 3)
    if not res.ok:
        raise AssertionError(f"degree-3 partition check failed: {res.problems}")
    return Deg3Certificate(coloring, tuple(chosen), charge, tri, ori)

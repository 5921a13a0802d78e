"""Polyline drawings -> embedded 1-plane graphs.

Generators place vertices at coordinates and route edges as polylines. The
rotation system and the crossing orders are then read off the drawing, and
the crossings found geometrically are checked against the ones the
generator declared. This keeps every emitted embedding consistent without
hand-maintained rotation bookkeeping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import CrossingPair, OnePlaneGraph

Point = tuple[float, float]

_EPS = 1e-9


class DrawingError(ValueError):
    pass


def _orient(a: Point, b: Point, c: Point) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    return (min(a[0], b[0]) - _EPS <= p[0] <= max(a[0], b[0]) + _EPS
            and min(a[1], b[1]) - _EPS <= p[1] <= max(a[1], b[1]) + _EPS)


def _angle(frm: Point, to: Point) -> float:
    return math.atan2(to[1] - frm[1], to[0] - frm[0])


@dataclass
class GraphBuilder:
    """Incrementally drawn graph with declared crossing pairs."""

    pos: list[Point] = field(default_factory=list)
    edges: list[tuple[int, int]] = field(default_factory=list)
    bends: list[tuple[Point, ...]] = field(default_factory=list)
    declared: list[tuple[int, int]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.pos)

    def add_vertex(self, x: float, y: float) -> int:
        self.pos.append((float(x), float(y)))
        return len(self.pos) - 1

    def add_edge(self, u: int, v: int, via: tuple[Point, ...] = ()) -> int:
        self.edges.append((u, v))
        self.bends.append(tuple(via))
        return len(self.edges) - 1

    def declare_crossing(self, e1: int, e2: int) -> None:
        self.declared.append((e1, e2))

    def polyline(self, e: int) -> list[Point]:
        u, v = self.edges[e]
        return [self.pos[u], *self.bends[e], self.pos[v]]

    def build(self) -> OnePlaneGraph:
        segs = []  # (edge, index within polyline, p, q)
        for e in range(len(self.edges)):
            pts = self.polyline(e)
            for j in range(len(pts) - 1):
                segs.append((e, j, pts[j], pts[j + 1]))
        vertex_at = {p: i for i, p in enumerate(self.pos)}
        if len(vertex_at) != len(self.pos):
            raise DrawingError("two vertices share a position")

        found: dict[frozenset[int], tuple[int, Point, tuple[Point, Point], tuple[Point, Point]]] = {}
        crossed: dict[int, int] = {}
        for i in range(len(segs)):
            e, _, p1, q1 = segs[i]
            for j in range(i + 1, len(segs)):
                f, _, p2, q2 = segs[j]
                if e == f:
                    continue
                hit = self._intersect(e, p1, q1, f, p2, q2, vertex_at)
                if hit is None:
                    continue
                key = frozenset((e, f))
                if key in found:
                    raise DrawingError(f"edges {e} and {f} cross more than once")
                found[key] = (e, hit, (p1, q1), (p2, q2))
                crossed[e] = crossed.get(e, 0) + 1
                crossed[f] = crossed.get(f, 0) + 1
        for e, t in crossed.items():
            if t > 1:
                raise DrawingError(f"edge {e} {self.edges[e]} is crossed {t} times")

        declared = {frozenset(d): d for d in self.declared}
        if set(declared) != set(found):
            extra = [tuple(sorted(k)) for k in set(found) - set(declared)]
            missing = [tuple(sorted(k)) for k in set(declared) - set(found)]
            raise DrawingError(f"undeclared crossings {extra[:5]}, missing crossings {missing[:5]}")

        crossings = []
        for e1, e2 in self.declared:
            _, x, _, _ = found[frozenset((e1, e2))]
            ends = []
            for e in (e1, e2):
                pts = self.polyline(e)
                # directions from the crossing point back toward each endpoint
                seg_idx = self._segment_with(pts, x)
                a, b = self.edges[e]
                ends.append((a, pts[seg_idx]))
                ends.append((b, pts[seg_idx + 1]))
            ends.sort(key=lambda t: -_angle(x, t[1]))
            crossings.append(CrossingPair(e1, e2, tuple(v for v, _ in ends)))

        rot: list[list[tuple[float, int]]] = [[] for _ in range(self.n)]
        for e in range(len(self.edges)):
            pts = self.polyline(e)
            u, v = self.edges[e]
            rot[u].append((_angle(pts[0], pts[1]), e))
            rot[v].append((_angle(pts[-1], pts[-2]), e))
        rotations = []
        for v, r in enumerate(rot):
            r.sort(key=lambda t: -t[0])
            for (a1, e1), (a2, e2) in zip(r, r[1:]):
                if abs(a1 - a2) < 1e-12:
                    raise DrawingError(f"edges {e1} and {e2} leave vertex {v} in the same direction")
            rotations.append([e for _, e in r])
        return OnePlaneGraph(self.n, self.edges, crossings, rotations)

    @staticmethod
    def _segment_with(pts: list[Point], x: Point) -> int:
        best, best_d = 0, math.inf
        for j in range(len(pts) - 1):
            a, b = pts[j], pts[j + 1]
            d = abs(_orient(a, b, x)) / max(math.dist(a, b), _EPS)
            if _on_segment(a, b, x) and d < best_d:
                best, best_d = j, d
        return best

    def _intersect(self, e, p1, q1, f, p2, q2, vertex_at) -> Point | None:
        d1 = _orient(p2, q2, p1)
        d2 = _orient(p2, q2, q1)
        d3 = _orient(p1, q1, p2)
        d4 = _orient(p1, q1, q2)
        shared = set(self.edges[e]) & set(self.edges[f])
        if ((d1 > _EPS and d2 < -_EPS) or (d1 < -_EPS and d2 > _EPS)) and (
            (d3 > _EPS and d4 < -_EPS) or (d3 < -_EPS and d4 > _EPS)
        ):
            t = d1 / (d1 - d2)
            x = (p1[0] + t * (q1[0] - p1[0]), p1[1] + t * (q1[1] - p1[1]))
            return x
        # degenerate contact: allowed only at a shared endpoint vertex
        touches = []
        for val, pt, a, b in ((d1, p1, p2, q2), (d2, q1, p2, q2), (d3, p2, p1, q1), (d4, q2, p1, q1)):
            if abs(val) <= _EPS and _on_segment(a, b, pt):
                touches.append(pt)
        for pt in touches:
            v = vertex_at.get(pt)
            if v is None or v not in shared:
                raise DrawingError(f"edges {e} and {f} touch or overlap at {pt}")
        if touches and abs(d1) <= _EPS and abs(d2) <= _EPS:
            # collinear segments meeting only at a shared vertex are fine unless they overlap
            da = (q1[0] - p1[0], q1[1] - p1[1])
            db = (q2[0] - p2[0], q2[1] - p2[1])
            if len(set(touches)) > 1 or (p1 == p2 and da[0] * db[0] + da[1] * db[1] > 0) or (
                q1 == q2 and da[0] * db[0] + da[1] * db[1] > 0
            ) or (p1 == q2 and da[0] * db[0] + da[1] * db[1] < 0) or (
                q1 == p2 and da[0] * db[0] + da[1] * db[1] < 0
            ):
                raise DrawingError(f"edges {e} and {f} overlap")
        return None

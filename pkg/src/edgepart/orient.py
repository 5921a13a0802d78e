"""3-orientations of plane triangulations via canonical ordering.

Vertices are peeled off the outer contour in reverse canonical order. When
``v`` is removed, its remaining neighbours form a contiguous stretch
``w_left, u_1, ..., u_l, w_right`` of the new contour; ``v`` gets outgoing
edges to ``w_left`` and ``w_right`` and every ``u_j`` gets an outgoing edge
to ``v``. This is the Schnyder labeling read off a canonical order, so each
internal vertex ends with out-degree exactly three.
"""

from __future__ import annotations

from dataclasses import dataclass

from .augment import Triangulation
from .graph import GraphError


@dataclass(frozen=True)
class Orientation:
    direction: tuple[tuple[int, int], ...]  # edge id -> (tail, head)
    outer: tuple[int, int, int]

    def outdegrees(self, n: int) -> list[int]:
        out = [0] * n
        for t, _ in self.direction:
            out[t] += 1
        return out


def canonical_order(t: Triangulation) -> tuple[list[int], list[tuple[int, int, list[int]]]]:
    """Return the canonical order and, per vertex added, its contour stretch.

    The second list is indexed like the order from position 2 on and holds
    ``(w_left, w_right, inner)`` for each vertex.
    """
    pg = t.plane()
    n = t.n
    v1, v2, vn = t.outer
    if not (pg.has_edge(v1, v2) and pg.has_edge(v2, vn) and pg.has_edge(vn, v1)):
        raise GraphError("outer face is not a triangle")
    left = [-1] * n
    right = [-1] * n
    right[v1], left[vn], right[vn], left[v2] = vn, v1, v2, vn
    on_contour = [False] * n
    for x in (v1, v2, vn):
        on_contour[x] = True
    removed = [False] * n
    chords = [0] * n

    removal: list[int] = []
    stretches: list[tuple[int, int, list[int]]] = []
    stack = [vn]
    while stack:
        v = stack.pop()
        if removed[v] or not on_contour[v] or chords[v] != 0 or v == v1 or v == v2:
            continue
        wl, wr = left[v], right[v]
        inner = _inner_arc(pg, v, wl, wr, removed)
        removed[v] = True
        on_contour[v] = False
        removal.append(v)
        stretches.append((wl, wr, inner))

        path = [wl, *inner, wr]
        for a, b in zip(path, path[1:]):
            right[a] = b
            left[b] = a
        if not inner:
            if {wl, wr} != {v1, v2}:
                chords[wl] -= 1
                chords[wr] -= 1
        else:
            for u in inner:
                on_contour[u] = True
            new = set(inner)
            for u in inner:
                for x in pg.neighbors(u):
                    if removed[x] or not on_contour[x] or x == left[u] or x == right[u]:
                        continue
                    chords[u] += 1
                    if x not in new:
                        chords[x] += 1
        for x in (wl, *inner, wr):
            if chords[x] == 0 and x != v1 and x != v2:
                stack.append(x)
    if len(removal) != n - 2:
        raise GraphError("canonical ordering failed; input is not a triangulation")
    order = [v1, v2, *reversed(removal)]
    return order, list(reversed(stretches))


def _inner_arc(pg, v: int, wl: int, wr: int, removed: list[bool]) -> list[int]:
    arcs = []
    for step in (pg.nxt, pg.prv):
        arc = []
        w = step[(v, wl)]
        while w != wr:
            arc.append(w)
            w = step[(v, w)]
        arcs.append(arc)
    clean = [a for a in arcs if True not in [removed[x] for x in a]]
    if not clean:
        raise GraphError("canonical ordering failed; contour is inconsistent")
    return max(clean, key=len)


def compute_3orientation(t: Triangulation) -> Orientation:
    """Orient a triangulation so internal vertices have out-degree exactly 3.

    Internal edges follow the Schnyder labeling; the outer triangle is
    oriented along its face walk, giving each outer vertex out-degree 1.
    """
    if len(t.edges) != 3 * t.n - 6:
        raise GraphError("input is not a triangulation (edge count)")
    index = t.plane().edge_id
    direction: list[tuple[int, int] | None] = [None] * len(t.edges)

    def orient(tail: int, head: int) -> None:
        e = index[(tail, head)]
        if direction[e] is not None:
            raise GraphError(f"edge {e} oriented twice")
        direction[e] = (tail, head)

    a, b, c = t.outer
    for tail, head in ((a, b), (b, c), (c, a)):
        orient(tail, head)
    order, stretches = canonical_order(t)
    outer = {a, b, c}
    for v, (wl, wr, inner) in zip(order[2:], stretches):
        for w in (wl, wr):
            if not (v in outer and w in outer):
                orient(v, w)
        for u in inner:
            orient(u, v)
    if any(d is None for d in direction):
        raise GraphError("orientation left edges unassigned")
    return Orientation(tuple(direction), t.outer)

"""Rotation-system helpers for simple plane graphs.

Darts are ordered vertex pairs ``(u, v)``. ``nxt[(v, w)]`` is the neighbour
following ``w`` clockwise around ``v``. Faces are traced by the rule
``(u, v) -> (v, nxt[(v, u)])`` which keeps the face on the left of every
dart, so bounded faces come out counter-clockwise.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def face_walks(nxt: dict[tuple[int, int], int]) -> list[list[tuple[int, int]]]:
    """Partition all darts into face boundary walks."""
    seen: set[tuple[int, int]] = set()
    add = seen.add
    walks = []
    for u, w in nxt:
        dart = (w, u)  # dart w->u; nxt keys are (vertex, neighbour)
        if dart in seen:
            continue
        walk = []
        while dart not in seen:
            add(dart)
            walk.append(dart)
            a, b = dart
            dart = (b, nxt[b, a])
        walks.append(walk)
    return walks


class PlaneGraph:
    """Mutable simple plane graph with a doubly linked rotation system.

    Used as the working representation for skeletons and triangulations;
    edge ids are dense and new edges are appended.
    """

    def __init__(self, n: int, edges: Sequence[tuple[int, int]],
                 rotations: Sequence[Sequence[int]]):
        self.n = n
        self.edges: list[tuple[int, int]] = [tuple(e) for e in edges]
        self.edge_id: dict[tuple[int, int], int] = {}
        for i, (u, v) in enumerate(self.edges):
            self.edge_id[(u, v)] = self.edge_id[(v, u)] = i
        self.nxt: dict[tuple[int, int], int] = {}
        self.prv: dict[tuple[int, int], int] = {}
        self.first: list[int | None] = [None] * n
        edges_, nxt, prv = self.edges, self.nxt, self.prv
        for v, rot in enumerate(rotations):
            nbrs = [a if b == v else b for a, b in (edges_[e] for e in rot)]
            if not nbrs:
                continue
            self.first[v] = nbrs[0]
            w = nbrs[-1]
            for succ in nbrs:
                nxt[v, w] = succ
                prv[v, succ] = w
                w = succ

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of ``v`` in clockwise order."""
        start = self.first[v]
        if start is None:
            return []
        out = [start]
        w = self.nxt[(v, start)]
        while w != start:
            out.append(w)
            w = self.nxt[(v, w)]
        return out

    def rotation(self, v: int) -> list[int]:
        return [self.edge_id[(v, w)] for w in self.neighbors(v)]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_id

    def insert_after(self, v: int, after: int | None, w: int) -> None:
        """Put neighbour ``w`` right after ``after`` clockwise around ``v``."""
        if after is None:
            self.first[v] = w
            self.nxt[(v, w)] = w
            self.prv[(v, w)] = w
            return
        old = self.nxt[(v, after)]
        self.nxt[(v, after)] = w
        self.nxt[(v, w)] = old
        self.prv[(v, old)] = w
        self.prv[(v, w)] = after

    def add_edge(self, u: int, after_u: int | None, v: int, after_v: int | None) -> int:
        """Add edge (u, v) in the corners given by the predecessor neighbours."""
        if u == v or (u, v) in self.edge_id:
            raise ValueError(f"edge ({u}, {v}) would make the graph non-simple")
        e = len(self.edges)
        self.edges.append((u, v))
        self.edge_id[(u, v)] = self.edge_id[(v, u)] = e
        if after_u is None or after_v is None:
            self.insert_after(u, after_u, v)
            self.insert_after(v, after_v, u)
            return e
        nxt, prv = self.nxt, self.prv
        old = nxt[u, after_u]
        nxt[u, after_u] = v
        nxt[u, v] = old
        prv[u, old] = v
        prv[u, v] = after_u
        old = nxt[v, after_v]
        nxt[v, after_v] = u
        nxt[v, u] = old
        prv[v, old] = u
        prv[v, u] = after_v
        return e

    def faces(self) -> list[list[tuple[int, int]]]:
        return face_walks(self.nxt)

    def rotations(self) -> list[list[int]]:
        nxt, eid = self.nxt, self.edge_id
        out: list[list[int]] = []
        for v in range(self.n):
            start = self.first[v]
            rot: list[int] = []
            if start is not None:
                rot.append(eid[v, start])
                w = nxt[v, start]
                while w != start:
                    rot.append(eid[v, w])
                    w = nxt[v, w]
            out.append(rot)
        return out


def neighbor_rotations_to_edges(
    n: int, rot: Sequence[Iterable[int]]
) -> tuple[list[tuple[int, int]], list[list[int]]]:
    """Turn clockwise neighbour lists into an edge list plus edge-id rotations.

    Edges are numbered in order of first appearance scanning vertices upward.
    """
    edge_id: dict[frozenset[int], int] = {}
    edges: list[tuple[int, int]] = []
    out: list[list[int]] = []
    for v in range(n):
        r = []
        for w in rot[v]:
            key = frozenset((v, w))
            if key not in edge_id:
                edge_id[key] = len(edges)
                edges.append((min(v, w), max(v, w)))
            r.append(edge_id[key])
        out.append(r)
    return edges, out

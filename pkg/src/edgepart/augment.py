"""Crossing augmentation, kites, plane skeleton and simple triangulation."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import CrossingPair, GraphError, OnePlaneGraph, _component_count, planarize, require_valid
from .plane import PlaneGraph


@dataclass(frozen=True)
class AugmentationResult:
    graph: OnePlaneGraph
    added_cycle_edges: tuple[int, ...]
    # per crossing pair: edge ids of (o0,o1), (o1,o2), (o2,o3), (o3,o0) for its order o
    cycle_edges_of: tuple[tuple[int, int, int, int], ...]


def _crossed_edge_at(g: OnePlaneGraph, cp: CrossingPair, x: int) -> int:
    return cp.e1 if x in g.edges[cp.e1] else cp.e2


def crossing_augment(g: OnePlaneGraph) -> AugmentationResult:
    """Complete the endpoints of every crossing pair to a K4.

    A missing cycle edge between consecutive endpoints ``a, b`` of the
    crossing order is routed alongside the two crossed half-edges, so it is
    inserted just counter-clockwise of the crossed edge at ``a`` and just
    clockwise of it at ``b``; it stays inside one face and is uncrossed.
    """
    require_valid(g)
    rotations = [list(r) for r in g.require_rotations()]
    edges = list(g.edges)
    index = {frozenset(e): i for i, e in enumerate(edges)}
    added: list[int] = []
    cycles = []
    for cp in g.crossings:
        o = cp.order
        ids = []
        for j in range(4):
            a, b = o[j], o[(j + 1) % 4]
            key = frozenset((a, b))
            if key not in index:
                e = len(edges)
                edges.append((a, b))
                index[key] = e
                added.append(e)
                ra = rotations[a]
                ra.insert(ra.index(_crossed_edge_at(g, cp, a)), e)
                rb = rotations[b]
                rb.insert(rb.index(_crossed_edge_at(g, cp, b)) + 1, e)
            ids.append(index[key])
        cycles.append(tuple(ids))
    out = OnePlaneGraph(g.n, edges, g.crossings, rotations, g.outer)
    assert len(out.crossed_edges() & set(added)) == 0
    return AugmentationResult(out, tuple(added), tuple(cycles))


def detect_kites(a: AugmentationResult) -> list[CrossingPair]:
    """Crossing pairs whose four cycle edges bound the crossing tightly.

    For each consecutive pair ``o_i, o_{i+1}`` of the crossing order, the
    triangle formed by the two crossed half-edges and the cycle edge must be
    a face, and it must not be the designated outer face.
    """
    g = a.graph
    rot = g.require_rotations()
    succ: dict[tuple[int, int], int] = {}
    for v, r in enumerate(rot):
        for j, e in enumerate(r):
            succ[(v, e)] = r[(j + 1) % len(r)]
    outer = g.outer
    kites = []
    for cp, cyc in zip(g.crossings, a.cycle_edges_of):
        o = cp.order
        ok = True
        for j in range(4):
            x, y = o[j], o[(j + 1) % 4]
            cx, cy = _crossed_edge_at(g, cp, x), _crossed_edge_at(g, cp, y)
            ce = cyc[j]
            if succ[(y, cy)] != ce or succ[(x, ce)] != cx:
                ok = False
                break
            if outer is not None and outer in ((x, cx), (y, ce)):
                ok = False
                break
        if ok:
            kites.append(cp)
    return kites


@dataclass(frozen=True)
class Skeleton:
    """Plane subgraph left after deleting all crossed edges.

    Vertex ids are those of the input graph; ``origin[e]`` is the id, in the
    augmented graph, of skeleton edge ``e``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, ...], ...]
    origin: tuple[int, ...]


def skeleton(a: AugmentationResult) -> Skeleton:
    g = a.graph
    crossed = g.crossed_edges()
    owner: dict[int, int] = {}
    for i, cyc in enumerate(a.cycle_edges_of):
        for e in cyc:
            if e in crossed:
                raise GraphError(f"cycle edge {e} of crossing {i} is crossed; NIC required")
            if e in owner and owner[e] != i:
                raise GraphError(f"crossings {owner[e]} and {i} share cycle edge {e}; NIC required")
            owner[e] = i
    keep = [e for e in range(g.m) if e not in crossed]
    new_id = {e: i for i, e in enumerate(keep)}
    rot = tuple(tuple(new_id[e] for e in r if e in new_id) for r in g.require_rotations())
    edges = tuple(g.edges[e] for e in keep)
    if _component_count(g.n, edges) != 1:
        raise GraphError("connected skeleton required")
    return Skeleton(g.n, edges, rot, tuple(keep))


@dataclass(frozen=True)
class Triangulation:
    """Simple maximal plane graph; the first ``n_original_edges`` edges are the skeleton's.

    ``outer`` is the outer triangle in face-walk order (outer region on the left).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, ...], ...]
    outer: tuple[int, int, int]
    filler: tuple[bool, ...]

    def plane(self) -> PlaneGraph:
        """Working rotation structure; shared with the triangulator, do not mutate."""
        pg = self.__dict__.get("_plane")
        if pg is None:
            pg = PlaneGraph(self.n, self.edges, self.rotations)
            object.__setattr__(self, "_plane", pg)
        return pg


def triangulate(s: Skeleton, outer_dart: tuple[int, int] | None = None) -> Triangulation:
    """Add uncrossed edges until every face is a triangle, keeping the graph simple.

    Faces are split by cutting ears ``a -> b -> c`` with ``a != c`` and
    ``(a, c)`` not yet an edge. ``outer_dart`` picks the outer triangle as the
    face to the left of that dart; by default the face left of the dart from
    vertex 0 to its first rotation neighbour is used.
    """
    if s.n < 3:
        raise GraphError("triangulation needs at least 3 vertices")
    if _component_count(s.n, s.edges) != 1:
        raise GraphError("connected skeleton required")
    pg = PlaneGraph(s.n, s.edges, s.rotations)
    for walk in pg.faces():
        if len(walk) > 3:
            _triangulate_face(pg, [u for u, _ in walk])
    # chords keep the embedding plane, so 3V-6 edges force every face to be a triangle
    if len(pg.edges) != 3 * s.n - 6:
        raise GraphError("triangulation failed: edge count is not 3V-6")
    if outer_dart is None:
        outer_dart = (0, pg.first[0])
    u, v = outer_dart
    outer = (u, v, pg.nxt[(v, u)])
    filler = tuple(i >= len(s.edges) for i in range(len(pg.edges)))
    t = Triangulation(s.n, tuple(pg.edges), tuple(tuple(r) for r in pg.rotations()), outer, filler)
    object.__setattr__(t, "_plane", pg)
    return t


def fill_faces(g: OnePlaneGraph) -> OnePlaneGraph:
    """Triangulate every crossing-free face of length > 3 with uncrossed edges.

    Faces touching a crossing are left alone; new edges never duplicate an
    existing (crossed or uncrossed) edge.
    """
    require_valid(g)
    p = planarize(g)
    pg = PlaneGraph(p.n, p.edges, p.rotations)
    forbidden = {frozenset(e) for e in g.edges}
    for walk in pg.faces():
        verts = [u for u, _ in walk]
        if len(verts) > 3 and not any(p.is_dummy(x) for x in verts):
            _triangulate_face(pg, verts, forbidden)
    edges = list(g.edges)
    origin = list(p.origin)
    for e in range(len(p.edges), len(pg.edges)):
        origin.append(len(edges))
        edges.append(pg.edges[e])
    rotations = [[origin[e] for e in pg.rotation(v)] for v in range(g.n)]
    return OnePlaneGraph(g.n, edges, g.crossings, rotations, g.outer)


def _triangulate_face(pg: PlaneGraph, walk: list[int], forbidden: set[frozenset[int]] = frozenset()) -> None:
    size = len(walk)
    if size == 4 and not forbidden:
        # same choice as the general loop below: ear at walk[0] first, then walk[1]
        w0, w1, w2, w3 = walk
        if w3 != w1 and (w3, w1) not in pg.edge_id:
            pg.add_edge(w3, w2, w1, w0)
        elif w0 != w2 and (w0, w2) not in pg.edge_id:
            pg.add_edge(w0, w3, w2, w1)
        else:
            raise GraphError("triangulation failed: no admissible chord in face")
        return
    nxt_i = [(i + 1) % size for i in range(size)]
    prv_i = [(i - 1) % size for i in range(size)]
    remaining = size
    b = 0
    stall = 0
    while remaining > 3:
        a = prv_i[b]
        c = nxt_i[b]
        va, vb, vc = walk[a], walk[b], walk[c]
        if va != vc and not pg.has_edge(va, vc) and frozenset((va, vc)) not in forbidden:
            p = walk[prv_i[a]]
            pg.add_edge(va, p, vc, vb)
            nxt_i[a] = c
            prv_i[c] = a
            remaining -= 1
            stall = 0
            b = a
        else:
            stall += 1
            if stall > remaining:
                raise GraphError("triangulation failed: no admissible chord in face")
            b = c

"""Generators for hardness gadgets and benchmark families.

Small gadgets are drawn with coordinates (``GraphBuilder``) so their rotation
systems and crossing orders are read off a real drawing. Larger structures
(blob attachment, kite families, random instances) are assembled
combinatorially on rotation systems.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal as TLiteral, Sequence

from .augment import fill_faces
from .drawing import GraphBuilder, Point
from .graph import CrossingPair, GraphError, OnePlaneGraph

Mode = TLiteral["full", "constraint"]


@dataclass(frozen=True)
class Gadget:
    """A generated graph plus optional red-degree caps, vertex names and edge roles."""

    graph: OnePlaneGraph
    caps: dict[int, int] = field(default_factory=dict)
    labels: dict[str, int] = field(default_factory=dict)
    roles: dict[str, tuple[int, ...]] = field(default_factory=dict)


# --------------------------------------------------------------------------
# drawn primitives


@dataclass(frozen=True)
class Link:
    a: int
    b: int
    a_star: int
    b_star: int
    edge_a: int  # (a, b*)
    edge_b: int  # (b, a*)


def link(builder: GraphBuilder, a: int, b: int, offset: float = 0.05) -> Link:
    """Join ``a`` and ``b`` by two crossing edges ending at fresh vertices.

    The fresh endpoints sit a quarter and three quarters of the way along the
    segment ``a b``, nudged sideways by ``offset`` times its length so that
    the edges ``(a, b*)`` and ``(b, a*)`` cross once near the midpoint.
    """
    if a == b:
        raise ValueError("cannot link a vertex to itself")
    (xa, ya), (xb, yb) = builder.pos[a], builder.pos[b]
    dx, dy = xb - xa, yb - ya
    px, py = -dy * offset, dx * offset
    a_star = builder.add_vertex(xa + 0.25 * dx + px, ya + 0.25 * dy + py)
    b_star = builder.add_vertex(xa + 0.75 * dx + px, ya + 0.75 * dy + py)
    ea = builder.add_edge(a, b_star)
    eb = builder.add_edge(b, a_star)
    builder.declare_crossing(ea, eb)
    return Link(a, b, a_star, b_star, ea, eb)


def kite() -> Gadget:
    """The single kite K1: a 4-cycle with both diagonals crossing inside it."""
    b = GraphBuilder()
    for x, y in ((0, 1), (1, 0), (0, -1), (-1, 0)):
        b.add_vertex(x, y)
    d1 = b.add_edge(0, 2)
    d2 = b.add_edge(1, 3)
    for u, v in ((0, 1), (1, 2), (2, 3), (3, 0)):
        b.add_edge(u, v)
    b.declare_crossing(d1, d2)
    return Gadget(b.build())


def fan_of_crossings(k: int = 3) -> Gadget:
    """``k`` crossing pairs, each joining the same two vertices ``v`` and ``w``.

    Every pair has one edge at ``v`` and one at ``w``, so for ``k >= 3`` one of
    them carries two red edges in any partition. The result is 1-plane but
    not NIC.
    """
    if k < 1:
        raise ValueError("k must be positive")
    b = GraphBuilder()
    v = b.add_vertex(0.0, 0.0)
    w = b.add_vertex(10.0, 0.0)
    for i in range(k):
        # pair i runs in its own horizontal lane and crosses at (5, y)
        y = 2.0 * i - (k - 1)
        c = b.add_vertex(8.0, y - 0.1)
        a = b.add_vertex(2.0, y - 0.1)
        e1 = b.add_edge(v, c, ((2.0, y + 0.1),))
        e2 = b.add_edge(w, a, ((8.0, y + 0.1),))
        b.declare_crossing(e1, e2)
    return Gadget(b.build(), labels={"v": v, "w": w})


# --------------------------------------------------------------------------
# blob


def blob() -> Gadget:
    """Standalone 27-link blob anchored at ``s`` (vertex 0).

    In every degree-2 partition ``s`` has a red edge. Roles: ``exterior`` are
    the link edges at ``u_i``/``v_i`` whose partner is incident to ``s`` or
    ``t``; every other link edge is ``interior``.
    """
    b = GraphBuilder()
    s = b.add_vertex(3.5, 3.0)
    t = b.add_vertex(3.5, -3.0)
    u = [b.add_vertex(i, -1.0) for i in range(1, 7)]
    v = [b.add_vertex(i, 1.0) for i in range(1, 7)]
    exterior: list[int] = []
    interior: list[int] = []
    for i in range(6):
        ls = link(b, s, v[i])
        lt = link(b, t, u[i])
        exterior += [ls.edge_b, lt.edge_b]
        interior += [ls.edge_a, lt.edge_a]
        lm = link(b, v[i], u[i])
        interior += [lm.edge_a, lm.edge_b]
    for j in (0, 2, 4):
        for x, y in ((u[j], u[j + 1]), (u[j], v[j + 1]), (v[j], v[j + 1])):
            lk = link(b, x, y)
            interior += [lk.edge_a, lk.edge_b]
    labels = {"s": s, "t": t}
    labels.update({f"u{i + 1}": x for i, x in enumerate(u)})
    labels.update({f"v{i + 1}": x for i, x in enumerate(v)})
    return Gadget(b.build(), labels=labels,
                  roles={"exterior": tuple(sorted(exterior)), "interior": tuple(sorted(interior))})


_BLOB_CACHE: list[Gadget] = []


def _blob_template() -> Gadget:
    if not _BLOB_CACHE:
        _BLOB_CACHE.append(blob())
    return _BLOB_CACHE[0]


def attach_blobs(g: OnePlaneGraph, anchors: Iterable[int]) -> OnePlaneGraph:
    """Glue one copy of the blob onto every anchor vertex.

    The blob's ``s`` is identified with the anchor. The blob's rotation at
    ``s`` (read clockwise starting just after its outer angle) is inserted as
    one block into the anchor's rotation, after its first entry, so the copy
    sits inside a single face incident to the anchor.
    """
    tmpl = _blob_template().graph
    s = 0
    trot = tmpl.require_rotations()
    n = g.n
    edges = list(g.edges)
    crossings = list(g.crossings)
    rotations = [list(r) for r in g.require_rotations()]
    for anchor in anchors:
        if not 0 <= anchor < g.n:
            raise GraphError(f"anchor {anchor} is not a vertex")
        vmap = {x: (anchor if x == s else n + x - 1) for x in range(tmpl.n)}
        base = len(edges)
        edges += [(vmap[a], vmap[b]) for a, b in tmpl.edges]
        crossings += [CrossingPair(cp.e1 + base, cp.e2 + base, tuple(vmap[x] for x in cp.order))
                      for cp in tmpl.crossings]
        rotations += [[e + base for e in trot[x]] for x in range(1, tmpl.n)]
        block = [e + base for e in trot[s]]
        r = rotations[anchor]
        r[1:1] = block
        n += tmpl.n - 1
    return OnePlaneGraph(n, edges, crossings, rotations, g.outer)


# --------------------------------------------------------------------------
# variable gadget


@dataclass(frozen=True)
class _VariableLayout:
    cycle: list[int]
    u: list[int]
    v: list[int]
    cycle_edges: list[int]
    spokes: list[int]  # edge (u_i, v_i)
    twin_edges: list[int]


def _draw_variable(b: GraphBuilder, m: int, x0: float = 0.0) -> _VariableLayout:
    """Draw a cycle of length 2m with one crossing spoke per cycle edge.

    The cycle is a hexagon-like polygon: corners at height 0, ``m - 1`` top
    vertices at height 2 and ``m - 1`` bottom vertices at height -2, spaced 3
    apart. Cycle edge ``i`` runs from cycle vertex ``i`` to ``i + 1``
    (clockwise); edges ``0 .. m-1`` form the top chain.
    """
    pts: list[Point] = [(x0, 0.0)]
    pts += [(x0 + 3 * j, 2.0) for j in range(1, m)]
    pts += [(x0 + 3 * m, 0.0)]
    pts += [(x0 + 3 * j, -2.0) for j in range(m - 1, 0, -1)]
    cycle = [b.add_vertex(x, y) for x, y in pts]
    L = 2 * m
    cycle_edges = [b.add_edge(cycle[i], cycle[(i + 1) % L]) for i in range(L)]
    cx = x0 + 1.5 * m
    u, v, spokes = [], [], []
    for i in range(L):
        (x1, y1), (x2, y2) = pts[i], pts[(i + 1) % L]
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        dx, dy = x2 - x1, y2 - y1
        ln = math.hypot(dx, dy)
        nx, ny = dy / ln, -dx / ln  # right of a clockwise walk points outward
        if nx * (mx - cx) + ny * my < 0:
            nx, ny = -nx, -ny
        u.append(b.add_vertex(mx + 0.8 * nx, my + 0.8 * ny))
        v.append(b.add_vertex(mx - 0.6 * nx, my - 0.6 * ny))
        spokes.append(b.add_edge(u[i], v[i]))
        b.declare_crossing(cycle_edges[i], spokes[i])
    twins = []
    for i in range(0, L - 1, 2):
        lk = link(b, v[i], v[i + 1])
        twins += [lk.edge_a, lk.edge_b]
    return _VariableLayout(cycle, u, v, cycle_edges, spokes, twins)


def _constraint_vertices(lay: _VariableLayout) -> list[int]:
    return [*lay.cycle, *lay.u, *lay.v]


def variable_gadget(m: int, mode: Mode = "constraint", k: int = 2) -> Gadget:
    """Cycle of length 2m whose crossing spokes encode a truth value.

    Spokes ``(u_i, v_i)`` with odd ``i`` (1-based) are variable edges, even
    ones negated edges; ``v_i`` and ``v_{i+1}`` are linked for odd ``i``.
    Every cycle vertex and every ``u_i`` and ``v_i`` carries a blob (``full``)
    or the cap ``k - 1`` (``constraint``).
    """
    if m < 2:
        raise ValueError("variable gadget needs m >= 2")
    b = GraphBuilder()
    lay = _draw_variable(b, m)
    g = b.build()
    anchors = _constraint_vertices(lay)
    labels = {}
    for i in range(2 * m):
        labels[f"c{i + 1}"] = lay.cycle[i]
        labels[f"u{i + 1}"] = lay.u[i]
        labels[f"v{i + 1}"] = lay.v[i]
    roles = {
        "variable": tuple(lay.spokes[0::2]),
        "negated": tuple(lay.spokes[1::2]),
        "twin": tuple(lay.twin_edges),
        "cycle": tuple(lay.cycle_edges),
    }
    return _finish(g, anchors, mode, k, labels, roles)


def _finish(g: OnePlaneGraph, anchors: list[int], mode: Mode, k: int,
            labels: dict[str, int], roles: dict[str, tuple[int, ...]]) -> Gadget:
    if mode == "constraint":
        return Gadget(g, {a: k - 1 for a in anchors}, labels, roles)
    if mode == "full":
        if k != 2:
            raise ValueError("full mode blobs encode k = 2 only")
        return Gadget(attach_blobs(g, anchors), {}, labels, roles)
    raise ValueError(f"unknown mode {mode!r}")


# --------------------------------------------------------------------------
# clause gadget


def clause_gadget() -> Gadget:
    """Clause vertex with three false edges, each crossed by a true edge.

    Labels: ``c`` (clause vertex); per literal ``l`` in 1..3 the false-edge end
    ``v{l}`` and the true-edge ends ``w{l}`` and ``t{l}``.
    """
    b = GraphBuilder()
    c = b.add_vertex(0.0, 0.0)
    labels = {"c": c}
    false_edges, true_edges = [], []
    for i in range(3):
        theta = math.pi / 2 + 2 * math.pi * i / 3
        ux, uy = math.cos(theta), math.sin(theta)
        px, py = -uy, ux
        v = b.add_vertex(2 * ux, 2 * uy)
        w = b.add_vertex(ux + 0.5 * px, uy + 0.5 * py)
        t = b.add_vertex(ux - 0.5 * px, uy - 0.5 * py)
        fe = b.add_edge(c, v)
        te = b.add_edge(w, t)
        b.declare_crossing(fe, te)
        false_edges.append(fe)
        true_edges.append(te)
        labels.update({f"v{i + 1}": v, f"w{i + 1}": w, f"t{i + 1}": t})
    return Gadget(b.build(), labels=labels,
                  roles={"false": tuple(false_edges), "true": tuple(true_edges)})


# --------------------------------------------------------------------------
# planar 3-SAT reduction

SignedVar = tuple[str, bool]  # (variable, positive?)


@dataclass(frozen=True)
class Clause:
    side: TLiteral["above", "below"]
    literals: tuple[SignedVar, ...]


@dataclass(frozen=True)
class Planar3SatInstance:
    """Variables in left-to-right order and clauses drawn above or below them."""

    variables: tuple[str, ...]
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable name")
        known = set(self.variables)
        for i, c in enumerate(self.clauses):
            if c.side not in ("above", "below"):
                raise ValueError(f"clause {i}: side must be 'above' or 'below'")
            if not 1 <= len(c.literals) <= 3:
                raise ValueError(f"clause {i}: needs 1 to 3 literals")
            for name, _ in c.literals:
                if name not in known:
                    raise ValueError(f"clause {i}: unknown variable {name!r}")

    def satisfied_by(self, assignment: dict[str, bool]) -> bool:
        return all(any(assignment[x] == pos for x, pos in c.literals) for c in self.clauses)

    def brute_force_sat(self) -> bool:
        n = len(self.variables)
        for bits in range(1 << n):
            a = {x: bool(bits >> i & 1) for i, x in enumerate(self.variables)}
            if self.satisfied_by(a):
                return True
        return False


def _padded(c: Clause) -> tuple[SignedVar, ...]:
    lits = list(c.literals)
    while len(lits) < 3:
        lits.append(lits[-1])
    return tuple(lits)


@dataclass
class _Node:
    clause: int
    lo: int
    hi: int
    interior: bool
    children: list[_Node] = field(default_factory=list)
    level: int = 0


def _nesting_forest(phi: Planar3SatInstance, side: str) -> list[_Node]:
    pos = {x: i for i, x in enumerate(phi.variables)}
    nodes = []
    for ci, c in enumerate(phi.clauses):
        if c.side != side:
            continue
        idx = {pos[x] for x, _ in c.literals}
        lo, hi = min(idx), max(idx)
        nodes.append(_Node(ci, lo, hi, any(lo < i < hi for i in idx)))
    # outer clauses first: wider interval, then (for equal intervals) the one
    # without interior legs, so clauses with interior legs end up deeper
    nodes.sort(key=lambda nd: (nd.lo - nd.hi, nd.interior, nd.lo, nd.clause))
    for a in range(len(nodes)):
        for b in range(a + 1, len(nodes)):
            x, y = nodes[a], nodes[b]
            if x.lo < y.lo < x.hi < y.hi or y.lo < x.lo < y.hi < x.hi:
                raise ValueError(f"clauses {x.clause} and {y.clause} overlap without nesting")
    roots: list[_Node] = []
    placed: list[_Node] = []
    for nd in nodes:
        parent = None
        for cand in reversed(placed):
            if cand.lo <= nd.lo and nd.hi <= cand.hi:
                parent = cand
                break
        if parent is None:
            roots.append(nd)
        else:
            if (parent.lo, parent.hi) == (nd.lo, nd.hi) and parent.interior:
                raise ValueError(
                    f"clauses {parent.clause} and {nd.clause} span the same variables "
                    "and both have interior legs")
            parent.children.append(nd)
        placed.append(nd)

    def set_level(nd: _Node) -> int:
        nd.level = 1 + max((set_level(ch) for ch in nd.children), default=-1)
        return nd.level

    for r in roots:
        set_level(r)
    return roots


def _leg_order(phi: Planar3SatInstance, roots: list[_Node]) -> list[tuple[int, int]]:
    """Legs (clause, literal slot) in left-to-right order for one side."""
    pos = {x: i for i, x in enumerate(phi.variables)}
    out: list[tuple[int, int]] = []

    def walk(items: list[tuple[tuple[float, int], object]]) -> None:
        for _, it in sorted(items, key=lambda z: z[0]):
            if isinstance(it, _Node):
                visit(it)
            else:
                out.append(it)

    def visit(nd: _Node) -> None:
        items: list[tuple[tuple[float, int], object]] = []
        lits = _padded(phi.clauses[nd.clause])
        for slot, (x, _) in enumerate(lits):
            p = pos[x]
            for ch in nd.children:
                if ch.lo < p < ch.hi:
                    raise ValueError(
                        f"clause {nd.clause} has a leg strictly inside nested clause {ch.clause}")
            items.append(((p, 0, slot), (nd.clause, slot)))
        for ch in nd.children:
            items.append((((ch.lo + ch.hi) / 2, 1, ch.clause), ch))
        walk(items)

    walk([(((r.lo + r.hi) / 2, 1, r.clause), r) for r in roots])
    return out


def reduce_planar3sat(phi: Planar3SatInstance, mode: Mode = "constraint") -> Gadget:
    """Graph that has a degree-2 partition exactly when ``phi`` is satisfiable.

    Each variable gets a variable gadget whose cycle length is twice its
    largest per-side occurrence count (at least 4). Every literal occupies its
    own consecutive spoke pair on its clause's side: for a positive literal
    the false edge ends at the variable-edge end ``u_i`` and the true edge
    starts at ``u_{i+1}``; a negated literal swaps the two.
    Clause bars are stacked by nesting depth so no connection crosses another.
    """
    if not phi.clauses:
        raise ValueError("formula has no clauses")
    sides = ("above", "below")
    forests = {s: _nesting_forest(phi, s) for s in sides}
    legs = {s: _leg_order(phi, forests[s]) for s in sides}
    levels: dict[int, int] = {}

    def collect(nd: _Node) -> None:
        levels[nd.clause] = nd.level
        for ch in nd.children:
            collect(ch)

    for s in sides:
        for r in forests[s]:
            collect(r)

    uses = {x: {s: 0 for s in sides} for x in phi.variables}
    for c in phi.clauses:
        for x, _ in _padded(c):
            uses[x][c.side] += 1

    b = GraphBuilder()
    layouts: dict[str, _VariableLayout] = {}
    caps_at: list[int] = []
    x0 = 0.0
    labels: dict[str, int] = {}
    roles: dict[str, list[int]] = {"variable": [], "negated": [], "twin": [], "false": [], "true": []}
    for x in phi.variables:
        m = max(2, 2 * max(uses[x].values()))
        lay = _draw_variable(b, m, x0)
        layouts[x] = lay
        caps_at += _constraint_vertices(lay)
        roles["variable"] += lay.spokes[0::2]
        roles["negated"] += lay.spokes[1::2]
        roles["twin"] += lay.twin_edges
        x0 += 3 * m + 4

    # free spoke pairs per (variable, side), left to right
    free: dict[tuple[str, str], deque[tuple[int, int]]] = {}
    for x, lay in layouts.items():
        L = len(lay.cycle)
        m = L // 2
        top = [(i, i + 1) for i in range(0, m, 2)]
        bottom = [(i, i + 1) for i in range(m, L, 2)]
        bottom.sort(key=lambda p: b.pos[lay.u[p[0]]][0] + b.pos[lay.u[p[1]]][0])
        free[(x, "above")] = deque(top)
        free[(x, "below")] = deque(bottom)

    # assign pairs to legs in left-to-right order
    leg_of: dict[tuple[int, int], tuple[int, int]] = {}  # (clause, slot) -> (leg vertex, w vertex)
    for s in sides:
        for ci, slot in legs[s]:
            name, positive = _padded(phi.clauses[ci])[slot]
            lay = layouts[name]
            q = free[(name, s)]
            if not q:
                raise ValueError(f"variable {name!r} has no free spoke pair {s}")
            i, j = q.popleft()
            ui, uj = lay.u[i], lay.u[j]  # i even: variable edge, j: negated edge
            leg_of[(ci, slot)] = (ui, uj) if positive else (uj, ui)

    for ci, c in enumerate(phi.clauses):
        sgn = 1.0 if c.side == "above" else -1.0
        H = sgn * (4.5 + 1.5 * levels[ci])
        pairs = [leg_of[(ci, slot)] for slot in range(3)]
        pairs.sort(key=lambda p: b.pos[p[0]][0])
        mid = (len(pairs) - 1) // 2
        cv = b.add_vertex(b.pos[pairs[mid][0]][0], H)
        labels[f"clause{ci}"] = cv
        for idx, (leg, w) in enumerate(pairs):
            lx, ly = b.pos[leg]
            wx, wy = b.pos[w]
            via = () if idx == mid else ((lx, H),)
            fe = b.add_edge(cv, leg, via)
            y1 = max(ly, wy) + 0.5 if sgn > 0 else min(ly, wy) - 0.5
            t = b.add_vertex(lx + 0.6 * math.copysign(1.0, lx - wx), y1)
            te = b.add_edge(w, t, ((wx, y1),))
            b.declare_crossing(fe, te)
            roles["false"].append(fe)
            roles["true"].append(te)
    g = b.build()
    for name, lay in layouts.items():
        labels[f"{name}.u1"] = lay.u[0]
    return _finish(g, caps_at, mode, 2, labels, {r: tuple(e) for r, e in roles.items()})


# --------------------------------------------------------------------------
# triangulations and kite families


def stacked_triangulation(n: int, rng: random.Random | None = None) -> list[list[int]]:
    """Clockwise neighbour lists of a stacked plane triangulation on ``n`` vertices.

    Vertices 3.. are inserted one by one into a triangular face: round-robin
    over faces when ``rng`` is None, a uniformly random face otherwise.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rot = [[1, 2], [2, 0], [0, 1]]
    faces: list[tuple[int, int, int]] = [(0, 1, 2), (0, 2, 1)]
    queue = deque(faces)
    for d in range(3, n):
        if rng is None:
            x, y, z = queue.popleft()
        else:
            i = rng.randrange(len(faces))
            faces[i], faces[-1] = faces[-1], faces[i]
            x, y, z = faces.pop()
        _insert_after(rot[x], z, d)
        _insert_after(rot[y], x, d)
        _insert_after(rot[z], y, d)
        rot.append([x, z, y])
        new = [(x, y, d), (y, z, d), (z, x, d)]
        if rng is None:
            queue.extend(new)
        else:
            faces.extend(new)
    return rot


def _insert_after(r: list[int], after: int, w: int) -> None:
    r.insert(r.index(after) + 1, w)


def _insert_before(r: list[int], before: int, ws: Sequence[int]) -> None:
    i = r.index(before)
    r[i:i] = list(ws)


def _kites_on(rot: list[list[int]], darts: Sequence[tuple[int, int]]) -> OnePlaneGraph:
    """Put one kite into the face left of each dart ``x -> y`` (distinct base edges)."""
    rot = [list(r) for r in rot]
    pairs = []
    for x, y in darts:
        a, b = len(rot), len(rot) + 1
        _insert_before(rot[x], y, [b, a])
        i = rot[y].index(x)
        rot[y][i + 1:i + 1] = [b, a]
        rot.append([y, x, b])
        rot.append([a, y, x])
        pairs.append((x, y, a, b))
    n = len(rot)
    edge_id: dict[frozenset[int], int] = {}
    edges: list[tuple[int, int]] = []
    # crossed edges first so crossing pair ids are easy to read
    for x, y, a, b in pairs:
        for e in ((x, a), (y, b)):
            edge_id[frozenset(e)] = len(edges)
            edges.append(e)
    for v in range(n):
        for w in rot[v]:
            key = frozenset((v, w))
            if key not in edge_id:
                edge_id[key] = len(edges)
                edges.append((min(v, w), max(v, w)))
    crossings = [
        CrossingPair(edge_id[frozenset((x, a))], edge_id[frozenset((y, b))], (x, b, a, y))
        for x, y, a, b in pairs
    ]
    rotations = [[edge_id[frozenset((v, w))] for w in rot[v]] for v in range(n)]
    return OnePlaneGraph(n, edges, crossings, rotations)


def _base_darts(rot: list[list[int]]) -> list[tuple[int, int]]:
    return [(u, v) for u in range(len(rot)) for v in rot[u] if u < v]


def lower_bound_family(n: int, make_3connected: bool = False) -> OnePlaneGraph:
    """A kite on every edge of a stacked triangulation with ``n`` vertices.

    The kite on base edge ``(u, v)``, ``u < v``, goes into the face left of
    the dart ``u -> v``. With ``make_3connected`` the remaining faces of size
    more than three are triangulated by uncrossed edges.
    """
    if n < 7:
        raise ValueError("lower-bound family needs n >= 7")
    rot = stacked_triangulation(n)
    g = _kites_on(rot, _base_darts(rot))
    return fill_faces(g) if make_3connected else g


def random_nic(seed: int, base_size: int, kite_fraction: float, drop_fraction: float = 0.0) -> OnePlaneGraph:
    """Random stacked triangulation with kites on a random subset of its edges.

    Each base edge independently receives a kite with probability
    ``kite_fraction``, on a random side. ``drop_fraction`` removes that share
    of the remaining uncrossed edges afterwards (keeping the rest connected
    is not guaranteed, so the default is 0).
    """
    if base_size < 4:
        raise ValueError("base_size must be at least 4")
    rng = random.Random(seed)
    rot = stacked_triangulation(base_size, rng)
    darts = []
    for u, v in _base_darts(rot):
        if rng.random() < kite_fraction:
            darts.append((u, v) if rng.random() < 0.5 else (v, u))
    g = _kites_on(rot, darts)
    if drop_fraction > 0:
        g = _drop_edges(g, rng, drop_fraction)
    return g


def _drop_edges(g: OnePlaneGraph, rng: random.Random, fraction: float) -> OnePlaneGraph:
    crossed = g.crossed_edges()
    cand = [e for e in range(g.m) if e not in crossed]
    drop = set(rng.sample(cand, int(len(cand) * fraction)))
    keep = [e for e in range(g.m) if e not in drop]
    new = {e: i for i, e in enumerate(keep)}
    return OnePlaneGraph(
        g.n,
        [g.edges[e] for e in keep],
        [CrossingPair(new[cp.e1], new[cp.e2], cp.order) for cp in g.crossings],
        [[new[e] for e in r if e in new] for r in g.require_rotations()],
    )

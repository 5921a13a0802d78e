"""Embedded 1-plane graph model, structural checks and partition checking.

A graph is stored as a dense edge list plus a list of crossing pairs. The
embedding, when present, is a rotation system: for every vertex the
clockwise cyclic sequence of incident edge ids. Each crossing pair also
records the clockwise order of its four endpoints around the crossing
point, which fixes the local picture at the crossing.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .plane import face_walks


class GraphError(ValueError):
    """Raised when a graph does not satisfy the preconditions of an operation."""


class Color(str, enum.Enum):
    RED = "red"
    BLUE = "blue"


@dataclass(frozen=True)
class CrossingPair:
    e1: int
    e2: int
    order: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(self.order))

    def edges(self) -> tuple[int, int]:
        return (self.e1, self.e2)


@dataclass(frozen=True)
class OnePlaneGraph:
    """A graph with a fixed embedding in which each edge is crossed at most once.

    ``outer`` optionally designates the outer face as the face to the left
    of the dart that leaves vertex ``outer[0]`` along edge ``outer[1]``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    crossings: tuple[CrossingPair, ...] = ()
    rotations: tuple[tuple[int, ...], ...] | None = None
    outer: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.rotations is not None:
            object.__setattr__(self, "rotations", tuple(tuple(r) for r in self.rotations))
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {i} references a nonexistent vertex")
        m = len(self.edges)
        for i, cp in enumerate(self.crossings):
            if not (0 <= cp.e1 < m and 0 <= cp.e2 < m):
                raise GraphError(f"crossing {i} references a nonexistent edge")
            if any(not (0 <= x < self.n) for x in cp.order):
                raise GraphError(f"crossing {i} order references a nonexistent vertex")
        if self.rotations is not None and len(self.rotations) != self.n:
            raise GraphError("rotations must list one sequence per vertex")

    @property
    def m(self) -> int:
        return len(self.edges)

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def crossing_of_edge(self) -> dict[int, int]:
        """Map crossed edge id -> index of its crossing pair (first occurrence)."""
        out: dict[int, int] = {}
        for i, cp in enumerate(self.crossings):
            out.setdefault(cp.e1, i)
            out.setdefault(cp.e2, i)
        return out

    def crossed_edges(self) -> set[int]:
        return {e for cp in self.crossings for e in cp.edges()}

    def incident(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc

    def pair_vertices(self, i: int) -> frozenset[int]:
        cp = self.crossings[i]
        return frozenset(self.edges[cp.e1]) | frozenset(self.edges[cp.e2])

    def require_rotations(self) -> tuple[tuple[int, ...], ...]:
        if self.rotations is None:
            raise GraphError("rotation system required")
        return self.rotations


class EdgeColoring:
    """Total map edge id -> Color."""

    __slots__ = ("colors",)

    def __init__(self, colors: Iterable[Color | str]):
        self.colors: tuple[Color, ...] = tuple(Color(c) for c in colors)

    @classmethod
    def from_red(cls, m: int, red: Iterable[int]) -> EdgeColoring:
        colors = [Color.BLUE] * m
        for e in red:
            colors[e] = Color.RED
        out = cls.__new__(cls)
        out.colors = tuple(colors)
        return out

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, e: int) -> Color:
        return self.colors[e]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EdgeColoring) and self.colors == other.colors

    def __hash__(self) -> int:
        return hash(self.colors)

    def __repr__(self) -> str:
        return f"EdgeColoring(red={sorted(self.red_edges())})"

    def red_edges(self) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c is Color.RED]

    def red_degrees(self, g: OnePlaneGraph) -> list[int]:
        deg = [0] * g.n
        for e in self.red_edges():
            u, v = g.edges[e]
            deg[u] += 1
            deg[v] += 1
        return deg


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(g: OnePlaneGraph) -> ValidationReport:
    """List every violated structural invariant of ``g``; an empty report means valid."""
    cached = g.__dict__.get("_report")
    if cached is not None:
        return ValidationReport(list(cached))
    rep = _validate(g)
    # graphs are immutable, so the verdict can be kept on the instance
    object.__setattr__(g, "_report", tuple(rep.violations))
    return rep


def _validate(g: OnePlaneGraph) -> ValidationReport:
    out: list[str] = []
    seen: dict[tuple[int, int], int] = {}
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            out.append(f"self-loop at edge {i}")
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            out.append(f"duplicate edge {i} (same endpoints as edge {seen[key]})")
        else:
            seen[key] = i

    times_crossed: Counter[int] = Counter()
    for i, cp in enumerate(g.crossings):
        if cp.e1 == cp.e2:
            out.append(f"crossing {i}: pair references one edge twice")
            continue
        times_crossed[cp.e1] += 1
        times_crossed[cp.e2] += 1
        a, b = g.edges[cp.e1], g.edges[cp.e2]
        if set(a) & set(b):
            out.append(f"crossing {i}: crossing edges share an endpoint")
            continue
        o = cp.order
        if not ({o[0], o[2]} == set(a) and {o[1], o[3]} == set(b)) and not (
            {o[0], o[2]} == set(b) and {o[1], o[3]} == set(a)
        ):
            out.append(f"crossing {i}: order does not alternate between the endpoints of the two edges")
    for e, t in sorted(times_crossed.items()):
        if t > 1:
            out.append(f"edge {e} crossed twice")

    if g.n >= 3:
        if g.m > 4 * g.n - 8:
            out.append(f"edge bound 4n-8 exceeded ({g.m} > {4 * g.n - 8})")
        if len(g.crossings) > g.n - 2:
            out.append(f"crossing bound n-2 exceeded ({len(g.crossings)} > {g.n - 2})")

    if g.rotations is not None:
        inc = g.incident()
        rot_ok = True
        for v, rot in enumerate(g.rotations):
            if sorted(rot) != sorted(inc[v]):
                out.append(f"rotation at vertex {v} does not list exactly its incident edges")
                rot_ok = False
        if rot_ok and not out and not _planar_rotation(g):
            out.append("inconsistent rotation system (embedding is not planar)")
    if g.outer is not None:
        v, e = g.outer
        if not (0 <= e < g.m and v in g.edges[e]):
            out.append("outer dart does not name an incident vertex/edge")
    return ValidationReport(out)


def require_valid(g: OnePlaneGraph) -> None:
    rep = validate(g)
    if not rep.ok:
        raise GraphError("invalid graph: " + "; ".join(rep.violations))


def is_nic(g: OnePlaneGraph) -> bool:
    """True iff any two crossing pairs share at most one endpoint."""
    require_valid(g)
    seen: set[frozenset[int]] = set()
    for i in range(len(g.crossings)):
        for pair in combinations(sorted(g.pair_vertices(i)), 2):
            key = frozenset(pair)
            if key in seen:
                return False
            seen.add(key)
    return True


def is_ic(g: OnePlaneGraph) -> bool:
    """True iff no two crossing pairs share an endpoint."""
    require_valid(g)
    used: set[int] = set()
    for i in range(len(g.crossings)):
        vs = g.pair_vertices(i)
        if used & vs:
            return False
        used |= vs
    return True


def is_3connected(g: OnePlaneGraph) -> bool:
    """Vertex connectivity >= 3 of the underlying abstract graph.

    Removes each vertex in turn and looks for articulation points, so the
    cost is O(n * m).
    """
    require_valid(g)
    if g.n < 4:
        return False
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    if any(len(a) < 3 for a in adj):
        return False
    if _has_articulation(adj, g.n, skip=-1):
        return False
    return not any(_has_articulation(adj, g.n, skip=x) for x in range(g.n))


def _has_articulation(adj: list[list[int]], n: int, skip: int) -> bool:
    """True if the graph minus ``skip`` is disconnected or has a cut vertex."""
    root = 0 if skip != 0 else 1
    disc = [-1] * n
    low = [0] * n
    if skip >= 0:
        disc[skip] = -2
    disc[root] = 0
    low[root] = 0
    t = 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == skip:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = t
                t += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                return True
    visited = sum(1 for x in disc if x >= 0)
    if visited != n - (1 if skip >= 0 else 0):
        return True
    return root_children > 1


@dataclass(frozen=True)
class PlanarizedGraph:
    """Plane graph with one degree-4 dummy vertex per crossing pair.

    Vertices ``0..n_original-1`` are the original ones; dummy ``n_original + i``
    replaces crossing pair ``i``. ``origin[e]`` is the original edge that the
    planarized edge ``e`` comes from.
    """

    n_original: int
    n: int
    edges: tuple[tuple[int, int], ...]
    origin: tuple[int, ...]
    rotations: tuple[tuple[int, ...], ...] | None

    def is_dummy(self, v: int) -> bool:
        return v >= self.n_original

    def rotation_successors(self) -> dict[tuple[int, int], int]:
        """Clockwise successor map on darts: (v, w) -> next neighbour of v after w."""
        if self.rotations is None:
            raise GraphError("rotation system required")
        nxt: dict[tuple[int, int], int] = {}
        for v, rot in enumerate(self.rotations):
            nbrs = [_other(self.edges[e], v) for e in rot]
            for j, w in enumerate(nbrs):
                nxt[(v, w)] = nbrs[(j + 1) % len(nbrs)]
        return nxt


def _other(edge: tuple[int, int], v: int) -> int:
    return edge[1] if edge[0] == v else edge[0]


def planarize(g: OnePlaneGraph) -> PlanarizedGraph:
    """Replace each crossing by a dummy vertex whose rotation is the crossing order."""
    require_valid(g)
    return _planarize(g)


def _planarize(g: OnePlaneGraph) -> PlanarizedGraph:
    edges: list[tuple[int, int]] = []
    origin: list[int] = []
    # first planarized piece of each original edge; a crossed edge (u, v)
    # becomes pieces base (u side) and base + 1 (v side)
    base = [0] * g.m
    cross_of = g.crossing_of_edge()
    n = g.n
    for e, (u, v) in enumerate(g.edges):
        base[e] = len(edges)
        ci = cross_of.get(e)
        if ci is None:
            edges.append((u, v))
            origin.append(e)
        else:
            d = n + ci
            edges.append((u, d))
            edges.append((v, d))
            origin.append(e)
            origin.append(e)
    rotations = None
    if g.rotations is not None:
        gedges = g.edges
        rot: list[tuple[int, ...]] = []
        for v, r in enumerate(g.rotations):
            rot.append(tuple(
                base[e] if e not in cross_of or gedges[e][0] == v else base[e] + 1 for e in r
            ))
        for cp in g.crossings:
            by_end = {}
            for e in cp.edges():
                a, b = gedges[e]
                by_end[a] = base[e]
                by_end[b] = base[e] + 1
            rot.append(tuple(by_end[x] for x in cp.order))
        rotations = tuple(rot)
    return PlanarizedGraph(g.n, g.n + len(g.crossings), tuple(edges), tuple(origin), rotations)


Face = tuple[int, ...]


def faces(p: PlanarizedGraph) -> list[Face]:
    """Faces of a connected planarized graph as cyclic vertex walks.

    Each dart is used by exactly one face; the face of dart ``(u, v)`` lies to
    its left. Euler's formula is checked.
    """
    if p.rotations is None:
        raise GraphError("rotation system required")
    if _component_count(p.n, p.edges) != 1:
        raise GraphError("connected embedding required")
    walks = face_walks(p.rotation_successors())
    if p.n == 1 and not p.edges:
        return [(0,)]
    if p.n - len(p.edges) + len(walks) != 2:
        raise GraphError("inconsistent rotation system")
    return [tuple(u for u, _ in w) for w in walks]


def _isolated(n: int, edges: Sequence[tuple[int, int]]) -> int:
    touched = {x for e in edges for x in e}
    return n - len(touched)


def _component_count(n: int, edges: Sequence[tuple[int, int]]) -> int:
    parent = list(range(n))
    comps = n
    for u, v in edges:
        while parent[u] != u:
            parent[u] = u = parent[parent[u]]
        while parent[v] != v:
            parent[v] = v = parent[parent[v]]
        if u != v:
            parent[u] = v
            comps -= 1
    return comps


def _planar_rotation(g: OnePlaneGraph) -> bool:
    """Euler's formula on the planarization, without building it.

    Piece ``base[e]`` is the whole of an uncrossed edge, or for a crossed
    edge ``(u, v)`` the half at ``u``; ``base[e] + 1`` is the half at ``v``.
    Crossed halves run from the original vertex to the dummy. Dart ``2p``
    follows piece ``p`` from its first endpoint, ``2p + 1`` the other way.
    """
    edges, m = g.edges, g.m
    cross_of = g.crossing_of_edge()
    base = [0] * m
    pieces = 0
    for e in range(m):
        base[e] = pieces
        pieces += 2 if e in cross_of else 1
    succ = [0] * (2 * pieces)
    for v, rot in enumerate(g.rotations):
        # at an original vertex every crossed half starts at v; an uncrossed
        # edge starts at v iff v is its first endpoint
        ids = []
        for e in rot:
            a, b = edges[e]
            if e in cross_of:
                ids.append((base[e] if a == v else base[e] + 1, True))
            else:
                ids.append((base[e], a == v))
        k = len(ids)
        for j in range(k):
            p, first = ids[j]
            q, qfirst = ids[(j + 1) % k]
            succ[2 * p + 1 if first else 2 * p] = 2 * q if qfirst else 2 * q + 1
    for cp in g.crossings:
        half = {}
        for e in cp.edges():
            a, b = edges[e]
            half[a], half[b] = base[e], base[e] + 1
        ring = [half[x] for x in cp.order]
        # the dummy is the second endpoint of each of its four halves
        for j in range(4):
            succ[2 * ring[j]] = 2 * ring[(j + 1) % 4] + 1
    seen = bytearray(len(succ))
    faces = 0
    for d in range(len(succ)):
        if seen[d]:
            continue
        faces += 1
        while not seen[d]:
            seen[d] = 1
            d = succ[d]
    links = [*edges, *((edges[cp.e1][0], edges[cp.e2][0]) for cp in g.crossings)]
    comps = _component_count(g.n, links)
    c = len(g.crossings)
    return (g.n + c) - pieces + faces + _isolated(g.n, edges) == 2 * comps


@dataclass
class CheckResult:
    valid: bool
    max_red_degree: int
    within_bound: bool
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.valid and self.within_bound


def check_partition(g: OnePlaneGraph, c: EdgeColoring, k: int) -> CheckResult:
    """Check that no crossing pair is monochromatic and report the red degree.

    Under a fixed embedding both colour classes are plane exactly when every
    crossing pair gets two different colours.
    """
    if len(c) != g.m:
        raise GraphError(f"coloring covers {len(c)} edges, graph has {g.m}")
    problems = []
    for i, cp in enumerate(g.crossings):
        if c[cp.e1] == c[cp.e2]:
            problems.append(f"{c[cp.e1].value} graph has a crossing (pair {i})")
    valid = not problems
    mx = max(c.red_degrees(g), default=0)
    if mx > k:
        problems.append(f"max red degree {mx} exceeds {k}")
    return CheckResult(valid=valid, max_red_degree=mx, within_bound=mx <= k, problems=problems)

"""Text formats: graph documents, colorings, DOT, DIMACS and planar 3-SAT files.

A graph document is a JSON object::

    {
      "vertices": 4,
      "edges": [[0, 2], [1, 3], [0, 1], [1, 2], [2, 3], [3, 0]],
      "crossings": [{"pair": [0, 1], "order": [0, 1, 2, 3]}],
      "rotations": {"0": [2, 0, 5], ...},
      "outer": [0, 2],
      "caps": {"0": 1},
      "labels": {"s": 0},
      "roles": {"exterior": [3, 7]}
    }

Only ``vertices`` and ``edges`` are required. ``serialize`` writes a fixed
canonical layout (one list item per line, keys in the order above), so
``serialize(parse(text))`` is stable byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .graph import (
    Color,
    CrossingPair,
    EdgeColoring,
    GraphError,
    OnePlaneGraph,
    planarize,
    validate,
)
from .gadgets import Clause, Gadget, Planar3SatInstance


class FormatError(ValueError):
    """Malformed input; the message names the line or field at fault."""


@dataclass(frozen=True)
class GraphDocument:
    graph: OnePlaneGraph
    caps: dict[int, int] = field(default_factory=dict)
    labels: dict[str, int] = field(default_factory=dict)
    roles: dict[str, tuple[int, ...]] = field(default_factory=dict)

    @classmethod
    def from_gadget(cls, g: Gadget) -> GraphDocument:
        return cls(g.graph, dict(g.caps), dict(g.labels), dict(g.roles))

    def vertex(self, ref: str) -> int:
        """Resolve a vertex given by label or by numeric id."""
        if ref in self.labels:
            return self.labels[ref]
        try:
            v = int(ref)
        except ValueError:
            raise FormatError(f"unknown vertex label {ref!r}") from None
        if not 0 <= v < self.graph.n:
            raise FormatError(f"vertex {v} out of range")
        return v


# --------------------------------------------------------------------------
# graph documents


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{where}: expected an integer, got {json.dumps(value)}")
    return value


def _int_list(value: Any, where: str, length: int | None = None) -> list[int]:
    if not isinstance(value, list):
        raise FormatError(f"{where}: expected a list")
    if length is not None and len(value) != length:
        raise FormatError(f"{where}: expected {length} entries, got {len(value)}")
    return [_int(x, f"{where}[{i}]") for i, x in enumerate(value)]


def _int_map(value: Any, where: str) -> dict[int, Any]:
    if not isinstance(value, dict):
        raise FormatError(f"{where}: expected an object")
    out = {}
    for k, v in value.items():
        try:
            out[int(k)] = v
        except ValueError:
            raise FormatError(f"{where}: key {k!r} is not a vertex id") from None
    return out


_KEYS = ("vertices", "edges", "crossings", "rotations", "outer", "caps", "labels", "roles")


def parse(text: str, check: bool = True) -> GraphDocument:
    """Read a graph document. With ``check`` the graph must pass ``validate``."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise FormatError("line 1: document must be a JSON object")
    unknown = sorted(set(raw) - set(_KEYS))
    if unknown:
        raise FormatError(f"unknown field {unknown[0]!r}")
    for key in ("vertices", "edges"):
        if key not in raw:
            raise FormatError(f"missing field {key!r}")

    verts = raw["vertices"]
    if isinstance(verts, list):
        ids = _int_list(verts, "vertices")
        if sorted(ids) != list(range(len(ids))):
            raise FormatError("vertices: ids must be exactly 0..n-1")
        n = len(ids)
    else:
        n = _int(verts, "vertices")
        if n < 0:
            raise FormatError("vertices: count must be non-negative")

    if not isinstance(raw["edges"], list):
        raise FormatError("edges: expected a list")
    edges = []
    for i, e in enumerate(raw["edges"]):
        u, v = _int_list(e, f"edges[{i}]", 2)
        for x in (u, v):
            if not 0 <= x < n:
                raise FormatError(f"edges[{i}]: vertex {x} does not exist")
        edges.append((u, v))
    m = len(edges)

    crossings = []
    raw_cr = raw.get("crossings", [])
    if not isinstance(raw_cr, list):
        raise FormatError("crossings: expected a list")
    for i, c in enumerate(raw_cr):
        where = f"crossings[{i}]"
        if not isinstance(c, dict) or set(c) != {"pair", "order"}:
            raise FormatError(f"{where}: expected an object with 'pair' and 'order'")
        e1, e2 = _int_list(c["pair"], f"{where}.pair", 2)
        if e1 == e2:
            raise FormatError(f"{where}.pair: pair references one edge twice")
        for e in (e1, e2):
            if not 0 <= e < m:
                raise FormatError(f"{where}.pair: edge {e} does not exist")
        order = _int_list(c["order"], f"{where}.order", 4)
        for x in order:
            if not 0 <= x < n:
                raise FormatError(f"{where}.order: vertex {x} does not exist")
        crossings.append(CrossingPair(e1, e2, tuple(order)))

    rotations = None
    if "rotations" in raw:
        rmap = _int_map(raw["rotations"], "rotations")
        if set(rmap) - set(range(n)):
            raise FormatError(f"rotations: vertex {min(set(rmap) - set(range(n)))} does not exist")
        rotations = []
        for v in range(n):
            rot = _int_list(rmap.get(v, []), f"rotations.{v}")
            for e in rot:
                if not 0 <= e < m:
                    raise FormatError(f"rotations.{v}: edge {e} does not exist")
            rotations.append(rot)

    outer = None
    if "outer" in raw:
        ov, oe = _int_list(raw["outer"], "outer", 2)
        outer = (ov, oe)

    caps = {}
    for v, c in _int_map(raw.get("caps", {}), "caps").items():
        if not 0 <= v < n:
            raise FormatError(f"caps: vertex {v} does not exist")
        caps[v] = _int(c, f"caps.{v}")
        if caps[v] < 0:
            raise FormatError(f"caps.{v}: cap must be non-negative")

    labels = {}
    raw_lab = raw.get("labels", {})
    if not isinstance(raw_lab, dict):
        raise FormatError("labels: expected an object")
    for name, v in raw_lab.items():
        labels[name] = _int(v, f"labels.{name}")
        if not 0 <= labels[name] < n:
            raise FormatError(f"labels.{name}: vertex {v} does not exist")

    roles = {}
    raw_roles = raw.get("roles", {})
    if not isinstance(raw_roles, dict):
        raise FormatError("roles: expected an object")
    for name, es in raw_roles.items():
        ids = _int_list(es, f"roles.{name}")
        for e in ids:
            if not 0 <= e < m:
                raise FormatError(f"roles.{name}: edge {e} does not exist")
        roles[name] = tuple(ids)

    try:
        g = OnePlaneGraph(n, edges, crossings, rotations, outer)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    if check:
        rep = validate(g)
        if not rep.ok:
            raise FormatError("invalid graph: " + "; ".join(rep.violations))
    return GraphDocument(g, caps, labels, roles)


def _items(key: str, items: list[str]) -> str:
    if not items:
        return f'  "{key}": []'
    return f'  "{key}": [\n' + ",\n".join(f"    {x}" for x in items) + "\n  ]"


def _object(key: str, items: list[tuple[str, str]]) -> str:
    if not items:
        return f'  "{key}": {{}}'
    body = ",\n".join(f"    {json.dumps(k)}: {v}" for k, v in items)
    return f'  "{key}": {{\n' + body + "\n  }"


def _ints(xs) -> str:
    return "[" + ", ".join(str(x) for x in xs) + "]"


def serialize(doc: GraphDocument | OnePlaneGraph) -> str:
    """Canonical text of a graph document."""
    if isinstance(doc, OnePlaneGraph):
        doc = GraphDocument(doc)
    g = doc.graph
    parts = [f'  "vertices": {g.n}']
    parts.append(_items("edges", [_ints(e) for e in g.edges]))
    parts.append(_items("crossings", [
        f'{{"pair": {_ints(cp.edges())}, "order": {_ints(cp.order)}}}' for cp in g.crossings
    ]))
    if g.rotations is not None:
        parts.append(_object("rotations", [(str(v), _ints(r)) for v, r in enumerate(g.rotations)]))
    if g.outer is not None:
        parts.append(f'  "outer": {_ints(g.outer)}')
    if doc.caps:
        parts.append(_object("caps", [(str(v), str(c)) for v, c in sorted(doc.caps.items())]))
    if doc.labels:
        parts.append(_object("labels", [(k, str(v)) for k, v in sorted(doc.labels.items())]))
    if doc.roles:
        parts.append(_object("roles", [(k, _ints(v)) for k, v in sorted(doc.roles.items())]))
    return "{\n" + ",\n".join(parts) + "\n}\n"


# --------------------------------------------------------------------------
# colorings


def format_coloring(c: EdgeColoring) -> str:
    lines = [f"# coloring of {len(c)} edges"]
    lines += [f"{e} {c[e].value}" for e in range(len(c))]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, m: int | None = None) -> EdgeColoring:
    """Read ``<edge> <red|blue>`` lines; every edge 0..m-1 must appear exactly once."""
    colors: dict[int, Color] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<edge> <red|blue>'")
        try:
            e = int(parts[0])
            col = Color(parts[1].lower())
        except ValueError:
            raise FormatError(f"line {lineno}: expected '<edge> <red|blue>'") from None
        if e in colors:
            raise FormatError(f"line {lineno}: edge {e} colored twice")
        colors[e] = col
    size = len(colors) if m is None else m
    missing = [e for e in range(size) if e not in colors]
    if missing:
        raise FormatError(f"edge {missing[0]} has no color")
    extra = sorted(e for e in colors if not 0 <= e < size)
    if extra:
        raise FormatError(f"edge {extra[0]} does not exist")
    return EdgeColoring(colors[e] for e in range(size))


# --------------------------------------------------------------------------
# DOT


def export_dot(g: OnePlaneGraph, coloring: EdgeColoring | None = None) -> str:
    """Planarized drawing input for Graphviz.

    Original vertices become nodes ``v<i>``; each crossing becomes a point
    node ``x<i>`` and its two edges are split there. Red edges are drawn
    bold, blue edges thin.
    """
    if coloring is not None and len(coloring) != g.m:
        raise GraphError(f"coloring covers {len(coloring)} edges, graph has {g.m}")
    p = planarize(g)
    if p.n == 0:
        return "graph G {\n}\n"

    def name(x: int) -> str:
        return f"x{x - g.n}" if p.is_dummy(x) else f"v{x}"

    lines = ["graph G {"]
    for x in range(g.n):
        lines.append(f"  v{x};")
    for x in range(g.n, p.n):
        lines.append(f"  {name(x)} [shape=point];")
    for (a, b), e in zip(p.edges, p.origin):
        attrs = ""
        if coloring is not None:
            attrs = ' [color=red, style=bold]' if coloring[e] is Color.RED else ' [color=blue, penwidth=0.5]'
        lines.append(f"  {name(a)} -- {name(b)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# planar 3-SAT instances


def parse_planar3sat(text: str) -> Planar3SatInstance:
    """Read ``vars`` then ``above``/``below`` clause lines; ``-x`` negates."""
    variables: list[str] | None = None
    clauses: list[Clause] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "vars":
            if variables is not None:
                raise FormatError(f"line {lineno}: 'vars' given twice")
            if not rest:
                raise FormatError(f"line {lineno}: no variables listed")
            variables = rest
        elif head in ("above", "below"):
            if variables is None:
                raise FormatError(f"line {lineno}: clause before 'vars'")
            lits = []
            for tok in rest:
                neg = tok.startswith("-")
                var = tok[1:] if neg else tok
                if var not in variables:
                    raise FormatError(f"line {lineno}: unknown variable {var!r}")
                lits.append((var, not neg))
            if not 1 <= len(lits) <= 3:
                raise FormatError(f"line {lineno}: a clause needs 1 to 3 literals")
            clauses.append(Clause(head, tuple(lits)))
        else:
            raise FormatError(f"line {lineno}: expected 'vars', 'above' or 'below', got {head!r}")
    if variables is None:
        raise FormatError("missing 'vars' line")
    try:
        return Planar3SatInstance(tuple(variables), tuple(clauses))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_planar3sat(phi: Planar3SatInstance) -> str:
    lines = ["vars " + " ".join(phi.variables)]
    for c in phi.clauses:
        lits = " ".join(x if pos else f"-{x}" for x, pos in c.literals)
        lines.append(f"{c.side} {lits}")
    return "\n".join(lines) + "\n"


def caps_from_mapping(doc: GraphDocument, extra: Mapping[str, int]) -> dict[int, int]:
    """Document caps overridden by ``label-or-id -> cap`` entries."""
    caps = dict(doc.caps)
    for ref, c in extra.items():
        caps[doc.vertex(ref)] = c
    return caps

from __future__ import annotations

import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_k1
from edgepart.gadgets import (
    Clause,
    Planar3SatInstance,
    blob,
    clause_gadget,
    fan_of_crossings,
    kite,
    lower_bound_family,
    random_nic,
    variable_gadget,
)
from edgepart.graph import EdgeColoring, GraphError, OnePlaneGraph
from edgepart.io import (
    FormatError,
    GraphDocument,
    caps_from_mapping,
    export_dot,
    format_coloring,
    format_planar3sat,
    parse,
    parse_coloring,
    parse_planar3sat,
    serialize,
)

K1_TEXT = """{
  "vertices": 4,
  "edges": [
    [0, 2],
    [1, 3],
    [0, 1],
    [1, 2],
    [2, 3],
    [3, 0]
  ],
  "crossings": [
    {"pair": [0, 1], "order": [0, 1, 2, 3]}
  ],
  "rotations": {
    "0": [2, 0, 5],
    "1": [3, 1, 2],
    "2": [4, 0, 3],
    "3": [5, 1, 4]
  }
}
"""


def _docs():
    yield "kite", GraphDocument.from_gadget(kite())
    yield "fan", GraphDocument.from_gadget(fan_of_crossings(3))
    yield "blob", GraphDocument.from_gadget(blob())
    yield "variable", GraphDocument.from_gadget(variable_gadget(3))
    yield "clause", GraphDocument.from_gadget(clause_gadget())
    yield "lb", GraphDocument(lower_bound_family(9, True))
    yield "random", GraphDocument(random_nic(1, 40, 0.5))


# ---------------------------------------------------------------------------
# graph documents
# ---------------------------------------------------------------------------


def test_k1_golden():
    assert serialize(make_k1()) == K1_TEXT
    assert parse(K1_TEXT).graph == make_k1()


@pytest.mark.parametrize("name, doc", list(_docs()), ids=[n for n, _ in _docs()])
def test_round_trip_is_byte_identical(name, doc):
    text = serialize(doc)
    back = parse(text)
    assert back.graph == doc.graph
    assert back.caps == doc.caps and back.labels == doc.labels
    assert serialize(back) == text


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10**5), size=st.integers(4, 40), frac=st.floats(0, 1))
def test_round_trip_random(seed, size, frac):
    g = random_nic(seed, size, frac)
    assert parse(serialize(g)).graph == g


def test_vertex_list_form_and_outer():
    text = K1_TEXT.replace('"vertices": 4', '"vertices": [3, 1, 0, 2]')
    text = text.replace('\n}\n', ',\n  "outer": [0, 2]\n}\n')
    doc = parse(text)
    assert doc.graph.n == 4 and doc.graph.outer == (0, 2)


def test_labels_resolve():
    doc = GraphDocument.from_gadget(blob())
    assert doc.vertex("s") == 0 and doc.vertex("3") == 3
    assert caps_from_mapping(doc, {"s": 0, "t": 1}) == {0: 0, 1: 1}
    with pytest.raises(FormatError, match="unknown vertex label"):
        doc.vertex("nope")
    with pytest.raises(FormatError, match="out of range"):
        doc.vertex("999")


@pytest.mark.parametrize(
    "text, message",
    [
        ('{"vertices": 2,\n  "edges": [[0, 1],]}', r"line 2, column \d+"),
        ("[]", "must be a JSON object"),
        ('{"vertices": 2}', "missing field 'edges'"),
        ('{"vertices": 2, "edges": [], "colour": 1}', "unknown field 'colour'"),
        ('{"vertices": -1, "edges": []}', "count must be non-negative"),
        ('{"vertices": [0, 2], "edges": []}', "ids must be exactly 0..n-1"),
        ('{"vertices": 2, "edges": [[0, 5]]}', r"edges\[0\]: vertex 5 does not exist"),
        ('{"vertices": 2, "edges": [[0, "a"]]}', "expected an integer"),
        ('{"vertices": 4, "edges": [[0, 2], [1, 3]], "crossings": [{"pair": [0, 0], "order": [0, 1, 2, 3]}]}',
         r"crossings\[0\].pair: pair references one edge twice"),
        ('{"vertices": 4, "edges": [[0, 2], [1, 3]], "crossings": [{"pair": [0, 7], "order": [0, 1, 2, 3]}]}',
         r"crossings\[0\].pair: edge 7 does not exist"),
        ('{"vertices": 2, "edges": [[0, 1]], "caps": {"0": -1}}', "cap must be non-negative"),
        ('{"vertices": 2, "edges": [[0, 1]], "labels": {"a": 9}}', "labels.a: vertex 9 does not exist"),
        ('{"vertices": 2, "edges": [[0, 1]], "roles": {"r": [3]}}', "roles.r: edge 3 does not exist"),
        ('{"vertices": 2, "edges": [[0, 1]], "rotations": {"0": [4], "1": [0]}}', "rotations.0: edge 4"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(FormatError, match=message):
        parse(text)


def test_invalid_graph_rejected_unless_unchecked():
    text = '{"vertices": 2, "edges": [[0, 1], [1, 0]]}'
    with pytest.raises(FormatError, match="invalid graph: duplicate edge"):
        parse(text)
    assert parse(text, check=False).graph.m == 2


# ---------------------------------------------------------------------------
# colorings
# ---------------------------------------------------------------------------


def test_coloring_round_trip():
    c = EdgeColoring.from_red(6, [0, 4])
    text = format_coloring(c)
    assert text.splitlines()[:3] == ["# coloring of 6 edges", "0 red", "1 blue"]
    assert parse_coloring(text, 6) == c


@pytest.mark.parametrize(
    "text, message",
    [
        ("0 red\n1\n", "line 2: expected"),
        ("0 purple\n", "line 1: expected"),
        ("0 red\n0 blue\n", "line 2: edge 0 colored twice"),
        ("1 red\n", "edge 0 has no color"),
        ("0 red\n1 red\n2 blue\n", "edge 2 does not exist"),
    ],
)
def test_coloring_errors(text, message):
    with pytest.raises(FormatError, match=message):
        parse_coloring(text, 2)


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------


def test_dot_for_k1_with_one_red_edge():
    dot = export_dot(make_k1(), EdgeColoring.from_red(6, [0]))
    assert dot.startswith("graph G {\n") and dot.endswith("}\n")
    nodes = re.findall(r"^  (\w+)( \[shape=point\])?;$", dot, re.M)
    assert len(nodes) == 5 and sum(bool(p) for _, p in nodes) == 1
    assert dot.count(" -- ") == 8
    assert dot.count("style=bold") == 2  # the red diagonal is split at the crossing


def test_dot_empty_graph():
    assert export_dot(OnePlaneGraph(0, [])) == "graph G {\n}\n"


def test_dot_blob_counts():
    dot = export_dot(blob().graph)
    assert len(re.findall(r"^  v\d+;$", dot, re.M)) == 68
    assert dot.count("[shape=point]") == 27
    assert "color=" not in dot


def test_dot_length_mismatch():
    with pytest.raises(GraphError):
        export_dot(make_k1(), EdgeColoring.from_red(3, []))


# ---------------------------------------------------------------------------
# planar 3-SAT text
# ---------------------------------------------------------------------------


def test_planar3sat_parse_and_format():
    text = "# two clauses\nvars x y\nabove x -y\nbelow -x  # trailing\n"
    phi = parse_planar3sat(text)
    assert phi.variables == ("x", "y")
    assert phi.clauses == (Clause("above", (("x", True), ("y", False))), Clause("below", (("x", False),)))
    assert format_planar3sat(phi) == "vars x y\nabove x -y\nbelow -x\n"
    assert parse_planar3sat(format_planar3sat(phi)) == phi


@pytest.mark.parametrize(
    "text, message",
    [
        ("above x\n", "clause before 'vars'"),
        ("vars x\nvars y\n", "'vars' given twice"),
        ("vars\n", "no variables listed"),
        ("vars x\nabove z\n", "unknown variable 'z'"),
        ("vars x\nabove x x x x\n", "1 to 3 literals"),
        ("vars x\nleft x\n", "expected 'vars', 'above' or 'below'"),
        ("# nothing\n", "missing 'vars' line"),
    ],
)
def test_planar3sat_errors(text, message):
    with pytest.raises(FormatError, match=message):
        parse_planar3sat(text)


def test_planar3sat_instance_round_trip():
    phi = Planar3SatInstance(("a", "b", "c"), (Clause("below", (("a", True), ("c", False), ("c", True))),))
    assert parse_planar3sat(format_planar3sat(phi)) == phi

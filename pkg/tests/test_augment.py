from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_k1
from edgepart.augment import (
    Skeleton,
    crossing_augment,
    detect_kites,
    fill_faces,
    skeleton,
    triangulate,
)
from edgepart.gadgets import fan_of_crossings, lower_bound_family, random_nic
from edgepart.graph import CrossingPair, GraphError, OnePlaneGraph, faces, is_nic, planarize, validate


def bare_crossing() -> OnePlaneGraph:
    """Two crossing diagonals and nothing else."""
    return OnePlaneGraph(4, [(0, 2), (1, 3)], [CrossingPair(0, 1, (0, 1, 2, 3))],
                         rotations=[[0], [1], [0], [1]])


def _assert_simple(edges) -> None:
    keys = [frozenset(e) for e in edges]
    assert all(len(k) == 2 for k in keys)
    assert len(set(keys)) == len(keys)


# ---------------------------------------------------------------------------
# crossing augmentation and kites
# ---------------------------------------------------------------------------


def test_k1_needs_no_new_edges(k1):
    a = crossing_augment(k1)
    assert a.added_cycle_edges == ()
    assert a.cycle_edges_of == ((2, 3, 4, 5),)
    assert detect_kites(a) == list(k1.crossings)


def test_missing_cycle_edges_are_added_uncrossed():
    g = OnePlaneGraph(4, [(0, 2), (1, 3), (1, 2), (3, 0)], [CrossingPair(0, 1, (0, 1, 2, 3))],
                      rotations=[[0, 3], [2, 1], [0, 2], [3, 1]])
    a = crossing_augment(g)
    assert [a.graph.edges[e] for e in a.added_cycle_edges] == [(0, 1), (2, 3)]
    assert validate(a.graph).ok
    assert not set(a.added_cycle_edges) & a.graph.crossed_edges()
    assert len(detect_kites(a)) == 1


def test_bare_crossing_becomes_k1():
    a = crossing_augment(bare_crossing())
    assert len(a.added_cycle_edges) == 4
    assert validate(a.graph).ok
    assert sorted(map(sorted, a.graph.edges)) == sorted(map(sorted, make_k1().edges))
    assert len(detect_kites(a)) == 1


def test_outer_triangle_disqualifies_kite(k1):
    # the order 0,1,2,3 is clockwise, so the 4-cycle face lies left of dart 0 -> 1
    g = OnePlaneGraph(k1.n, k1.edges, k1.crossings, k1.rotations, outer=(0, 2))
    assert validate(g).ok
    assert len(detect_kites(crossing_augment(g))) == 1
    # left of dart 1 -> 0 is the triangle between the crossing and edge (0, 1)
    g = OnePlaneGraph(k1.n, k1.edges, k1.crossings, k1.rotations, outer=(1, 2))
    assert validate(g).ok
    assert detect_kites(crossing_augment(g)) == []


def test_kite_not_empty_when_a_vertex_sits_inside():
    # K1 plus a pendant vertex placed inside the triangle (0, 1, crossing)
    k1 = make_k1()
    g = OnePlaneGraph(5, [*k1.edges, (0, 4)], k1.crossings, [[2, 6, 0, 5], [3, 1, 2], [4, 0, 3], [5, 1, 4], [6]])
    assert validate(g).ok
    assert detect_kites(crossing_augment(g)) == []


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10_000), size=st.integers(4, 40), frac=st.floats(0, 1))
def test_generated_kites_are_detected(seed, size, frac):
    g = random_nic(seed, size, frac)
    a = crossing_augment(g)
    assert a.added_cycle_edges == ()
    assert detect_kites(a) == list(g.crossings)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10_000), size=st.integers(4, 40), frac=st.floats(0, 1), drop=st.floats(0, 0.6))
def test_augmentation_keeps_embedding_valid(seed, size, frac, drop):
    g = random_nic(seed, size, frac, drop)
    a = crossing_augment(g)
    assert validate(a.graph).ok
    _assert_simple(a.graph.edges)
    for cp, cyc in zip(g.crossings, a.cycle_edges_of):
        o = cp.order
        got = [frozenset(a.graph.edges[e]) for e in cyc]
        assert got == [frozenset((o[j], o[(j + 1) % 4])) for j in range(4)]
        assert not set(cyc) & a.graph.crossed_edges()


# ---------------------------------------------------------------------------
# skeleton
# ---------------------------------------------------------------------------


def test_skeleton_of_k1_is_the_four_cycle(k1):
    s = skeleton(crossing_augment(k1))
    assert s.edges == ((0, 1), (1, 2), (2, 3), (3, 0))
    assert s.origin == (2, 3, 4, 5)
    assert s.rotations == ((0, 3), (1, 0), (2, 1), (3, 2))


def test_skeleton_rejects_shared_cycle_edges():
    with pytest.raises(GraphError, match="NIC required"):
        skeleton(crossing_augment(fan_of_crossings(3).graph))


def test_skeleton_requires_connectivity():
    g = OnePlaneGraph(4, [(0, 1), (2, 3)], rotations=[[0], [0], [1], [1]])
    with pytest.raises(GraphError, match="connected skeleton"):
        skeleton(crossing_augment(g))


# ---------------------------------------------------------------------------
# triangulation
# ---------------------------------------------------------------------------


def _check_triangulation(s: Skeleton, t) -> None:
    n = s.n
    assert len(t.edges) == 3 * n - 6
    _assert_simple(t.edges)
    assert t.edges[: len(s.edges)] == s.edges
    assert t.filler == tuple(i >= len(s.edges) for i in range(len(t.edges)))
    walks = t.plane().faces()
    assert all(len(w) == 3 for w in walks)
    assert n - len(t.edges) + len(walks) == 2
    a, b, c = t.outer
    assert any(set(w) == {(a, b), (b, c), (c, a)} for w in walks)


def test_triangulate_k1_skeleton(k1):
    s = skeleton(crossing_augment(k1))
    t = triangulate(s)
    _check_triangulation(s, t)
    assert sum(t.filler) == 2


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), size=st.integers(4, 60), frac=st.floats(0, 1), drop=st.floats(0, 0.5))
def test_triangulate_random_skeletons(seed, size, frac, drop):
    g = random_nic(seed, size, frac, drop)
    try:
        s = skeleton(crossing_augment(g))
    except GraphError:
        return  # dropping edges may disconnect the skeleton
    _check_triangulation(s, triangulate(s))


def test_triangulate_respects_outer_dart(k1):
    s = skeleton(crossing_augment(k1))
    t = triangulate(s, outer_dart=(1, 0))
    _check_triangulation(s, t)
    assert t.outer[:2] == (1, 0)


def test_triangulate_needs_three_vertices():
    with pytest.raises(GraphError):
        triangulate(Skeleton(2, ((0, 1),), ((0,), (0,)), (0,)))


# ---------------------------------------------------------------------------
# fill_faces
# ---------------------------------------------------------------------------


def test_fill_faces_triangulates_crossing_free_faces():
    g = lower_bound_family(9)
    h = fill_faces(g)
    assert validate(h).ok and is_nic(h)
    assert h.edges[: g.m] == g.edges
    p = planarize(h)
    for f in faces(p):
        if not any(p.is_dummy(x) for x in f):
            assert len(f) == 3
    _assert_simple(h.edges)

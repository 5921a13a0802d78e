from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_partitions, brute_min_k
from edgepart.gadgets import clause_gadget, fan_of_crossings, lower_bound_family, random_nic
from edgepart.graph import check_partition
from edgepart.oracle import (
    NODE_LIMIT_ENV,
    SearchAborted,
    Status,
    decide_k,
    default_node_limit,
    enumerate_valid,
    min_k,
)


def small_instances():
    return st.builds(
        random_nic,
        seed=st.integers(0, 100_000),
        base_size=st.integers(4, 8),
        kite_fraction=st.floats(0, 1),
        drop_fraction=st.floats(0, 0.5),
    ).filter(lambda g: len(g.crossings) <= 11)


@settings(max_examples=60, deadline=None)
@given(g=small_instances(), k=st.integers(0, 3))
def test_enumeration_matches_brute_force(g, k):
    got = list(enumerate_valid(g, k))
    expected = all_partitions(g, k)
    assert len(got) == len(set(got))
    assert set(got) == set(expected)


@settings(max_examples=60, deadline=None)
@given(g=small_instances(), data=st.data())
def test_caps_match_brute_force(g, data):
    caps = data.draw(st.dictionaries(st.integers(0, g.n - 1), st.integers(0, 2), max_size=4))
    got = set(enumerate_valid(g, 2, caps))
    assert got == set(all_partitions(g, 2, caps))
    res = decide_k(g, 2, caps)
    assert (res.status is Status.SAT) == bool(got)
    if res.coloring is not None:
        assert res.coloring in got


@settings(max_examples=40, deadline=None)
@given(g=small_instances())
def test_min_k_matches_brute_force(g):
    k, col = min_k(g)
    assert k == brute_min_k(g)
    res = check_partition(g, col, k)
    assert res.ok and res.max_red_degree == k


def test_k1(k1):
    assert decide_k(k1, 0).status is Status.UNSAT
    res = decide_k(k1, 1)
    assert res.status is Status.SAT
    assert min_k(k1)[0] == 1
    assert len(list(enumerate_valid(k1, 1))) == 2


def test_fan_of_three_needs_two():
    g = fan_of_crossings(3).graph
    assert decide_k(g, 1).status is Status.UNSAT
    assert min_k(g)[0] == 2


def test_lower_bound_family_seven():
    k, col = min_k(lower_bound_family(7))
    assert k == 3


def test_clause_gadget():
    cg = clause_gadget()
    g = cg.graph
    assert decide_k(g, 2).status is Status.SAT
    # all true edges blue forces the three false edges red at the clause vertex
    colorings = list(enumerate_valid(g, 2))
    assert colorings
    for col in colorings:
        assert any(col[e].value == "red" for e in cg.roles["true"])
    assert len(colorings) == 7  # every choice except all-false-red


def test_no_partition_with_impossible_caps(k1):
    with pytest.raises(ValueError, match="caps"):
        min_k(k1, {0: 0, 1: 0})


def test_node_limit_aborts():
    g = lower_bound_family(7)
    res = decide_k(g, 2, node_limit=5)
    assert res.status is Status.ABORTED and res.coloring is None
    with pytest.raises(SearchAborted):
        min_k(g, node_limit=5)
    with pytest.raises(SearchAborted):
        list(enumerate_valid(g, 3, node_limit=5))


def test_node_limit_from_environment(monkeypatch):
    monkeypatch.setenv(NODE_LIMIT_ENV, "7")
    assert default_node_limit() == 7
    assert decide_k(lower_bound_family(7), 2).status is Status.ABORTED
    monkeypatch.delenv(NODE_LIMIT_ENV)
    assert default_node_limit() == 10**8


def test_negative_arguments(k1):
    with pytest.raises(ValueError):
        decide_k(k1, -1)
    with pytest.raises(ValueError):
        decide_k(k1, 1, {0: -1})


def test_deterministic(k1):
    g = lower_bound_family(8)
    assert decide_k(g, 3).coloring == decide_k(g, 3).coloring
    assert list(enumerate_valid(k1, 1)) == list(enumerate_valid(k1, 1))

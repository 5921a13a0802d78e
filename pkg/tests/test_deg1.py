from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_partitions, make_literal_star
from edgepart.deg1 import TwoSatInstance, build_2sat, partition_deg1, solve_2sat
from edgepart.gadgets import fan_of_crossings, random_nic
from edgepart.graph import check_partition


def _brute_sat(inst: TwoSatInstance) -> bool:
    for bits in itertools.product((False, True), repeat=inst.num_vars):
        if all(any(bits[v] == pos for v, pos in c) for c in inst.clauses):
            return True
    return False


def _satisfies(inst: TwoSatInstance, value: list[bool]) -> bool:
    return all(any(value[v] == pos for v, pos in c) for c in inst.clauses)


literal = st.tuples(st.integers(0, 5), st.booleans())


@settings(max_examples=300, deadline=None)
@given(clauses=st.lists(st.tuples(literal, literal), max_size=25))
def test_solver_matches_brute_force(clauses):
    inst = TwoSatInstance(6, list(clauses))
    value = solve_2sat(inst)
    assert (value is not None) == _brute_sat(inst)
    if value is not None:
        assert _satisfies(inst, value)


def test_clauses_at_one_vertex():
    # v sees the literals x, not y, z (in edge order)
    g = make_literal_star((True, False, True))
    inst = build_2sat(g)
    x, y, z = 0, 1, 2
    assert inst.clauses == [
        ((x, False), (y, True)),
        ((x, False), (z, False)),
        ((y, True), (z, False)),
    ]
    assert "-1 2 0" in inst.to_dimacs()


def test_dimacs_layout():
    inst = build_2sat(make_literal_star((True, False, True)))
    assert inst.to_dimacs() == "p cnf 3 3\n-1 2 0\n-1 -3 0\n2 -3 0\n"


def test_k1_is_satisfiable(k1):
    col = partition_deg1(k1)
    assert col is not None
    assert check_partition(k1, col, 1).ok


def test_fan_of_three_has_no_solution():
    assert partition_deg1(fan_of_crossings(3).graph) is None
    assert partition_deg1(fan_of_crossings(2).graph) is not None


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), size=st.integers(4, 60), frac=st.floats(0, 1))
def test_clause_count_identity(seed, size, frac):
    g = random_nic(seed, size, frac)
    crossed = g.crossed_edges()
    k_v = [sum(1 for e in inc if e in crossed) for inc in g.incident()]
    assert len(build_2sat(g).clauses) == sum(comb(k, 2) for k in k_v)


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 100_000), size=st.integers(4, 10), frac=st.floats(0, 1), drop=st.floats(0, 0.5))
def test_agrees_with_enumeration(seed, size, frac, drop):
    g = random_nic(seed, size, frac, drop)
    if len(g.crossings) > 12:
        return
    col = partition_deg1(g)
    exists = bool(all_partitions(g, 1))
    assert (col is not None) == exists
    if col is not None:
        assert check_partition(g, col, 1).ok


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fans(k):
    g = fan_of_crossings(k).graph
    assert (partition_deg1(g) is not None) == bool(all_partitions(g, 1))

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the endotactic checks, net reaction vectors and terminal components
"""

from fractions import Fraction

import pytest

from conftest import X, Y, ZERO, load_fixture
from crn_analysis import (
    ArrangementTooLargeError,
    EGraph,
    Edge,
    check_terminal_interior,
    endotactic_by_angular_sweep,
    is_endotactic,
    is_strongly_endotactic,
    net_reaction_graph,
    net_reaction_vector,
    violates_at,
)
from crn_analysis.crn_endotactic import arrangement_normals, arrangement_representatives
from crn_analysis.crn_vectors import is_zero


def v(*coords):
    return tuple(Fraction(c) for c in coords)


@pytest.mark.parametrize("name", ["thomas.crn", "selkov.crn", "net1.crn"])
def test_strongly_endotactic_fixtures(name):
    G, _ = load_fixture(name)
    assert is_strongly_endotactic(G) == (True, None)
    assert is_endotactic(G) == (True, None)


def test_endotactic_but_not_strongly():
    G, _ = load_fixture("not_strong.crn")
    assert is_endotactic(G) == (True, None)
    strong, witness = is_strongly_endotactic(G)
    assert not strong
    assert violates_at(G, witness.v, strong=True) == witness.violating_edge
    assert violates_at(G, v(0, 1), strong=True) == Edge(v(0, 3), v(0, 2))
    assert violates_at(G, v(0, 1), strong=False) is None


def test_single_irreversible_reaction_is_not_endotactic():
    G, _ = load_fixture("x_to_y.crn")
    ok, witness = is_endotactic(G)
    assert not ok
    assert witness.violating_edge == Edge(X, Y)


def test_split_inflow_network_is_not_endotactic(net2):
    G, _ = net2
    ok, witness = is_endotactic(G)
    assert not ok
    assert violates_at(G, witness.v) is not None
    assert violates_at(G, v(1, -1)) == Edge(ZERO, Y)


def test_net_reaction_graph_of_split_inflow_is_the_cycle(net1, net2):
    G, k = net2
    assert net_reaction_vector(G, k, ZERO) == v(1, 1)
    assert net_reaction_graph(G, k).graph == net1[0]


def test_net_reaction_graph_reports_zero_vectors():
    G = EGraph.from_edges(1, [(v(1), v(0)), (v(1), v(2))])
    k = {e: Fraction(1) for e in G.edges}
    result = net_reaction_graph(G, k)
    assert result.graph.edges == ()
    assert result.zero_vertices == (v(1),)


def test_arrangement_representatives_are_nonzero(thomas):
    reps = arrangement_representatives(thomas[0])
    assert reps
    assert not any(is_zero(r) for r in reps)
    # every sign pattern is distinct
    normals = arrangement_normals(thomas[0])
    patterns = {tuple((sum(a * b for a, b in zip(h, r)) > 0) - (sum(a * b for a, b in zip(h, r)) < 0) for h in normals) for r in reps}
    assert len(patterns) == len(reps)


def test_arrangement_in_two_dimensions_counts_faces():
    # normals (1,0) and (0,1): four rays and four open quadrants
    G = EGraph.from_edges(2, [(ZERO, X), (ZERO, Y)])
    assert len(arrangement_representatives(G)) == 8


def test_arrangement_cap(thomas):
    with pytest.raises(ArrangementTooLargeError):
        is_endotactic(thomas[0], max_hyperplanes=1)


@pytest.mark.parametrize("name", ["thomas.crn", "selkov.crn", "net1.crn", "net2.crn", "not_strong.crn", "x_to_y.crn"])
def test_angular_sweep_agrees_on_fixtures(name):
    G, _ = load_fixture(name)
    assert endotactic_by_angular_sweep(G)[0] == is_endotactic(G)[0]
    assert endotactic_by_angular_sweep(G, strong=True)[0] == is_strongly_endotactic(G)[0]


def test_angular_sweep_needs_the_plane():
    G, _ = load_fixture("zero_to_x.crn")
    with pytest.raises(ValueError):
        endotactic_by_angular_sweep(G)


def test_terminal_interior(thomas):
    G, k = thomas
    ok, reports = check_terminal_interior(G, k)
    assert ok
    assert len(reports) == 1
    assert reports[0].component == frozenset({ZERO, X, Y})
    assert reports[0].vertex == ZERO
    assert reports[0].net_vector == v(3, 3)


def test_terminal_interior_fails_without_sources():
    G, k = load_fixture("x_to_y.crn")
    ok, reports = check_terminal_interior(G, k)
    assert not ok
    assert reports[0].component == frozenset({Y})
    assert reports[0].reason

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for mass-action evaluation, simulation and numeric equivalence
"""

import io
from fractions import Fraction

import numpy as np
import pandas as pd
import pytest

from conftest import X, Y, ZERO, load_fixture
from crn_analysis import (
    DimensionMismatchError,
    EGraph,
    Edge,
    conservation_laws,
    is_complex_balanced_at,
    monomial,
    numeric_equivalence_deviation,
    rhs,
    simulate,
)

ONE = (Fraction(1), Fraction(1))


@pytest.fixture
def isomerization():
    G = EGraph.from_edges(2, [(X, Y), (Y, X)], ("X", "Y"))
    return G, {Edge(X, Y): Fraction(1), Edge(Y, X): Fraction(1)}


def test_monomial():
    assert monomial((Fraction(2), Fraction(3)), (Fraction(1), Fraction(2))) == 18
    assert monomial((Fraction(1, 2),), (Fraction(0),)) == 1
    with pytest.raises(ValueError):
        monomial((Fraction(2),), (Fraction(1, 2),))


def test_rhs_vanishes_at_balanced_points(net1, thomas, selkov):
    for G, k in (net1, thomas, selkov):
        assert rhs(G, k, ONE) == ZERO


def test_rhs_exact_value(thomas):
    G, k = thomas
    # 3 - 2*2 - 1*2*1 in X, 3 - 2*1 - 1*2*1 in Y
    assert rhs(G, k, (Fraction(2), Fraction(1))) == (Fraction(-3), Fraction(-1))


def test_rhs_float_path(thomas):
    G, k = thomas
    value = rhs(G, k, np.array([2.0, 1.0]))
    assert np.allclose(value, [-3.0, -1.0])


def test_rhs_rejects_bad_states(thomas):
    G, k = thomas
    with pytest.raises(ValueError):
        rhs(G, k, (Fraction(0), Fraction(1)))
    with pytest.raises(DimensionMismatchError):
        rhs(G, k, (Fraction(1),))


def test_complex_balance():
    G = EGraph.from_edges(2, [(X, Y), (Y, X)])
    k = {Edge(X, Y): Fraction(1), Edge(Y, X): Fraction(2)}
    assert is_complex_balanced_at(G, k, (Fraction(2), Fraction(1)))
    assert not is_complex_balanced_at(G, k, ONE)
    one_way = EGraph.from_edges(2, [(X, Y)])
    assert not is_complex_balanced_at(one_way, {Edge(X, Y): Fraction(1)}, ONE)


def test_simulate_relaxes_to_equilibrium(isomerization):
    G, k = isomerization
    trajectory = simulate(G, k, [2.0, 0.5], 20.0)
    assert not trajectory.halted
    assert trajectory.times[-1] == pytest.approx(20.0)
    assert np.allclose(trajectory.states[-1], [1.25, 1.25], atol=1e-6)
    assert np.allclose(trajectory.states.sum(axis=1), 2.5, atol=1e-6)


def test_simulate_stays_at_balanced_point(thomas):
    G, k = thomas
    trajectory = simulate(G, k, [1.0, 1.0], 50.0)
    assert np.allclose(trajectory.states, 1.0, atol=1e-9)


def test_simulate_halts_at_positivity_floor():
    G = EGraph.from_edges(1, [((1,), (0,))])
    k = {G.edges[0]: Fraction(1)}
    trajectory = simulate(G, k, [1.0], 100.0)
    assert trajectory.halted
    assert trajectory.times[-1] == pytest.approx(np.log(1e12), rel=1e-3)
    assert trajectory.states[-1][0] == pytest.approx(1e-12, rel=1e-2)


def test_simulate_flags_start_below_floor():
    G = EGraph.from_edges(1, [((1,), (0,))])
    k = {G.edges[0]: Fraction(1)}
    trajectory = simulate(G, k, [1e-13], 10.0)
    assert trajectory.halted
    assert list(trajectory.times) == [0.0]
    assert trajectory.states.shape == (1, 1)


def test_simulate_rejects_bad_arguments(isomerization):
    G, k = isomerization
    with pytest.raises(ValueError):
        simulate(G, k, [1.0, 1.0], 0.0)
    with pytest.raises(ValueError):
        simulate(G, k, [1.0, -1.0], 1.0)


def test_trajectory_csv(isomerization):
    G, k = isomerization
    trajectory = simulate(G, k, [2.0, 0.5], 1.0)
    frame = pd.read_csv(io.StringIO(trajectory.to_csv()))
    assert list(frame.columns) == ["time", "X", "Y"]
    assert len(frame) == len(trajectory.times)
    assert frame["X"].iloc[0] == 2.0


def test_numeric_equivalence_of_net1_and_net2(net1, net2):
    assert numeric_equivalence_deviation(net1[0], net1[1], net2[0], net2[1], relative=True) < 1e-12


def test_numeric_equivalence_detects_perturbation(net1, net2):
    rates = dict(net2[1])
    rates[Edge(ZERO, X)] = Fraction(101, 100)
    assert numeric_equivalence_deviation(net1[0], net1[1], net2[0], rates) > 1e-3


def test_numeric_equivalence_argument_checks(net1):
    G, k = load_fixture("zero_to_x.crn")
    with pytest.raises(DimensionMismatchError):
        numeric_equivalence_deviation(net1[0], net1[1], G, k)
    with pytest.raises(ValueError):
        numeric_equivalence_deviation(net1[0], net1[1], net1[0], net1[1], samples=0)


def test_simulation_preserves_conservation_laws():
    # X + Y <-> Z keeps X + Z and Y + Z constant
    xy, z = (Fraction(1), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))
    G = EGraph.from_edges(3, [(xy, z), (z, xy)], ("X", "Y", "Z"))
    k = {Edge(xy, z): Fraction(2), Edge(z, xy): Fraction(1)}
    laws = np.array([[float(c) for c in law] for law in conservation_laws(G)])
    assert laws.shape == (2, 3)
    trajectory = simulate(G, k, [1.0, 2.0, 0.5], 10.0)
    totals = trajectory.states @ laws.T
    assert np.allclose(totals, totals[0], atol=1e-6)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Shared pytest fixtures: fixture networks, known flux tables and seeded random graphs
"""

import os
import random
import sys
from fractions import Fraction
from typing import Dict, Optional

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from crn_analysis import EGraph, Edge, parse_network  # noqa: E402

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")

# complexes in (X, Y) coordinates
ZERO = (Fraction(0), Fraction(0))
X = (Fraction(1), Fraction(0))
Y = (Fraction(0), Fraction(1))
XY = (Fraction(1), Fraction(1))
Y3 = (Fraction(0), Fraction(3))
XY2 = (Fraction(1), Fraction(2))


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURE_DIR, name)


def load_fixture(name: str):
    with open(fixture_path(name), "r", encoding="utf-8") as f:
        return parse_network(f.read())


def flux(pairs) -> Dict[Edge, Fraction]:
    return {Edge(s, t): Fraction(v) for s, t, v in pairs}


@pytest.fixture
def thomas():
    return load_fixture("thomas.crn")


@pytest.fixture
def selkov():
    return load_fixture("selkov.crn")


@pytest.fixture
def net1():
    return load_fixture("net1.crn")


@pytest.fixture
def net2():
    return load_fixture("net2.crn")


@pytest.fixture
def thomas_realized_flux():
    """Complex-balanced flux on the weakly reversible Thomas realization"""
    return flux([
        (ZERO, X, 1), (ZERO, Y, 1), (ZERO, XY, 2),
        (X, ZERO, 2), (Y, ZERO, 2),
        (XY, X, 1), (XY, Y, 1),
    ])


@pytest.fixture
def selkov_realized_flux():
    """Complex-balanced flux on the weakly reversible Selkov realization"""
    return flux([
        (Y, Y3, 1), (Y, XY2, 1), (Y, X, 1),
        (XY2, X, 1), (XY2, Y3, 2),
        (X, XY2, 2), (Y3, Y, 3),
    ])


def random_egraph(
    rng: random.Random,
    dimension: int,
    max_vertices: int = 6,
    max_edges: int = 10,
    coord_max: int = 2
) -> Optional[EGraph]:
    """Random graph on distinct lattice points; None when the draw has no edges"""
    points = set()
    count = rng.randint(2, max_vertices)
    while len(points) < count:
        points.add(tuple(Fraction(rng.randint(0, coord_max)) for _ in range(dimension)))
    points = sorted(points)
    edges = set()
    for _ in range(rng.randint(1, max_edges)):
        s, t = rng.sample(points, 2)
        edges.add((s, t))
    if not edges:
        return None
    return EGraph.from_edges(dimension, sorted(edges))


def random_weakly_reversible(rng: random.Random, dimension: int, coord_max: int = 2) -> EGraph:
    """Union of random directed cycles on distinct lattice points"""
    points = set()
    count = rng.randint(2, 5)
    while len(points) < count:
        points.add(tuple(Fraction(rng.randint(0, coord_max)) for _ in range(dimension)))
    points = sorted(points)
    edges = set()
    for _ in range(rng.randint(1, 2)):
        cycle = rng.sample(points, rng.randint(2, len(points)))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            edges.add((a, b))
    return EGraph.from_edges(dimension, sorted(edges))


def random_rates(rng: random.Random, G: EGraph) -> Dict[Edge, Fraction]:
    return {e: Fraction(rng.randint(1, 9), rng.randint(1, 4)) for e in G.edges}

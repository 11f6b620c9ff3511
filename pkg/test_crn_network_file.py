#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for reading and writing network files
"""

from fractions import Fraction

import pytest

from conftest import X, Y, ZERO
from crn_analysis import Edge, NetworkParseError, parse_network, print_network


def test_parse_with_rates_and_comments():
    G, k = parse_network("# header comment\nspecies X Y\n\n0 -> X : 3  # inflow\nX + Y -> X : 1/2\n")
    assert G.species == ("X", "Y")
    assert set(G.edges) == {Edge(ZERO, X), Edge((Fraction(1), Fraction(1)), X)}
    assert k[Edge(ZERO, X)] == 3
    assert k[Edge((Fraction(1), Fraction(1)), X)] == Fraction(1, 2)


def test_parse_without_rates():
    G, k = parse_network("species X Y\nX -> Y\n")
    assert k is None
    assert G.edges == (Edge(X, Y),)


def test_parse_reversible_sugar():
    G, k = parse_network("species X Y\nX <-> Y : 2, 1/2\n")
    assert k == {Edge(X, Y): Fraction(2), Edge(Y, X): Fraction(1, 2)}


def test_parse_coefficients():
    G, _ = parse_network("species A B\n3/2A + 2B -> 0.5A\n")
    assert G.edges == (Edge((Fraction(3, 2), Fraction(2)), (Fraction(1, 2), Fraction(0))),)


def test_parse_empty_network():
    G, k = parse_network("species X\n")
    assert G.edges == ()
    assert G.dimension == 1
    assert k is None


@pytest.mark.parametrize("text, line, column", [
    ("X -> Y\n", 1, 1),
    ("species X Y\nX -> Z : 1\n", 2, 6),
    ("species X\nX -> X\n", 2, 3),
    ("species X\n0 X\n", 2, 4),
    ("species X\n0 -> X : 0\n", 2, None),
    ("species X Y\nX <-> Y : 1\n", 2, None),
    ("species X Y\nX -> Y : 1\nY -> X\n", 3, 1),
    ("species X Y\nX -> Y\nX -> Y\n", 3, 1),
    ("", 1, 1),
])
def test_parse_errors_carry_location(text, line, column):
    with pytest.raises(NetworkParseError) as error:
        parse_network(text)
    assert error.value.line == line
    if column is not None:
        assert error.value.column == column


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        parse_network("species X X\n")


def test_print_then_parse_preserves_network(thomas, selkov):
    for G, k in (thomas, selkov):
        G2, k2 = parse_network(print_network(G, k))
        assert set(G2.edges) == set(G.edges)
        assert k2 == k
        assert G2.species == G.species


def test_print_formats_complexes():
    G, k = parse_network("species X Y\n0 -> 3/2X + Y : 1/3\n")
    assert print_network(G, k) == "species X Y\n0 -> 3/2X + Y : 1/3\n"
    assert print_network(G) == "species X Y\n0 -> 3/2X + Y\n"

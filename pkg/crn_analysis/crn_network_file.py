#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Plain-text network files

    # Thomas-type model
    species X Y
    0 -> X : 3
    X + Y -> X : 1
    X <-> Y : 2, 1/2

The first non-comment line declares the species order. Complexes are
`0` or sums of `[coeff]Name` terms; coefficients may be integers,
fractions (`3/2X`) or decimals. Rates are all present or all absent.
"""

import logging
import re
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from .crn_errors import NetworkParseError
from .crn_graph import EGraph, Edge, RateVector
from .crn_vectors import Vector, format_fraction, zero_vector

logger = logging.getLogger(__name__)

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_TERM = re.compile(rf"\s*(?P<coeff>\d+/\d+|\d*\.\d+|\d+\.?)?\s*(?P<name>{_NAME})\s*$")
_ARROW = re.compile(r"<->|->")


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0]


def _parse_rate(text: str, line: int, column: int) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise NetworkParseError(f"Invalid rate '{text.strip()}'", line, column)
    if value <= 0:
        raise NetworkParseError(f"Rate must be positive, got {text.strip()}", line, column)
    return value


def _parse_complex(text: str, species: Dict[str, int], line: int, column: int) -> Vector:
    if not text.strip():
        raise NetworkParseError("Missing complex", line, column)
    if text.strip() == "0":
        return zero_vector(len(species))
    coords = [Fraction(0)] * len(species)
    offset = column
    for term in text.split("+"):
        match = _TERM.match(term)
        if match is None:
            raise NetworkParseError(f"Cannot read term '{term.strip()}'", line, offset + len(term) - len(term.lstrip()))
        name = match.group("name")
        if name not in species:
            raise NetworkParseError(f"Unknown species '{name}'", line, offset + match.start("name"))
        coeff = Fraction(match.group("coeff").rstrip(".")) if match.group("coeff") else Fraction(1)
        if coeff <= 0:
            raise NetworkParseError(f"Coefficient of {name} must be positive", line, offset + match.start("coeff"))
        coords[species[name]] += coeff
        offset += len(term) + 1
    return tuple(coords)


def _parse_header(text: str, line: int) -> List[str]:
    words = text.split()
    if not words or words[0] != "species":
        raise NetworkParseError("Expected a 'species' declaration first", line, 1)
    names = words[1:]
    if not names:
        raise NetworkParseError("No species declared", line, 1)
    for name in names:
        if not re.fullmatch(_NAME, name):
            raise NetworkParseError(f"Invalid species name '{name}'", line, text.index(name) + 1)
    duplicates = {n for n in names if names.count(n) > 1}
    if duplicates:
        raise NetworkParseError(f"Species declared twice: {sorted(duplicates)}", line, 1)
    return names


def parse_network(text: str) -> Tuple[EGraph, Optional[RateVector]]:
    """Parse a network file into a graph and, if every reaction carries one, its rates"""
    species: Optional[Dict[str, int]] = None
    names: List[str] = []
    reactions: List[Tuple[Edge, Optional[Fraction], int]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        if species is None:
            names = _parse_header(body, number)
            species = {name: i for i, name in enumerate(names)}
            continue

        arrow = _ARROW.search(body)
        if arrow is None:
            raise NetworkParseError("Expected '->' or '<->'", number, len(body.rstrip()) + 1)
        reversible = arrow.group() == "<->"
        rest = body[arrow.end():]
        rate_text = None
        if ":" in rest:
            rest, rate_text = rest.split(":", 1)
        rate_column = arrow.end() + len(rest) + 2

        left = _parse_complex(body[:arrow.start()], species, number, 1)
        right = _parse_complex(rest, species, number, arrow.end() + 1)
        if left == right:
            raise NetworkParseError("Reaction from a complex to itself", number, arrow.start() + 1)

        rates: List[Optional[Fraction]] = [None, None] if reversible else [None]
        if rate_text is not None:
            parts = rate_text.split(",")
            if len(parts) != len(rates):
                expected = "two rates 'fwd, back'" if reversible else "one rate"
                raise NetworkParseError(f"Expected {expected}", number, rate_column)
            rates = [_parse_rate(p, number, rate_column) for p in parts]

        reactions.append((Edge(left, right), rates[0], number))
        if reversible:
            reactions.append((Edge(right, left), rates[1], number))

    if species is None:
        raise NetworkParseError("Empty network file: missing 'species' declaration", 1, 1)

    seen = set()
    for e, _, number in reactions:
        if e in seen:
            raise NetworkParseError("Duplicate reaction", number, 1)
        seen.add(e)

    with_rate = [r for r in reactions if r[1] is not None]
    if with_rate and len(with_rate) != len(reactions):
        missing = next(number for _, rate, number in reactions if rate is None)
        raise NetworkParseError("Rates must be given on every reaction or on none", missing, 1)

    dimension = len(names)
    if not reactions:
        return EGraph.empty(dimension, names), None
    G = EGraph.from_edges(dimension, [e for e, _, _ in reactions], names)
    k = {e: rate for e, rate, _ in reactions} if with_rate else None
    logger.debug(f"Parsed {len(G.edges)} reactions over {dimension} species")
    return G, k


def format_complex(y: Vector, species: Tuple[str, ...]) -> str:
    terms = []
    for coeff, name in zip(y, species):
        if coeff == 0:
            continue
        terms.append(name if coeff == 1 else f"{format_fraction(coeff)}{name}")
    return " + ".join(terms) if terms else "0"


def print_network(G: EGraph, k: Optional[Mapping[Edge, Fraction]] = None) -> str:
    """Inverse of parse_network"""
    species = G.species_names()
    lines = ["species " + " ".join(species)]
    for e in G.edges:
        line = f"{format_complex(e.source, species)} -> {format_complex(e.target, species)}"
        if k is not None:
            line += f" : {format_fraction(k[e])}"
        lines.append(line)
    return "\n".join(lines) + "\n"

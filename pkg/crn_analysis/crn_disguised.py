#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Disguised toric locus via exact linear programs.

Flux equivalence plus complex balance on the complete graph decides
whether some rate vector of a network is dynamically equivalent to a
complex-balanced system; fixing either the state or the rates turns the
remaining questions into LPs as well.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence

from .crn_errors import InternalInvariantError
from .crn_endotactic import net_reaction_vector
from .crn_graph import (
    EGraph,
    Edge,
    RateVector,
    complete_graph,
    is_weakly_reversible,
    reaction_vector,
    source_vertices,
    validate_rates,
)
from .crn_lp import LinProgram, LpStatus, positive_combination, simplex_solve
from .crn_massaction import monomial
from .crn_realization import rate_solve
from .crn_vectors import Vector, add, is_zero, scale, zero_vector

logger = logging.getLogger(__name__)

FluxVector = Dict[Edge, Fraction]


@dataclass
class P2Result:
    flux: FluxVector
    complete_flux: FluxVector
    support: EGraph


@dataclass
class P1Result:
    graph: EGraph
    rates: RateVector
    zeta: Dict[Edge, Fraction] = field(default_factory=dict)
    source: str = "p2_support"


def _flux_vector(G: EGraph, J: Mapping[Edge, Fraction], y: Vector) -> Vector:
    w = zero_vector(G.dimension)
    for e in G.out_edges(y):
        w = add(w, scale(J.get(e, Fraction(0)), reaction_vector(e)))
    return w


def check_p2_certificate(G: EGraph, J: Mapping[Edge, Fraction], J2: Mapping[Edge, Fraction]) -> bool:
    """Replay flux equivalence and complex-balance flux exactly"""
    if any(value <= 0 for value in J.values()) or set(J) != set(G.edges):
        return False
    Gc = complete_graph(G)
    if any(value < 0 for value in J2.values()) or not set(J2) <= set(Gc.edges):
        return False
    for y in G.vertices:
        if _flux_vector(G, J, y) != _flux_vector(Gc, J2, y):
            return False
        outflow = sum((v for e, v in J2.items() if e.source == y), Fraction(0))
        inflow = sum((v for e, v in J2.items() if e.target == y), Fraction(0))
        if outflow != inflow:
            return False
    return True


def solve_p2(G: EGraph, pinned: Optional[Mapping[Edge, Fraction]] = None) -> Optional[P2Result]:
    """
    Fluxes J >= 1 on G and J' >= 0 on its complete graph with equal net
    flux at every vertex and balanced J', minimizing the total of J'.

    With `pinned`, J is fixed to the given values instead of J >= 1.
    Returns None when the program is infeasible.
    """
    if not G.edges:
        return P2Result({}, {}, EGraph.empty(G.dimension, G.species))
    Gc = complete_graph(G)
    j_names = [f"J{i}" for i in range(len(G.edges))]
    c_names = [f"C{i}" for i in range(len(Gc.edges))]
    p = LinProgram(j_names + c_names, tuple([Fraction(0)] * len(j_names) + [Fraction(1)] * len(c_names)), "min")
    for name, e in zip(j_names, G.edges):
        if pinned is None:
            p.bounds[name] = (Fraction(1), None)
        else:
            p.bounds[name] = (Fraction(pinned[e]), Fraction(pinned[e]))

    j_of = dict(zip(G.edges, j_names))
    c_of = dict(zip(Gc.edges, c_names))
    for y in G.vertices:
        for i in range(G.dimension):
            row: Dict[str, Fraction] = {}
            for e in G.out_edges(y):
                if reaction_vector(e)[i] != 0:
                    row[j_of[e]] = reaction_vector(e)[i]
            for f in Gc.out_edges(y):
                if reaction_vector(f)[i] != 0:
                    row[c_of[f]] = -reaction_vector(f)[i]
            if row:
                p.add_constraint(row, "=", 0)
        balance = {c_of[f]: Fraction(1) for f in Gc.out_edges(y)}
        for f in Gc.in_edges(y):
            balance[c_of[f]] = balance.get(c_of[f], Fraction(0)) - 1
        p.add_constraint(balance, "=", 0)

    solution = simplex_solve(p)
    if solution.status != LpStatus.OPTIMAL:
        logger.info(f"P2 is {solution.status.value}: the disguised toric locus is empty")
        return None
    J = {e: solution.assignment[j_of[e]] for e in G.edges}
    J2 = {f: solution.assignment[c_of[f]] for f in Gc.edges}
    support = extract_wr_support(J2, G.dimension, G.species)
    logger.info(f"P2 feasible: support has {len(support.edges)} edges, total flux {solution.objective_value}")
    return P2Result(J, J2, support)


def extract_wr_support(J2: Mapping[Edge, Fraction], dimension: int, species: Sequence[str] = ()) -> EGraph:
    """Edges carrying positive flux; a balanced flux can only support cycles"""
    support = EGraph.from_edges(dimension, [e for e, v in sorted(J2.items()) if v > 0], species)
    if not is_weakly_reversible(support):
        raise InternalInvariantError("Support of a balanced flux is not weakly reversible")
    return support


def disguised_membership_at(
    G: EGraph,
    k: Mapping[Edge, Fraction],
    G2: EGraph,
    x: Sequence[Fraction],
) -> Optional[RateVector]:
    """Rates k' > 0 on G2, complex-balanced at x, equivalent to (G, k); None when none exist"""
    if len(x) != G.dimension or any(Fraction(v) <= 0 for v in x):
        raise ValueError(f"State must be strictly positive with {G.dimension} entries, got {[str(v) for v in x]}")
    x = [Fraction(v) for v in x]
    validate_rates(G, k)

    if not G2.edges:
        ok = all(is_zero(net_reaction_vector(G, k, y)) for y in source_vertices(G))
        return {} if ok else None

    names = [f"K{i}" for i in range(len(G2.edges))] + ["t"]
    k_of = dict(zip(G2.edges, names))
    p = LinProgram(names, tuple([Fraction(0)] * len(G2.edges) + [Fraction(1)]), "max")
    p.bounds["t"] = (None, Fraction(1))
    for f in G2.edges:
        p.add_constraint({k_of[f]: Fraction(1), "t": Fraction(-1)}, ">=", 0)

    for y in sorted(set(G.vertices) | set(G2.vertices)):
        weight = monomial(x, y)
        w = scale(weight, net_reaction_vector(G, k, y))
        for i in range(G.dimension):
            row = {k_of[f]: weight * reaction_vector(f)[i] for f in G2.out_edges(y) if reaction_vector(f)[i] != 0}
            if row:
                p.add_constraint(row, "=", w[i])
            elif w[i] != 0:
                return None

    for y in G2.vertices:
        balance: Dict[str, Fraction] = {}
        for f in G2.out_edges(y):
            balance[k_of[f]] = balance.get(k_of[f], Fraction(0)) + monomial(x, y)
        for f in G2.in_edges(y):
            balance[k_of[f]] = balance.get(k_of[f], Fraction(0)) - monomial(x, f.source)
        p.add_constraint(balance, "=", 0)

    solution = simplex_solve(p)
    if solution.status != LpStatus.OPTIMAL or solution.objective_value <= 0:
        return None
    return {f: solution.assignment[k_of[f]] for f in G2.edges}


def _positive_circulation(G: EGraph) -> Optional[List[Fraction]]:
    index = {v: i for i, v in enumerate(G.vertices)}
    columns = []
    for e in G.edges:
        column = [Fraction(0)] * len(G.vertices)
        column[index[e.source]] -= 1
        column[index[e.target]] += 1
        columns.append(tuple(column))
    return positive_combination(columns, zero_vector(len(G.vertices)))


def solve_p1_fixed_k(G: EGraph, k: Mapping[Edge, Fraction]) -> Optional[P1Result]:
    """
    A weakly reversible graph G2 inside the complete graph with rates k2
    equivalent to (G, k), plus zeta making zeta*k2 a balanced flux.

    Candidates, in order: G itself when weakly reversible, the support of
    the P2 solution, and the support of P2 with J pinned to k.
    """
    validate_rates(G, k)
    if is_weakly_reversible(G):
        circulation = _positive_circulation(G)
        if circulation is None:
            raise InternalInvariantError("Weakly reversible graph without a positive circulation")
        zeta = {e: c / k[e] for e, c in zip(G.edges, circulation)}
        return P1Result(G, dict(k), zeta, "identity")

    general = solve_p2(G)
    if general is None:
        return None
    for label, candidate in (("p2_support", general), ("p2_pinned", None)):
        if candidate is None:
            candidate = solve_p2(G, pinned=k)
            if candidate is None:
                continue
        G2 = candidate.support
        k2 = rate_solve(G, k, G2)
        if k2 is None:
            logger.debug(f"Candidate {label} admits no positive rates for this k")
            continue
        zeta = {f: candidate.complete_flux[f] / k2[f] for f in G2.edges}
        return P1Result(G2, k2, zeta, label)
    return None

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Weakly reversible realizations of mass-action systems

Builds a weakly reversible graph on the source vertices that generates
the same vector field, solves for its rate constants exactly and
certifies the result.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Set, Tuple

from .crn_errors import (
    DegenerateHullError,
    DimensionMismatchError,
    HypothesisFailedError,
    InteriorSourcesError,
    InternalInvariantError,
    NeitherConditionHoldsError,
    NotStronglyEndotacticError,
)
from .crn_endotactic import (
    DEFAULT_MAX_HYPERPLANES,
    is_strongly_endotactic,
    net_reaction_vector,
    points_strictly_inward,
)
from .crn_geometry import (
    HullClassification2D,
    classify_hull_2d,
    cross,
    newton_polytope,
    points_into_relative_interior,
)
from .crn_graph import (
    EGraph,
    Edge,
    RateVector,
    is_weakly_reversible,
    linkage_classes,
    reaction_vector,
    source_vertices,
    stoichiometric_dimension,
    stoichiometric_subspace,
    strong_components,
    validate_rates,
)
from .crn_lp import LinProgram, LpStatus, positive_combination, simplex_solve
from .crn_vectors import Vector, add, format_vector, is_zero, scale, spans_equal, sub, zero_vector

logger = logging.getLogger(__name__)

Certificate = Dict[Vector, Tuple[Vector, Vector]]


@dataclass
class RealizationResult:
    """Target graph, its rates, and the per-source net vectors of both systems"""
    target: EGraph
    rates: RateVector
    certificate: Certificate
    method: str
    details: Dict[str, object] = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Equivalence
# ---------------------------------------------------------------------------

def _check_dimensions(G: EGraph, G2: EGraph) -> None:
    if G.dimension != G2.dimension:
        raise DimensionMismatchError(f"Networks live in dimensions {G.dimension} and {G2.dimension}")


def equivalence_certificate(G: EGraph, k: Mapping[Edge, Fraction], G2: EGraph, k2: Mapping[Edge, Fraction]) -> Certificate:
    """Net reaction vector of each system at every source of either system"""
    _check_dimensions(G, G2)
    sources = sorted(source_vertices(G) | source_vertices(G2))
    return {y: (net_reaction_vector(G, k, y), net_reaction_vector(G2, k2, y)) for y in sources}


def verify_equivalence(G: EGraph, k: Mapping[Edge, Fraction], G2: EGraph, k2: Mapping[Edge, Fraction]) -> bool:
    """True iff both mass-action systems generate the same vector field"""
    return all(a == b for a, b in equivalence_certificate(G, k, G2, k2).values())


# ---------------------------------------------------------------------------
# Rates on a fixed target
# ---------------------------------------------------------------------------

def _solve_vertex(target: EGraph, y: Vector, w: Vector) -> Optional[Dict[Edge, Fraction]]:
    edges = target.out_edges(y)
    coefficients = positive_combination([reaction_vector(e) for e in edges], w)
    if coefficients is None:
        return None
    return dict(zip(edges, coefficients))


def rate_solve(G: EGraph, k: Mapping[Edge, Fraction], target: EGraph) -> Optional[RateVector]:
    """Strictly positive rates on `target` reproducing the net vectors of (G, k), or None"""
    target_sources = source_vertices(target)
    for y in sorted(source_vertices(G)):
        if y not in target_sources and not is_zero(net_reaction_vector(G, k, y)):
            logger.warning(f"Source {format_vector(y)} has a nonzero net vector but no edge in the target")
            return None

    rates: RateVector = {}
    for y in sorted(target_sources):
        solved = _solve_vertex(target, y, net_reaction_vector(G, k, y))
        if solved is None:
            logger.debug(f"No strictly positive rates at {format_vector(y)}")
            return None
        rates.update(solved)
    return rates


def probe_inclusion(G: EGraph, target: EGraph, trials: int = 20, seed: int = 0) -> Tuple[int, int]:
    """Count random rate vectors on G for which `target` admits equivalent rates"""
    rng = random.Random(seed)
    successes = 0
    for _ in range(trials):
        k = {e: Fraction(rng.randint(1, 20), rng.randint(1, 5)) for e in G.edges}
        if rate_solve(G, k, target) is not None:
            successes += 1
    logger.info(f"Inclusion probe: {successes}/{trials} random rate vectors realized")
    return successes, trials


# ---------------------------------------------------------------------------
# Two-dimensional construction
# ---------------------------------------------------------------------------

def _corner_directions(hull: HullClassification2D, c: Vector, r: Vector) -> Tuple[bool, bool]:
    """Express r in the tangent cone at corner c; report which adjacent corners it leans on"""
    prev, nxt = hull.adjacent_corners(c)
    pc = hull.project(c)
    a = tuple(p - q for p, q in zip(hull.project(prev), pc))
    b = tuple(p - q for p, q in zip(hull.project(nxt), pc))
    rr = (r[hull.chart[0]], r[hull.chart[1]])
    det = a[0] * b[1] - a[1] * b[0]
    alpha = (rr[0] * b[1] - rr[1] * b[0]) / det
    beta = (a[0] * rr[1] - a[1] * rr[0]) / det
    if alpha < 0 or beta < 0:
        raise InternalInvariantError(f"Reaction {format_vector(r)} at corner {format_vector(c)} leaves the tangent cone")
    return alpha > 0, beta > 0


def _boundary_edges(G: EGraph, hull: HullClassification2D) -> Set[Tuple[Vector, Vector]]:
    boundary = hull.boundary_cycle
    edges: Set[Tuple[Vector, Vector]] = set()

    for c in hull.corner:
        prev, nxt = hull.adjacent_corners(c)
        to_prev = to_next = False
        for e in G.out_edges(c):
            lean_prev, lean_next = _corner_directions(hull, c, reaction_vector(e))
            to_prev |= lean_prev
            to_next |= lean_next
        if to_prev and to_next:
            edges.update((c, y) for y in boundary if y != c)
        elif to_prev:
            edges.update((c, y) for y in [prev] + hull.sides_between(c, prev))
        elif to_next:
            edges.update((c, y) for y in [nxt] + hull.sides_between(c, nxt))
        logger.debug(f"Corner {format_vector(c)}: prev={to_prev} next={to_next}")

    for s in hull.side:
        a, b, _ = hull.side_between[s]
        edges.add((s, a))
        edges.add((s, b))
        ps, pb = hull.project(s), hull.project(b)
        inward = any(
            cross(ps, pb, tuple(p + q for p, q in zip(ps, hull.project(reaction_vector(e))))) != 0
            for e in G.out_edges(s)
        )
        if inward:
            edges.add((s, hull.adjacent_corners(b)[1]))
    return edges


def _require_planar(G: EGraph, max_hyperplanes: int) -> HullClassification2D:
    strong, witness = is_strongly_endotactic(G, max_hyperplanes)
    if not strong:
        raise NotStronglyEndotacticError(
            f"Network is not strongly endotactic (direction {format_vector(witness.v)} "
            f"fails at edge {format_vector(witness.violating_edge.source)} -> {format_vector(witness.violating_edge.target)})"
        )
    dim = stoichiometric_dimension(G)
    if dim != 2:
        raise DegenerateHullError(f"Stoichiometric subspace has dimension {dim}, expected 2", dimension=dim)
    hull = classify_hull_2d(G)
    P = newton_polytope(G)
    if not spans_equal(P.direction_space(), stoichiometric_subspace(G), G.dimension):
        raise DegenerateHullError("Source polygon is not parallel to the stoichiometric subspace", dimension=2)
    return hull


def construct_wr_graph_2d(G: EGraph, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> EGraph:
    """
    Weakly reversible single-linkage graph on the sources, all of which lie on the hull boundary.

    The result contains every edge of the minimal boundary realization and may
    contain more: a corner whose reactions lean toward both neighbouring
    corners gets an edge to every other boundary vertex, diagonals included.
    """
    hull = _require_planar(G, max_hyperplanes)
    if hull.interior:
        raise InteriorSourcesError(f"{len(hull.interior)} source vertices lie inside the Newton polygon")
    target = EGraph.from_edges(G.dimension, _boundary_edges(G, hull), G.species)
    _assert_single_wr(target)
    return target


def _assert_single_wr(target: EGraph) -> None:
    if not is_weakly_reversible(target) or len(linkage_classes(target)) != 1:
        raise InternalInvariantError("Constructed graph is not a weakly reversible single linkage class")


def _kappa_limit(generators: List[Vector], direction: Vector, w: Vector) -> Fraction:
    """Largest kappa with w - kappa*direction still in the cone of the generators"""
    names = [f"l{j}" for j in range(len(generators))] + ["kappa"]
    p = LinProgram(names, tuple([Fraction(0)] * len(generators) + [Fraction(1)]), "max")
    for i, value in enumerate(w):
        row = {f"l{j}": g[i] for j, g in enumerate(generators) if g[i] != 0}
        row["kappa"] = direction[i]
        p.add_constraint(row, "=", value)
    solution = simplex_solve(p)
    if solution.status != LpStatus.OPTIMAL or solution.objective_value <= 0:
        raise InternalInvariantError(f"Interior split LP ended with status {solution.status.value}")
    return solution.objective_value


def realize_2d(
    G: EGraph,
    k: Mapping[Edge, Fraction],
    max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES,
    kappa_fraction: Fraction = Fraction(1, 2),
) -> RealizationResult:
    validate_rates(G, k)
    hull = _require_planar(G, max_hyperplanes)
    boundary_edges = _boundary_edges(G, hull)

    if not hull.interior:
        target = EGraph.from_edges(G.dimension, boundary_edges, G.species)
        rates = rate_solve(G, k, target)
        if rates is None:
            raise InternalInvariantError("No positive rates on the boundary construction")
        logger.info(f"2D realization with all {len(hull.boundary_cycle)} sources on the boundary")
        return _finish(G, k, target, rates, "boundary")

    P = newton_polytope(G)
    y0 = None
    for y in hull.boundary_cycle:
        w = net_reaction_vector(G, k, y)
        if not is_zero(w) and points_into_relative_interior(P, y, w):
            y0 = y
            break
    if y0 is None:
        raise NeitherConditionHoldsError(
            f"{len(hull.interior)} interior sources and no boundary net vector points into the Newton polygon"
        )

    interior = list(hull.interior)
    direction = zero_vector(G.dimension)
    for y_star in interior:
        direction = add(direction, sub(y_star, y0))
    w0 = net_reaction_vector(G, k, y0)
    y0_targets = sorted(t for s, t in boundary_edges if s == y0)
    generators = [sub(t, y0) for t in y0_targets]
    kappa = _kappa_limit(generators, direction, w0) * kappa_fraction
    remainder = sub(w0, scale(kappa, direction))

    edges = {(s, t) for s, t in boundary_edges}
    edges.update((y0, y_star) for y_star in interior)
    edges.update((y_star, b) for y_star in interior for b in hull.boundary_cycle)
    target = EGraph.from_edges(G.dimension, edges, G.species)

    rates: RateVector = {}
    split = positive_combination(generators, remainder)
    if split is None:
        raise InternalInvariantError("Reduced net vector left the interior after the split")
    rates.update({Edge(y0, t): value for t, value in zip(y0_targets, split)})
    rates.update({Edge(y0, y_star): kappa for y_star in interior})
    for y in sorted(source_vertices(target)):
        if y == y0:
            continue
        solved = _solve_vertex(target, y, net_reaction_vector(G, k, y))
        if solved is None:
            raise InternalInvariantError(f"No positive rates at {format_vector(y)}")
        rates.update(solved)

    logger.info(f"2D realization through {format_vector(y0)} with {len(interior)} interior sources, kappa={kappa}")
    return _finish(G, k, target, rates, "interior", {"y0": y0, "kappa": kappa})


# ---------------------------------------------------------------------------
# Arbitrary dimension
# ---------------------------------------------------------------------------

def realize_highdim(G: EGraph, k: Mapping[Edge, Fraction]) -> RealizationResult:
    """Fan out one inward-pointing vertex per terminal component to its whole linkage class"""
    validate_rates(G, k)
    if is_weakly_reversible(G):
        return _finish(G, k, G, dict(k), "identity")

    component_of = {}
    terminal = {}
    for index, (component, is_terminal) in enumerate(strong_components(G)):
        terminal[index] = (component, is_terminal)
        for v in component:
            component_of[v] = index

    edges: Dict[Edge, Fraction] = {}
    for L in linkage_classes(G):
        class_edges = [e for e in G.edges if e.source in L]
        if all(component_of[e.source] == component_of[e.target] for e in class_edges):
            edges.update({e: k[e] for e in class_edges})
            continue

        fanned: Dict[Vector, Dict[Edge, Fraction]] = {}
        for index in sorted({component_of[v] for v in L}):
            component, is_terminal = terminal[index]
            if not is_terminal:
                continue
            y = next((v for v in sorted(component) if points_strictly_inward(G, k, v, L)), None)
            if y is None:
                raise HypothesisFailedError(
                    f"Terminal component {[format_vector(v) for v in sorted(component)]} "
                    "has no net reaction vector pointing into its Newton polytope"
                )
            others = [v for v in sorted(L) if v != y]
            alpha = positive_combination([sub(v, y) for v in others], net_reaction_vector(G, k, y))
            if alpha is None:
                raise InternalInvariantError(f"No positive decomposition at {format_vector(y)}")
            fanned[y] = {Edge(y, v): a for v, a in zip(others, alpha)}

        for e in class_edges:
            if e.source not in fanned:
                edges[e] = k[e]
        for replacement in fanned.values():
            edges.update(replacement)

    target = EGraph.from_edges(G.dimension, list(edges), G.species)
    if not is_weakly_reversible(target):
        raise InternalInvariantError("Fanned graph is not weakly reversible")
    logger.info(f"Terminal-component realization with {len(target.edges)} edges")
    return _finish(G, k, target, edges, "terminal")


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------

def _finish(G, k, target, rates, method, details=None) -> RealizationResult:
    if not is_weakly_reversible(target):
        raise InternalInvariantError(f"{method} realization is not weakly reversible")
    certificate = equivalence_certificate(G, k, target, rates)
    if any(a != b for a, b in certificate.values()):
        raise InternalInvariantError(f"{method} realization is not dynamically equivalent")
    return RealizationResult(target, dict(rates), certificate, method, details or {})


def realize(
    G: EGraph,
    k: Mapping[Edge, Fraction],
    mode: str = "auto",
    max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES,
    kappa_fraction: Fraction = Fraction(1, 2),
) -> RealizationResult:
    """
    Weakly reversible realization by the 2D pipeline, the terminal-component pipeline, or by dimension.

    In `auto` a weakly reversible input comes back unchanged. `2d` always runs
    the hull construction, and `highdim` defers to `realize_highdim`.
    """
    if mode not in ("auto", "2d", "highdim"):
        raise ValueError(f"Unknown realization mode: {mode}")
    validate_rates(G, k)
    if mode == "auto" and is_weakly_reversible(G):
        return _finish(G, k, G, dict(k), "identity")
    if mode == "2d" or (mode == "auto" and stoichiometric_dimension(G) == 2):
        return realize_2d(G, k, max_hyperplanes, kappa_fraction)
    return realize_highdim(G, k)

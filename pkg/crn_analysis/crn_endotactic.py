#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Endotactic and strongly endotactic checks, net reaction vectors and the
terminal-component interior condition.

The "for every direction v" quantifier is reduced to one representative
per face of the central hyperplane arrangement cut out by reaction
vectors and source differences: the condition only depends on the sign
of v against those normals. Rays (one-dimensional faces) come from
intersecting hyperplanes; every other face is reached by composing
conformal rays, and the sum of the composed rays lies in that face.
"""

import functools
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .crn_errors import ArrangementTooLargeError
from .crn_geometry import newton_polytope, on_boundary, points_into_relative_interior, tangent_cone_contains
from .crn_graph import EGraph, Edge, linkage_classes, reaction_vector, source_vertices, strong_components
from .crn_vectors import Vector, add, dot, is_zero, null_space, primitive_direction, row_space_basis, scale, sub, zero_vector

logger = logging.getLogger(__name__)

DEFAULT_MAX_HYPERPLANES = 20


@dataclass(frozen=True)
class DirectionWitness:
    """Direction v at which `violating_edge` points down with no rescue"""
    v: Vector
    violating_edge: Edge


@dataclass(frozen=True)
class NetReactionGraph:
    graph: EGraph
    zero_vertices: Tuple[Vector, ...] = ()


@dataclass
class TerminalReport:
    component: FrozenSet[Vector]
    linkage_class: int
    passed: bool
    vertex: Optional[Vector] = None
    net_vector: Optional[Vector] = None
    reason: str = ""


def net_reaction_vector(G: EGraph, k: Mapping[Edge, Fraction], y: Vector) -> Vector:
    """Rate-weighted sum of the reaction vectors leaving y"""
    w = zero_vector(G.dimension)
    for e in G.out_edges(y):
        w = add(w, scale(k[e], reaction_vector(e)))
    return w


def net_reaction_graph(G: EGraph, k: Mapping[Edge, Fraction]) -> NetReactionGraph:
    edges = []
    zero = []
    for y in sorted(source_vertices(G)):
        w = net_reaction_vector(G, k, y)
        if is_zero(w):
            zero.append(y)
            continue
        edges.append((y, add(y, w)))
    if zero:
        logger.warning(f"{len(zero)} source vertices have a zero net reaction vector and carry no edge")
    return NetReactionGraph(EGraph.from_edges(G.dimension, edges, G.species), tuple(zero))


# ---------------------------------------------------------------------------
# The quantifier at a single direction
# ---------------------------------------------------------------------------

def violates_at(G: EGraph, v: Vector, strong: bool = False) -> Optional[Edge]:
    """
    First edge pointing down along v that no other edge rescues, or None.

    A rescue is an edge leaving a source strictly lower along v and pointing
    up along v; in the strong form that source must also be lowest among
    all sources.
    """
    if not G.edges:
        return None
    height = {y: dot(v, y) for y in source_vertices(G)}
    lowest = min(height.values())
    rescue_heights = [
        height[e.source] for e in G.edges
        if dot(v, reaction_vector(e)) > 0 and (not strong or height[e.source] == lowest)
    ]
    best_rescue = min(rescue_heights) if rescue_heights else None
    for e in G.edges:
        if dot(v, reaction_vector(e)) < 0:
            if best_rescue is None or not best_rescue < height[e.source]:
                return e
    return None


# ---------------------------------------------------------------------------
# Arrangement enumeration
# ---------------------------------------------------------------------------

def arrangement_normals(G: EGraph) -> List[Vector]:
    """Distinct hyperplane normals: reaction vectors and differences of sources"""
    normals = {primitive_direction(reaction_vector(e)) for e in G.edges}
    for a, b in itertools.combinations(sorted(source_vertices(G)), 2):
        normals.add(primitive_direction(sub(a, b)))
    return sorted(normals)


def arrangement_representatives(G: EGraph, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> List[Vector]:
    """One nonzero direction in every relatively open face of the arrangement"""
    normals = arrangement_normals(G)
    if not normals:
        return []
    if len(normals) > max_hyperplanes:
        raise ArrangementTooLargeError(
            f"Arrangement has {len(normals)} hyperplanes, limit is {max_hyperplanes}"
        )

    # work inside span(normals); the orthogonal part of v never matters
    basis = row_space_basis(normals, G.dimension)
    d = len(basis)
    local = [tuple(dot(h, b) for b in basis) for h in normals]

    rays: Dict[bytes, Vector] = {}
    ray_signs: List[np.ndarray] = []
    for subset in itertools.combinations(range(len(local)), d - 1):
        line = _kernel_line([local[i] for i in subset], d)
        if line is None:
            continue
        for direction in (line, scale(Fraction(-1), line)):
            signs = _signs(local, direction)
            key = signs.tobytes()
            if key not in rays:
                rays[key] = direction
                ray_signs.append(signs)

    ray_vectors = list(rays.values())
    ray_matrix = np.array(ray_signs, dtype=np.int8)
    faces: Dict[bytes, Vector] = dict(rays)
    frontier = [(s, rays[s.tobytes()]) for s in ray_signs]
    while frontier:
        sigma, rep = frontier.pop()
        conformal = ~np.any(sigma * ray_matrix < 0, axis=1)
        grows = np.any((sigma == 0) & (ray_matrix != 0), axis=1)
        for r in np.nonzero(conformal & grows)[0]:
            composed = np.where(sigma != 0, sigma, ray_matrix[r]).astype(np.int8)
            key = composed.tobytes()
            if key not in faces:
                combined = add(rep, ray_vectors[r])
                faces[key] = combined
                frontier.append((composed, combined))

    logger.debug(f"Arrangement: {len(normals)} hyperplanes, {len(ray_vectors)} rays, {len(faces)} faces")
    return [_lift(c, basis, G.dimension) for c in faces.values()]


def _kernel_line(rows: Sequence[Vector], d: int) -> Optional[Vector]:
    """Spanning vector of the kernel of d - 1 rows when that kernel is a line"""
    if d == 1:
        return (Fraction(1),)
    if d == 2:
        a, b = rows[0]
        return None if a == 0 and b == 0 else (-b, a)
    if d == 3:
        (a1, a2, a3), (b1, b2, b3) = rows
        line = (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
        return None if is_zero(line) else line
    kernel = null_space(rows, d)
    return kernel[0] if len(kernel) == 1 else None


def _signs(local: Sequence[Vector], c: Vector) -> np.ndarray:
    return np.array([(x > 0) - (x < 0) for x in (dot(h, c) for h in local)], dtype=np.int8)


def _lift(c: Vector, basis: Sequence[Vector], dimension: int) -> Vector:
    v = zero_vector(dimension)
    for coefficient, b in zip(c, basis):
        v = add(v, scale(coefficient, b))
    return v


def _decide(G: EGraph, strong: bool, max_hyperplanes: int) -> Tuple[bool, Optional[DirectionWitness]]:
    for v in arrangement_representatives(G, max_hyperplanes):
        e = violates_at(G, v, strong)
        if e is not None:
            return False, DirectionWitness(v, e)
    return True, None


def is_endotactic(G: EGraph, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> Tuple[bool, Optional[DirectionWitness]]:
    return _decide(G, False, max_hyperplanes)


def is_strongly_endotactic(G: EGraph, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> Tuple[bool, Optional[DirectionWitness]]:
    return _decide(G, True, max_hyperplanes)


# ---------------------------------------------------------------------------
# Brute-force oracle in the plane
# ---------------------------------------------------------------------------

def _half(v: Vector) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_order(a: Vector, b: Vector) -> int:
    if _half(a) != _half(b):
        return _half(a) - _half(b)
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def sweep_directions_2d(G: EGraph) -> List[Vector]:
    """Every boundary angle of the arrangement plus three directions inside each arc"""
    if G.dimension != 2:
        raise ValueError(f"Angular sweep needs a planar network, got dimension {G.dimension}")
    angles = {}
    for h in arrangement_normals(G):
        for u in ((-h[1], h[0]), (h[1], -h[0])):
            lead = max(abs(u[0]), abs(u[1]))
            u = (u[0] / lead, u[1] / lead)
            angles[u] = u
    ordered = sorted(angles.values(), key=functools.cmp_to_key(_angle_order))
    samples = list(ordered)
    for i, u in enumerate(ordered):
        w = ordered[(i + 1) % len(ordered)]
        if u[0] * w[1] - u[1] * w[0] > 0:
            for a, b in ((1, 1), (1, 3), (3, 1)):
                samples.append((a * u[0] + b * w[0], a * u[1] + b * w[1]))
        else:
            turned = (-u[1], u[0])
            for t in (-1, 0, 1):
                samples.append((turned[0] + t * u[0], turned[1] + t * u[1]))
    return [tuple(Fraction(x) for x in s) for s in samples]


def endotactic_by_angular_sweep(G: EGraph, strong: bool = False) -> Tuple[bool, Optional[DirectionWitness]]:
    for v in sweep_directions_2d(G):
        e = violates_at(G, v, strong)
        if e is not None:
            return False, DirectionWitness(v, e)
    return True, None


# ---------------------------------------------------------------------------
# Terminal components
# ---------------------------------------------------------------------------

def points_strictly_inward(G: EGraph, k: Mapping[Edge, Fraction], y: Vector, members: FrozenSet[Vector]) -> bool:
    """Net vector at y is nonzero and lies in the open tangent cone of New(members) at y"""
    P = newton_polytope(G, members)
    if y not in P.generators:
        return False
    w = net_reaction_vector(G, k, y)
    if is_zero(w):
        return False
    if on_boundary(P, y):
        return points_into_relative_interior(P, y, w)
    return tangent_cone_contains(P, y, w)


def check_terminal_interior(G: EGraph, k: Mapping[Edge, Fraction]) -> Tuple[bool, List[TerminalReport]]:
    """Every terminal component must hold a vertex whose net vector points into New(L)"""
    classes = linkage_classes(G)
    reports: List[TerminalReport] = []
    for component, terminal in strong_components(G):
        if not terminal:
            continue
        index = next(i for i, L in enumerate(classes) if component <= L)
        chosen = next((y for y in sorted(component) if points_strictly_inward(G, k, y, classes[index])), None)
        if chosen is None:
            reason = "no vertex with a net reaction vector pointing into the Newton polytope of its linkage class"
            reports.append(TerminalReport(component, index, False, reason=reason))
        else:
            reports.append(TerminalReport(component, index, True, chosen, net_reaction_vector(G, k, chosen)))
    ok = all(r.passed for r in reports)
    logger.info(f"Terminal interior check: {sum(r.passed for r in reports)}/{len(reports)} components pass")
    return ok, reports

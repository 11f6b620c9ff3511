#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Convex geometry of source vertices and reaction cones.

Membership and relative-interior questions are answered with exact LPs,
so they work in any ambient dimension. Only the 2D boundary walk needs
an explicit polygon.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .crn_errors import DegenerateHullError, InternalInvariantError
from .crn_graph import EGraph, reaction_vector, source_vertices
from .crn_lp import nonnegative_combination, positive_combination
from .crn_vectors import Vector, dot, is_zero, rank, row_space_basis, spans_equal, sub

logger = logging.getLogger(__name__)


class ConeClass(str, Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"
    ZERO_CONE = "zero_cone"


@dataclass(frozen=True)
class NewtonPolytope:
    """Convex hull of a set of source vertices"""
    generators: Tuple[Vector, ...]
    affine_dim: int
    dimension: int

    def direction_space(self) -> List[Vector]:
        if not self.generators:
            return []
        base = self.generators[0]
        return row_space_basis([sub(g, base) for g in self.generators[1:]], self.dimension)


def newton_polytope(G: EGraph, vertices: Optional[Iterable[Vector]] = None) -> NewtonPolytope:
    """Polytope of the sources of G, optionally restricted to a vertex collection"""
    sources = source_vertices(G)
    if vertices is not None:
        sources = sources & frozenset(vertices)
    generators = tuple(sorted(sources))
    return NewtonPolytope(generators, _affine_dimension(generators, G.dimension), G.dimension)


def _affine_dimension(points: Tuple[Vector, ...], dimension: int) -> int:
    if not points:
        return -1
    return rank([sub(p, points[0]) for p in points[1:]], dimension)


def tangent_cone_contains(P: NewtonPolytope, y: Vector, w: Vector) -> bool:
    """True iff w lies in the relative interior of the tangent cone of P at y"""
    directions = [sub(g, y) for g in P.generators if g != y]
    return positive_combination(directions, w) is not None


def on_boundary(P: NewtonPolytope, y: Vector) -> bool:
    """True iff the generator y is not in the relative interior of P"""
    if y not in P.generators:
        raise ValueError(f"{list(map(str, y))} is not a generator of the polytope")
    # y in relint iff y = sum lambda_g g with sum lambda_g = 1 and every lambda_g > 0
    lifted = [tuple(g) + (Fraction(1),) for g in P.generators]
    return positive_combination(lifted, tuple(y) + (Fraction(1),)) is None


def cone_membership(G: EGraph, y: Vector, w: Vector) -> ConeClass:
    """Classify w against the cone spanned by the reaction vectors leaving y"""
    if is_zero(w):
        raise ValueError("cone_membership needs a nonzero vector")
    generators = [reaction_vector(e) for e in G.out_edges(y)]
    if not generators:
        return ConeClass.ZERO_CONE
    if positive_combination(generators, w) is not None:
        return ConeClass.INTERIOR
    if nonnegative_combination(generators, w) is not None:
        return ConeClass.BOUNDARY
    return ConeClass.OUTSIDE


def points_into_relative_interior(P: NewtonPolytope, y: Vector, w: Vector) -> bool:
    """True iff y + eps*w lies in relint(P) for all small eps > 0 (y on the boundary)"""
    if is_zero(w):
        raise ValueError("points_into_relative_interior needs a nonzero vector")
    if not on_boundary(P, y):
        raise ValueError(f"{list(map(str, y))} is not on the boundary of the polytope")
    return tangent_cone_contains(P, y, w)


def polytopes_equal(P: NewtonPolytope, Q: NewtonPolytope) -> bool:
    """Exact point-set equality: every generator of each lies in the other"""
    def inside(point: Vector, R: NewtonPolytope) -> bool:
        lifted = [tuple(g) + (Fraction(1),) for g in R.generators]
        return nonnegative_combination(lifted, tuple(point) + (Fraction(1),)) is not None

    if P.dimension != Q.dimension:
        return False
    return all(inside(g, Q) for g in P.generators) and all(inside(g, P) for g in Q.generators)


def subspaces_equal(first: List[Vector], second: List[Vector], dimension: int) -> bool:
    return spans_equal(first, second, dimension)


# ---------------------------------------------------------------------------
# Two-dimensional boundary walk
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HullClassification2D:
    """
    Clockwise boundary of a 2D source polygon.

    `side_between` maps each side vertex to the corners (previous, next)
    flanking it on the cycle and its position nu in (0, 1) along that edge.
    """
    boundary_cycle: Tuple[Vector, ...]
    corner: Tuple[Vector, ...]
    side: Tuple[Vector, ...]
    interior: Tuple[Vector, ...]
    chart: Tuple[int, int]
    side_between: Dict[Vector, Tuple[Vector, Vector, Fraction]] = field(default_factory=dict)

    def adjacent_corners(self, c: Vector) -> Tuple[Vector, Vector]:
        """(previous, next) corner in clockwise order"""
        i = self.corner.index(c)
        return self.corner[i - 1], self.corner[(i + 1) % len(self.corner)]

    def sides_between(self, a: Vector, b: Vector) -> List[Vector]:
        """Side vertices strictly between corners a and b, ordered walking from a to b"""
        forward = sorted((nu, s) for s, (p, q, nu) in self.side_between.items() if (p, q) == (a, b))
        if forward:
            return [s for _, s in forward]
        backward = sorted((nu, s) for s, (p, q, nu) in self.side_between.items() if (p, q) == (b, a))
        return [s for _, s in reversed(backward)]

    def project(self, v: Vector) -> Tuple[Fraction, Fraction]:
        return v[self.chart[0]], v[self.chart[1]]


def cross(o: Tuple[Fraction, Fraction], a: Tuple[Fraction, Fraction], b: Tuple[Fraction, Fraction]) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _choose_chart(directions: List[Vector], dimension: int) -> Tuple[int, int]:
    """Two coordinates on which projection of the affine hull is injective"""
    for i in range(dimension):
        for j in range(i + 1, dimension):
            minor = directions[0][i] * directions[1][j] - directions[0][j] * directions[1][i]
            if minor != 0:
                return i, j
    raise DegenerateHullError("No injective coordinate chart for the source polygon", dimension=2)


def _strict_hull(points: List[Tuple[Tuple[Fraction, Fraction], Vector]]) -> List[Vector]:
    """
    Monotone chain without collinear points, counter-clockwise from the lowest point.

    Yields the same strict vertex cycle as gift wrapping in O(n log n).
    """
    pts = sorted(points)
    if len(pts) < 3:
        return [v for _, v in pts]

    def chain(sequence):
        out = []
        for p in sequence:
            while len(out) >= 2 and cross(out[-2][0], out[-1][0], p[0]) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(list(reversed(pts)))
    return [v for _, v in lower[:-1] + upper[:-1]]


def classify_hull_2d(G: EGraph) -> HullClassification2D:
    """
    Clockwise boundary cycle of the sources with corner, side and interior labels.

    Corners come from the monotone chain hull, equivalent to wrapping the
    projected sources clockwise; side points are then slotted between them.
    """
    P = newton_polytope(G)
    if P.affine_dim < 2:
        raise DegenerateHullError(f"Source vertices span an affine space of dimension {P.affine_dim}", dimension=P.affine_dim)
    if P.affine_dim > 2:
        raise DegenerateHullError(f"Source vertices span an affine space of dimension {P.affine_dim}, expected 2", dimension=P.affine_dim)

    chart = _choose_chart(P.direction_space(), G.dimension)
    projected = {v: (v[chart[0]], v[chart[1]]) for v in P.generators}

    corners = list(reversed(_strict_hull([(projected[v], v) for v in P.generators])))
    # start the clockwise walk at the lexicographically smallest chart point
    start = min(range(len(corners)), key=lambda i: projected[corners[i]])
    corners = corners[start:] + corners[:start]

    side_between: Dict[Vector, Tuple[Vector, Vector, Fraction]] = {}
    cycle: List[Vector] = []
    for i, a in enumerate(corners):
        b = corners[(i + 1) % len(corners)]
        pa, pb = projected[a], projected[b]
        edge = (pb[0] - pa[0], pb[1] - pa[1])
        on_edge = []
        for v in P.generators:
            if v in (a, b):
                continue
            pv = projected[v]
            if cross(pa, pb, pv) != 0:
                continue
            nu = dot((pv[0] - pa[0], pv[1] - pa[1]), edge) / dot(edge, edge)
            if 0 < nu < 1:
                on_edge.append((nu, v))
        cycle.append(a)
        for nu, v in sorted(on_edge):
            side_between[v] = (a, b, nu)
            cycle.append(v)

    boundary = set(cycle)
    interior = tuple(v for v in P.generators if v not in boundary)
    for v in P.generators:
        if on_boundary(P, v) != (v in boundary):
            raise InternalInvariantError(f"Boundary walk and relint LP disagree at {list(map(str, v))}")

    logger.debug(f"Hull: {len(corners)} corners, {len(side_between)} side, {len(interior)} interior")
    return HullClassification2D(
        boundary_cycle=tuple(cycle),
        corner=tuple(corners),
        side=tuple(v for v in cycle if v in side_between),
        interior=interior,
        chart=chart,
        side_between=side_between,
    )


def is_clockwise(H: HullClassification2D) -> bool:
    """Shoelace sign of the corner cycle in the chart coordinates"""
    pts = [H.project(c) for c in H.corner]
    area = sum(
        (pts[i][0] * pts[(i + 1) % len(pts)][1] - pts[(i + 1) % len(pts)][0] * pts[i][1] for i in range(len(pts))),
        Fraction(0),
    )
    return area < 0

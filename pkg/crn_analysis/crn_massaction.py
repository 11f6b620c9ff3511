#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Mass-action vector fields

Exact evaluation at rational points, complex-balance checks, and a
floating-point integrator used only to corroborate exact results.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy.integrate import solve_ivp
from scipy.stats import qmc

from .crn_errors import DimensionMismatchError
from .crn_graph import EGraph, Edge, reaction_vector
from .crn_vectors import Vector, add, scale, zero_vector

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-8
POSITIVITY_FLOOR = 1e-12

State = Union[Sequence[Fraction], Sequence[float], np.ndarray]


def _is_rational(x: State) -> bool:
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in x)


def _check_positive(x: State, dimension: int) -> None:
    if len(x) != dimension:
        raise DimensionMismatchError(f"State has {len(x)} entries, network has {dimension} species")
    if any(v <= 0 for v in x):
        raise ValueError(f"State must be strictly positive, got {[str(v) for v in x]}")


def monomial(x: Sequence[Fraction], y: Vector) -> Fraction:
    """x^y evaluated exactly; exponents must be integers"""
    value = Fraction(1)
    for base, exponent in zip(x, y):
        if exponent.denominator != 1:
            raise ValueError(f"Exact monomial needs integer exponents, got {exponent}")
        value *= Fraction(base) ** int(exponent)
    return value


def _integer_exponents(G: EGraph) -> bool:
    return all(c.denominator == 1 for v in G.vertices for c in v)


def rhs(G: EGraph, k: Mapping[Edge, Fraction], x: State):
    """Mass-action right-hand side; exact Fractions at rational points with integer exponents"""
    _check_positive(x, G.dimension)
    if _is_rational(x) and _integer_exponents(G):
        total = zero_vector(G.dimension)
        for e in G.edges:
            total = add(total, scale(k[e] * monomial(x, e.source), reaction_vector(e)))
        return total
    return vector_field(G, k)(0.0, np.asarray(x, dtype=float))


def is_complex_balanced_at(G: EGraph, k: Mapping[Edge, Fraction], x: Sequence[Fraction]) -> bool:
    """Inflow equals outflow at every vertex, exactly"""
    _check_positive(x, G.dimension)
    for y0 in G.vertices:
        outflow = sum((k[e] * monomial(x, y0) for e in G.out_edges(y0)), Fraction(0))
        inflow = sum((k[e] * monomial(x, e.source) for e in G.in_edges(y0)), Fraction(0))
        if outflow != inflow:
            return False
    return True


def vector_field(G: EGraph, k: Mapping[Edge, Fraction]) -> Callable[[float, np.ndarray], np.ndarray]:
    """Float vector field f(t, x) suitable for scipy integrators"""
    if not G.edges:
        return lambda t, x: np.zeros(G.dimension)
    exponents = np.array([[float(c) for c in e.source] for e in G.edges])
    reactions = np.array([[float(c) for c in reaction_vector(e)] for e in G.edges])
    rates = np.array([float(k[e]) for e in G.edges])

    def f(t: float, x: np.ndarray) -> np.ndarray:
        flux = rates * np.prod(np.power(x, exponents), axis=1)
        return reactions.T @ flux

    return f


@dataclass
class Trajectory:
    times: np.ndarray
    states: np.ndarray
    halted: bool
    species: Tuple[str, ...]

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.states, columns=list(self.species))
        frame.insert(0, "time", self.times)
        return frame

    def to_csv(self, path_or_buf=None) -> Optional[str]:
        return self.to_frame().to_csv(path_or_buf, index=False, float_format="%.17g")


def simulate(
    G: EGraph,
    k: Mapping[Edge, Fraction],
    x0: Sequence[float],
    t_end: float,
    tol: float = DEFAULT_TOLERANCE,
    floor: float = POSITIVITY_FLOOR,
    max_step: float = np.inf,
) -> Trajectory:
    """
    Integrate the mass-action system with adaptive RK45.

    Integration stops early, with `halted` set, as soon as a coordinate
    drops below `floor`. A start already at or below the floor returns the
    single initial state, halted. The absolute tolerance stays three
    orders of magnitude under the floor.
    """
    x0 = np.asarray([float(v) for v in x0])
    _check_positive(x0, G.dimension)
    if t_end <= 0:
        raise ValueError(f"t_end must be positive, got {t_end}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if np.min(x0) <= floor:
        logger.warning(f"Initial state already at or below the positivity floor {floor}")
        return Trajectory(np.array([0.0]), x0.reshape(1, -1), True, G.species_names())

    def positivity(t, x):
        return np.min(x) - floor

    positivity.terminal = True
    positivity.direction = -1

    solution = solve_ivp(
        vector_field(G, k),
        (0.0, float(t_end)),
        x0,
        method="RK45",
        rtol=tol,
        atol=min(tol * 1e-2, floor * 1e-3),
        max_step=max_step,
        events=positivity,
    )
    if solution.status == -1:
        raise RuntimeError(f"Integration failed: {solution.message}")
    halted = solution.status == 1
    if halted:
        logger.warning(f"Integration halted at t={solution.t[-1]:.6g}: a concentration fell below {floor}")
    logger.info(f"Simulated {len(solution.t)} steps up to t={solution.t[-1]:.6g}")
    return Trajectory(solution.t, solution.y.T, halted, G.species_names())


def numeric_equivalence_deviation(
    G: EGraph,
    k: Mapping[Edge, Fraction],
    G2: EGraph,
    k2: Mapping[Edge, Fraction],
    samples: int = 100,
    box: Tuple[float, float] = (0.1, 10.0),
    relative: bool = False,
    seed: int = 0,
) -> float:
    """
    Largest sup-norm gap between two vector fields over scrambled Halton points in a box.

    With `relative`, each gap is divided by the largest single reaction
    term at that point, which measures it against float roundoff.
    """
    if G.dimension != G2.dimension:
        raise DimensionMismatchError(f"Networks live in dimensions {G.dimension} and {G2.dimension}")
    if samples <= 0 or not 0 < box[0] < box[1]:
        raise ValueError(f"Need a positive sample count and box, got {samples} and {box}")

    sampler = qmc.Halton(d=G.dimension, scramble=True, seed=seed)
    points = qmc.scale(sampler.random(samples), [box[0]] * G.dimension, [box[1]] * G.dimension)
    first, second = vector_field(G, k), vector_field(G2, k2)

    worst = 0.0
    for x in points:
        gap = float(np.max(np.abs(first(0.0, x) - second(0.0, x))))
        if relative:
            gap /= max(_term_scale(G, k, x), _term_scale(G2, k2, x), 1e-300)
        worst = max(worst, gap)
    return worst


def _term_scale(G: EGraph, k: Mapping[Edge, Fraction], x: np.ndarray) -> float:
    scale_ = 0.0
    for e in G.edges:
        size = max(abs(float(c)) for c in reaction_vector(e))
        term = float(k[e]) * float(np.prod(np.power(x, [float(c) for c in e.source])))
        scale_ = max(scale_, term * size)
    return scale_

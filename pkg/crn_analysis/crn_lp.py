#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exact rational linear programming
Dense-tableau two-phase simplex with Bland's anti-cycling rule
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .crn_errors import MalformedProgramError
from .crn_vectors import Vector

logger = logging.getLogger(__name__)

RELATIONS = ("<=", "=", ">=")


class LpStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class Constraint:
    row: Tuple[Fraction, ...]
    relation: str
    rhs: Fraction


@dataclass
class LinProgram:
    """
    Linear program over named variables.

    Bounds are (lower, upper) pairs where None means unbounded on that
    side; variables not listed in `bounds` default to x >= 0.
    """
    variables: List[str]
    objective: Tuple[Fraction, ...]
    sense: str = "max"
    constraints: List[Constraint] = field(default_factory=list)
    bounds: Dict[str, Tuple[Optional[Fraction], Optional[Fraction]]] = field(default_factory=dict)

    def add_constraint(self, coefficients: Dict[str, Fraction], relation: str, rhs) -> None:
        """Add a constraint from a sparse {variable: coefficient} mapping"""
        index = {name: i for i, name in enumerate(self.variables)}
        row = [Fraction(0)] * len(self.variables)
        for name, value in coefficients.items():
            if name not in index:
                raise MalformedProgramError(f"Unknown variable in constraint: {name}")
            row[index[name]] += Fraction(value)
        self.constraints.append(Constraint(tuple(row), relation, Fraction(rhs)))

    def bound(self, name: str) -> Tuple[Optional[Fraction], Optional[Fraction]]:
        return self.bounds.get(name, (Fraction(0), None))

    def validate(self) -> None:
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise MalformedProgramError("Variable names must be unique")
        if len(self.objective) != n:
            raise MalformedProgramError(f"Objective has {len(self.objective)} entries for {n} variables")
        if self.sense not in ("max", "min"):
            raise MalformedProgramError(f"Unknown objective sense: {self.sense}")
        for c in self.constraints:
            if len(c.row) != n:
                raise MalformedProgramError(f"Constraint row has {len(c.row)} entries for {n} variables")
            if c.relation not in RELATIONS:
                raise MalformedProgramError(f"Unknown relation: {c.relation}")
        for name, (lower, upper) in self.bounds.items():
            if name not in self.variables:
                raise MalformedProgramError(f"Bound on unknown variable: {name}")
            if lower is not None and upper is not None and lower > upper:
                raise MalformedProgramError(f"Empty bound interval for {name}")


@dataclass
class LpSolution:
    status: LpStatus
    assignment: Dict[str, Fraction] = field(default_factory=dict)
    objective_value: Optional[Fraction] = None


class _Tableau:
    """Rows are [a_1 .. a_n | b]; `objective` holds reduced costs and -z"""

    def __init__(self, rows: List[List[Fraction]], basis: List[int], width: int):
        self.rows = rows
        self.basis = basis
        self.width = width
        self.objective: List[Fraction] = []

    def drop_columns_from(self, start: int) -> None:
        self.rows = [row[:start] + [row[-1]] for row in self.rows]
        self.width = start

    def set_objective(self, costs: Sequence[Fraction]) -> None:
        objective = list(costs) + [Fraction(0)]
        for r, b in enumerate(self.basis):
            coefficient = objective[b]
            if coefficient != 0:
                row = self.rows[r]
                objective = [o - coefficient * a for o, a in zip(objective, row)]
        self.objective = objective

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        p = row[col]
        row = [a / p for a in row]
        self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i != r and other[col] != 0:
                f = other[col]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        if self.objective and self.objective[col] != 0:
            f = self.objective[col]
            self.objective = [a - f * b for a, b in zip(self.objective, row)]
        self.basis[r] = col

    def maximize(self, allowed: int) -> bool:
        """Run primal simplex over the first `allowed` columns; False when unbounded"""
        while True:
            entering = next((j for j in range(allowed) if self.objective[j] > 0), None)
            if entering is None:
                return True
            leaving = None
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leaving]):
                        best = ratio
                        leaving = i
            if leaving is None:
                return False
            self.pivot(leaving, entering)

    def value(self) -> Fraction:
        return -self.objective[-1]

    def solution(self) -> List[Fraction]:
        x = [Fraction(0)] * self.width
        for r, b in enumerate(self.basis):
            x[b] = self.rows[r][-1]
        return x


def _standard_form(p: LinProgram):
    """
    Rewrite p as max c·z, A z (rel) b with z >= 0.

    Returns the rows, relations, rhs, costs, the number of structural
    columns and a function mapping z back to the original variables.
    """
    columns: List[Tuple[int, Fraction]] = []  # (variable index, sign) per column
    variable_offset: List[Fraction] = []  # x_i = offset_i + sum of its signed columns
    extra_rows = []
    for i, name in enumerate(p.variables):
        lower, upper = p.bound(name)
        if lower is not None:
            columns.append((i, Fraction(1)))
            variable_offset.append(lower)
            if upper is not None:
                extra_rows.append((len(columns) - 1, upper - lower))
        elif upper is not None:
            columns.append((i, Fraction(-1)))
            variable_offset.append(upper)
        else:
            columns.append((i, Fraction(1)))
            columns.append((i, Fraction(-1)))
            variable_offset.append(Fraction(0))

    width = len(columns)
    rows, relations, rhs = [], [], []
    for c in p.constraints:
        row = [c.row[i] * s for i, s in columns]
        shift = sum((c.row[i] * variable_offset[i] for i in range(len(p.variables))), Fraction(0))
        rows.append(row)
        relations.append(c.relation)
        rhs.append(c.rhs - shift)
    for column, span in extra_rows:
        row = [Fraction(0)] * width
        row[column] = Fraction(1)
        rows.append(row)
        relations.append("<=")
        rhs.append(span)

    sign = Fraction(1) if p.sense == "max" else Fraction(-1)
    costs = [sign * p.objective[i] * s for i, s in columns]
    constant = sign * sum((p.objective[i] * variable_offset[i] for i in range(len(p.variables))), Fraction(0))

    def recover(z: Sequence[Fraction]) -> Dict[str, Fraction]:
        x = list(variable_offset)
        for j, (i, s) in enumerate(columns):
            x[i] += s * z[j]
        return dict(zip(p.variables, x))

    return rows, relations, rhs, costs, constant, width, recover


def simplex_solve(p: LinProgram) -> LpSolution:
    """Solve a linear program exactly over the rationals"""
    p.validate()
    rows, relations, rhs, costs, constant, width, recover = _standard_form(p)

    # flip rows so every right-hand side is nonnegative
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]
            relations[i] = {"<=": ">=", ">=": "<=", "=": "="}[relations[i]]

    m = len(rows)
    slack_count = sum(1 for r in relations if r != "=")
    artificial_rows = [i for i in range(m) if relations[i] != "<="]
    total = width + slack_count + len(artificial_rows)
    artificial_start = width + slack_count

    tableau_rows: List[List[Fraction]] = []
    basis: List[int] = []
    slack = width
    artificial = artificial_start
    for i in range(m):
        row = rows[i] + [Fraction(0)] * (total - width) + [rhs[i]]
        if relations[i] == "<=":
            row[slack] = Fraction(1)
            basis.append(slack)
            slack += 1
        else:
            if relations[i] == ">=":
                row[slack] = Fraction(-1)
                slack += 1
            row[artificial] = Fraction(1)
            basis.append(artificial)
            artificial += 1
        tableau_rows.append(row)

    tableau = _Tableau(tableau_rows, basis, total)

    if artificial_rows:
        phase_one = [Fraction(0)] * total
        for j in range(artificial_start, total):
            phase_one[j] = Fraction(-1)
        tableau.set_objective(phase_one)
        tableau.maximize(total)
        if tableau.value() < 0:
            logger.debug(f"Phase one optimum {tableau.value()}: infeasible")
            return LpSolution(LpStatus.INFEASIBLE)

        # drive artificial variables out of the basis, dropping redundant rows
        r = 0
        while r < len(tableau.rows):
            if tableau.basis[r] >= artificial_start:
                col = next((j for j in range(artificial_start) if tableau.rows[r][j] != 0), None)
                if col is None:
                    del tableau.rows[r]
                    del tableau.basis[r]
                    continue
                tableau.pivot(r, col)
            r += 1
        tableau.drop_columns_from(artificial_start)

    tableau.set_objective(list(costs) + [Fraction(0)] * slack_count)
    if not tableau.maximize(artificial_start):
        return LpSolution(LpStatus.UNBOUNDED)

    z = tableau.solution()[:width]
    value = tableau.value() + constant
    if p.sense == "min":
        value = -value
    return LpSolution(LpStatus.OPTIMAL, recover(z), value)


def check_solution(p: LinProgram, assignment: Dict[str, Fraction]) -> bool:
    """Replay an assignment against every constraint and bound, exactly"""
    x = [assignment[name] for name in p.variables]
    for c in p.constraints:
        lhs = sum((a * v for a, v in zip(c.row, x)), Fraction(0))
        if c.relation == "<=" and lhs > c.rhs:
            return False
        if c.relation == ">=" and lhs < c.rhs:
            return False
        if c.relation == "=" and lhs != c.rhs:
            return False
    for name, value in zip(p.variables, x):
        lower, upper = p.bound(name)
        if lower is not None and value < lower:
            return False
        if upper is not None and value > upper:
            return False
    return True


def positive_combination(generators: Sequence[Vector], target: Vector) -> Optional[List[Fraction]]:
    """
    Find lambda_j > 0 with sum lambda_j g_j = target, or None.

    Maximizes the smallest coefficient t (capped at 1). A positive optimum
    certifies strict positivity; with the cap, the smallest coefficient
    is 1 whenever arbitrarily large ones are possible.
    """
    if not generators:
        return [] if all(x == 0 for x in target) else None
    names = [f"l{j}" for j in range(len(generators))] + ["t"]
    p = LinProgram(names, tuple([Fraction(0)] * len(generators) + [Fraction(1)]), "max")
    p.bounds["t"] = (None, Fraction(1))
    for i, value in enumerate(target):
        p.add_constraint({f"l{j}": g[i] for j, g in enumerate(generators) if g[i] != 0}, "=", value)
    for j in range(len(generators)):
        p.add_constraint({f"l{j}": Fraction(1), "t": Fraction(-1)}, ">=", 0)
    solution = simplex_solve(p)
    if solution.status != LpStatus.OPTIMAL or solution.objective_value <= 0:
        return None
    return [solution.assignment[f"l{j}"] for j in range(len(generators))]


def nonnegative_combination(generators: Sequence[Vector], target: Vector) -> Optional[List[Fraction]]:
    """Find lambda_j >= 0 with sum lambda_j g_j = target, or None"""
    if not generators:
        return [] if all(x == 0 for x in target) else None
    names = [f"l{j}" for j in range(len(generators))]
    p = LinProgram(names, tuple([Fraction(0)] * len(generators)), "max")
    for i, value in enumerate(target):
        p.add_constraint({f"l{j}": g[i] for j, g in enumerate(generators) if g[i] != 0}, "=", value)
    solution = simplex_solve(p)
    if solution.status != LpStatus.OPTIMAL:
        return None
    return [solution.assignment[n] for n in names]

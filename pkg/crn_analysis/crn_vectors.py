"""
Exact rational vectors and matrix helpers shared by every module.

Vectors are tuples of Fraction; matrix work (rank, row reduction, null
spaces) goes through sympy so nothing is ever rounded.
"""

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

Vector = Tuple[Fraction, ...]
Number = Union[int, Fraction, str]


def as_fraction(value: Number) -> Fraction:
    """Convert ints, Fractions and strings such as '3/2' or '0.25' exactly"""
    if isinstance(value, float):
        raise TypeError(f"Refusing inexact float {value!r}; pass a string or Fraction")
    return Fraction(value)


def vector(values: Iterable[Number]) -> Vector:
    return tuple(as_fraction(v) for v in values)


def zero_vector(dimension: int) -> Vector:
    return (Fraction(0),) * dimension


def add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def scale(c: Fraction, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def is_zero(a: Vector) -> bool:
    return all(x == 0 for x in a)


def _to_sympy(rows: Sequence[Sequence[Fraction]], width: int) -> sympy.Matrix:
    if not rows:
        return sympy.zeros(0, width)
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])


def _from_sympy(entry) -> Fraction:
    entry = sympy.Rational(entry)
    return Fraction(int(entry.p), int(entry.q))


def row_space_basis(rows: Sequence[Vector], width: int) -> List[Vector]:
    """Nonzero rows of the reduced row echelon form"""
    if not rows:
        return []
    reduced, pivots = _to_sympy(rows, width).rref()
    return [tuple(_from_sympy(reduced[i, j]) for j in range(width)) for i in range(len(pivots))]


def rank(rows: Sequence[Vector], width: int) -> int:
    if not rows:
        return 0
    return _to_sympy(rows, width).rank()


def null_space(rows: Sequence[Vector], width: int) -> List[Vector]:
    """Basis of {v : row·v = 0 for every row}"""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(width)) for i in range(width)]
    basis = _to_sympy(rows, width).nullspace()
    return [tuple(_from_sympy(b[j]) for j in range(width)) for b in basis]


def in_span(v: Vector, basis: Sequence[Vector], width: int) -> bool:
    return rank(list(basis) + [v], width) == rank(basis, width)


def spans_equal(first: Sequence[Vector], second: Sequence[Vector], width: int) -> bool:
    r = rank(first, width)
    return r == rank(second, width) and rank(list(first) + list(second), width) == r


def primitive_direction(v: Vector) -> Vector:
    """Canonical representative of the line through v (first nonzero entry is 1)"""
    lead = next(x for x in v if x != 0)
    return tuple(x / lead for x in v)


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(v: Sequence[Fraction]) -> List[str]:
    return [format_fraction(x) for x in v]

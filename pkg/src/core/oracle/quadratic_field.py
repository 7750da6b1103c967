#!/usr/bin/env python3
"""
Exact arithmetic in the field Q(sqrt2, sqrt3), which holds cos(pi/m) for
every dihedral label m in {2, 3, 4, 6}.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

# Third-party libraries
import numpy as np

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class QuadraticFieldNumber:
    """
    The number `a + b sqrt2 + c sqrt3 + d sqrt6`. Equality is
    component-wise since 1, sqrt2, sqrt3, sqrt6 are linearly independent
    over the rationals.
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def cos_pi_over(cls, m: int) -> "QuadraticFieldNumber":
        """
        Raises:
            ValueError: cos(pi/m) is not in the field.
        """
        half = Fraction(1, 2)
        values = {
            1: cls(-1),
            2: cls(),
            3: cls(half),
            4: cls(0, half),
            6: cls(0, 0, half),
        }
        if m not in values:
            raise ValueError(f"cos(pi/{m}) is not in Q(sqrt2, sqrt3)")
        return values[m]

    @staticmethod
    def _coerce(other: Union["QuadraticFieldNumber", Scalar]) -> "QuadraticFieldNumber":
        if isinstance(other, QuadraticFieldNumber):
            return other
        return QuadraticFieldNumber(other)

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return not any(self.components)

    def __add__(self, other):
        other = self._coerce(other)
        return QuadraticFieldNumber(
            *(x + y for x, y in zip(self.components, other.components))
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadraticFieldNumber":
        return QuadraticFieldNumber(*(-x for x in self.components))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b, c, d = self.components
        e, f, g, h = other.components
        return QuadraticFieldNumber(
            a * e + 2 * b * f + 3 * c * g + 6 * d * h,
            a * f + b * e + 3 * c * h + 3 * d * g,
            a * g + c * e + 2 * b * h + 2 * d * f,
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def __float__(self) -> float:
        return float(self.a + self.b * 2**0.5 + self.c * 3**0.5 + self.d * 6**0.5)

    def regular_matrix(self) -> np.ndarray:
        """
        Integer 4x4 matrix of the multiplication by this number on the
        basis (1, sqrt2, sqrt3, sqrt6).

        Raises:
            ValueError: Some component is not an integer.
        """
        if any(x.denominator != 1 for x in self.components):
            raise ValueError(f"{self} is not an algebraic integer of the basis")
        a, b, c, d = (int(x) for x in self.components)
        return np.array(
            [
                [a, 2 * b, 3 * c, 6 * d],
                [b, a, 3 * d, 3 * c],
                [c, 2 * d, a, 2 * b],
                [d, c, b, a],
            ],
            dtype=np.int64,
        )

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt2 + {self.c}*sqrt3 + {self.d}*sqrt6"


# Square matrix with entries in the field, row-major
FieldMatrix = tuple[tuple[QuadraticFieldNumber, ...], ...]


def identity(n: int) -> FieldMatrix:
    one, zero = QuadraticFieldNumber(1), QuadraticFieldNumber()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def matmul(x: FieldMatrix, y: FieldMatrix) -> FieldMatrix:
    n = len(x)
    return tuple(
        tuple(sum((x[i][k] * y[k][j] for k in range(n)), QuadraticFieldNumber()) for j in range(n))
        for i in range(n)
    )


def matrix_power(x: FieldMatrix, k: int) -> FieldMatrix:
    result = identity(len(x))
    for _ in range(k):
        result = matmul(result, x)
    return result


def to_array(rows: Sequence[Sequence[QuadraticFieldNumber]]) -> np.ndarray:
    """
    Returns:
        np.ndarray: Integer array of shape (n, n, 4) holding the
            components of every entry.

    Raises:
        ValueError: Some component is not an integer.
    """
    if any(x.denominator != 1 for row in rows for entry in row for x in entry.components):
        raise ValueError("Matrix entries must have integer components")
    return np.array(
        [[[int(x) for x in entry.components] for entry in row] for row in rows],
        dtype=np.int64,
    )

#!/usr/bin/env python3
"""
Volumes of ideal tetrahedra and of the catalog polyhedra.

An ideal tetrahedron has equal dihedral angles at opposite edges, and
the three distinct angles sum to pi. Its volume is
`L(alpha) + L(beta) + L(gamma)`. The two pyramids of the catalog each
split into two copies of a simplex.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Final, NamedTuple, Optional

# Internal libraries
from .lobachevsky import (
    DEFAULT_TOLERANCE,
    VolumeException,
    lobachevsky,
    lobachevsky_pi_fraction,
)

logger = logging.getLogger(__name__)

ANGLE_SUM_TOLERANCE: Final = 1e-12


class AngleSumError(VolumeException):
    def __init__(self, angles: tuple[float, float, float]):
        super().__init__(
            f"Dihedral angles {angles} must be positive and sum to pi, "
            f"got {sum(angles)!r}."
        )


class UnknownVolume(VolumeException):
    """
    No volume formula is available for the model.
    """

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"No volume formula for '{name}'.")


class VolumeEstimate(NamedTuple):
    value: float
    error_bound: float

    def __add__(self, other: "VolumeEstimate") -> "VolumeEstimate":
        return VolumeEstimate(self.value + other.value, self.error_bound + other.error_bound)

    def scaled(self, k: int) -> "VolumeEstimate":
        return VolumeEstimate(k * self.value, k * self.error_bound)

    def render(self, name: str) -> str:
        return f"vol({name}) = {self.value:.12f} +/- {self.error_bound:.1e}"


@dataclass(frozen=True)
class TetrahedronAngles:
    """
    The three distinct dihedral angles of an ideal tetrahedron, in
    radians. `pi_fractions` keeps them as exact multiples of pi when
    known.
    """

    alpha: float
    beta: float
    gamma: float
    pi_fractions: Optional[tuple[Fraction, Fraction, Fraction]] = None

    def __post_init__(self):
        angles = (self.alpha, self.beta, self.gamma)
        if min(angles) <= 0 or abs(sum(angles) - math.pi) > ANGLE_SUM_TOLERANCE:
            raise AngleSumError(angles)
        if self.pi_fractions is not None and sum(self.pi_fractions) != 1:
            raise AngleSumError(angles)

    @classmethod
    def from_pi_fractions(cls, a: Fraction, b: Fraction, c: Fraction) -> "TetrahedronAngles":
        """
        Raises:
            AngleSumError: `a + b + c != 1` or some fraction is not
                positive.
        """
        fractions = (Fraction(a), Fraction(b), Fraction(c))
        if sum(fractions) != 1 or min(fractions) <= 0:
            raise AngleSumError(tuple(float(x) * math.pi for x in fractions))
        return cls(*(float(x) * math.pi for x in fractions), pi_fractions=fractions)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)


def ideal_tetrahedron_volume(
    angles: TetrahedronAngles, tol: float = DEFAULT_TOLERANCE
) -> VolumeEstimate:
    """
    Returns:
        VolumeEstimate: `L(alpha) + L(beta) + L(gamma)` within `3 * tol`.
    """
    if angles.pi_fractions is not None:
        values = [lobachevsky_pi_fraction(r, tol) for r in angles.pi_fractions]
    else:
        values = [lobachevsky(x, tol) for x in angles.as_tuple()]
    return VolumeEstimate(sum(v.value for v in values), sum(v.error_bound for v in values))


# Dihedral angles of the simplices, as multiples of pi
SIMPLEX_ANGLES: Final = {
    "P1": (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)),
    "P2": (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)),
    "P3": (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
}
# Pyramids cut into two copies of a simplex
PYRAMID_HALVES: Final = {"P4": "P1", "P5": "P2"}


def catalog_volume(name: str, tol: float = DEFAULT_TOLERANCE) -> VolumeEstimate:
    """
    Raises:
        UnknownVolume: `name` is not one of P1 .. P5.
    """
    if name in SIMPLEX_ANGLES:
        return ideal_tetrahedron_volume(
            TetrahedronAngles.from_pi_fractions(*SIMPLEX_ANGLES[name]), tol
        )
    if name in PYRAMID_HALVES:
        return catalog_volume(PYRAMID_HALVES[name], tol).scaled(2)
    raise UnknownVolume(name)

#!/usr/bin/env python3
"""
The Lobachevsky function `L(x) = -int_0^x log|2 sin z| dz`.

`lobachevsky` sums the series

    L(y) = y - y log(2y) + 1/2 sum_n |B_2n| (2y)^(2n+1) / (2n (2n+1)!)

on the reduced argument `0 <= y <= pi/2`, with a certified bound on the
truncated tail. `lobachevsky_quadrature` integrates the definition with
scipy and serves as an independent check.

L is odd and pi-periodic, so any real argument reduces to [0, pi/2].

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
from functools import cache
from typing import Final

# Third-party libraries
import numpy as np
from scipy import integrate, special

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE: Final = 1e-10
# Highest series index ever needed: q <= 1/4 makes the tail fall below
# 1e-60 long before this
_MAX_TERMS: Final = 80


class VolumeException(Exception):
    """
    Base class of the volume computation errors.
    """

    def __init__(self, message: str = "Volume computation error."):
        super().__init__(message)


class QuadratureError(VolumeException):
    """
    The adaptive quadrature didn't reach the requested tolerance.
    """

    def __init__(self, x: float, estimate: float, tol: float):
        super().__init__(
            f"Quadrature at x = {x} only reached error {estimate:.3e} (tolerance {tol:.3e})."
        )


@dataclass(frozen=True)
class LobachevskyValue:
    """
    A value of L with `|value - L(argument)| <= error_bound`.
    """

    argument: float
    value: float
    error_bound: float


@cache
def _series_coefficients() -> np.ndarray:
    """
    Returns:
        np.ndarray: `|B_2n| / (2 * 2n * (2n+1)!)` for n = 1 .. _MAX_TERMS.
    """
    n = np.arange(1, _MAX_TERMS + 1)
    bernoulli = np.abs(special.bernoulli(2 * _MAX_TERMS)[2::2])
    return bernoulli / (2 * (2 * n) * special.factorial(2 * n + 1))


def _tail_bound(theta: float, terms: int) -> float:
    """
    Bound of the terms n > `terms`, using
    `|B_2n| = 2 (2n)! zeta(2n) / (2 pi)^2n` and `zeta(2n) <= pi^2/6`.
    """
    q = (theta / (2 * math.pi)) ** 2
    k = terms + 1
    return (math.pi**2 / 6) * theta * q**k / ((2 * k) * (2 * k + 1) * (1 - q))


def _reduce(x: float) -> tuple[float, float]:
    """
    Returns:
        tuple[float, float]: `(sign, y)` with `L(x) = sign * L(y)` and
            `0 <= y <= pi/2`.
    """
    y = math.fmod(x, math.pi)
    if y < 0:
        y += math.pi
    if y > math.pi / 2:
        return -1.0, math.pi - y
    return 1.0, y


def lobachevsky(x: float, tol: float = DEFAULT_TOLERANCE) -> LobachevskyValue:
    """
    Evaluate L(x) with a certified error bound.

    Raises:
        ValueError: `tol` is not positive.
        VolumeException: `tol` is below the floating-point resolution.
    """
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    sign, y = _reduce(x)
    if y == 0:
        return LobachevskyValue(x, 0.0, 0.0)

    theta = 2 * y
    terms = next(
        (k for k in range(1, _MAX_TERMS + 1) if _tail_bound(theta, k) <= tol / 2), _MAX_TERMS
    )
    powers = theta ** (2 * np.arange(1, terms + 1) + 1)
    series = float(np.sum(_series_coefficients()[:terms] * powers))
    value = y - y * math.log(theta) + series

    # Each operation loses at most one ulp of the largest magnitude involved
    rounding = (terms + 4) * np.finfo(float).eps * max(1.0, abs(y * math.log(theta)), series)
    error = _tail_bound(theta, terms) + rounding
    if error > tol:
        raise VolumeException(
            f"Tolerance {tol:.1e} is below the achievable resolution {error:.1e}."
        )
    return LobachevskyValue(x, sign * value, error)


def lobachevsky_pi_fraction(r: Fraction, tol: float = DEFAULT_TOLERANCE) -> LobachevskyValue:
    """
    L(r * pi) for an exact rational r. Multiples of pi/2 give exactly 0.
    """
    reduced = r - math.floor(r)
    if reduced in (0, Fraction(1, 2)):
        return LobachevskyValue(float(r) * math.pi, 0.0, 0.0)
    return lobachevsky(float(reduced) * math.pi, tol)


def lobachevsky_quadrature(x: float, tol: float = DEFAULT_TOLERANCE) -> float:
    """
    Integrate the definition of L on (0, x) with `scipy.integrate.quad`.
    The logarithmic singularity at 0 is split off as
    `int_0^x log(2z) dz = x log(2x) - x`, leaving the smooth
    `log(sin z / z)`.

    Raises:
        ValueError: `x` outside (0, pi) or `tol` not positive.
        QuadratureError: The quadrature error estimate exceeds `tol`.
    """
    if not 0 < x < math.pi:
        raise ValueError(f"Quadrature argument must lie in (0, pi), got {x}")
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    if x > math.pi / 2:
        return -lobachevsky_quadrature(math.pi - x, tol)

    smooth, estimate = integrate.quad(
        lambda z: math.log(np.sinc(z / math.pi)), 0.0, x, epsabs=tol / 4, epsrel=0.0, limit=200
    )
    if estimate > tol:
        raise QuadratureError(x, estimate, tol)
    return -(x * math.log(2 * x) - x) - smooth

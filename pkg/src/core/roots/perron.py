#!/usr/bin/env python3
"""
Certificate that the smallest positive root r0 of a polynomial is
strictly smaller in modulus than every other complex root.

Factors with roots on the unit circle are divided out exactly first.
The remaining square-free part has all of its roots enclosed in
disjoint rational boxes by sympy's certified complex root isolation;
the boxes are refined until they separate from the disk of radius r0.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import math
import time
from fractions import Fraction
from typing import Final, NamedTuple, Optional

# Third-party libraries
import sympy as sp

# Internal libraries
from core.growth import IntPolynomial
from .isolation import Interval, RootException, SturmSequence

logger = logging.getLogger(__name__)

# 1+t, 1+t^2, 1+t+t^2, 1-t+t^2
UNIT_CIRCLE_FACTORS: Final = tuple(
    IntPolynomial(c) for c in ((1, 1), (1, 0, 1), (1, 1, 1), (1, -1, 1))
)
DEFAULT_MAX_DEPTH: Final = 40
# Reported gaps are rounded down to this resolution when it stays positive
_GAP_RESOLUTION: Final = 10**6


class Inconclusive(RootException):
    """
    The certification didn't conclude within the allowed refinements.
    """

    def __init__(self, message: str = "Certification is inconclusive."):
        super().__init__(message)


class PerronResult(NamedTuple):
    perron: bool
    modulus_gap: Optional[Fraction]


class _Box(NamedTuple):
    """
    Closed rectangle `[x0, x1] x [y0, y1]` of the complex plane.
    """

    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction

    @staticmethod
    def _closest(lo: Fraction, hi: Fraction) -> Fraction:
        if lo <= 0 <= hi:
            return Fraction(0)
        return min(abs(lo), abs(hi))

    def min_modulus2(self) -> Fraction:
        return self._closest(self.x0, self.x1) ** 2 + self._closest(self.y0, self.y1) ** 2

    def max_modulus2(self) -> Fraction:
        return max(self.x0**2, self.x1**2) + max(self.y0**2, self.y1**2)

    def meets_segment(self, lo: Fraction, hi: Fraction) -> bool:
        """
        `True` if the box meets the real segment `[lo, hi]`.
        """
        return self.y0 <= 0 <= self.y1 and self.x0 <= hi and self.x1 >= lo


def _to_fraction(x: sp.Expr) -> Fraction:
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _root_boxes(h: IntPolynomial, eps: Fraction) -> list[_Box]:
    real, complex_ = h.poly.intervals(
        all=True, sqf=True, eps=sp.Rational(eps.numerator, eps.denominator)
    )
    boxes = [_Box(_to_fraction(s), _to_fraction(t), Fraction(0), Fraction(0)) for s, t in real]
    for lower, upper in complex_:
        boxes.append(
            _Box(
                _to_fraction(sp.re(lower)),
                _to_fraction(sp.re(upper)),
                _to_fraction(sp.im(lower)),
                _to_fraction(sp.im(upper)),
            )
        )
    return boxes


def _gap_bound(box: _Box, hi: Fraction) -> Fraction:
    """
    Lower bound of `|z| - hi` over the box, from
    `|z| - hi = (|z|^2 - hi^2) / (|z| + hi)` and `|z| <= max(|z|^2, 1)`.
    """
    upper = max(box.max_modulus2(), Fraction(1))
    return (box.min_modulus2() - hi * hi) / (upper + hi)


def _round_gap(gap: Fraction) -> Fraction:
    rounded = Fraction(math.floor(gap * _GAP_RESOLUTION), _GAP_RESOLUTION)
    return rounded if rounded > 0 else gap


def has_multiple_root_in(g: IntPolynomial, interval: Interval) -> bool:
    """
    Returns:
        bool: `True` if `gcd(g, g')` vanishes somewhere in the closed
            interval, i.e. a root there is not simple.
    """
    d = g.gcd(g.derivative())
    if d.degree < 1:
        return False
    return SturmSequence(d).count_closed(*interval) > 0


def strip_unit_circle_factors(g: IntPolynomial) -> tuple[IntPolynomial, bool]:
    """
    Divide out every factor of `UNIT_CIRCLE_FACTORS`, with multiplicity.

    Returns:
        tuple[IntPolynomial, bool]: The quotient and whether any factor
            was removed.
    """
    removed = False
    for factor in UNIT_CIRCLE_FACTORS:
        while g.degree >= factor.degree and factor.divides(g):
            g = g.exact_div(factor)
            removed = True
    return g, removed


def perron_certify(
    g: IntPolynomial, r0_enclosure: Interval, max_depth: int = DEFAULT_MAX_DEPTH
) -> PerronResult:
    """
    Certify that the root r0 of `g` isolated by `r0_enclosure` is simple
    and strictly dominant in modulus.

    Returns:
        PerronResult: `perron` with a rational `modulus_gap` such that
            every other root z has `|z| >= r0 + modulus_gap`. The gap is
            `None` when g has no other root. `perron` is `False` with no
            gap when r0 is multiple or another root is certified to be at
            most as close to 0.

    Raises:
        Inconclusive: The boxes never separated within `max_depth`
            refinements.
    """
    lo, hi = r0_enclosure
    if lo <= 0:
        raise ValueError(f"r0 enclosure must be positive, got [{lo}, {hi}]")
    start = time.perf_counter()

    if has_multiple_root_in(g, r0_enclosure):
        logger.info(f"Root in [{lo}, {hi}] of {g} is not simple.")
        return PerronResult(False, None)

    h, on_circle = strip_unit_circle_factors(g)
    h = h.square_free_part()
    gaps = [Fraction(1) - hi] if on_circle else []

    for depth in range(max_depth):
        boxes = _root_boxes(h, Fraction(1, 2 ** (depth + 2)))
        own = [b for b in boxes if b.meets_segment(lo, hi)]
        others = [b for b in boxes if not b.meets_segment(lo, hi)]

        # A root certified inside the disk of radius lo beats r0
        if any(b.max_modulus2() < lo * lo for b in others):
            logger.info(f"{g} has a root of modulus below {lo}.")
            return PerronResult(False, None)

        if len(own) == 1 and all(b.min_modulus2() > hi * hi for b in others):
            gaps += [_gap_bound(b, hi) for b in others]
            gap = _round_gap(min(gaps)) if gaps else None
            logger.debug(
                f"Perron certificate of {g} at depth {depth} in "
                f"{(time.perf_counter() - start) * 1000:.1f} ms, gap >= {gap}."
            )
            return PerronResult(True, gap)

    raise Inconclusive(
        f"Roots of {g} not separated from the disk of radius {hi} "
        f"after {max_depth} refinements."
    )

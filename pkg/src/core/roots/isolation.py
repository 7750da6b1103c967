#!/usr/bin/env python3
"""
Real root isolation with Sturm sequences evaluated at exact rational
points, and refinement of isolating intervals by bisection.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
from fractions import Fraction
from typing import Optional

# Third-party libraries
import sympy as sp

# Internal libraries
from core.growth import IntPolynomial

logger = logging.getLogger(__name__)

# Closed rational interval, degenerate when a root is known exactly
Interval = tuple[Fraction, Fraction]


class RootException(Exception):
    """
    Base class of the root analysis errors.
    """

    def __init__(self, message: str = "Root analysis error."):
        super().__init__(message)


class InternalContradiction(RootException):
    """
    A property that holds for every valid polyhedron failed. The input
    slipped past validation or an invariant is broken.
    """

    def __init__(self, message: str = "Internal contradiction in root analysis."):
        super().__init__(message)


def _horner(coefficients: tuple[Fraction, ...], x: Fraction) -> Fraction:
    value = Fraction(0)
    for c in coefficients:
        value = value * x + c
    return value


class SturmSequence:
    """
    Sturm sequence of the square-free part of a polynomial. Counts the
    distinct real roots in any interval from sign variations.
    """

    def __init__(self, p: IntPolynomial):
        if p.is_zero:
            raise ValueError("Cannot isolate the roots of the zero polynomial")
        self.poly = p.square_free_part()
        if self.poly.degree < 1:
            self._chain: list[tuple[Fraction, ...]] = []
            return
        self._chain = [
            tuple(Fraction(int(c.p), int(c.q)) for c in s.all_coeffs())
            for s in sp.sturm(self.poly.poly)
        ]

    def variations(self, x: Fraction) -> int:
        signs = [v > 0 for v in (_horner(s, x) for s in self._chain) if v != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a: Fraction, b: Fraction) -> int:
        """
        Returns:
            int: Number of distinct roots in the open interval `(a, b)`.
        """
        if not self._chain or a >= b:
            return 0
        # V(a) - V(b) counts the roots in (a, b]
        return self.variations(a) - self.variations(b) - (self.poly(b) == 0)

    def count_closed(self, a: Fraction, b: Fraction) -> int:
        """
        Returns:
            int: Number of distinct roots in `[a, b]`.
        """
        if not self._chain:
            return 0
        if a == b:
            return int(self.poly(a) == 0)
        return self.count(a, b) + (self.poly(a) == 0) + (self.poly(b) == 0)

    def _split_point(self, a: Fraction, b: Fraction) -> Fraction:
        """
        A point of `(a, b)` that is not a root: the middle, else the
        first of 1/3, 2/3, 1/4, 3/4, ... of the way.
        """
        for denominator in range(2, self.poly.degree + 3):
            for numerator in range(1, denominator):
                x = a + (b - a) * Fraction(numerator, denominator)
                if self.poly(x) != 0:
                    return x
        raise InternalContradiction(f"No split point found in ({a}, {b})")

    def isolate(self, a: Fraction, b: Fraction) -> list[Interval]:
        """
        Returns:
            list[Interval]: Disjoint intervals, each holding exactly one
                root of the open interval `(a, b)`, in increasing order.
        """
        found: list[Interval] = []
        pending = [(a, b)]
        while pending:
            lo, hi = pending.pop()
            n = self.count(lo, hi)
            if n == 0:
                continue
            if n == 1:
                found.append((lo, hi))
                continue
            mid = self._split_point(lo, hi)
            pending += [(lo, mid), (mid, hi)]
        return sorted(found)

    def refine(self, interval: Interval, tol: Fraction) -> Interval:
        """
        Bisect an isolating interval until its width is at most `tol`.
        Returns a degenerate interval when a midpoint hits the root.
        """
        lo, hi = interval
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if self.poly(mid) == 0:
                return (mid, mid)
            if self.count(lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        return (lo, hi)


def sturm_isolate(
    p: IntPolynomial, interval: tuple[Fraction | int, Fraction | int]
) -> list[Interval]:
    """
    Isolate the distinct real roots of `p` in the open interval.

    Returns:
        list[Interval]: One interval per root, in increasing order.
    """
    a, b = (Fraction(x) for x in interval)
    intervals = SturmSequence(p).isolate(a, b)
    logger.debug(f"{len(intervals)} roots of {p} isolated in ({a}, {b}).")
    return intervals


def rational_roots(p: IntPolynomial) -> list[Fraction]:
    """
    Returns:
        list[Fraction]: The rational roots of `p`, from its linear
            factors.
    """
    roots = []
    for factor, _ in p.poly.factor_list()[1]:
        if factor.degree() == 1:
            c1, c0 = (int(c) for c in factor.all_coeffs())
            roots.append(Fraction(-c0, c1))
    return sorted(roots)


def exact_root_in(p: IntPolynomial, interval: Interval) -> Optional[Fraction]:
    lo, hi = interval
    return next((r for r in rational_roots(p) if lo <= r <= hi), None)

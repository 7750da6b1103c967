#!/usr/bin/env python3
"""
Growth function of the reflection group of an ideal Coxeter polyhedron.

Two independent constructions are provided:

- `steinberg_growth` enumerates the finite special subgroups (the empty
  group, one A1 per face and one rank-2 group per edge) and inverts the
  alternating sum of their reciprocal growth polynomials.
- `closed_form_growth` evaluates the closed formula in the combinatorial
  invariants, `2[2]^2 (1+t^2)(1+t+t^2)(1-t+t^2) / ((t-1) g(t))`.

Both return canonical rational functions, so equality is structural.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import time
from collections import Counter
from fractions import Fraction

# Third-party libraries
import sympy as sp

# Internal libraries
from core.polyhedra import (
    InvariantVector,
    PolyhedronCombinatorics,
    compute_invariants,
    validate,
)
from .coxeter_groups import A1, FiniteGroupSymbol, dihedral, finite_growth
from .polynomials import GrowthException, IntPolynomial, RationalFunction, T, product

logger = logging.getLogger(__name__)


class NonIntegralSeries(GrowthException):
    """
    A power series coefficient is not an integer.
    """

    def __init__(self, index: int, value: Fraction):
        self.index = index
        super().__init__(f"Series coefficient a_{index} = {value} is not an integer.")


class GrowthFormMismatch(GrowthException):
    """
    Two constructions of the same growth data disagree.
    """

    def __init__(self, message: str = "Growth constructions disagree."):
        super().__init__(message)


########################################################################
#                         Steinberg construction                       #
########################################################################

# Finite special subgroup: generating faces and its irreducible components
SpecialSubgroup = tuple[tuple[int, ...], tuple[FiniteGroupSymbol, ...]]


def finite_subgroups(P: PolyhedronCombinatorics) -> list[SpecialSubgroup]:
    """
    Finite special subgroups of the reflection group of an ideal
    polyhedron. Without finite vertices there is none of rank 3.
    """
    subgroups: list[SpecialSubgroup] = [((), ())]
    subgroups += [((face,), (A1,)) for face in range(P.face_count)]
    subgroups += [(e.faces, dihedral(int(e.label))) for e in P.sorted_edges()]
    return subgroups


def _invert_alternating_sum(terms: Counter) -> RationalFunction:
    """
    Build F(t) from `1/F(1/t) = sum (-1)^|T| / F_T(t)`, `terms` counting
    each `(sign, growth polynomial)` pair.
    """
    inverse = sp.Add(
        *(sp.Integer(sign * count) / growth.as_expr() for (sign, growth), count in terms.items())
    )
    return RationalFunction.from_expr(1 / inverse.subs(T, 1 / T))


def steinberg_growth(P: PolyhedronCombinatorics) -> RationalFunction:
    """
    Growth function from the finite subgroup poset.

    Raises:
        GrowthException: `P` doesn't validate.
    """
    report = validate(P)
    if not report.verdict:
        raise GrowthException(
            f"'{P.name}' doesn't validate: "
            f"{', '.join(r.check_id for r in report.failures())}."
        )

    start = time.perf_counter()
    terms = Counter(
        ((-1) ** len(faces), finite_growth(symbols)) for faces, symbols in finite_subgroups(P)
    )
    result = _invert_alternating_sum(terms)
    logger.debug(
        f"Steinberg growth of '{P.name}' computed in "
        f"{(time.perf_counter() - start) * 1000:.1f} ms."
    )
    return result


def steinberg_from_counts(f: int, e2: int, e3: int, e4: int, e6: int) -> RationalFunction:
    """
    Steinberg construction from the face count and the edge counts per
    label. Only these numbers enter the finite subgroup poset.
    """
    terms = Counter({(1, IntPolynomial.one()): 1, (-1, finite_growth(A1)): f})
    for label, count in ((2, e2), (3, e3), (4, e4), (6, e6)):
        if count:
            terms[(1, finite_growth(dihedral(label)))] += count
    return _invert_alternating_sum(terms)


########################################################################
#                              Closed form                             #
########################################################################


def g_half_identity(iv: InvariantVector) -> Fraction:
    """
    Returns:
        Fraction: The value of `g(1/2)` predicted by the invariants,
            `(55c + 50f + 10c9 + 4c10 - 415) / 64`.
    """
    return Fraction(55 * iv.c + 50 * iv.f + 10 * iv.c9 + 4 * iv.c10 - 415, 64)


def g_polynomial(iv: InvariantVector) -> IntPolynomial:
    """
    Degree 7 polynomial in the denominator of the closed form.

    Raises:
        GrowthFormMismatch: `g(1/2)` disagrees with `g_half_identity`.
    """
    f, c, c9, c10 = iv.f, iv.c, iv.c9, iv.c10
    g = IntPolynomial(
        (
            -2,
            2 * f - 6,
            2 * c - 2 * f + c9,
            4 * f - c9 + c10 - 12,
            4 * c - 4 * f + c9 - c10 + 4,
            2 * c + 2 * f - c9 - 8,
            2 * c - 2 * f + 2,
            2 * c - 2,
        )
    )
    if g(Fraction(1, 2)) != g_half_identity(iv):
        raise GrowthFormMismatch(
            f"g(1/2) = {g(Fraction(1, 2))} but the invariants give {g_half_identity(iv)}."
        )
    return g


# 2 (1+t)^2 (1+t^2) (1+t+t^2) (1-t+t^2)
CLOSED_FORM_NUMERATOR = 2 * product(
    IntPolynomial(coeffs) for coeffs in ((1, 1), (1, 1), (1, 0, 1), (1, 1, 1), (1, -1, 1))
)


def closed_form_from_invariants(iv: InvariantVector) -> RationalFunction:
    return RationalFunction.canonical(
        CLOSED_FORM_NUMERATOR, IntPolynomial((-1, 1)) * g_polynomial(iv)
    )


def closed_form_growth(P: PolyhedronCombinatorics) -> RationalFunction:
    """
    Growth function from the closed formula in the invariants of `P`.

    Raises:
        AngleSumViolation: Some cusp is not Euclidean.
    """
    return closed_form_from_invariants(compute_invariants(P))


def cross_check(P: PolyhedronCombinatorics) -> RationalFunction:
    """
    Returns:
        RationalFunction: The growth function, once both constructions
            agree.

    Raises:
        GrowthFormMismatch: The constructions disagree.
    """
    steinberg = steinberg_growth(P)
    closed = closed_form_growth(P)
    if steinberg != closed:
        raise GrowthFormMismatch(
            f"'{P.name}': Steinberg sum {steinberg} differs from closed form {closed}."
        )
    return closed


########################################################################
#                             Power series                             #
########################################################################


def series_coefficients(F: RationalFunction, N: int) -> list[int]:
    """
    Taylor coefficients `a_0 .. a_N` of `F` at 0, from the recurrence
    `sum_k q_k a_(n-k) = p_n`.

    Raises:
        ValueError: `N` is negative or the denominator vanishes at 0.
        NonIntegralSeries: Some coefficient is not an integer.
    """
    if N < 0:
        raise ValueError(f"Series length must be nonnegative, got {N}")
    p, q = F.numerator, F.denominator
    q0 = q.coefficient(0)
    if q0 == 0:
        raise ValueError("Denominator has a zero constant term")

    series: list[int] = []
    for n in range(N + 1):
        acc = p.coefficient(n) - sum(
            q.coefficient(k) * series[n - k] for k in range(1, min(n, q.degree) + 1)
        )
        value = Fraction(acc, q0)
        if value.denominator != 1:
            raise NonIntegralSeries(n, value)
        series.append(int(value))
    return series

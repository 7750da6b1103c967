#!/usr/bin/env python3
"""
Certified growth rates of ideal Coxeter polyhedra.

The growth rate is the inverse of the radius of convergence of the
growth series, that is `tau = 1/r0` where r0 is the unique root of the
denominator polynomial g in (0, 1/2). Every result here comes with exact
rational enclosures.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Final, Iterable, Optional

# Internal libraries
from core.growth import IntPolynomial, g_polynomial
from core.polyhedra import (
    InvariantVector,
    PolyhedronCombinatorics,
    catalog,
    compute_invariants,
    is_isomorphic,
)
from core.report import CheckReport, CheckResult, CheckStatus
from .isolation import Interval, InternalContradiction, RootException, SturmSequence
from .isolation import exact_root_in
from .perron import DEFAULT_MAX_DEPTH, Inconclusive, has_multiple_root_in, perron_certify

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE: Final = Fraction(1, 10**10)
DEFAULT_GRID: Final = 64
# Bisection rounds allowed to separate two overlapping rate enclosures
DEFAULT_SEPARATION_ROUNDS: Final = 6
HALF: Final = Fraction(1, 2)
SIMPLEX_NAMES: Final = ("P1", "P2", "P3")


class NotRightAngled(RootException):
    def __init__(self, name: str):
        super().__init__(f"'{name}' has a dihedral angle other than pi/2.")


class FactorizationMismatch(RootException):
    """
    The right-angled factorization of g doesn't hold.
    """

    def __init__(self, message: str = "Right-angled factorization mismatch."):
        super().__init__(message)


class ParityViolation(RootException):
    def __init__(self, iv: InvariantVector):
        super().__init__(f"c9 = {iv.c9} and c10 = {iv.c10} must both be even.")


def _render_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RootCertificate:
    """
    Certified data on the dominant root r0 of g and the growth rate
    `tau = 1/r0`.

    Attributes:
        r0_enclosure: Rational interval in (0, 1/2) holding r0.
        tau_enclosure: Reciprocal interval holding tau.
        simple: r0 is a simple root.
        perron: Every other root of g has modulus above r0.
        modulus_gap: Lower bound of `|z| - r0` over the other roots.
        tau_min_poly_candidate: Monic integer polynomial vanishing at tau.
        exact: r0 is rational and the enclosures are degenerate.
    """

    r0_enclosure: Interval
    tau_enclosure: Interval
    simple: bool
    perron: bool
    modulus_gap: Optional[Fraction]
    tau_min_poly_candidate: IntPolynomial
    exact: bool = False

    @property
    def tau(self) -> Fraction:
        """
        Midpoint of the tau enclosure, exact when `exact`.
        """
        return (self.tau_enclosure[0] + self.tau_enclosure[1]) / 2

    @property
    def tau_width(self) -> Fraction:
        return self.tau_enclosure[1] - self.tau_enclosure[0]

    def separated_below(self, other: "RootCertificate") -> bool:
        """
        Returns:
            bool: `True` if this rate is certified smaller than `other`.
        """
        return self.tau_enclosure[1] < other.tau_enclosure[0]

    def render(self) -> str:
        lo, hi = self.tau_enclosure
        lines = [
            f"tau ~ {float(self.tau):.10f}" + (" (exact)" if self.exact else ""),
            f"tau in [{_render_fraction(lo)}, {_render_fraction(hi)}]",
        ]
        if self.perron and self.modulus_gap is not None:
            lines.append(f"perron: true (gap >= {_render_fraction(self.modulus_gap)})")
        else:
            lines.append(f"perron: {'true' if self.perron else 'false'}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


########################################################################
#                         Growth rate certificate                      #
########################################################################


def tau_polynomial(iv: InvariantVector) -> IntPolynomial:
    """
    Monic degree 7 polynomial `-(tau^7 / 2) g(1/tau)`, showing that the
    growth rate is an algebraic integer.

    Raises:
        ParityViolation: c9 or c10 is odd.
        InternalContradiction: The reversal disagrees with the expansion
            in the invariants.
    """
    if iv.c9 % 2 or iv.c10 % 2:
        raise ParityViolation(iv)

    reversed_g = g_polynomial(iv).reversed(7)
    p = IntPolynomial(tuple(-c // 2 for c in reversed_g.coefficients))

    f, c, h9, h10 = iv.f, iv.c, iv.c9 // 2, iv.c10 // 2
    expanded = IntPolynomial(
        (
            -(c - 1),
            -(c - f + 1),
            -(c + f - h9 - 4),
            -(2 * c - 2 * f + h9 - h10 + 2),
            -(2 * f - h9 + h10 - 6),
            -(c - f + h9),
            -(f - 3),
            1,
        )
    )
    if p != expanded:
        raise InternalContradiction(f"Reversed g gives {p}, the invariants give {expanded}.")
    return p


def right_angled_rate(P: PolyhedronCombinatorics) -> int:
    """
    Exact growth rate `f - 3` of a right-angled polyhedron, after
    checking `g = 2(t^2+1)(t^4+t^2+1)((f-3)t-1)` by division.

    Raises:
        NotRightAngled: Some label is not 2.
        FactorizationMismatch: The factorization doesn't hold.
    """
    if not P.is_right_angled:
        raise NotRightAngled(P.name)
    iv = compute_invariants(P)
    g = g_polynomial(iv)
    rate = P.face_count - 3
    expected = IntPolynomial((2, 0, 2)) * IntPolynomial((1, 0, 1, 0, 1)) * IntPolynomial(
        (-1, rate)
    )
    quotient, remainder = g.divmod(expected)
    if not remainder.is_zero or quotient != IntPolynomial.one():
        raise FactorizationMismatch(f"g = {g} is not {expected} for '{P.name}'.")
    return rate


def growth_rate(
    P: PolyhedronCombinatorics,
    tol: Fraction = DEFAULT_TOLERANCE,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> RootCertificate:
    """
    Isolate the root r0 of g in (0, 1/2), refine it to width `tol` and
    certify its dominance.

    Raises:
        ValueError: `tol` is not positive.
        InternalContradiction: g doesn't have exactly one root in
            (0, 1/2).
        Inconclusive: Dominance couldn't be decided.
    """
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    start = time.perf_counter()

    iv = compute_invariants(P)
    g = g_polynomial(iv)
    sturm = SturmSequence(g)
    intervals = sturm.isolate(Fraction(0), HALF)
    if len(intervals) != 1:
        raise InternalContradiction(
            f"g = {g} of '{P.name}' has {len(intervals)} roots in (0, 1/2)."
        )

    if iv.is_right_angled:
        r0 = Fraction(1, right_angled_rate(P))
        r0_enclosure, exact = (r0, r0), True
    else:
        root = exact_root_in(g, intervals[0])
        if root is not None:
            r0_enclosure, exact = (root, root), True
        else:
            r0_enclosure, exact = sturm.refine(intervals[0], tol), False

    lo, hi = r0_enclosure
    simple = not has_multiple_root_in(g, r0_enclosure)
    perron, gap = perron_certify(g, r0_enclosure, max_depth)

    certificate = RootCertificate(
        r0_enclosure=r0_enclosure,
        tau_enclosure=(1 / hi, 1 / lo),
        simple=simple,
        perron=perron,
        modulus_gap=gap,
        tau_min_poly_candidate=tau_polynomial(iv),
        exact=exact,
    )
    logger.info(
        f"Growth rate of '{P.name}' ~ {float(certificate.tau):.6f} certified in "
        f"{(time.perf_counter() - start) * 1000:.1f} ms."
    )
    return certificate


def separate(
    P: PolyhedronCombinatorics,
    Q: PolyhedronCombinatorics,
    tol: Fraction = DEFAULT_TOLERANCE,
    rounds: int = DEFAULT_SEPARATION_ROUNDS,
) -> tuple[RootCertificate, RootCertificate]:
    """
    Certificates of P and Q refined until their tau enclosures are
    disjoint.

    Raises:
        Inconclusive: Still overlapping after `rounds` refinements, which
            happens when both rates are equal.
    """
    for _ in range(rounds + 1):
        cert_p, cert_q = growth_rate(P, tol), growth_rate(Q, tol)
        if cert_p.separated_below(cert_q) or cert_q.separated_below(cert_p):
            return cert_p, cert_q
        if cert_p.exact and cert_q.exact:
            break
        tol /= 1024
    raise Inconclusive(f"Growth rates of '{P.name}' and '{Q.name}' not separated.")


def rank_by_growth_rate(
    models: Iterable[PolyhedronCombinatorics], tol: Fraction = DEFAULT_TOLERANCE
) -> list[tuple[PolyhedronCombinatorics, RootCertificate]]:
    """
    Sort models by certified growth rate, every pair of consecutive
    enclosures being disjoint.

    Raises:
        Inconclusive: Two rates could not be separated.
    """
    certified = sorted(
        ((P, growth_rate(P, tol)) for P in models), key=lambda item: item[1].tau
    )
    for i in range(len(certified) - 1):
        (P, cert_p), (Q, cert_q) = certified[i], certified[i + 1]
        if not cert_p.separated_below(cert_q):
            cert_p, cert_q = separate(P, Q, tol / 1024)
            if not cert_p.separated_below(cert_q):
                raise Inconclusive(f"'{P.name}' and '{Q.name}' are out of order.")
            certified[i], certified[i + 1] = (P, cert_p), (Q, cert_q)
    return certified


########################################################################
#                            Sampling checks                           #
########################################################################


def _grid(a: Fraction, b: Fraction, grid: int) -> list[Fraction]:
    return [a + k * (b - a) / (grid + 1) for k in range(1, grid + 1)]


def prop1_checks(P: PolyhedronCombinatorics, grid: int = DEFAULT_GRID) -> CheckReport:
    """
    Spot checks of the sign properties of g on `grid` interior points:

    - g < 0 on (-1/2, 0),
    - g' > 0 on (0, 1/2) unless P is right-angled,
    - g(0) = -2 and g(1/2) > 0.

    Sampling is not a proof; the report says so.
    """
    if grid < 1:
        raise ValueError(f"Grid must be positive, got {grid}")
    iv = compute_invariants(P)
    g = g_polynomial(iv)
    dg = g.derivative()
    sampled = f"sampled on {grid} points"

    bad = [x for x in _grid(-HALF, Fraction(0), grid) if g(x) >= 0]
    results = [
        CheckResult.from_bool(
            "negative_left_of_zero",
            not bad,
            f"g >= 0 at {', '.join(map(str, bad[:3]))}"
            if bad
            else f"g < 0 on (-1/2, 0), {sampled}",
        )
    ]

    if iv.is_right_angled:
        results.append(
            CheckResult(
                "increasing_right_of_zero",
                CheckStatus.SKIPPED,
                "right-angled: g may have a critical point in (0, 1/2)",
            )
        )
    else:
        bad = [x for x in _grid(Fraction(0), HALF, grid) if dg(x) <= 0]
        results.append(
            CheckResult.from_bool(
                "increasing_right_of_zero",
                not bad,
                f"g' <= 0 at {', '.join(map(str, bad[:3]))}"
                if bad
                else f"g' > 0 on (0, 1/2), {sampled}",
            )
        )

    g0, g_half = g(Fraction(0)), g(HALF)
    results.append(
        CheckResult.from_bool(
            "endpoint_values", g0 == -2 and g_half > 0, f"g(0) = {g0}, g(1/2) = {g_half}"
        )
    )
    return CheckReport(f"sign checks of g for {P.name}", results)


def minimality_check(
    P: PolyhedronCombinatorics, tol: Fraction = DEFAULT_TOLERANCE, grid: int = DEFAULT_GRID
) -> CheckReport:
    """
    A tetrahedron must be one of the three catalog simplices. Any other
    polyhedron must grow faster than P3, the fastest simplex.
    """
    if P.is_simplex:
        match = next((name for name in SIMPLEX_NAMES if is_isomorphic(P, catalog(name))), None)
        return CheckReport(
            f"minimality of {P.name}",
            [
                CheckResult.from_bool(
                    "catalog_simplex",
                    match is not None,
                    f"isomorphic to {match}" if match else "not an ideal Coxeter simplex",
                )
            ],
        )

    p3 = catalog("P3")
    g_p = g_polynomial(compute_invariants(P))
    g_3 = g_polynomial(compute_invariants(p3))
    bad = [x for x in _grid(Fraction(0), HALF, grid) if g_p(x) - g_3(x) <= 0]
    results = [
        CheckResult.from_bool(
            "g_above_simplex",
            not bad,
            f"g - g(P3) <= 0 at {', '.join(map(str, bad[:3]))}"
            if bad
            else f"g - g(P3) > 0 on (0, 1/2), sampled on {grid} points",
        )
    ]
    try:
        cert_p, cert_3 = separate(P, p3, tol)
        results.append(
            CheckResult.from_bool(
                "rate_above_simplex",
                cert_3.separated_below(cert_p),
                f"tau(P3) < {float(cert_p.tau):.6f}",
            )
        )
    except Inconclusive as e:
        results.append(CheckResult("rate_above_simplex", CheckStatus.INCONCLUSIVE, str(e)))
    return CheckReport(f"minimality of {P.name}", results)

#!/usr/bin/env python3

# Standard libraries
import pytest
import math
import numpy as np
from fractions import Fraction

# Internal libraries
from .test_constants import *
from .classes_mocks import DOUBLE_ROOT_G, antiprism
from core.growth import IntPolynomial, g_polynomial
from core.polyhedra import InvariantVector, PolyhedronCombinatorics, catalog, compute_invariants
from core.report import CheckStatus
from core.roots import (
    Inconclusive,
    NotRightAngled,
    ParityViolation,
    PerronResult,
    SturmSequence,
    growth_rate,
    minimality_check,
    perron_certify,
    prop1_checks,
    rank_by_growth_rate,
    rational_roots,
    right_angled_rate,
    separate,
    strip_unit_circle_factors,
    sturm_isolate,
    tau_polynomial,
)

# (t - 1)(t - 2)(t + 3)
CUBIC = IntPolynomial((6, -7, 0, 1))
# t^2 - 2
SQRT2 = IntPolynomial((-2, 0, 1))

########################################################################
#                            Sturm sequences                           #
########################################################################


def test_sturm_counts():
    sturm = SturmSequence(CUBIC)

    assert sturm.count(Fraction(-10), Fraction(10)) == 3
    assert sturm.count(Fraction(0), Fraction(3, 2)) == 1
    # Open interval, the roots at the endpoints are left out
    assert sturm.count(Fraction(1), Fraction(2)) == 0
    assert sturm.count_closed(Fraction(1), Fraction(2)) == 2
    assert sturm.count_closed(Fraction(2), Fraction(2)) == 1


def test_sturm_square_free():
    """
    Distinct roots are counted once.
    """
    sturm = SturmSequence(DOUBLE_ROOT_G)
    assert sturm.count(Fraction(0), Fraction(1)) == 1


def test_sturm_zero_polynomial():
    with pytest.raises(ValueError):
        SturmSequence(IntPolynomial())


def test_isolate_and_refine():
    intervals = sturm_isolate(CUBIC, (-5, 5))
    assert len(intervals) == 3
    assert all(b <= c for (_, b), (c, _) in zip(intervals, intervals[1:]))

    (interval,) = sturm_isolate(SQRT2, (0, 2))
    lo, hi = SturmSequence(SQRT2).refine(interval, Fraction(1, 10**12))
    assert hi - lo <= Fraction(1, 10**12)
    assert lo <= math.sqrt(2) <= hi
    assert lo * lo < 2 < hi * hi


def test_refine_hits_root():
    """
    A midpoint landing on a root gives a degenerate interval.
    """
    sturm = SturmSequence(CUBIC)
    assert sturm.refine((Fraction(0), Fraction(2)), Fraction(1, 100)) == (1, 1)


def test_rational_roots():
    assert rational_roots(DOUBLE_ROOT_G) == [Fraction(1, 3)]
    assert rational_roots(CUBIC) == [-3, 1, 2]
    assert rational_roots(SQRT2) == []


########################################################################
#                          Perron certificate                          #
########################################################################


def test_strip_unit_circle_factors():
    g = g_polynomial(compute_invariants(catalog("OCT")))
    h, removed = strip_unit_circle_factors(g)

    assert removed
    assert h.square_free_part() == IntPolynomial((-1, 5))
    assert strip_unit_circle_factors(SQRT2) == (SQRT2, False)


def test_perron_octahedron():
    g = g_polynomial(compute_invariants(catalog("OCT")))
    r0 = Fraction(1, 5)

    assert perron_certify(g, (r0, r0)) == PerronResult(True, Fraction(4, 5))


def test_perron_multiple_root():
    result = perron_certify(DOUBLE_ROOT_G, (Fraction(1, 4), Fraction(1, 2)))
    assert result == PerronResult(False, None)


def test_perron_smaller_root():
    # (3t - 1)(5t - 1): 1/5 lies inside the disk of radius 1/3
    g = IntPolynomial((-1, 3)) * IntPolynomial((-1, 5))
    result = perron_certify(g, (Fraction(3, 10), Fraction(2, 5)))
    assert result == PerronResult(False, None)


def test_perron_equal_modulus_inconclusive():
    # 9t^2 - 1: -1/3 is as close to 0 as 1/3
    g = IntPolynomial((-1, 0, 9))
    with pytest.raises(Inconclusive):
        perron_certify(g, (Fraction(3, 10), Fraction(2, 5)), max_depth=8)


def test_perron_without_refinements():
    g = g_polynomial(compute_invariants(catalog("P1")))
    with pytest.raises(Inconclusive):
        perron_certify(g, (Fraction(2, 5), Fraction(1, 2)), max_depth=0)


def test_perron_positive_enclosure():
    with pytest.raises(ValueError):
        perron_certify(SQRT2, (Fraction(0), Fraction(1)))


########################################################################
#                              Growth rate                             #
########################################################################


def test_catalog_growth_rates(catalog_model: PolyhedronCombinatorics):
    certificate = growth_rate(catalog_model)

    assert float(certificate.tau) == pytest.approx(
        CATALOG_TAU[catalog_model.name], abs=TAU_ACCURACY
    )
    assert certificate.simple
    assert certificate.perron
    assert certificate.modulus_gap is not None and certificate.modulus_gap > 0
    lo, hi = certificate.r0_enclosure
    assert 0 < lo <= hi < Fraction(1, 2)


def test_enclosure_width(non_right_angled: PolyhedronCombinatorics):
    tol = Fraction(1, 10**12)
    certificate = growth_rate(non_right_angled, tol)

    lo, hi = certificate.r0_enclosure
    assert hi - lo <= tol
    assert not certificate.exact
    assert certificate.tau_width > 0


def test_octahedron_exact():
    certificate = growth_rate(catalog("OCT"))

    assert certificate.exact
    assert certificate.tau == 5
    assert certificate.tau_enclosure == (5, 5)
    assert certificate.render().splitlines() == [
        "tau ~ 5.0000000000 (exact)",
        "tau in [5/1, 5/1]",
        "perron: true (gap >= 4/5)",
    ]


def test_render_enclosure():
    text = growth_rate(catalog("P1")).render()

    assert text.startswith("tau ~ 2.03073")
    assert "(exact)" not in text
    assert text.splitlines()[2].startswith("perron: true (gap >= ")


def test_invalid_tolerance():
    with pytest.raises(ValueError):
        growth_rate(catalog("P1"), Fraction(0))


@pytest.mark.parametrize("n", [3, 4, 5, 7])
def test_right_angled_rate(n: int):
    P = antiprism(n)

    assert right_angled_rate(P) == 2 * n - 1
    assert growth_rate(P).tau == 2 * n - 1


def test_right_angled_rate_refused():
    with pytest.raises(NotRightAngled):
        right_angled_rate(catalog("P1"))


########################################################################
#                           Tau polynomial                             #
########################################################################


def test_p3_tau_polynomial():
    p = tau_polynomial(compute_invariants(catalog("P3")))
    assert tuple(reversed(p.coefficients)) == P3_TAU_POLYNOMIAL


def test_tau_polynomial_vanishes(catalog_model: PolyhedronCombinatorics):
    """
    Monic with integer coefficients, zero at tau.
    """
    p = tau_polynomial(compute_invariants(catalog_model))
    tau = float(growth_rate(catalog_model).tau)

    assert p.degree == 7
    assert p.leading_coefficient == 1
    value = np.polyval(list(reversed(p.coefficients)), tau)
    assert value == pytest.approx(0, abs=1e-6)


def test_tau_polynomial_parity():
    iv = InvariantVector(f=4, c=4, e=6, e2=0, e3=6, e4=0, e6=0, c8=0, c9=3, c10=0, c11=0)
    with pytest.raises(ParityViolation):
        tau_polynomial(iv)


########################################################################
#                              Comparisons                             #
########################################################################


def test_catalog_ranking():
    ranked = rank_by_growth_rate([catalog(name) for name in reversed(CATALOG)])

    assert [P.name for P, _ in ranked] == list(CATALOG)
    for (_, a), (_, b) in zip(ranked, ranked[1:]):
        assert a.separated_below(b)


def test_separate():
    cert_1, cert_2 = separate(catalog("P1"), catalog("P2"))
    assert cert_1.separated_below(cert_2)


def test_separate_equal_rates():
    with pytest.raises(Inconclusive):
        separate(catalog("P1"), catalog("P1"), SEPARATION_TOLERANCE, rounds=1)


########################################################################
#                            Sampling checks                           #
########################################################################


def test_sign_checks(catalog_model: PolyhedronCombinatorics):
    report = prop1_checks(catalog_model, grid=CHECK_GRID)

    assert report.verdict, report.render()
    expected = CheckStatus.SKIPPED if catalog_model.is_right_angled else CheckStatus.PASS
    assert report.status_of("increasing_right_of_zero") is expected
    assert report.status_of("endpoint_values") is CheckStatus.PASS


def test_sign_checks_grid():
    with pytest.raises(ValueError):
        prop1_checks(catalog("P1"), grid=0)


@pytest.mark.parametrize("name", ["P1", "P2", "P3"])
def test_minimality_simplex(name: str):
    report = minimality_check(catalog(name))

    assert report.verdict
    assert report.get("catalog_simplex").detail == f"isomorphic to {name}"


@pytest.mark.parametrize("name", ["P4", "P5", "OCT"])
def test_minimality_faster_than_simplices(name: str):
    report = minimality_check(catalog(name), grid=CHECK_GRID)

    assert report.verdict, report.render()
    assert report.status_of("g_above_simplex") is CheckStatus.PASS
    assert report.status_of("rate_above_simplex") is CheckStatus.PASS

#!/usr/bin/env python3

# Standard libraries
import pytest
import math
import numpy as np
from fractions import Fraction

# Internal libraries
from .test_constants import *
from .classes_mocks import antiprism
from core.growth import cross_check, series_coefficients
from core.polyhedra import PolyhedronCombinatorics, catalog
from core.oracle import (
    CoxeterMatrix,
    GrowthSample,
    OracleException,
    OracleResourceLimit,
    QuadraticFieldNumber,
    bfs_growth,
    canonical_representation,
    coxeter_matrix,
    identity,
    matmul,
    matrix_power,
)

SQRT2 = QuadraticFieldNumber(0, 1)
SQRT3 = QuadraticFieldNumber(0, 0, 1)

########################################################################
#                            Number field                              #
########################################################################


def test_field_arithmetic():
    assert SQRT2 * SQRT2 == QuadraticFieldNumber(2)
    assert SQRT2 * SQRT3 == QuadraticFieldNumber(0, 0, 0, 1)
    assert (1 - SQRT2) + SQRT2 == QuadraticFieldNumber(1)
    assert (SQRT2 - SQRT2).is_zero()
    assert float(SQRT3 * Fraction(1, 2)) == pytest.approx(math.cos(math.pi / 6))


def test_regular_matrix():
    x = QuadraticFieldNumber(1, 2, -1, 3)
    y = QuadraticFieldNumber(-2, 0, 5, 1)

    product = x.regular_matrix() @ np.array([int(c) for c in y.components])
    assert tuple(product) == tuple(int(c) for c in (x * y).components)

    with pytest.raises(ValueError):
        QuadraticFieldNumber(Fraction(1, 2)).regular_matrix()


@pytest.mark.parametrize("m", [2, 3, 4, 6])
def test_cosines(m: int):
    assert float(QuadraticFieldNumber.cos_pi_over(m)) == pytest.approx(
        math.cos(math.pi / m)
    )


def test_cosine_outside_field():
    with pytest.raises(ValueError):
        QuadraticFieldNumber.cos_pi_over(5)


########################################################################
#                            Coxeter matrix                            #
########################################################################


def test_coxeter_matrix_p1():
    M = coxeter_matrix(catalog("P1"))

    assert M.n == 4
    assert M.m[0] == (1, 3, 2, 6)
    assert M.m[1][2] == 6


def test_coxeter_matrix_infinite_orders():
    M = coxeter_matrix(catalog("OCT"))

    infinite = sum(1 for row in M.m for order in row if order == math.inf)
    # 28 pairs of faces, 12 of them adjacent
    assert infinite == 2 * (28 - 12)


@pytest.mark.parametrize(
    "rows, match",
    [
        (((1, 2), (3, 1)), "differ"),
        (((2, 2), (2, 1)), "Diagonal"),
        (((1, 5), (5, 1)), "not in"),
        (((1, 2),), "2x2"),
    ],
)
def test_invalid_coxeter_matrix(rows: tuple, match: str):
    with pytest.raises(OracleException, match=match):
        CoxeterMatrix(2, rows)


def test_representation_relations(catalog_model: PolyhedronCombinatorics):
    """
    Generators are involutions and `(s t)^m` is the identity for every
    finite order m.
    """
    M = coxeter_matrix(catalog_model)
    generators = canonical_representation(M)
    one = identity(M.n)

    for s in generators:
        assert matmul(s, s) == one
    for edge in catalog_model.edges:
        a, b = edge.faces
        st = matmul(generators[a], generators[b])
        assert matrix_power(st, int(edge.label)) == one
        assert matrix_power(st, int(edge.label) - 1) != one


########################################################################
#                             BFS oracle                               #
########################################################################


def test_octahedron_counts():
    sample = bfs_growth(coxeter_matrix(catalog("OCT")), len(OCT_SERIES) - 1)
    assert list(sample.counts) == OCT_SERIES


def test_p3_counts():
    assert list(bfs_growth(coxeter_matrix(catalog("P3")), 3).counts) == P3_SERIES


@pytest.mark.parametrize("name", ["P1", "P2", "P3", "P4", "P5"])
def test_counts_match_series(name: str):
    """
    Word length counts agree with the series of the growth function up
    to the default oracle depth.
    """
    P = catalog(name)
    sample = bfs_growth(coxeter_matrix(P), ORACLE_DEPTH)

    assert sample.depth == ORACLE_DEPTH
    assert list(sample.counts) == series_coefficients(cross_check(P), ORACLE_DEPTH)


def test_antiprism_counts():
    P = antiprism(4)
    sample = bfs_growth(coxeter_matrix(P), 4)

    assert list(sample.counts) == series_coefficients(cross_check(P), 4)


def test_depth_zero():
    sample = bfs_growth(coxeter_matrix(catalog("P1")), 0)

    assert sample.counts == (1,)
    assert sample.render() == "0\t1"


def test_negative_depth():
    with pytest.raises(ValueError):
        bfs_growth(coxeter_matrix(catalog("P1")), -1)


def test_element_cap():
    """
    Spheres 0..2 of the octahedron hold 53 elements, sphere 3 another
    224.
    """
    with pytest.raises(OracleResourceLimit) as e:
        bfs_growth(coxeter_matrix(catalog("OCT")), 5, element_cap=100)

    assert e.value.completed_depth == 2
    assert e.value.counts == OCT_SERIES[:3]
    assert "100" in str(e.value)


def test_growth_sample_checks():
    assert GrowthSample(2, (1, 4, 12)).render() == "0\t1\n1\t4\n2\t12"

    with pytest.raises(ValueError):
        GrowthSample(2, (1, 4))
    with pytest.raises(ValueError):
        GrowthSample(1, (2, 4))

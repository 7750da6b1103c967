#!/usr/bin/env python3
"""
Exact growth functions of ideal Coxeter polyhedra.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

from .polynomials import T, GrowthException, IntPolynomial, RationalFunction, bracket
from .coxeter_groups import (
    CoxeterFamily,
    FiniteGroupSymbol,
    InvalidGroupSymbol,
    dihedral,
    finite_growth,
    parse_group,
)
from .growth_function import (
    GrowthFormMismatch,
    NonIntegralSeries,
    closed_form_from_invariants,
    closed_form_growth,
    cross_check,
    finite_subgroups,
    g_half_identity,
    g_polynomial,
    series_coefficients,
    steinberg_from_counts,
    steinberg_growth,
)

__all__ = [
    "T",
    "GrowthException",
    "IntPolynomial",
    "RationalFunction",
    "bracket",
    "CoxeterFamily",
    "FiniteGroupSymbol",
    "InvalidGroupSymbol",
    "dihedral",
    "finite_growth",
    "parse_group",
    "GrowthFormMismatch",
    "NonIntegralSeries",
    "closed_form_from_invariants",
    "closed_form_growth",
    "cross_check",
    "finite_subgroups",
    "g_half_identity",
    "g_polynomial",
    "series_coefficients",
    "steinberg_from_counts",
    "steinberg_growth",
]

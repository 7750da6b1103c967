#!/usr/bin/env python3
"""
Certified root analysis of the growth denominator: isolation, growth
rates, dominance of the smallest root and sampling checks.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

from .isolation import (
    Interval,
    InternalContradiction,
    RootException,
    SturmSequence,
    rational_roots,
    sturm_isolate,
)
from .perron import Inconclusive, PerronResult, perron_certify, strip_unit_circle_factors
from .growth_rate import (
    DEFAULT_TOLERANCE,
    FactorizationMismatch,
    NotRightAngled,
    ParityViolation,
    RootCertificate,
    growth_rate,
    minimality_check,
    prop1_checks,
    rank_by_growth_rate,
    right_angled_rate,
    separate,
    tau_polynomial,
)

__all__ = [
    "Interval",
    "InternalContradiction",
    "RootException",
    "SturmSequence",
    "rational_roots",
    "sturm_isolate",
    "Inconclusive",
    "PerronResult",
    "perron_certify",
    "strip_unit_circle_factors",
    "DEFAULT_TOLERANCE",
    "FactorizationMismatch",
    "NotRightAngled",
    "ParityViolation",
    "RootCertificate",
    "growth_rate",
    "minimality_check",
    "prop1_checks",
    "rank_by_growth_rate",
    "right_angled_rate",
    "separate",
    "tau_polynomial",
]

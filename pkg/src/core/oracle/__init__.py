#!/usr/bin/env python3
"""
Independent growth series by breadth-first enumeration of group
elements, used to cross-check the exact growth functions.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

from .quadratic_field import FieldMatrix, QuadraticFieldNumber, identity, matmul, matrix_power
from .coxeter_matrix import (
    CoxeterMatrix,
    OracleException,
    canonical_representation,
    coxeter_matrix,
)
from .bfs import (
    DEFAULT_DEPTH,
    DEFAULT_ELEMENT_CAP,
    GrowthSample,
    OracleResourceLimit,
    bfs_growth,
)

__all__ = [
    "FieldMatrix",
    "QuadraticFieldNumber",
    "identity",
    "matmul",
    "matrix_power",
    "CoxeterMatrix",
    "OracleException",
    "canonical_representation",
    "coxeter_matrix",
    "DEFAULT_DEPTH",
    "DEFAULT_ELEMENT_CAP",
    "GrowthSample",
    "OracleResourceLimit",
    "bfs_growth",
]

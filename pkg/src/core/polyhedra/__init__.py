#!/usr/bin/env python3
"""
Combinatorial model, ICP format, validation and catalog of ideal
Coxeter polyhedra.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

from .combinatorics import (
    AngleLabel,
    AngleSumViolation,
    CuspType,
    Edge,
    FaceProfile,
    IcpFormatError,
    InvariantVector,
    MalformedPolyhedron,
    MissingEdgeError,
    NonSimpleBoundary,
    PolyhedronCombinatorics,
    PolyhedronException,
    canonical_cycle,
    classify_cusp,
    compute_invariants,
    cusp_labels,
    face_profile,
    tally_invariants,
)
from .icp_format import load_icp, parse_icp, serialize_icp
from .polyhedron_validator import validate
from .andreev import andreev_check
from .isomorphism import find_isomorphism, is_isomorphic
from .catalog import CATALOG_NAMES, UnknownCatalogEntry, catalog, catalog_path

__all__ = [
    "AngleLabel",
    "AngleSumViolation",
    "CuspType",
    "Edge",
    "FaceProfile",
    "IcpFormatError",
    "InvariantVector",
    "MalformedPolyhedron",
    "MissingEdgeError",
    "NonSimpleBoundary",
    "PolyhedronCombinatorics",
    "PolyhedronException",
    "canonical_cycle",
    "classify_cusp",
    "compute_invariants",
    "cusp_labels",
    "face_profile",
    "tally_invariants",
    "parse_icp",
    "serialize_icp",
    "load_icp",
    "validate",
    "andreev_check",
    "find_isomorphism",
    "is_isomorphic",
    "CATALOG_NAMES",
    "UnknownCatalogEntry",
    "catalog",
    "catalog_path",
]

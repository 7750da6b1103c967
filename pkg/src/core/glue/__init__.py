#!/usr/bin/env python3
"""
Gluing ideal Coxeter polyhedra along matching faces, with the checks on
the result.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

from .face_matching import (
    FaceMatching,
    GlueException,
    MatchingError,
    enumerate_matchings,
    resolve_matching,
)
from .gluing import GlueInvalid, check_glueable, glue, glued_label
from .glue_checks import glue_identities_check, theorem6_check

__all__ = [
    "FaceMatching",
    "GlueException",
    "MatchingError",
    "enumerate_matchings",
    "resolve_matching",
    "GlueInvalid",
    "check_glueable",
    "glue",
    "glued_label",
    "glue_identities_check",
    "theorem6_check",
]

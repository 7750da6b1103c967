#!/usr/bin/env python3
"""
Lobachevsky function and volumes of ideal tetrahedra and catalog
polyhedra.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

from .lobachevsky import (
    LobachevskyValue,
    QuadratureError,
    VolumeException,
    lobachevsky,
    lobachevsky_pi_fraction,
    lobachevsky_quadrature,
)
from .tetrahedra import (
    AngleSumError,
    TetrahedronAngles,
    UnknownVolume,
    VolumeEstimate,
    catalog_volume,
    ideal_tetrahedron_volume,
)

__all__ = [
    "LobachevskyValue",
    "QuadratureError",
    "VolumeException",
    "lobachevsky",
    "lobachevsky_pi_fraction",
    "lobachevsky_quadrature",
    "AngleSumError",
    "TetrahedronAngles",
    "UnknownVolume",
    "VolumeEstimate",
    "catalog_volume",
    "ideal_tetrahedron_volume",
]

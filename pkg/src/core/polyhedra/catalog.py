#!/usr/bin/env python3
"""
Built-in models: the three ideal Coxeter simplices P1, P2, P3, the two
ideal Coxeter square pyramids P4, P5 and the right-angled ideal
octahedron OCT. They are stored as ICP files under `assets/catalog/`.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
from functools import cache
from pathlib import Path
from typing import Final

# Internal libraries
from .combinatorics import PolyhedronCombinatorics, PolyhedronException
from .icp_format import load_icp
from .polyhedron_validator import validate

logger = logging.getLogger(__name__)

CATALOG_FOLDER: Final = Path(__file__).resolve().parents[3] / "assets" / "catalog"
CATALOG_NAMES: Final = ("P1", "P2", "P3", "P4", "P5", "OCT")


class UnknownCatalogEntry(PolyhedronException):
    """
    The requested name is not a built-in model.
    """

    def __init__(self, name: str):
        self.name = name
        super().__init__(
            f"Unknown catalog entry '{name}', expecting one of {', '.join(CATALOG_NAMES)}."
        )


def catalog_path(name: str) -> Path:
    """
    Returns:
        Path: ICP file of a built-in model.

    Raises:
        UnknownCatalogEntry: Unknown name.
    """
    if name not in CATALOG_NAMES:
        raise UnknownCatalogEntry(name)
    return CATALOG_FOLDER / f"{name}.icp"


@cache
def catalog(name: str) -> PolyhedronCombinatorics:
    """
    Load a built-in model, checked by `validate` on first access.

    Raises:
        UnknownCatalogEntry: Unknown name.
        PolyhedronException: The stored model doesn't validate.
    """
    model = load_icp(catalog_path(name))
    report = validate(model)
    if not report.verdict:
        raise PolyhedronException(
            f"Catalog entry '{name}' fails validation: "
            f"{', '.join(r.check_id for r in report.failures())}."
        )
    logger.debug(f"Catalog entry '{name}' loaded from '{CATALOG_FOLDER}'.")
    return model

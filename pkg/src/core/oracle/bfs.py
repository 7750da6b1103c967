#!/usr/bin/env python3
"""
Brute-force growth series: enumerate the group elements sphere by
sphere as exact matrices of the canonical representation.

Matrices are numpy `int64` arrays of shape (n, n, 4), each entry holding
its components on the basis (1, sqrt2, sqrt3, sqrt6). Left
multiplication by a generator only rewrites one row, which is done for a
whole sphere at once with `numpy.einsum`.

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
from typing import Final

# Third-party libraries
import numpy as np

# Internal libraries
from .coxeter_matrix import CoxeterMatrix, OracleException, canonical_representation
from .quadratic_field import identity, to_array

logger = logging.getLogger(__name__)

DEFAULT_DEPTH: Final = 6
DEFAULT_ELEMENT_CAP: Final = 1_000_000
# Entries beyond this bound could overflow int64 in the next product
_ENTRY_LIMIT: Final = 1 << 40


class OracleResourceLimit(OracleException):
    """
    The enumeration reached the element cap.
    """

    def __init__(self, completed_depth: int, counts: list[int], cap: int):
        self.completed_depth = completed_depth
        self.counts = counts
        super().__init__(
            f"Element cap {cap} reached after depth {completed_depth} "
            f"(counts {', '.join(map(str, counts))})."
        )


@dataclass(frozen=True)
class GrowthSample:
    """
    Sizes `a_0 .. a_depth` of the spheres of the word metric.
    """

    depth: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) != self.depth + 1:
            raise ValueError(f"Expecting {self.depth + 1} counts, got {len(self.counts)}")
        if self.counts and self.counts[0] != 1:
            raise ValueError("The sphere of radius 0 is the identity alone")

    def render(self) -> str:
        return "\n".join(f"{j}\t{a}" for j, a in enumerate(self.counts))


def _row_operators(M: CoxeterMatrix) -> np.ndarray:
    """
    Returns:
        np.ndarray: Shape (n, n, 4, 4). Entry [s, t] is the regular
            matrix of `(sigma_s)_{s,t}`, the coefficient of row t in the
            new row s.
    """
    generators = canonical_representation(M)
    return np.stack(
        [
            np.stack([entry.regular_matrix() for entry in sigma[s]])
            for s, sigma in enumerate(generators)
        ]
    )


def _keys(batch: np.ndarray) -> list[bytes]:
    return [element.tobytes() for element in batch]


def bfs_growth(
    M: CoxeterMatrix, depth: int = DEFAULT_DEPTH, element_cap: int = DEFAULT_ELEMENT_CAP
) -> GrowthSample:
    """
    Count the elements of each word length up to `depth`.

    A generator changes the length by exactly one, so the sphere j+1 is
    the set of `sigma_s w` (w in sphere j) that are not in sphere j-1.

    Raises:
        ValueError: Negative depth.
        OracleResourceLimit: More than `element_cap` elements.
        OracleException: Matrix entries grew beyond the exact range.
    """
    if depth < 0:
        raise ValueError(f"Depth must be nonnegative, got {depth}")
    start = time.perf_counter()
    operators = _row_operators(M)

    sphere = to_array(identity(M.n))[np.newaxis]
    previous_keys: set[bytes] = set()
    counts = [1]
    total = 1

    for j in range(depth):
        found: dict[bytes, np.ndarray] = {}
        for s in range(M.n):
            # New row s: sum_t (sigma_s)_{s,t} * row t, entry-wise in the field
            products = sphere.copy()
            products[:, s] = np.einsum("tpq,ktjq->kjp", operators[s], sphere)
            if products.size and np.abs(products).max() > _ENTRY_LIMIT:
                raise OracleException(f"Matrix entries exceed {_ENTRY_LIMIT} at depth {j + 1}.")
            for key, element in zip(_keys(products), products):
                if key not in previous_keys and key not in found:
                    found[key] = element.copy()

        total += len(found)
        if total > element_cap:
            raise OracleResourceLimit(j, counts, element_cap)

        previous_keys = set(_keys(sphere))
        sphere = np.stack(list(found.values())) if found else sphere[:0]
        counts.append(len(found))
        logger.debug(f"Sphere {j + 1}: {len(found)} elements.")

    logger.info(
        f"BFS of {M.n} generators to depth {depth} in "
        f"{(time.perf_counter() - start) * 1000:.1f} ms: {counts}."
    )
    return GrowthSample(depth, tuple(counts))

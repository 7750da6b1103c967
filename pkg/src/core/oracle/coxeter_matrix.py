#!/usr/bin/env python3
"""
Coxeter matrix of a polyhedral reflection group and its canonical
(Tits) representation.

Generators are the faces. Two faces meeting along an edge labeled m give
`m(s, t) = m`; faces that don't meet give an infinite order product.
The bilinear form is `B(e_s, e_t) = -cos(pi/m(s, t))`, with `B = -1`
for infinite orders, which keeps the representation faithful without
any hyperbolic distance data.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import math
from dataclasses import dataclass
from typing import Final

# Internal libraries
from core.polyhedra import PolyhedronCombinatorics
from .quadratic_field import FieldMatrix, QuadraticFieldNumber

logger = logging.getLogger(__name__)

ALLOWED_ORDERS: Final = (2, 3, 4, 6, math.inf)


class OracleException(Exception):
    """
    Base class of the brute-force oracle errors.
    """

    def __init__(self, message: str = "Oracle error."):
        super().__init__(message)


@dataclass(frozen=True)
class CoxeterMatrix:
    """
    Symmetric table of the orders `m(s, t)` of the products of two
    generators, `math.inf` standing for infinite order.
    """

    n: int
    m: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if len(self.m) != self.n or any(len(row) != self.n for row in self.m):
            raise OracleException(f"Coxeter matrix must be {self.n}x{self.n}.")
        for s in range(self.n):
            if self.m[s][s] != 1:
                raise OracleException(f"Diagonal entry ({s}, {s}) must be 1.")
            for t in range(s + 1, self.n):
                if self.m[s][t] != self.m[t][s]:
                    raise OracleException(f"Entries ({s}, {t}) and ({t}, {s}) differ.")
                if self.m[s][t] not in ALLOWED_ORDERS:
                    raise OracleException(
                        f"Entry ({s}, {t}) = {self.m[s][t]} not in {{2,3,4,6,inf}}."
                    )

    def bilinear_form(self, s: int, t: int) -> QuadraticFieldNumber:
        """
        Returns:
            QuadraticFieldNumber: `B(e_s, e_t)`.
        """
        order = self.m[s][t]
        if order == math.inf:
            return QuadraticFieldNumber(-1)
        return -QuadraticFieldNumber.cos_pi_over(int(order))


def coxeter_matrix(P: PolyhedronCombinatorics) -> CoxeterMatrix:
    n = P.face_count
    rows = [[math.inf] * n for _ in range(n)]
    for s in range(n):
        rows[s][s] = 1
    for edge in P.edges:
        a, b = edge.faces
        rows[a][b] = rows[b][a] = int(edge.label)
    return CoxeterMatrix(n, tuple(tuple(row) for row in rows))


def canonical_representation(M: CoxeterMatrix) -> list[FieldMatrix]:
    """
    Matrices of the generators, `sigma_s(e_t) = e_t - 2 B(e_s, e_t) e_s`.
    Only row s of `sigma_s` differs from the identity.
    """
    one, zero = QuadraticFieldNumber(1), QuadraticFieldNumber()
    generators = []
    for s in range(M.n):
        rows = []
        for r in range(M.n):
            if r == s:
                rows.append(
                    tuple(
                        (one if t == s else zero) - 2 * M.bilinear_form(s, t)
                        for t in range(M.n)
                    )
                )
            else:
                rows.append(tuple(one if t == r else zero for t in range(M.n)))
        generators.append(tuple(rows))
    return generators

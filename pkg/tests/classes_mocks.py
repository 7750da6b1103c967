#!/usr/bin/env python3

# Standard libraries
import logging
import numpy as np

# Internal libraries
from core.growth import IntPolynomial
from core.polyhedra import AngleLabel, Edge, InvariantVector, PolyhedronCombinatorics

logger = logging.getLogger(__name__)

########################################################################
#                            Generated models                          #
########################################################################


def triangular_prism(label: int = 4) -> PolyhedronCombinatorics:
    """
    Ideal triangular prism: face 0 on top, face 1 at the bottom, faces
    2, 3, 4 on the sides. Top and bottom edges carry `label`, side edges
    are right-angled. With `label` 4 every cusp is of type (2, 4, 4), the
    model validates but its side faces form a prismatic 3-circuit with
    an angle sum of 3pi/2.
    """
    sides = (2, 3, 4)
    edges = [Edge(cap, side, AngleLabel(label)) for cap in (0, 1) for side in sides]
    edges += [Edge(2, 3, AngleLabel.RIGHT), Edge(3, 4, AngleLabel.RIGHT), Edge(2, 4, AngleLabel.RIGHT)]
    cusps = [
        (cap, sides[i], sides[(i + 1) % 3]) for cap in (0, 1) for i in range(3)
    ]
    return PolyhedronCombinatorics(f"PRISM{label}", 5, frozenset(edges), tuple(cusps))


def antiprism(n: int) -> PolyhedronCombinatorics:
    """
    Ideal right-angled antiprism with two n-gonal caps: top face 0,
    bottom face 1, upper triangles `U_i = 2 + i` and lower triangles
    `D_i = 2 + n + i`. It has `2n + 2` faces and the octahedron for
    n = 3.
    """
    T, B = 0, 1
    U = [2 + i for i in range(n)]
    D = [2 + n + i for i in range(n)]
    edges = set()
    cusps = []
    for i in range(n):
        edges |= {
            Edge(T, U[i], AngleLabel.RIGHT),
            Edge(B, D[i], AngleLabel.RIGHT),
            Edge(U[i], D[i], AngleLabel.RIGHT),
            Edge(D[i - 1], U[i], AngleLabel.RIGHT),
        }
        cusps.append((T, U[i - 1], D[i - 1], U[i]))
        cusps.append((B, D[i - 1], U[i], D[i]))
    return PolyhedronCombinatorics(f"ANTI{n}", 2 * n + 2, frozenset(edges), tuple(cusps))


########################################################################
#                          Generated invariants                        #
########################################################################


def random_invariants(rng: np.random.Generator) -> InvariantVector:
    """
    Invariant vector consistent with every counting identity: pick f,
    then even counts of the non right-angled cusp types, the remaining
    cusps being of type (2, 2, 2, 2).
    """
    f = int(rng.integers(4, 40))
    budget = 2 * f - 4
    while True:
        c9, c10, c11 = (2 * int(x) for x in rng.integers(0, budget // 2 + 1, size=3))
        s = c9 + c10 + c11
        if s <= budget and (budget - s) % 2 == 0:
            break
    c8 = (budget - s) // 2
    c = c8 + s
    return InvariantVector(
        f=f,
        c=c,
        e=(4 * c8 + 3 * s) // 2,
        e2=(4 * c8 + c10 + c11) // 2,
        e3=(3 * c9 + c11) // 2,
        e4=c10,
        e6=c11 // 2,
        c8=c8,
        c9=c9,
        c10=c10,
        c11=c11,
    )


########################################################################
#                             Polynomials                              #
########################################################################

# (3t - 1)^2 (t^2 + 4): double root at 1/3, two complex roots of modulus 2
DOUBLE_ROOT_G = IntPolynomial((4, -24, 37, -6, 9))

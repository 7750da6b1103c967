#!/usr/bin/env python3
"""
Checks on a glued polyhedron: counting identities relating its
invariants to those of the pieces, and strict growth of the growth rate.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
from fractions import Fraction
from typing import Final

# Internal libraries
from core.growth import g_polynomial
from core.polyhedra import PolyhedronCombinatorics, compute_invariants, face_profile
from core.report import CheckReport, CheckResult, CheckStatus
from core.roots import DEFAULT_TOLERANCE, Inconclusive, separate
from .face_matching import FaceMatching

logger = logging.getLogger(__name__)

DEFAULT_REFINEMENTS: Final = 6
DEFAULT_GRID: Final = 64


def _like_labels(P: PolyhedronCombinatorics, Q: PolyhedronCombinatorics, match: FaceMatching) -> bool:
    return all(
        P.label(match.face_p, a) == Q.label(match.face_q, b) for a, b in match.edge_map
    )


def glue_identities_check(
    P: PolyhedronCombinatorics,
    Q: PolyhedronCombinatorics,
    match: FaceMatching,
    glued: PolyhedronCombinatorics,
) -> CheckReport:
    """
    Compare the invariants of the glued model with those predicted from
    P, Q and the profile of the glued face F:

    - `c = c(P) + c(Q) - c(F)`
    - `c9 = c9(P) + c9(Q) + c26(F)`
    - `c10 = c10(P) + c10(Q) - 2 c44(F) - c24(F)`
    - `f = f(P) + f(Q) - e2(F) - 2`

    The c9 and c10 counts assume every edge is matched with an edge of
    the same label; other matchings report them as not applicable.
    """
    iv_p, iv_q, iv_g = compute_invariants(P), compute_invariants(Q), compute_invariants(glued)
    face = face_profile(P, match.face_p)
    like = _like_labels(P, Q, match)

    def relation(check_id: str, actual: int, expected: int, formula: str) -> CheckResult:
        return CheckResult.from_bool(
            check_id, actual == expected, f"{actual} vs {formula} = {expected}"
        )

    results = [
        relation(
            "glued_cusps",
            iv_g.c,
            iv_p.c + iv_q.c - face.cusp_count,
            f"{iv_p.c} + {iv_q.c} - {face.cusp_count}",
        )
    ]
    if like:
        results += [
            relation(
                "glued_c9",
                iv_g.c9,
                iv_p.c9 + iv_q.c9 + face.c(2, 6),
                f"{iv_p.c9} + {iv_q.c9} + {face.c(2, 6)}",
            ),
            relation(
                "glued_c10",
                iv_g.c10,
                iv_p.c10 + iv_q.c10 - 2 * face.c(4, 4) - face.c(2, 4),
                f"{iv_p.c10} + {iv_q.c10} - 2*{face.c(4, 4)} - {face.c(2, 4)}",
            ),
        ]
    else:
        note = "matching pairs different labels, counts not predicted"
        results += [
            CheckResult("glued_c9", CheckStatus.NOT_APPLICABLE, note),
            CheckResult("glued_c10", CheckStatus.NOT_APPLICABLE, note),
        ]
    results.append(
        relation(
            "glued_faces",
            iv_g.f,
            iv_p.f + iv_q.f - face.e(2) - 2,
            f"{iv_p.f} + {iv_q.f} - {face.e(2)} - 2",
        )
    )
    return CheckReport(f"gluing identities of {glued.name}", results)


def theorem6_check(
    P: PolyhedronCombinatorics,
    Q: PolyhedronCombinatorics,
    glued: PolyhedronCombinatorics,
    tol: Fraction = DEFAULT_TOLERANCE,
    refinements: int = DEFAULT_REFINEMENTS,
    grid: int = DEFAULT_GRID,
) -> CheckReport:
    """
    The glued polyhedron grows strictly faster than both pieces:
    certified with disjoint rate enclosures, and spot-checked through
    `g(glued) > g(piece)` on `grid` points of (0, 1/2).
    """
    g_glued = g_polynomial(compute_invariants(glued))
    points = [Fraction(k, 2 * (grid + 1)) for k in range(1, grid + 1)]
    results = []

    for tag, piece in (("p", P), ("q", Q)):
        try:
            cert_piece, cert_glued = separate(piece, glued, tol, refinements)
            results.append(
                CheckResult.from_bool(
                    f"rate_above_{tag}",
                    cert_piece.separated_below(cert_glued),
                    f"tau({piece.name}) ~ {float(cert_piece.tau):.6f} < "
                    f"tau({glued.name}) ~ {float(cert_glued.tau):.6f}",
                )
            )
        except Inconclusive as e:
            results.append(CheckResult(f"rate_above_{tag}", CheckStatus.INCONCLUSIVE, str(e)))

        g_piece = g_polynomial(compute_invariants(piece))
        bad = [x for x in points if g_glued(x) <= g_piece(x)]
        results.append(
            CheckResult.from_bool(
                f"g_above_{tag}",
                not bad,
                f"fails at {', '.join(map(str, bad[:3]))}"
                if bad
                else f"g({glued.name}) > g({piece.name}) on (0, 1/2), sampled on {grid} points",
            )
        )

    report = CheckReport(f"growth rate monotonicity of {glued.name}", results)
    logger.debug(f"Monotonicity of '{glued.name}': verdict {report.verdict}.")
    return report

#!/usr/bin/env python3
"""
Combinatorial realizability conditions for acute-angled polyhedra,
specialized to ideal polyhedra where every vertex is a cusp.

A k-circuit is a cyclic chain of k faces, each adjacent to the next,
whose k crossing edges pairwise share no cusp (the circuit goes around
the polyhedron instead of around a vertex).

Tetrahedra and triangular prisms are outside the hypotheses of these
conditions. They are still evaluated, with a note in the report.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
from itertools import combinations

# Internal libraries
from core.report import CheckReport, CheckResult, CheckStatus
from .combinatorics import AngleLabel, PolyhedronCombinatorics, tally_invariants

logger = logging.getLogger(__name__)


def _edge_ends(P: PolyhedronCombinatorics) -> dict[tuple[int, int], set[int]]:
    """
    Map each adjacent face pair to the indices of the cusps ending its
    edge.
    """
    ends: dict[tuple[int, int], set[int]] = {e.faces: set() for e in P.edges}
    for index, cusp in enumerate(P.cusps):
        for i in range(len(cusp)):
            a, b = sorted((cusp[i], cusp[(i + 1) % len(cusp)]))
            if (a, b) in ends:
                ends[(a, b)].add(index)
    return ends


def _is_prismatic(
    circuit: tuple[int, ...], ends: dict[tuple[int, int], set[int]]
) -> bool:
    crossing = [
        ends[tuple(sorted((circuit[i], circuit[(i + 1) % len(circuit)])))]
        for i in range(len(circuit))
    ]
    return all(not (x & y) for x, y in combinations(crossing, 2))


def _three_circuits(P: PolyhedronCombinatorics, ends) -> list[tuple[int, int, int]]:
    circuits = []
    for a, b, c in combinations(range(P.face_count), 3):
        if P.has_edge(a, b) and P.has_edge(b, c) and P.has_edge(a, c):
            if _is_prismatic((a, b, c), ends):
                circuits.append((a, b, c))
    return circuits


def _four_circuits(P: PolyhedronCombinatorics, ends) -> list[tuple[int, int, int, int]]:
    circuits = []
    for a in range(P.face_count):
        for b, d in combinations(P.neighbors(a), 2):
            if b < a or d < a:
                continue
            for c in P.neighbors(b):
                if c <= a or c in (b, d) or not P.has_edge(c, d):
                    continue
                # a is the smallest face and b < d, so each cycle is met once
                if _is_prismatic((a, b, c, d), ends):
                    circuits.append((a, b, c, d))
    return circuits


def _circuit_status(bad: list, circuits: list) -> CheckStatus:
    if bad:
        return CheckStatus.FAIL
    return CheckStatus.PASS if circuits else CheckStatus.VACUOUS


def andreev_check(P: PolyhedronCombinatorics) -> CheckReport:
    """
    Evaluate the realizability conditions on a validated model.

    - (a) finite vertices: vacuous.
    - (b) dihedral angles are at most pi/2.
    - (c) cusp links are Euclidean, re-asserted from the cusp types.
    - (d) prismatic 3-circuits have an angle sum below pi.
    - (e) a face adjacent to two non-adjacent faces which meet at a cusp
      off the face does not make right angles with both.
    - (f) prismatic 4-circuits are not entirely right-angled.

    Returns:
        CheckReport: One entry per condition with the witnesses of any
            failure.
    """
    ends = _edge_ends(P)
    results = []

    scope = "no finite vertices"
    if P.face_count == 4:
        scope += "; tetrahedron, outside the conditions' hypotheses"
    elif P.face_count == 5 and len(P.cusps) == 6:
        scope += "; triangular prism, outside the conditions' hypotheses"
    results.append(CheckResult("andreev_a", CheckStatus.VACUOUS, scope))

    obtuse = [e.faces for e in P.sorted_edges() if e.label < AngleLabel.RIGHT]
    results.append(
        CheckResult.from_bool("andreev_b", not obtuse, f"obtuse edges {obtuse}")
    )

    _, rejected = tally_invariants(P)
    results.append(
        CheckResult.from_bool(
            "andreev_c",
            not rejected,
            f"non-Euclidean cusps {[c for c, _ in rejected]}"
            if rejected
            else "every cusp link is Euclidean; finite vertex part vacuous",
        )
    )

    bad = []
    circuits = _three_circuits(P, ends)
    for a, b, c in circuits:
        total = sum(P.label(x, y).angle for x, y in ((a, b), (b, c), (a, c)))
        if total >= 1:
            bad.append(f"{(a, b, c)} sums to {total}*pi")
    results.append(
        CheckResult(
            "andreev_d",
            _circuit_status(bad, circuits),
            "; ".join(bad) or f"{len(circuits)} prismatic 3-circuits",
        )
    )

    bad = []
    for i in range(P.face_count):
        for j, k in combinations(P.neighbors(i), 2):
            if P.has_edge(j, k):
                continue
            meet = any(j in cusp and k in cusp and i not in cusp for cusp in P.cusps)
            right = P.label(i, j) == P.label(i, k) == AngleLabel.RIGHT
            if meet and right:
                bad.append(str((i, j, k)))
    results.append(
        CheckResult.from_bool(
            "andreev_e",
            not bad,
            f"right-angled triples {bad}" if bad else "no right-angled triple",
        )
    )

    bad = []
    circuits = _four_circuits(P, ends)
    for circuit in circuits:
        pairs = [(circuit[i], circuit[(i + 1) % 4]) for i in range(4)]
        if all(P.label(x, y) is AngleLabel.RIGHT for x, y in pairs):
            bad.append(str(circuit))
    results.append(
        CheckResult(
            "andreev_f",
            _circuit_status(bad, circuits),
            f"right-angled 4-circuits {bad}"
            if bad
            else f"{len(circuits)} prismatic 4-circuits",
        )
    )

    report = CheckReport(f"andreev conditions of {P.name}", results)
    logger.debug(f"Andreev conditions of '{P.name}': verdict {report.verdict}.")
    return report

#!/usr/bin/env python3
"""
Gluing two ideal Coxeter polyhedra along isometric faces.

Across each matched boundary edge the dihedral angles of P and Q add
up. A sum of pi means the two neighbor faces lie in one plane and merge
into a single face; a sum of pi/k with k in {2, 3, 4, 6} gives a new
edge labeled k between them. Any other sum is not a Coxeter angle.

Each cusp of the glued face is the union of a cusp of P and a cusp of Q:
their links are joined along the removed faces, and faces that merged
appear once.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import time
from fractions import Fraction
from typing import Optional

# Internal libraries
from core.polyhedra import (
    AngleLabel,
    Edge,
    PolyhedronCombinatorics,
    PolyhedronException,
    validate,
)
from core.report import CheckReport, CheckResult, CheckStatus
from .face_matching import (
    FaceMatching,
    GlueException,
    MatchingError,
    ResolvedMatching,
    resolve_matching,
)

logger = logging.getLogger(__name__)

# Sum of angles pi/k: k = 1 merges the faces
MERGE: int = 1
_ALLOWED_SUMS = {1, 2, 3, 4, 6}


class GlueInvalid(GlueException):
    """
    The gluing doesn't produce a valid ideal Coxeter polyhedron.
    """

    def __init__(self, message: str, report: Optional[CheckReport] = None):
        self.report = report
        super().__init__(message)


def glued_label(m: int, n: int) -> Optional[int]:
    """
    Returns:
        Optional[int]: k such that `pi/m + pi/n = pi/k`, `MERGE` for a
            flat angle, `None` if the sum is not a Coxeter angle.
    """
    total = Fraction(1, m) + Fraction(1, n)
    if total.numerator == 1 and total.denominator in _ALLOWED_SUMS:
        return total.denominator
    return None


def _render_sum(m: int, n: int) -> str:
    total = Fraction(1, m) + Fraction(1, n)
    if total == 1:
        return f"pi/{m} + pi/{n} = pi"
    numerator = "pi" if total.numerator == 1 else f"{total.numerator}pi"
    return f"pi/{m} + pi/{n} = {numerator}/{total.denominator}"


class _FaceClasses:
    """
    Union-find over the faces of P and Q, nodes `(0, i)` and `(1, j)`.
    """

    def __init__(self):
        self._parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(self, node: tuple[int, int]) -> tuple[int, int]:
        self._parent.setdefault(node, node)
        while self._parent[node] != node:
            self._parent[node] = self._parent[self._parent[node]]
            node = self._parent[node]
        return node

    def union(self, a: tuple[int, int], b: tuple[int, int]):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[max(ra, rb)] = min(ra, rb)


def _collapse(cycle: list[int]) -> tuple[int, ...]:
    """
    Drop cyclically consecutive repeats.
    """
    out = [x for i, x in enumerate(cycle) if x != cycle[i - 1]]
    return tuple(out) if out else tuple(cycle[:1])


def _link_from(cusp: tuple[int, ...], face: int) -> list[int]:
    """
    Faces of a cusp after `face`, walking the cycle from `face`.
    """
    i = cusp.index(face)
    return list(cusp[i + 1 :] + cusp[:i])


def _construct(
    P: PolyhedronCombinatorics, Q: PolyhedronCombinatorics, resolved: ResolvedMatching
) -> PolyhedronCombinatorics:
    """
    Build the glued model without validating it.

    Raises:
        GlueInvalid: The result is not even a well-formed model.
    """
    F, G = resolved.match.face_p, resolved.match.face_q
    mapping = resolved.match.as_dict()
    classes = _FaceClasses()
    new_edges: list[tuple[int, int, int]] = []
    for a in resolved.boundary_p:
        b = mapping[a]
        k = glued_label(int(P.label(F, a)), int(Q.label(G, b)))
        if k is None:
            raise GlueInvalid(f"Angles at edges {F}-{a} and {G}-{b} don't add to pi/k.")
        if k == MERGE:
            classes.union((0, a), (1, b))
        else:
            new_edges.append((a, b, k))

    # Compact ids, faces of P first
    ids: dict[tuple[int, int], int] = {}
    for side, model, skip in ((0, P, F), (1, Q, G)):
        for face in range(model.face_count):
            if face != skip:
                root = classes.find((side, face))
                ids.setdefault(root, len(ids))

    def fid(side: int, face: int) -> int:
        return ids[classes.find((side, face))]

    labels: dict[tuple[int, int], int] = {}

    def add_edge(x: int, y: int, label: int):
        if x == y:
            raise GlueInvalid(f"Glued face {x} would be adjacent to itself.")
        key = (min(x, y), max(x, y))
        if key in labels:
            raise GlueInvalid(f"Glued faces {key} would meet along two edges.")
        labels[key] = label

    for side, model, skip in ((0, P, F), (1, Q, G)):
        for edge in model.edges:
            if skip not in edge.faces:
                add_edge(fid(side, edge.face_a), fid(side, edge.face_b), int(edge.label))
    for a, b, k in new_edges:
        add_edge(fid(0, a), fid(1, b), k)

    cusps: list[tuple[int, ...]] = []
    for side, model, skip in ((0, P, F), (1, Q, G)):
        cusps += [tuple(fid(side, x) for x in c) for c in model.cusps if skip not in c]

    q_cusps = Q.cusps_of(G)
    for cusp in P.cusps_of(F):
        link_p = _link_from(cusp, F)
        ends = {mapping[link_p[0]], mapping[link_p[-1]]}
        partner = next(
            (c for c in q_cusps if {_link_from(c, G)[0], _link_from(c, G)[-1]} == ends),
            None,
        )
        if partner is None:
            raise GlueInvalid(f"Cusp {cusp} of '{P.name}' has no partner in '{Q.name}'.")
        link_q = _link_from(partner, G)
        if link_q[0] != mapping[link_p[0]]:
            link_q.reverse()
        # Walk P's link forward, then Q's link back to the start
        cycle = [fid(0, x) for x in link_p] + [fid(1, y) for y in reversed(link_q)]
        cusps.append(_collapse(cycle))

    try:
        return PolyhedronCombinatorics(
            name=f"{P.name}*{Q.name}",
            face_count=len(ids),
            edges=frozenset(Edge(x, y, AngleLabel(k)) for (x, y), k in labels.items()),
            cusps=tuple(cusps),
        )
    except PolyhedronException as e:
        raise GlueInvalid(f"Glued model is malformed: {e}") from e


def _assess(
    P: PolyhedronCombinatorics, Q: PolyhedronCombinatorics, match: FaceMatching
) -> tuple[CheckReport, Optional[PolyhedronCombinatorics]]:
    title = f"gluing {P.name} face {match.face_p} to {Q.name} face {match.face_q}"
    try:
        resolved = resolve_matching(P, Q, match)
    except MatchingError as e:
        return CheckReport(title, [CheckResult("matching", CheckStatus.FAIL, str(e))]), None

    results = [CheckResult("matching", CheckStatus.PASS, match.render())]
    mapping = match.as_dict()
    for a in resolved.boundary_p:
        b = mapping[a]
        m, n = int(P.label(match.face_p, a)), int(Q.label(match.face_q, b))
        k = glued_label(m, n)
        if k is None:
            outcome = "not a Coxeter angle"
        elif k == MERGE:
            outcome = "faces merge"
        else:
            outcome = f"new edge labeled {k}"
        results.append(
            CheckResult.from_bool(f"edge_{a}:{b}", k is not None, f"{_render_sum(m, n)}, {outcome}")
        )

    if any(r.status is CheckStatus.FAIL for r in results):
        results.append(CheckResult("cusp_links", CheckStatus.SKIPPED, "angle sums failed"))
        return CheckReport(title, results), None

    try:
        glued = _construct(P, Q, resolved)
    except GlueInvalid as e:
        results.append(CheckResult("cusp_links", CheckStatus.FAIL, str(e)))
        return CheckReport(title, results), None

    validation = validate(glued)
    cusp_types = validation.get("cusp_types")
    results.append(
        CheckResult("cusp_links", cusp_types.status, cusp_types.detail)
        if cusp_types is not None
        else CheckResult("cusp_links", CheckStatus.SKIPPED, "no cusp classification")
    )
    failed = [r.check_id for r in validation.failures()]
    results.append(
        CheckResult.from_bool(
            "glued_validation",
            validation.verdict,
            f"failed: {', '.join(failed)}" if failed else f"{glued.face_count} faces",
        )
    )
    return CheckReport(title, results), glued


def check_glueable(
    P: PolyhedronCombinatorics, Q: PolyhedronCombinatorics, match: FaceMatching
) -> CheckReport:
    """
    Report, per matched edge, whether the angle sum is a Coxeter angle,
    then whether the glued cusps classify and the result validates.
    """
    return _assess(P, Q, match)[0]


def glue(
    P: PolyhedronCombinatorics, Q: PolyhedronCombinatorics, match: FaceMatching
) -> PolyhedronCombinatorics:
    """
    Build and validate the glued polyhedron.

    Raises:
        GlueInvalid: The matching is not glueable; the failing report is
            attached.
    """
    start = time.perf_counter()
    report, glued = _assess(P, Q, match)
    if glued is None or not report.verdict:
        failed = ", ".join(r.check_id for r in report.failures())
        raise GlueInvalid(f"Cannot glue along {match}: {failed}.", report)
    logger.info(
        f"Glued '{glued.name}' ({glued.face_count} faces) in "
        f"{(time.perf_counter() - start) * 1000:.1f} ms."
    )
    return glued

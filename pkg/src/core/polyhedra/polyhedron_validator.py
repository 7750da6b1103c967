#!/usr/bin/env python3
"""
Rule-based validation of a polyhedron model. A `PolyhedronValidator`
runs a list of `PolyhedronChecker` and collects one report entry per
checker, so every broken rule is reported, not only the first one.

The default rule set covers the structural rules (cusp edges, edge
coverage, cusps per face, face boundaries, cusp types), the ten
counting identities, the parity of c9 and c10 and the five
inequalities between the invariants.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import operator
import time
from abc import ABC, abstractmethod
from collections import Counter
from typing import Callable, Optional

# Internal libraries
from core.report import CheckReport, CheckResult, CheckStatus
from .combinatorics import (
    InvariantVector,
    PolyhedronCombinatorics,
    PolyhedronException,
    face_profile,
    tally_invariants,
)

logger = logging.getLogger(__name__)

########################################################################
#                         Checker base class                           #
########################################################################


class PolyhedronChecker(ABC):
    """
    Checks one rule. Subclasses define the rule and its identifier.
    """

    def __init__(self, check_id: str):
        self._check_id = check_id

    @property
    def check_id(self) -> str:
        return self._check_id

    @abstractmethod
    def check(self, P: PolyhedronCombinatorics, iv: InvariantVector) -> CheckResult:
        """
        Args:
            P (PolyhedronCombinatorics): Model under validation.
            iv (InvariantVector): Its tallied counts. Cusps that fail to
                classify are missing from the type counts.

        Returns:
            CheckResult: Outcome of the rule.
        """
        pass


########################################################################
#                          Structural rules                            #
########################################################################


class CuspEdgesChecker(PolyhedronChecker):
    """
    Consecutive faces of every cusp share an edge.
    """

    def __init__(self):
        super().__init__("cusp_edges")

    def check(self, P: PolyhedronCombinatorics, iv: InvariantVector) -> CheckResult:
        missing = sorted(
            {
                tuple(sorted((cusp[i], cusp[(i + 1) % len(cusp)])))
                for cusp in P.cusps
                for i in range(len(cusp))
                if not P.has_edge(cusp[i], cusp[(i + 1) % len(cusp)])
            }
        )
        return CheckResult.from_bool(
            self.check_id,
            not missing,
            f"missing edges {missing}" if missing else "every cusp side is an edge",
        )


class EdgeCoverageChecker(PolyhedronChecker):
    """
    Every edge ends at exactly two cusps.
    """

    def __init__(self):
        super().__init__("edge_coverage")

    def check(self, P: PolyhedronCombinatorics, iv: InvariantVector) -> CheckResult:
        ends: Counter[tuple[int, int]] = Counter()
        for cusp in P.cusps:
            for i in range(len(cusp)):
                a, b = cusp[i], cusp[(i + 1) % len(cusp)]
                ends[(min(a, b), max(a, b))] += 1

        wrong = [
            f"{edge.faces}:{ends[edge.faces]}"
            for edge in P.sorted_edges()
            if ends[edge.faces] != 2
        ]
        return CheckResult.from_bool(
            self.check_id,
            not wrong,
            f"edges not in two cusps {wrong}" if wrong else "every edge in two cusps",
        )


class FaceCuspsChecker(PolyhedronChecker):
    """
    Every face is incident to at least three cusps.
    """

    def __init__(self):
        super().__init__("face_cusps")

    def check(self, P: PolyhedronCombinatorics, iv: InvariantVector) -> CheckResult:
        poor = [f for f in range(P.face_count) if len(P.cusps_of(f)) < 3]
        return CheckResult.from_bool(
            self.check_id,
            not poor,
            f"faces with fewer than 3 cusps {poor}" if poor else "all faces have 3+ cusps",
        )


class FaceBoundaryChecker(PolyhedronChecker):
    """
    The boundary of every face closes into a single polygon.
    """

    def __init__(self):
        super().__init__("face_boundaries")

    def check(self, P: PolyhedronCombinatorics, iv: InvariantVector) -> CheckResult:
        broken = []
        for face in range(P.face_count):
            try:
                face_profile(P, face)
            except PolyhedronException as e:
                broken.append(str(e))
        return CheckResult.from_bool(
            self.check_id, not broken, "; ".join(broken) or "all boundaries simple"
        )


class MinimumSizeChecker(PolyhedronChecker):
    """
    At least four faces and four cusps.
    """

    def __init__(self):
        super().__init__("minimum_size")

    def check(self, P: PolyhedronCombinatorics, iv: InvariantVector) -> CheckResult:
        return CheckResult.from_bool(
            self.check_id, iv.f >= 4 and iv.c >= 4, f"f={iv.f} c={iv.c}"
        )


class CuspTypesChecker(PolyhedronChecker):
    """
    Every cusp link is one of the four Euclidean patterns.
    """

    def __init__(self):
        super().__init__("cusp_types")

    def check(self, P: PolyhedronCombinatorics, iv: InvariantVector) -> CheckResult:
        _, rejected = tally_invariants(P)
        detail = "; ".join(f"{cusp}: {error}" for cusp, error in rejected)
        return CheckResult.from_bool(
            self.check_id, not rejected, detail or f"c8={iv.c8} c9={iv.c9} "
            f"c10={iv.c10} c11={iv.c11}"
        )


########################################################################
#                      Counting identities rules                       #
########################################################################

# Hypothesis on the counts, returns a skip note when not met
Hypothesis = Callable[[InvariantVector], Optional[str]]


def _not_right_angled(iv: InvariantVector) -> Optional[str]:
    if iv.is_right_angled:
        return "right-angled: only asserted for non-right-angled polyhedra"
    return None


def _right_angled(iv: InvariantVector) -> Optional[str]:
    if not iv.is_right_angled:
        return "not right-angled"
    return None


class RelationChecker(PolyhedronChecker):
    """
    Integer relation `lhs <op> rhs` between two expressions of the
    counts, optionally guarded by a hypothesis.
    """

    _SYMBOLS = {operator.eq: "=", operator.ge: ">=", operator.gt: ">"}

    def __init__(
        self,
        check_id: str,
        lhs: Callable[[InvariantVector], int],
        rhs: Callable[[InvariantVector], int],
        relation: Callable[[int, int], bool] = operator.eq,
        hypothesis: Optional[Hypothesis] = None,
    ):
        super().__init__(check_id)
        self._lhs = lhs
        self._rhs = rhs
        self._relation = relation
        self._hypothesis = hypothesis

    def check(self, P: PolyhedronCombinatorics, iv: InvariantVector) -> CheckResult:
        if self._hypothesis:
            note = self._hypothesis(iv)
            if note:
                return CheckResult(self.check_id, CheckStatus.SKIPPED, note)

        lhs, rhs = self._lhs(iv), self._rhs(iv)
        return CheckResult.from_bool(
            self.check_id,
            self._relation(lhs, rhs),
            f"{lhs} {self._SYMBOLS[self._relation]} {rhs}",
        )


def _identity_checkers() -> list[PolyhedronChecker]:
    eq, ge, gt = operator.eq, operator.ge, operator.gt
    return [
        RelationChecker("euler", lambda v: v.c - v.e + v.f, lambda v: 2),
        RelationChecker(
            "edge_count",
            lambda v: 4 * v.c8 + 3 * v.c9 + 3 * v.c10 + 3 * v.c11,
            lambda v: 2 * v.e,
        ),
        RelationChecker(
            "right_edges", lambda v: 2 * v.e2, lambda v: 4 * v.c8 + v.c10 + v.c11
        ),
        RelationChecker("third_edges", lambda v: 2 * v.e3, lambda v: 3 * v.c9 + v.c11),
        RelationChecker("quarter_edges", lambda v: v.e4, lambda v: v.c10),
        RelationChecker("sixth_edges", lambda v: 2 * v.e6, lambda v: v.c11),
        RelationChecker(
            "cusp_count", lambda v: v.c, lambda v: v.c8 + v.c9 + v.c10 + v.c11
        ),
        RelationChecker(
            "edge_labels", lambda v: v.e, lambda v: v.e2 + v.e3 + v.e4 + v.e6
        ),
        RelationChecker("right_cusp_count", lambda v: v.c8, lambda v: 2 * v.f - v.c - 4),
        RelationChecker(
            "triangular_cusps",
            lambda v: v.c9 + v.c10 + v.c11,
            lambda v: 2 * v.c - 2 * v.f + 4,
        ),
        RelationChecker("parity_c9", lambda v: v.c9 % 2, lambda v: 0),
        RelationChecker("parity_c10", lambda v: v.c10 % 2, lambda v: 0),
        RelationChecker("cusp_upper_bound", lambda v: 2 * v.f - v.c - 4, lambda v: 0, ge),
        RelationChecker(
            "cusp_lower_bound", lambda v: v.c, lambda v: v.f, ge, _not_right_angled
        ),
        RelationChecker(
            "right_angled_cusps", lambda v: v.c, lambda v: v.f - 2, eq, _right_angled
        ),
        RelationChecker(
            "cusp_face_balance",
            lambda v: 4 * v.c - 4 * v.f + v.c9 - v.c10 + 4,
            lambda v: 0,
            ge,
            _not_right_angled,
        ),
        RelationChecker(
            "third_cusp_bound", lambda v: 2 * v.c + 2 * v.f - v.c9 - 8, lambda v: 0, gt
        ),
        RelationChecker(
            "mixed_cusp_bound", lambda v: 4 * v.f - v.c9 + v.c10 - 12, lambda v: 0, ge
        ),
    ]


########################################################################
#                              Validator                               #
########################################################################


class PolyhedronValidator:
    """
    Runs a list of checkers on a model and reports every outcome.
    """

    def __init__(self, checkers: list[PolyhedronChecker]):
        self._checkers = checkers

    @classmethod
    def default(cls) -> "PolyhedronValidator":
        """
        Returns:
            PolyhedronValidator: Structural rules, identities and
                inequalities.
        """
        structural: list[PolyhedronChecker] = [
            MinimumSizeChecker(),
            CuspEdgesChecker(),
            EdgeCoverageChecker(),
            FaceCuspsChecker(),
            FaceBoundaryChecker(),
            CuspTypesChecker(),
        ]
        return cls(structural + _identity_checkers())

    def validate(self, P: PolyhedronCombinatorics) -> CheckReport:
        start = time.time()
        iv, _ = tally_invariants(P)

        results = []
        for checker in self._checkers:
            try:
                results.append(checker.check(P, iv))
            except PolyhedronException as e:
                results.append(CheckResult(checker.check_id, CheckStatus.FAIL, str(e)))

        report = CheckReport(f"validation of {P.name}", results)
        logger.debug(
            f"Validated '{P.name}' in {(time.time() - start) * 1000:.1f}ms, "
            f"verdict {report.verdict}."
        )
        return report


def validate(P: PolyhedronCombinatorics) -> CheckReport:
    """
    Run the default rule set on a model.

    Returns:
        CheckReport: One entry per rule, the verdict is positive iff
            every applicable rule passes.
    """
    return PolyhedronValidator.default().validate(P)

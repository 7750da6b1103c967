#!/usr/bin/env python3
"""
Check reports shared by the validation, root and gluing modules. A
report never raises on a failing check: every outcome is an entry with
a status and a human readable detail.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
from dataclasses import dataclass
from enum import Enum, auto
from typing import Optional


class CheckStatus(Enum):
    """
    Outcome of a single check.
    """

    PASS = auto()
    FAIL = auto()
    # Hypothesis not met, the check was not asserted
    SKIPPED = auto()
    # Condition holds trivially for ideal polyhedra
    VACUOUS = auto()
    NOT_APPLICABLE = auto()
    INCONCLUSIVE = auto()

    @property
    def blocking(self) -> bool:
        """
        Returns:
            bool: `True` if the status prevents a positive verdict.
        """
        return self in (CheckStatus.FAIL, CheckStatus.INCONCLUSIVE)


@dataclass(frozen=True)
class CheckResult:
    """
    One report entry.

    Attributes:
        check_id (str): Stable identifier, e.g. `euler`.
        status (CheckStatus): Outcome.
        detail (str): Values or witnesses behind the outcome.
    """

    check_id: str
    status: CheckStatus
    detail: str = ""

    @classmethod
    def from_bool(
        cls, check_id: str, passed: bool, detail: str = ""
    ) -> "CheckResult":
        return cls(check_id, CheckStatus.PASS if passed else CheckStatus.FAIL, detail)

    def __str__(self) -> str:
        text = f"[{self.status.name}] {self.check_id}"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass(frozen=True)
class CheckReport:
    """
    Ordered collection of check results.
    """

    title: str
    results: tuple[CheckResult, ...]

    def __post_init__(self):
        object.__setattr__(self, "results", tuple(self.results))

    @property
    def verdict(self) -> bool:
        """
        Returns:
            bool: `True` if no entry is failed or inconclusive.
        """
        return not any(r.status.blocking for r in self.results)

    @property
    def inconclusive(self) -> bool:
        return any(r.status is CheckStatus.INCONCLUSIVE for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status is CheckStatus.FAIL]

    def get(self, check_id: str) -> Optional[CheckResult]:
        """
        Returns:
            Optional[CheckResult]: First entry with the identifier.
        """
        return next((r for r in self.results if r.check_id == check_id), None)

    def status_of(self, check_id: str) -> CheckStatus:
        """
        Raises:
            KeyError: No entry with this identifier.
        """
        result = self.get(check_id)
        if result is None:
            raise KeyError(check_id)
        return result.status

    def render(self) -> str:
        """
        Returns:
            str: Title, one line per entry and the verdict.
        """
        lines = [f"{self.title}:"]
        lines.extend(f"  {result}" for result in self.results)
        lines.append(f"  verdict: {'pass' if self.verdict else 'fail'}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()

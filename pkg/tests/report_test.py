#!/usr/bin/env python3

# Standard libraries
import pytest

# Internal libraries
from core.report import CheckReport, CheckResult, CheckStatus


def _report(*statuses: CheckStatus) -> CheckReport:
    return CheckReport(
        "demo", [CheckResult(f"check_{i}", s, "") for i, s in enumerate(statuses)]
    )


@pytest.mark.parametrize(
    "statuses, verdict",
    [
        ((CheckStatus.PASS, CheckStatus.VACUOUS), True),
        ((CheckStatus.PASS, CheckStatus.SKIPPED, CheckStatus.NOT_APPLICABLE), True),
        ((CheckStatus.PASS, CheckStatus.FAIL), False),
        ((CheckStatus.INCONCLUSIVE,), False),
        ((), True),
    ],
)
def test_verdict(statuses: tuple[CheckStatus, ...], verdict: bool):
    assert _report(*statuses).verdict is verdict


def test_inconclusive_flag():
    assert _report(CheckStatus.PASS, CheckStatus.INCONCLUSIVE).inconclusive
    assert not _report(CheckStatus.FAIL).inconclusive


def test_from_bool():
    assert CheckResult.from_bool("x", True).status is CheckStatus.PASS
    assert CheckResult.from_bool("x", False, "1 != 2").status is CheckStatus.FAIL


def test_lookup():
    report = _report(CheckStatus.PASS, CheckStatus.FAIL)

    assert report.status_of("check_1") is CheckStatus.FAIL
    assert [r.check_id for r in report.failures()] == ["check_1"]
    assert report.get("check_9") is None
    with pytest.raises(KeyError):
        report.status_of("check_9")


def test_results_frozen_as_tuple():
    results = [CheckResult("a", CheckStatus.PASS)]
    report = CheckReport("demo", results)
    results.append(CheckResult("b", CheckStatus.FAIL))

    assert len(report.results) == 1
    assert report.verdict


def test_render():
    report = CheckReport(
        "validation of P1",
        [
            CheckResult("euler", CheckStatus.PASS, "e = 6"),
            CheckResult("andreev_a", CheckStatus.VACUOUS),
        ],
    )

    assert report.render() == (
        "validation of P1:\n"
        "  [PASS] euler: e = 6\n"
        "  [VACUOUS] andreev_a\n"
        "  verdict: pass"
    )
    assert str(report) == report.render()

#!/usr/bin/env python3

# Standard libraries
import pytest
import logging
import shutil
from pathlib import Path
from typing import Generator

# Internal libraries
from .test_constants import *
import bootstrap
import main as entry
import cli.commands as commands
from cli import (
    EXIT_FAILURE,
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    cmd_catalog,
    cmd_glue,
    cmd_growth,
    cmd_oracle,
    cmd_rate,
    cmd_validate,
    cmd_volume,
    combined_exit_code,
    load_model,
    run_batch,
)
from core.roots import Inconclusive

logger = logging.getLogger(__name__)


@pytest.fixture
def restore_logging() -> Generator[None, None, None]:
    """
    Remove the handlers installed by the bootstrap, they write to the
    captured streams of the test.
    """
    root = logging.getLogger()
    level = root.level
    yield
    for handler in bootstrap._installed_handlers:
        root.removeHandler(handler)
        handler.close()
    bootstrap._installed_handlers.clear()
    root.setLevel(level)


########################################################################
#                              Model source                            #
########################################################################


def test_load_model_catalog_name():
    assert load_model("P3").name == "P3"


def test_load_model_file(arrange_assets: None):
    assert load_model(TEST_PRISM_FILE).name == "PRISM"


def test_load_model_unknown():
    with pytest.raises(OSError):
        load_model("P9")


########################################################################
#                               validate                               #
########################################################################


def test_validate_catalog():
    outcome = cmd_validate("P1")

    assert outcome.exit_code == EXIT_OK
    assert outcome.report.startswith("P1: ")
    assert "validation of P1:" in outcome.report
    assert "andreev conditions of P1:" in outcome.report


def test_validate_tsv():
    assert cmd_validate("P1", tsv=True).report == "P1\t4\t4\t6\tTrue\tTrue\n"


def test_validate_andreev_failure(arrange_assets: None):
    """
    The prism validates but fails the Andreev conditions.
    """
    outcome = cmd_validate(TEST_PRISM_FILE)

    assert outcome.exit_code == EXIT_FAILURE
    assert "andreev conditions of PRISM:" in outcome.report


def test_validate_angle_sum_violation(arrange_assets: None):
    """
    A cusp that fails to classify is one failed check among the others,
    the invariants and the whole report are still printed.
    """
    outcome = cmd_validate(TEST_CORRUPTED_FILE)

    assert outcome.exit_code == EXIT_FAILURE
    assert outcome.report.startswith("P1_CORRUPTED: ")
    assert "validation of P1_CORRUPTED:" in outcome.report
    assert "[FAIL] cusp_types: " in outcome.report
    assert "andreev conditions" not in outcome.report


def test_validate_angle_sum_violation_tsv(arrange_assets: None):
    outcome = cmd_validate(TEST_CORRUPTED_FILE, tsv=True)

    assert outcome.exit_code == EXIT_FAILURE
    assert outcome.report == "P1_CORRUPTED\t4\t4\t6\tFalse\t-\n"


def test_validate_malformed(arrange_assets: None):
    outcome = cmd_validate(TEST_MALFORMED_FILE)

    assert outcome.exit_code == EXIT_USAGE
    assert outcome.report.startswith(f"error: line {TEST_MALFORMED_LINE}: ")


def test_validate_missing_file(arrange_assets: None):
    outcome = cmd_validate(Path(TEST_ASSETS_DST_FOLDER) / "missing.icp")

    assert outcome.exit_code == EXIT_USAGE
    assert outcome.report.startswith("error: ")


########################################################################
#                            growth and rate                           #
########################################################################


def test_growth_report():
    outcome = cmd_growth("P3", series=3)

    assert outcome.exit_code == EXIT_OK
    lines = outcome.report.splitlines()
    assert lines[0] == "growth function of P3:"
    assert lines[3] == f"  g: {CATALOG_G['P3']}"
    assert lines[4] == "  series: " + " ".join(map(str, P3_SERIES))


def test_growth_tsv():
    fields = cmd_growth("OCT", series=6, tsv=True).report.rstrip("\n").split("\t")

    assert fields[0] == "OCT"
    assert fields[2] == CATALOG_G["OCT"]
    assert fields[3] == " ".join(map(str, OCT_SERIES))


def test_growth_invalid_model(arrange_assets: None):
    assert cmd_growth(TEST_CORRUPTED_FILE).exit_code == EXIT_FAILURE


def test_rate_exact():
    outcome = cmd_rate("OCT")

    assert outcome.exit_code == EXIT_OK
    assert outcome.report.startswith("growth rate of OCT:\n")
    assert "tau ~ 5.0000000000 (exact)" in outcome.report


def test_rate_tsv():
    assert cmd_rate("OCT", tsv=True).report == "OCT\t5.000000000000\t5.000000000000\tTrue\tTrue\n"


def test_rate_tolerance_argument():
    lo, hi = (float(x) for x in cmd_rate("P1", tol=Fraction(1, 100), tsv=True).report.split("\t")[1:3])

    assert lo <= CATALOG_TAU["P1"] + TAU_ACCURACY
    assert hi >= CATALOG_TAU["P1"] - TAU_ACCURACY


def test_rate_inconclusive(monkeypatch: pytest.MonkeyPatch):
    def inconclusive(*args, **kwargs):
        raise Inconclusive("Root boxes overlap after 40 refinements.")

    monkeypatch.setattr(commands, "growth_rate", inconclusive)
    outcome = cmd_rate("P2")

    assert outcome.exit_code == EXIT_INCONCLUSIVE
    assert outcome.report == "inconclusive: Root boxes overlap after 40 refinements.\n"


def test_rate_invalid_tolerance():
    assert cmd_rate("P1", tol=Fraction(0)).exit_code == EXIT_USAGE


########################################################################
#                             volume, oracle                           #
########################################################################


def test_volume():
    outcome = cmd_volume("P1")

    assert outcome.exit_code == EXIT_OK
    assert outcome.report.startswith("vol(P1) = 0.84578467")


def test_volume_tsv():
    name, value, bound = cmd_volume("P4", tsv=True).report.rstrip("\n").split("\t")

    assert name == "P4"
    assert float(value) == pytest.approx(CATALOG_VOLUME["P4"], abs=VOLUME_ACCURACY)
    assert float(bound) <= 1e-8


@pytest.mark.parametrize("name", ["OCT", "P9"])
def test_volume_unknown(name: str):
    outcome = cmd_volume(name)

    assert outcome.exit_code == EXIT_USAGE
    assert outcome.report.startswith("error: ")


def test_oracle_agrees():
    outcome = cmd_oracle("OCT", depth=4)

    assert outcome.exit_code == EXIT_OK
    assert outcome.report.splitlines() == [
        "word length counts of OCT:",
        *(f"{j}\t{a}" for j, a in enumerate(OCT_SERIES[:5])),
        "oracle agrees",
    ]


def test_oracle_tsv():
    assert cmd_oracle("P3", depth=3, tsv=True).report == "P3\t1 4 12 30\n"


def test_oracle_element_cap():
    outcome = cmd_oracle("OCT", depth=5, element_cap=100)

    assert outcome.exit_code == EXIT_FAILURE
    assert "after depth 2" in outcome.report


def test_oracle_env_element_cap(monkeypatch: pytest.MonkeyPatch):
    """
    The element cap falls back to the configuration, where the
    environment overrides the schema default.
    """
    monkeypatch.setenv("IDEALGROWTH_ELEMENT_CAP", "100")

    assert cmd_oracle("OCT", depth=5).exit_code == EXIT_FAILURE


########################################################################
#                               catalog                                #
########################################################################


def test_catalog_order():
    outcome = cmd_catalog()
    lines = outcome.report.splitlines()

    assert outcome.exit_code == EXIT_OK
    assert [line.split()[0] for line in lines[:-1]] == list(CATALOG)
    assert lines[-2].endswith("vol=-")
    assert lines[-1] == "volume order agrees with growth rate order"


def test_catalog_tsv():
    rows = [line.split("\t") for line in cmd_catalog(tsv=True).report.splitlines()]

    assert [row[0] for row in rows] == list(CATALOG)
    assert rows[0][1:3] == ["4", "4"]
    assert rows[-1][4] == "-"


def test_catalog_volume_order_disagrees(monkeypatch: pytest.MonkeyPatch):
    ranking = commands.rank_by_growth_rate

    def reversed_ranking(*args, **kwargs):
        return list(reversed(ranking(*args, **kwargs)))

    monkeypatch.setattr(commands, "rank_by_growth_rate", reversed_ranking)

    outcome = cmd_catalog()
    assert outcome.exit_code == EXIT_FAILURE
    assert outcome.report.splitlines()[-1] == "volume order disagrees with growth rate order"
    assert cmd_catalog(tsv=True).exit_code == EXIT_FAILURE


########################################################################
#                                 glue                                 #
########################################################################


def test_glue_with_map():
    outcome = cmd_glue("P1", "P1", 0, 0, edge_map=P1_GLUE_MAP)

    assert outcome.exit_code == EXIT_OK
    assert outcome.report.startswith("name P1*P1\nfaces 5\n")
    assert "gluing identities of P1*P1:" in outcome.report
    assert "growth rate monotonicity of P1*P1:" in outcome.report


def test_glue_auto():
    outcome = cmd_glue("P1", "P1", 0, 0, auto=True)

    assert outcome.exit_code == EXIT_OK
    assert outcome.report.startswith("1 of 6 matchings glueable\n  1:3,2:2,3:1\nname P1*P1\n")


def test_glue_auto_nothing_glueable():
    outcome = cmd_glue("P4", "P1", 0, 0, auto=True)

    assert outcome.exit_code == EXIT_FAILURE
    assert outcome.report == "0 of 0 matchings glueable\n"


def test_glue_invalid():
    """
    The identity map on P1 puts two pi/3 angles on one edge.
    """
    outcome = cmd_glue("P1", "P1", 0, 0, edge_map="1:1,2:2,3:3")

    assert outcome.exit_code == EXIT_FAILURE
    assert "pi/3 + pi/3 = 2pi/3" in outcome.report
    assert outcome.report.splitlines()[-1].startswith("error: ")


@pytest.mark.parametrize("edge_map", ["1:2:3", "1:1,2:2,3:0"])
def test_glue_bad_map(edge_map: str):
    assert cmd_glue("P1", "P1", 0, 0, edge_map=edge_map).exit_code == EXIT_USAGE


def test_glue_needs_matching():
    outcome = cmd_glue("P1", "P1", 0, 0)

    assert outcome.exit_code == EXIT_USAGE
    assert "edge map" in outcome.report


########################################################################
#                                 Batch                                #
########################################################################


@pytest.mark.parametrize(
    "codes, expected",
    [
        ([], EXIT_OK),
        ([EXIT_OK, EXIT_OK], EXIT_OK),
        ([EXIT_OK, EXIT_INCONCLUSIVE], EXIT_INCONCLUSIVE),
        ([EXIT_INCONCLUSIVE, EXIT_FAILURE], EXIT_FAILURE),
        ([EXIT_FAILURE, EXIT_USAGE, EXIT_INCONCLUSIVE], EXIT_USAGE),
    ],
)
def test_combined_exit_code(codes: list[int], expected: int):
    assert combined_exit_code(codes) == expected


def test_batch_sorted_output(arrange_assets: None):
    outcome = run_batch(cmd_validate, TEST_BATCH_FOLDER, 2, tsv=True)

    assert outcome.exit_code == EXIT_OK
    assert [row.split("\t")[0] for row in outcome.report.splitlines()] == ["OCT", "P1", "P5"]


def test_batch_blocks_separated(arrange_assets: None):
    outcome = run_batch(cmd_rate, TEST_BATCH_FOLDER, 3, tsv=False)

    assert outcome.exit_code == EXIT_OK
    assert outcome.report.count("growth rate of ") == 3
    assert "\n\ngrowth rate of P1:" in outcome.report


def test_batch_failure_precedence(arrange_assets: None):
    shutil.copy(TEST_CORRUPTED_FILE, TEST_BATCH_FOLDER)
    assert run_batch(cmd_validate, TEST_BATCH_FOLDER, 2).exit_code == EXIT_FAILURE

    shutil.copy(TEST_MALFORMED_FILE, TEST_BATCH_FOLDER)
    assert run_batch(cmd_validate, TEST_BATCH_FOLDER, 2).exit_code == EXIT_USAGE


def test_batch_not_a_directory(arrange_assets: None):
    assert run_batch(cmd_validate, TEST_PRISM_FILE, 2).exit_code == EXIT_USAGE


def test_batch_empty_directory(arrange_assets: None):
    empty = Path(TEST_ASSETS_DST_FOLDER) / "empty"
    empty.mkdir()

    outcome = run_batch(cmd_validate, empty, 2)
    assert outcome.exit_code == EXIT_USAGE
    assert "no .icp file" in outcome.report


########################################################################
#                             Program entry                            #
########################################################################


def test_main_validate(capsys: pytest.CaptureFixture[str], restore_logging: None):
    assert entry.main(["validate", "P2", "--tsv"]) == EXIT_OK
    assert capsys.readouterr().out == "P2\t4\t4\t6\tTrue\tTrue\n"


def test_main_batch(
    capsys: pytest.CaptureFixture[str], arrange_assets: None, restore_logging: None
):
    assert entry.main(["oracle", "--all", TEST_BATCH_FOLDER, "--depth", "3", "--tsv"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "OCT\t" + " ".join(map(str, OCT_SERIES[:4]))


def test_main_glue(capsys: pytest.CaptureFixture[str], restore_logging: None):
    code = entry.main(["glue", "P2", "P2", "--face-a", "0", "--face-b", "0", "--map", "1:1,2:2,3:3"])

    assert code == EXIT_OK
    assert capsys.readouterr().out.startswith("name P2*P2\nfaces 5\n")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["rate", "P1", "--tol", "0"],
        ["rate", "P1", "--tol", "one"],
        ["volume", "P1", "--tol", "-1e-3"],
        ["validate"],
        ["validate", "P1", "--all", "."],
        ["glue", "P1", "P1", "--face-a", "0", "--face-b", "0"],
        ["glue", "P1", "P1", "--face-a", "0", "--face-b", "0", "--auto", "--map", "1:3"],
    ],
)
def test_argument_errors(argv: list[str]):
    with pytest.raises(SystemExit) as e:
        build_parser().parse_args(argv)
    assert e.value.code == EXIT_USAGE


def test_main_invalid_config(capsys: pytest.CaptureFixture[str], arrange_assets: None, restore_logging: None):
    config_path = Path(TEST_ASSETS_DST_FOLDER) / "broken.ini"
    config_path.write_text("[roots]\ntolerance = 1/100\n", encoding="utf-8")

    assert entry.main(["--config", str(config_path), "validate", "P1"]) == EXIT_USAGE
    assert "error: " in capsys.readouterr().err


def test_main_invalid_environment(
    monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str], restore_logging: None
):
    monkeypatch.setenv("IDEALGROWTH_TOLERANCE", "tiny")

    assert entry.main(["rate", "P1"]) == EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_main_unhandled_exception(monkeypatch: pytest.MonkeyPatch, restore_logging: None):
    def broken(args):
        raise RuntimeError("boom")

    monkeypatch.setattr(entry, "dispatch", broken)
    assert entry.main(["catalog"]) == EXIT_FAILURE


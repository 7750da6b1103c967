#!/usr/bin/env python3
"""
Command implementations of the `idealgrowth` front end.

Each command returns a `CommandOutcome`: the text printed on stdout and
the process exit code. Exceptions raised by the library are mapped to
the exit code contract here, so a command never raises:

- 0: success, every check passed
- 1: validation or check failure, rejected gluing
- 2: usage, parse or configuration error
- 3: inconclusive certification

Defaults not given on the command line come from `LocalConfig`.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import functools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Callable, Final, NamedTuple, Optional

# Internal libraries
from common.config_parser import ConfigError
from local_config import LocalConfig
from core.report import CheckReport
from core.polyhedra import (
    CATALOG_NAMES,
    IcpFormatError,
    PolyhedronCombinatorics,
    PolyhedronException,
    UnknownCatalogEntry,
    andreev_check,
    catalog,
    compute_invariants,
    load_icp,
    serialize_icp,
    tally_invariants,
    validate,
)
from core.growth import (
    GrowthException,
    closed_form_growth,
    cross_check,
    g_polynomial,
    series_coefficients,
    steinberg_growth,
)
from core.roots import Inconclusive, RootException, growth_rate, rank_by_growth_rate
from core.oracle import OracleException, bfs_growth, coxeter_matrix
from core.volume import UnknownVolume, VolumeException, catalog_volume
from core.glue import (
    FaceMatching,
    GlueException,
    GlueInvalid,
    MatchingError,
    check_glueable,
    enumerate_matchings,
    glue,
    glue_identities_check,
    theorem6_check,
)

logger = logging.getLogger(__name__)

EXIT_OK: Final = 0
EXIT_FAILURE: Final = 1
EXIT_USAGE: Final = 2
EXIT_INCONCLUSIVE: Final = 3


class UsageError(Exception):
    """
    Arguments that make no sense together.
    """

    def __init__(self, message: str = "Invalid arguments."):
        super().__init__(message)


class CommandOutcome(NamedTuple):
    """
    Attributes:
        exit_code (int): Process exit code.
        report (str): Text for stdout, newline terminated.
    """

    exit_code: int
    report: str


def _outcome(exit_code: int, *blocks: str) -> CommandOutcome:
    text = "\n".join(block.rstrip("\n") for block in blocks if block)
    return CommandOutcome(exit_code, text + "\n" if text else "")


def _row(*fields) -> str:
    return "\t".join(str(field) for field in fields)


def _report_code(*reports: CheckReport) -> int:
    if all(report.verdict for report in reports):
        return EXIT_OK
    if any(report.failures() for report in reports):
        return EXIT_FAILURE
    return EXIT_INCONCLUSIVE


def guarded(command: Callable[..., CommandOutcome]) -> Callable[..., CommandOutcome]:
    """
    Map the library exceptions raised by `command` to exit codes.
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs) -> CommandOutcome:
        start = time.perf_counter()
        try:
            outcome = command(*args, **kwargs)
        except Inconclusive as e:
            outcome = _outcome(EXIT_INCONCLUSIVE, f"inconclusive: {e}")
        except GlueInvalid as e:
            report = e.report.render() if e.report is not None else ""
            outcome = _outcome(EXIT_FAILURE, report, f"error: {e}")
        except (
            OSError,
            IcpFormatError,
            UnknownCatalogEntry,
            UnknownVolume,
            MatchingError,
            ConfigError,
            UsageError,
            ValueError,
        ) as e:
            outcome = _outcome(EXIT_USAGE, f"error: {e}")
        except (
            PolyhedronException,
            GrowthException,
            RootException,
            OracleException,
            VolumeException,
            GlueException,
        ) as e:
            outcome = _outcome(EXIT_FAILURE, f"error: {e}")

        logger.debug(
            f"Command '{command.__name__}' exited with {outcome.exit_code} after "
            f"{(time.perf_counter() - start) * 1000:.1f} ms."
        )
        return outcome

    return wrapper


def load_model(source: str | Path) -> PolyhedronCombinatorics:
    """
    Load an ICP file, or a catalog entry when `source` is one of the
    catalog names and not an existing file.

    Raises:
        OSError: Missing or unreadable file.
        IcpFormatError: Invalid file content.
    """
    path = Path(source)
    if not path.is_file() and str(source) in CATALOG_NAMES:
        return catalog(str(source))
    return load_icp(path)


def _setting(section: str, key: str, value):
    return LocalConfig().section(section)[key] if value is None else value


########################################################################
#                               Commands                               #
########################################################################


@guarded
def cmd_validate(path: str | Path, tsv: bool = False) -> CommandOutcome:
    """
    Parse a model, print its invariants, the validation report and, for
    a valid model, the Andreev conditions.
    """
    P = load_model(path)
    iv, _ = tally_invariants(P)
    validation = validate(P)
    reports = [validation]
    if validation.verdict:
        reports.append(andreev_check(P))

    code = _report_code(*reports)
    if tsv:
        andreev = reports[1].verdict if len(reports) > 1 else "-"
        return _outcome(code, _row(P.name, iv.f, iv.c, iv.e, validation.verdict, andreev))
    return _outcome(
        code,
        f"{P.name}: {iv}",
        *(report.render() for report in reports),
    )


@guarded
def cmd_growth(path: str | Path, series: Optional[int] = None, tsv: bool = False) -> CommandOutcome:
    """
    Print the growth function by both constructions, g and optionally
    the first series coefficients.
    """
    P = load_model(path)
    growth = cross_check(P)
    g = g_polynomial(compute_invariants(P))
    coefficients = series_coefficients(growth, series) if series is not None else None

    if tsv:
        fields = [P.name, growth.render(), g.render()]
        if coefficients is not None:
            fields.append(" ".join(map(str, coefficients)))
        return _outcome(EXIT_OK, _row(*fields))

    lines = [
        f"growth function of {P.name}:",
        f"  steinberg: {steinberg_growth(P).render()}",
        f"  closed form: {closed_form_growth(P).render()}",
        f"  g: {g.render()}",
    ]
    if coefficients is not None:
        lines.append(f"  series: {' '.join(map(str, coefficients))}")
    return _outcome(EXIT_OK, "\n".join(lines))


@guarded
def cmd_rate(path: str | Path, tol: Optional[Fraction] = None, tsv: bool = False) -> CommandOutcome:
    """
    Certify the growth rate and its Perron property.

    A root of g in (0, 1/2) that is not simple is reported inconclusive,
    a simple one that fails the dominance test is a failure.
    """
    P = load_model(path)
    roots = LocalConfig().section("roots")
    certificate = growth_rate(
        P, _setting("roots", "tolerance", tol), roots["perron_max_depth"]
    )

    if not certificate.simple:
        code = EXIT_INCONCLUSIVE
    elif not certificate.perron:
        code = EXIT_FAILURE
    else:
        code = EXIT_OK

    if tsv:
        lo, hi = certificate.tau_enclosure
        return _outcome(
            code,
            _row(P.name, f"{float(lo):.12f}", f"{float(hi):.12f}", certificate.perron, certificate.exact),
        )
    return _outcome(code, f"growth rate of {P.name}:", certificate.render())


@guarded
def cmd_volume(name: str, tol: Optional[float] = None, tsv: bool = False) -> CommandOutcome:
    """
    Volume of a catalog polyhedron from the Lobachevsky function.
    """
    estimate = catalog_volume(name, _setting("volume", "tolerance", tol))
    if tsv:
        return _outcome(EXIT_OK, _row(name, f"{estimate.value:.12f}", f"{estimate.error_bound:.1e}"))
    return _outcome(EXIT_OK, estimate.render(name))


@guarded
def cmd_oracle(
    path: str | Path,
    depth: Optional[int] = None,
    element_cap: Optional[int] = None,
    tsv: bool = False,
) -> CommandOutcome:
    """
    Count group elements by word length and compare with the series of
    the growth function.
    """
    P = load_model(path)
    depth = _setting("oracle", "depth", depth)
    sample = bfs_growth(
        coxeter_matrix(P), depth, _setting("oracle", "element_cap", element_cap)
    )
    expected = series_coefficients(cross_check(P), depth)
    agree = list(sample.counts) == expected
    code = EXIT_OK if agree else EXIT_FAILURE

    if tsv:
        return _outcome(code, _row(P.name, " ".join(map(str, sample.counts))))
    verdict = "agrees" if agree else f"differs from the series {expected}"
    return _outcome(
        code,
        f"word length counts of {P.name}:",
        sample.render(),
        f"oracle {verdict}",
    )


@guarded
def cmd_catalog(tol: Optional[Fraction] = None, tsv: bool = False) -> CommandOutcome:
    """
    List the catalog by increasing growth rate with f, c, tau and the
    volume where one is known, then compare the two orders.
    """
    tol = _setting("roots", "tolerance", tol)
    vol_tol = LocalConfig().section("volume")["tolerance"]
    ranked = rank_by_growth_rate((catalog(name) for name in CATALOG_NAMES), tol)

    volumes: dict[str, float] = {}
    rows = []
    for P, certificate in ranked:
        iv = compute_invariants(P)
        try:
            volumes[P.name] = catalog_volume(P.name, vol_tol).value
            volume = f"{volumes[P.name]:.10f}"
        except UnknownVolume:
            volume = "-"
        tau = f"{float(certificate.tau):.6f}"
        rows.append(
            _row(P.name, iv.f, iv.c, tau, volume)
            if tsv
            else f"{P.name:<4} f={iv.f:<2} c={iv.c:<2} tau={tau} vol={volume}"
        )

    known = [volumes[P.name] for P, _ in ranked if P.name in volumes]
    agree = all(a < b for a, b in zip(known, known[1:]))
    code = EXIT_OK if agree else EXIT_FAILURE
    if tsv:
        return _outcome(code, *rows)
    return _outcome(
        code,
        *rows,
        f"volume order {'agrees' if agree else 'disagrees'} with growth rate order",
    )


def _glue_candidates(
    P: PolyhedronCombinatorics, Q: PolyhedronCombinatorics, face_a: int, face_b: int
) -> tuple[list[FaceMatching], list[CheckReport]]:
    candidates = list(enumerate_matchings(P, Q, face_a, face_b))
    workers = LocalConfig().section("batch")["workers"]
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="Glue-") as pool:
        reports = list(pool.map(lambda match: check_glueable(P, Q, match), candidates))
    return candidates, reports


@guarded
def cmd_glue(
    path_a: str | Path,
    path_b: str | Path,
    face_a: int,
    face_b: int,
    edge_map: Optional[str] = None,
    auto: bool = False,
    tol: Optional[Fraction] = None,
) -> CommandOutcome:
    """
    Glue two models along a face, print the result in ICP format
    followed by the gluing identities and the growth rate comparison.

    With `auto`, every matching of the two faces is checked, the
    glueable ones are listed and the first is used.
    """
    P, Q = load_model(path_a), load_model(path_b)
    blocks = []

    if auto:
        candidates, reports = _glue_candidates(P, Q, face_a, face_b)
        glueable = [m for m, report in zip(candidates, reports) if report.verdict]
        blocks.append(
            f"{len(glueable)} of {len(candidates)} matchings glueable"
            + "".join(f"\n  {m.render()}" for m in glueable)
        )
        if not glueable:
            return _outcome(EXIT_FAILURE, *blocks)
        match = glueable[0]
    elif edge_map:
        match = FaceMatching.from_cli(face_a, face_b, edge_map)
    else:
        raise UsageError("Either an edge map or automatic matching is required.")

    glued = glue(P, Q, match)
    roots = LocalConfig().section("roots")
    identities = glue_identities_check(P, Q, match, glued)
    monotonicity = theorem6_check(
        P,
        Q,
        glued,
        _setting("roots", "tolerance", tol),
        roots["separation_refinements"],
        LocalConfig().section("checks")["grid"],
    )
    blocks += [serialize_icp(glued), identities.render(), monotonicity.render()]
    return _outcome(_report_code(identities, monotonicity), *blocks)

#!/usr/bin/env python3
"""
Run a single-model command over every ICP file of a directory.

Files are processed on a thread pool; the outcomes are joined in sorted
file order so the output doesn't depend on scheduling.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable

# Internal libraries
from .commands import (
    EXIT_FAILURE,
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    EXIT_USAGE,
    CommandOutcome,
)

logger = logging.getLogger(__name__)

# Most significant first
_EXIT_PRECEDENCE = (EXIT_USAGE, EXIT_FAILURE, EXIT_INCONCLUSIVE)


def combined_exit_code(codes: list[int]) -> int:
    """
    Returns:
        int: Usage errors win over failures, failures over inconclusive
            results.
    """
    return next((code for code in _EXIT_PRECEDENCE if code in codes), EXIT_OK)


def run_batch(
    command: Callable[..., CommandOutcome],
    directory: str | Path,
    workers: int,
    **kwargs,
) -> CommandOutcome:
    """
    Apply `command(path, **kwargs)` to each `*.icp` file of `directory`.
    """
    folder = Path(directory)
    if not folder.is_dir():
        return CommandOutcome(EXIT_USAGE, f"error: '{folder}' is not a directory\n")
    files = sorted(folder.glob("*.icp"))
    if not files:
        return CommandOutcome(EXIT_USAGE, f"error: no .icp file in '{folder}'\n")

    start = time.perf_counter()
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="Batch-") as pool:
        outcomes = list(pool.map(lambda path: command(path, **kwargs), files))
    logger.info(
        f"Batch of {len(files)} files with {workers} workers in "
        f"{(time.perf_counter() - start) * 1000:.1f} ms."
    )

    tsv = kwargs.get("tsv", False)
    separator = "" if tsv else "\n"
    report = separator.join(outcome.report for outcome in outcomes)
    return CommandOutcome(combined_exit_code([o.exit_code for o in outcomes]), report)

#!/usr/bin/env python3
"""
Command-line front end.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

from .commands import (
    EXIT_FAILURE,
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    EXIT_USAGE,
    CommandOutcome,
    UsageError,
    cmd_catalog,
    cmd_glue,
    cmd_growth,
    cmd_oracle,
    cmd_rate,
    cmd_validate,
    cmd_volume,
    load_model,
)
from .batch import combined_exit_code, run_batch
from .arguments import build_parser, dispatch

__all__ = [
    "EXIT_FAILURE",
    "EXIT_INCONCLUSIVE",
    "EXIT_OK",
    "EXIT_USAGE",
    "CommandOutcome",
    "UsageError",
    "cmd_catalog",
    "cmd_glue",
    "cmd_growth",
    "cmd_oracle",
    "cmd_rate",
    "cmd_validate",
    "cmd_volume",
    "load_model",
    "combined_exit_code",
    "run_batch",
    "build_parser",
    "dispatch",
]

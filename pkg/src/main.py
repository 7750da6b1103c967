#!/usr/bin/env python3
"""
Program entry of the `idealgrowth` command.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import sys
import logging
from typing import Optional

# Internal libraries
import bootstrap
from cli import EXIT_FAILURE, EXIT_USAGE, build_parser, dispatch
from common.config_parser import ConfigError

logger = logging.getLogger("main")


def main(argv: Optional[list[str]] = None) -> int:
    """
    Parse the arguments, run the command and print its report.

    Returns:
        int: Exit code. Argument errors exit with code 2 from argparse.
    """
    args = build_parser().parse_args(argv)

    try:
        bootstrap.app_bootstrap(args.config, args.verbose)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        outcome = dispatch(args)
    except Exception:
        logger.exception("An unhandled exception occurred.")
        return EXIT_FAILURE

    sys.stdout.write(outcome.report)
    sys.stdout.flush()
    return outcome.exit_code


# Program entry
if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""
Argument parser of the `idealgrowth` front end and dispatch of the
parsed arguments to the commands.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import argparse
from fractions import Fraction

# Internal libraries
from local_config import LocalConfig
from .batch import run_batch
from .commands import (
    CommandOutcome,
    cmd_catalog,
    cmd_glue,
    cmd_growth,
    cmd_oracle,
    cmd_rate,
    cmd_validate,
    cmd_volume,
)

# Commands taking one model, runnable over a directory
_SINGLE_MODEL = {
    "validate": cmd_validate,
    "growth": cmd_growth,
    "rate": cmd_rate,
    "oracle": cmd_oracle,
}


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"'{text}' is not a rational number")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"'{text}' must be positive")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a number")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"'{text}' must be positive")
    return value


def _model_source(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("path", nargs="?", help="ICP file or catalog name (P1 .. P5, OCT)")
    source.add_argument("--all", dest="directory", help="Process every .icp file of DIR")
    parser.add_argument("--tsv", action="store_true", help="Tab-separated output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealgrowth",
        description="Growth functions, growth rates and volumes of ideal Coxeter polyhedra",
    )
    parser.add_argument(
        "--config",
        type=str,
        default=None,
        help=(
            "Path to a configuration file (.ini). "
            "A default file is created if not existing."
        ),
    )
    parser.add_argument("--verbose", action="store_true", help="Log debug messages to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="Validate a model")
    _model_source(validate)

    growth = commands.add_parser("growth", help="Growth function and series")
    _model_source(growth)
    growth.add_argument("--series", type=int, metavar="N", help="Print a_0 .. a_N")

    rate = commands.add_parser("rate", help="Certified growth rate")
    _model_source(rate)
    rate.add_argument("--tol", type=_rational, help="Width of the root enclosure")

    oracle = commands.add_parser("oracle", help="Word length counts by enumeration")
    _model_source(oracle)
    oracle.add_argument("--depth", type=int, help="Largest word length")
    oracle.add_argument("--cap", type=int, dest="element_cap", help="Element cap")

    volume = commands.add_parser("volume", help="Volume of a catalog polyhedron")
    volume.add_argument("name", help="Catalog name (P1 .. P5)")
    volume.add_argument("--tol", type=_positive_float, help="Error bound")
    volume.add_argument("--tsv", action="store_true", help="Tab-separated output")

    glue = commands.add_parser("glue", help="Glue two models along a face")
    glue.add_argument("path_a", help="ICP file or catalog name")
    glue.add_argument("path_b", help="ICP file or catalog name")
    glue.add_argument("--face-a", type=int, required=True, help="Face of the first model")
    glue.add_argument("--face-b", type=int, required=True, help="Face of the second model")
    matching = glue.add_mutually_exclusive_group(required=True)
    matching.add_argument("--map", dest="edge_map", help="Edge map k1:l1,k2:l2,...")
    matching.add_argument("--auto", action="store_true", help="Try every matching")
    glue.add_argument("--tol", type=_rational, help="Width of the root enclosures")

    catalog = commands.add_parser("catalog", help="Built-in models by growth rate")
    catalog.add_argument("--tol", type=_rational, help="Width of the root enclosures")
    catalog.add_argument("--tsv", action="store_true", help="Tab-separated output")

    return parser


def dispatch(args: argparse.Namespace) -> CommandOutcome:
    """
    Run the command selected by parsed arguments.
    """
    if args.command in _SINGLE_MODEL:
        command = _SINGLE_MODEL[args.command]
        options = {"tsv": args.tsv}
        match args.command:
            case "growth":
                options["series"] = args.series
            case "rate":
                options["tol"] = args.tol
            case "oracle":
                options["depth"] = args.depth
                options["element_cap"] = args.element_cap
        if args.directory is not None:
            workers = LocalConfig().section("batch")["workers"]
            return run_batch(command, args.directory, workers, **options)
        return command(args.path, **options)

    match args.command:
        case "volume":
            return cmd_volume(args.name, args.tol, tsv=args.tsv)
        case "glue":
            return cmd_glue(
                args.path_a,
                args.path_b,
                args.face_a,
                args.face_b,
                edge_map=args.edge_map,
                auto=args.auto,
                tol=args.tol,
            )
        case "catalog":
            return cmd_catalog(args.tol, tsv=args.tsv)
    raise ValueError(f"Unknown command '{args.command}'")

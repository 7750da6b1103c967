#!/usr/bin/env python3
"""
Reader and writer for the ICP text format (ideal Coxeter polyhedron):

    # comment until the end of the line
    name P1
    faces 4
    edge 0 1 3
    cusp 1 2 3

`name` and `faces` come first, then any number of `edge <i> <j> <m>`
(`0 <= i < j < faces`, `m` in {2,3,4,6}) and `cusp <f1> ... <fk>`
(`k` in {3,4}, cyclic order) lines in any order.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import re
from pathlib import Path
from typing import Iterator

# Internal libraries
from .combinatorics import (
    AngleLabel,
    Edge,
    IcpFormatError,
    MalformedPolyhedron,
    PolyhedronCombinatorics,
    canonical_cycle,
)

logger = logging.getLogger(__name__)

_NAME_PATTERN = re.compile(r"[A-Za-z0-9_.\-*+]+")


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """
    Yield `(line_number, tokens)` for every non-blank line, comments
    removed.
    """
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _integers(number: int, tokens: list[str]) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise IcpFormatError(number, f"expected integers, got '{' '.join(tokens)}'")


def parse_icp(text: str) -> PolyhedronCombinatorics:
    """
    Parse an ICP document.

    Args:
        text (str): Document content.

    Returns:
        PolyhedronCombinatorics: Structurally well-formed model, not
            yet validated.

    Raises:
        IcpFormatError: Syntax error, duplicate edge or cusp, index out
            of range, bad label or cusp length. The error carries the
            offending line number.
    """
    lines = _content_lines(text)

    number, tokens = next(lines, (0, []))
    if len(tokens) != 2 or tokens[0] != "name":
        raise IcpFormatError(number, "expected 'name <identifier>'")
    if not _NAME_PATTERN.fullmatch(tokens[1]):
        raise IcpFormatError(number, f"invalid name '{tokens[1]}'")
    name = tokens[1]

    number, tokens = next(lines, (number, []))
    if len(tokens) != 2 or tokens[0] != "faces":
        raise IcpFormatError(number, "expected 'faces <F>'")
    (face_count,) = _integers(number, tokens[1:])
    if face_count < 4:
        raise IcpFormatError(number, f"a polyhedron needs at least 4 faces, got {face_count}")

    edges: dict[tuple[int, int], Edge] = {}
    cusps: list[tuple[int, ...]] = []
    cusp_keys: set[tuple[int, ...]] = set()

    for number, tokens in lines:
        keyword = tokens[0]
        if keyword not in ("edge", "cusp"):
            raise IcpFormatError(number, f"unknown keyword '{keyword}'")
        values = _integers(number, tokens[1:])

        if keyword == "edge":
            if len(values) != 3:
                raise IcpFormatError(number, "expected 'edge <i> <j> <m>'")
            i, j, m = values
            if not 0 <= i < j < face_count:
                raise IcpFormatError(
                    number, f"edge faces must satisfy 0 <= i < j < {face_count}"
                )
            try:
                label = AngleLabel.parse(m)
            except ValueError as e:
                raise IcpFormatError(number, str(e)) from None
            if (i, j) in edges:
                raise IcpFormatError(number, f"duplicate edge for faces {i} and {j}")
            edges[(i, j)] = Edge(i, j, label)

        elif keyword == "cusp":
            if len(values) not in (3, 4):
                raise IcpFormatError(
                    number, f"a cusp has 3 or 4 faces, got {len(values)}"
                )
            if any(not 0 <= f < face_count for f in values):
                raise IcpFormatError(number, "cusp face index out of range")
            if len(set(values)) != len(values):
                raise IcpFormatError(number, "cusp repeats a face")
            key = canonical_cycle(values)
            if key in cusp_keys:
                raise IcpFormatError(number, "duplicate cusp")
            cusp_keys.add(key)
            cusps.append(tuple(values))

    try:
        model = PolyhedronCombinatorics(
            name, face_count, frozenset(edges.values()), tuple(cusps)
        )
    except MalformedPolyhedron as e:
        raise IcpFormatError(number, str(e)) from e

    logger.debug(
        f"Parsed '{name}': {face_count} faces, {len(edges)} edges, {len(cusps)} cusps."
    )
    return model


def serialize_icp(P: PolyhedronCombinatorics) -> str:
    """
    Render a model in the ICP format, edges sorted and cusps in their
    stored order.
    """
    lines = [f"name {P.name}", f"faces {P.face_count}"]
    lines.extend(f"edge {e.face_a} {e.face_b} {int(e.label)}" for e in P.sorted_edges())
    lines.extend("cusp " + " ".join(str(f) for f in cusp) for cusp in P.cusps)
    return "\n".join(lines) + "\n"


def load_icp(path: str | Path) -> PolyhedronCombinatorics:
    """
    Read and parse an ICP file.

    Raises:
        OSError: The file can't be read.
        IcpFormatError: The content is invalid.
    """
    text = Path(path).read_text(encoding="utf-8")
    return parse_icp(text)

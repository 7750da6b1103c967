#!/usr/bin/env python3
"""
Boundary matchings between a face of one polyhedron and a face of
another.

A boundary edge of a face is named after the neighbor face across it,
so a matching maps the neighbors of `face_p` in P to the neighbors of
`face_q` in Q. It must carry the boundary polygon of one face onto the
other, up to rotation and reflection.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
from dataclasses import dataclass
from typing import Iterator, NamedTuple

# Internal libraries
from core.polyhedra import PolyhedronCombinatorics, PolyhedronException, face_profile

logger = logging.getLogger(__name__)


class GlueException(Exception):
    """
    Base class of the gluing errors.
    """

    def __init__(self, message: str = "Gluing error."):
        super().__init__(message)


class MatchingError(GlueException):
    """
    The matching is malformed or doesn't preserve the boundary polygon.
    """

    def __init__(self, message: str = "Invalid face matching."):
        super().__init__(message)


@dataclass(frozen=True)
class FaceMatching:
    """
    Attributes:
        face_p (int): Glued face of P.
        face_q (int): Glued face of Q.
        edge_map (tuple[tuple[int, int], ...]): Pairs `(k, l)` matching
            the edge of `face_p` toward face k of P with the edge of
            `face_q` toward face l of Q.
    """

    face_p: int
    face_q: int
    edge_map: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edge_map", tuple(sorted(tuple(p) for p in self.edge_map)))

    @classmethod
    def from_cli(cls, face_p: int, face_q: int, text: str) -> "FaceMatching":
        """
        Parse `k1:l1,k2:l2,...`.

        Raises:
            MatchingError: Malformed text.
        """
        pairs = []
        for item in filter(None, (part.strip() for part in text.split(","))):
            try:
                k, l = (int(x) for x in item.split(":"))
            except ValueError:
                raise MatchingError(f"Malformed pair '{item}', expecting 'k:l'.") from None
            pairs.append((k, l))
        if not pairs:
            raise MatchingError("Empty edge map.")
        return cls(face_p, face_q, tuple(pairs))

    def as_dict(self) -> dict[int, int]:
        return dict(self.edge_map)

    def render(self) -> str:
        return ",".join(f"{k}:{l}" for k, l in self.edge_map)

    def __str__(self) -> str:
        return f"{self.face_p}~{self.face_q} [{self.render()}]"


class ResolvedMatching(NamedTuple):
    """
    A matching checked against both models.

    Attributes:
        boundary_p: Neighbors of `face_p` in boundary order.
        boundary_q: Images of `boundary_p` in Q, in the same order.
    """

    match: FaceMatching
    boundary_p: tuple[int, ...]
    boundary_q: tuple[int, ...]


def _is_dihedral_image(cycle: tuple[int, ...], target: tuple[int, ...]) -> bool:
    """
    `True` if `cycle` is a rotation of `target` or of its reverse.
    """
    n = len(target)
    candidates = (target, tuple(reversed(target)))
    return any(
        cycle == candidate[r:] + candidate[:r] for candidate in candidates for r in range(n)
    )


def _boundary(P: PolyhedronCombinatorics, face: int) -> tuple[int, ...]:
    try:
        return face_profile(P, face).boundary_faces
    except (ValueError, PolyhedronException) as e:
        raise MatchingError(f"Face {face} of '{P.name}': {e}") from e


def resolve_matching(
    P: PolyhedronCombinatorics, Q: PolyhedronCombinatorics, match: FaceMatching
) -> ResolvedMatching:
    """
    Raises:
        MatchingError: The matching isn't a bijection between the two
            boundaries, or doesn't preserve their adjacency.
    """
    boundary_p = _boundary(P, match.face_p)
    boundary_q = _boundary(Q, match.face_q)
    mapping = match.as_dict()

    if len(mapping) != len(match.edge_map):
        raise MatchingError(f"Edge map {match.render()} repeats a face of P.")
    if set(mapping) != set(boundary_p):
        raise MatchingError(
            f"Edge map keys {sorted(mapping)} are not the neighbors "
            f"{sorted(boundary_p)} of face {match.face_p} in '{P.name}'."
        )
    if sorted(mapping.values()) != sorted(boundary_q):
        raise MatchingError(
            f"Edge map values {sorted(mapping.values())} are not the neighbors "
            f"{sorted(boundary_q)} of face {match.face_q} in '{Q.name}'."
        )

    image = tuple(mapping[a] for a in boundary_p)
    if not _is_dihedral_image(image, boundary_q):
        raise MatchingError(
            f"Edge map {match.render()} doesn't preserve the boundary order "
            f"{boundary_p} -> {boundary_q}."
        )
    return ResolvedMatching(match, boundary_p, image)


def enumerate_matchings(
    P: PolyhedronCombinatorics, Q: PolyhedronCombinatorics, face_p: int, face_q: int
) -> Iterator[FaceMatching]:
    """
    Every adjacency-preserving matching between the two faces, rotations
    first then reflections.

    Raises:
        MatchingError: A face has a malformed boundary.
    """
    boundary_p = _boundary(P, face_p)
    boundary_q = _boundary(Q, face_q)
    n = len(boundary_p)
    if n != len(boundary_q):
        return
    for target in (boundary_q, tuple(reversed(boundary_q))):
        for r in range(n):
            rotated = target[r:] + target[:r]
            yield FaceMatching(face_p, face_q, tuple(zip(boundary_p, rotated)))

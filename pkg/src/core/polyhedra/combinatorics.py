#!/usr/bin/env python3
"""
Combinatorial model of an ideal Coxeter polyhedron in hyperbolic
3-space: faces, edges labeled by the dihedral angle denominator and
the cyclic sequence of faces around every cusp.

Only the combinatorics is modeled, no coordinates. All values are
immutable and can be shared between threads.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence

logger = logging.getLogger(__name__)

########################################################################
#                          Polyhedron errors                           #
########################################################################


class PolyhedronException(Exception):
    """
    Base class of the polyhedron model errors.
    """

    def __init__(self, message: str = "Polyhedron model error."):
        super().__init__(message)


class MalformedPolyhedron(PolyhedronException):
    """
    A structural invariant of the model is broken.
    """

    def __init__(self, message: str = "Malformed polyhedron."):
        super().__init__(message)


class IcpFormatError(PolyhedronException):
    """
    Syntax or structure error in an ICP document.
    """

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class AngleSumViolation(PolyhedronException):
    """
    The labels around a cusp match none of the Euclidean link patterns.
    """

    def __init__(self, labels: Sequence[int], message: Optional[str] = None):
        self.labels = tuple(sorted(labels))
        turn = sum(1 - Fraction(1, m) for m in self.labels)
        super().__init__(
            message
            or f"Cusp labels {self.labels} give a link angle sum of {turn}*pi, "
            "expected 2*pi."
        )


class MissingEdgeError(PolyhedronException):
    """
    Two faces expected to be adjacent share no edge.
    """

    def __init__(self, face_a: int, face_b: int):
        self.faces = (face_a, face_b)
        super().__init__(f"Faces {face_a} and {face_b} share no edge.")


class NonSimpleBoundary(PolyhedronException):
    """
    The boundary walk of a face does not close into a single cycle.
    """

    def __init__(self, face: int, message: str = "boundary is not a simple cycle"):
        self.face = face
        super().__init__(f"Face {face}: {message}.")


########################################################################
#                              Data model                              #
########################################################################


class AngleLabel(IntEnum):
    """
    Denominator m of a dihedral angle pi/m.
    """

    RIGHT = 2
    THIRD = 3
    QUARTER = 4
    SIXTH = 6

    @classmethod
    def parse(cls, value: int) -> "AngleLabel":
        """
        Raises:
            ValueError: `value` is not in {2, 3, 4, 6}.
        """
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"label {value} not in {{2,3,4,6}}") from None

    @property
    def angle(self) -> Fraction:
        """
        Returns:
            Fraction: Dihedral angle as a multiple of pi.
        """
        return Fraction(1, int(self))


@dataclass(frozen=True, order=True)
class Edge:
    """
    Edge between two faces. Face indices are stored sorted.
    """

    face_a: int
    face_b: int
    label: AngleLabel

    def __post_init__(self):
        if self.face_a == self.face_b:
            raise MalformedPolyhedron(f"Edge joins face {self.face_a} to itself.")
        if self.face_a > self.face_b:
            a, b = self.face_b, self.face_a
            object.__setattr__(self, "face_a", a)
            object.__setattr__(self, "face_b", b)
        object.__setattr__(self, "label", AngleLabel.parse(int(self.label)))

    @property
    def faces(self) -> tuple[int, int]:
        return (self.face_a, self.face_b)


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """
    Smallest rotation of the cycle or of its reversal. Two cusp
    sequences describe the same cusp iff their canonical cycles match.
    """
    items = list(cycle)
    candidates = []
    for seq in (items, items[::-1]):
        for i in range(len(seq)):
            candidates.append(tuple(seq[i:] + seq[:i]))
    return min(candidates)


@dataclass(frozen=True)
class PolyhedronCombinatorics:
    """
    Faces are indexed `0..face_count-1`. Every cusp is the cyclic
    sequence of the 3 or 4 faces around it.

    The constructor only enforces structural invariants (face ranges,
    edge uniqueness, cusp lengths). Semantic properties are reported by
    `validate`.
    """

    name: str
    face_count: int
    edges: frozenset[Edge]
    cusps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(self, "cusps", tuple(tuple(c) for c in self.cusps))

        if self.face_count < 4:
            raise MalformedPolyhedron(
                f"'{self.name}' has {self.face_count} faces, at least 4 required."
            )

        pairs = set()
        for edge in self.edges:
            if edge.face_b >= self.face_count:
                raise MalformedPolyhedron(f"Edge {edge.faces} is out of range.")
            if edge.faces in pairs:
                raise MalformedPolyhedron(f"Duplicate edge for faces {edge.faces}.")
            pairs.add(edge.faces)

        seen = set()
        for cusp in self.cusps:
            if len(cusp) not in (3, 4):
                raise MalformedPolyhedron(f"Cusp {cusp} must have 3 or 4 faces.")
            if len(set(cusp)) != len(cusp):
                raise MalformedPolyhedron(f"Cusp {cusp} repeats a face.")
            if any(not 0 <= f < self.face_count for f in cusp):
                raise MalformedPolyhedron(f"Cusp {cusp} is out of range.")
            key = canonical_cycle(cusp)
            if key in seen:
                raise MalformedPolyhedron(f"Duplicate cusp {cusp}.")
            seen.add(key)

    ### Lookups

    @cached_property
    def _labels(self) -> Mapping[tuple[int, int], AngleLabel]:
        table = {}
        for edge in self.edges:
            table[(edge.face_a, edge.face_b)] = edge.label
            table[(edge.face_b, edge.face_a)] = edge.label
        return MappingProxyType(table)

    @cached_property
    def _neighbors(self) -> tuple[tuple[int, ...], ...]:
        adjacency: list[set[int]] = [set() for _ in range(self.face_count)]
        for edge in self.edges:
            adjacency[edge.face_a].add(edge.face_b)
            adjacency[edge.face_b].add(edge.face_a)
        return tuple(tuple(sorted(s)) for s in adjacency)

    def has_edge(self, face_a: int, face_b: int) -> bool:
        return (face_a, face_b) in self._labels

    def label(self, face_a: int, face_b: int) -> AngleLabel:
        """
        Raises:
            MissingEdgeError: The faces are not adjacent.
        """
        try:
            return self._labels[(face_a, face_b)]
        except KeyError:
            raise MissingEdgeError(face_a, face_b) from None

    def neighbors(self, face: int) -> tuple[int, ...]:
        return self._neighbors[face]

    def cusps_of(self, face: int) -> list[tuple[int, ...]]:
        return [cusp for cusp in self.cusps if face in cusp]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @property
    def is_right_angled(self) -> bool:
        return all(edge.label is AngleLabel.RIGHT for edge in self.edges)

    @property
    def is_simplex(self) -> bool:
        return self.face_count == 4

    def relabeled(
        self, permutation: Sequence[int], name: Optional[str] = None
    ) -> "PolyhedronCombinatorics":
        """
        Copy of the model with face `i` renamed `permutation[i]`.
        """
        return PolyhedronCombinatorics(
            name=name or self.name,
            face_count=self.face_count,
            edges=frozenset(
                Edge(permutation[e.face_a], permutation[e.face_b], e.label)
                for e in self.edges
            ),
            cusps=tuple(tuple(permutation[f] for f in cusp) for cusp in self.cusps),
        )


class CuspType(Enum):
    """
    The four Euclidean links of a cusp, valued by the sorted labels
    around it.
    """

    TYPE_I = (2, 2, 2, 2)
    TYPE_II = (3, 3, 3)
    TYPE_III = (2, 4, 4)
    TYPE_IV = (2, 3, 6)

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "CuspType":
        """
        Raises:
            AngleSumViolation: No pattern matches.
        """
        key = tuple(sorted(int(m) for m in labels))
        try:
            return cls(key)
        except ValueError:
            raise AngleSumViolation(key) from None

    @property
    def counter(self) -> str:
        """
        Returns:
            str: Name of the invariant counting cusps of this type.
        """
        return {
            CuspType.TYPE_I: "c8",
            CuspType.TYPE_II: "c9",
            CuspType.TYPE_III: "c10",
            CuspType.TYPE_IV: "c11",
        }[self]


@dataclass(frozen=True)
class InvariantVector:
    """
    Face, cusp and edge counts every growth formula consumes.
    """

    f: int
    c: int
    e: int
    e2: int
    e3: int
    e4: int
    e6: int
    c8: int
    c9: int
    c10: int
    c11: int

    @property
    def is_right_angled(self) -> bool:
        return self.e2 == self.e

    def __str__(self) -> str:
        return " ".join(f"{name}={value}" for name, value in vars(self).items())


@dataclass(frozen=True)
class FaceProfile:
    """
    Boundary data of one face.

    Attributes:
        face (int): Face index.
        boundary_faces (tuple[int, ...]): Neighbor faces in boundary
            order, one per boundary edge.
        boundary_labels (tuple[AngleLabel, ...]): Labels of the boundary
            edges, aligned with `boundary_faces`.
        e_k (Mapping[int, int]): Number of boundary edges per label.
        c_mn (Mapping[tuple[int, int], int]): Number of face cusps whose
            two boundary edges carry labels `(m, n)`, `m <= n`.
        cusp_count (int): Number of cusps on the face.
    """

    face: int
    boundary_faces: tuple[int, ...]
    boundary_labels: tuple[AngleLabel, ...]
    e_k: Mapping[int, int] = field(compare=False)
    c_mn: Mapping[tuple[int, int], int] = field(compare=False)
    cusp_count: int

    def e(self, k: int) -> int:
        return self.e_k.get(k, 0)

    def c(self, m: int, n: int) -> int:
        return self.c_mn.get((min(m, n), max(m, n)), 0)


########################################################################
#                             Operations                               #
########################################################################


def cusp_labels(cusp: Sequence[int], P: PolyhedronCombinatorics) -> list[AngleLabel]:
    """
    Labels of the edges between cyclically consecutive faces of a cusp.

    Raises:
        MissingEdgeError: Consecutive faces are not adjacent.
    """
    return [P.label(cusp[i], cusp[(i + 1) % len(cusp)]) for i in range(len(cusp))]


def classify_cusp(cusp: Sequence[int], P: PolyhedronCombinatorics) -> CuspType:
    """
    Type of a cusp from the labels around it.

    Raises:
        MissingEdgeError: Consecutive faces are not adjacent.
        AngleSumViolation: The labels fit none of the four types.
    """
    return CuspType.from_labels(cusp_labels(cusp, P))


def tally_invariants(
    P: PolyhedronCombinatorics,
) -> tuple[InvariantVector, list[tuple[tuple[int, ...], PolyhedronException]]]:
    """
    Count the invariants, skipping cusps that fail to classify.

    Returns:
        tuple: The counts and the list of `(cusp, error)` for cusps left
            out of the type counts (they still count in `c`).
    """
    edge_counts = Counter(int(edge.label) for edge in P.edges)
    type_counts: Counter[str] = Counter()
    rejected = []
    for cusp in P.cusps:
        try:
            type_counts[classify_cusp(cusp, P).counter] += 1
        except PolyhedronException as e:
            rejected.append((cusp, e))

    iv = InvariantVector(
        f=P.face_count,
        c=len(P.cusps),
        e=len(P.edges),
        e2=edge_counts[2],
        e3=edge_counts[3],
        e4=edge_counts[4],
        e6=edge_counts[6],
        c8=type_counts["c8"],
        c9=type_counts["c9"],
        c10=type_counts["c10"],
        c11=type_counts["c11"],
    )
    return iv, rejected


def compute_invariants(P: PolyhedronCombinatorics) -> InvariantVector:
    """
    Tally the invariant vector of a model.

    Raises:
        PolyhedronException: A cusp fails to classify.
    """
    iv, rejected = tally_invariants(P)
    if rejected:
        raise rejected[0][1]
    return iv


def face_profile(P: PolyhedronCombinatorics, face: int) -> FaceProfile:
    """
    Rebuild the boundary polygon of a face from the cusps around it.

    Each cusp containing `face` links the two neighbors flanking `face`
    in that cusp, which are consecutive boundary edges of the face. The
    links must form a single cycle through all neighbors.

    Raises:
        ValueError: Face index out of range.
        NonSimpleBoundary: The links don't close into one cycle.
    """
    if not 0 <= face < P.face_count:
        raise ValueError(f"Face {face} out of range for '{P.name}'.")

    links: list[tuple[int, int]] = []
    for cusp in P.cusps_of(face):
        i = cusp.index(face)
        links.append((cusp[i - 1], cusp[(i + 1) % len(cusp)]))

    adjacency: dict[int, list[int]] = {}
    for x, y in links:
        adjacency.setdefault(x, []).append(y)
        adjacency.setdefault(y, []).append(x)

    if len(links) < 3:
        raise NonSimpleBoundary(face, f"only {len(links)} cusps")
    if set(adjacency) != set(P.neighbors(face)):
        raise NonSimpleBoundary(face, "cusps and edges disagree on the neighbors")
    if any(len(v) != 2 for v in adjacency.values()):
        raise NonSimpleBoundary(face, "a boundary edge is not flanked by two cusps")

    start = min(adjacency)
    walk = [start, min(adjacency[start])]
    while len(walk) < len(adjacency):
        a, b = adjacency[walk[-1]]
        nxt = b if a == walk[-2] else a
        if nxt == start:
            break
        walk.append(nxt)
    if len(walk) != len(adjacency) or start not in adjacency[walk[-1]]:
        raise NonSimpleBoundary(face)

    labels = tuple(P.label(face, g) for g in walk)
    pairs: Counter[tuple[int, int]] = Counter()
    for x, y in links:
        m, n = sorted((int(P.label(face, x)), int(P.label(face, y))))
        pairs[(m, n)] += 1

    return FaceProfile(
        face=face,
        boundary_faces=tuple(walk),
        boundary_labels=labels,
        e_k=MappingProxyType(dict(Counter(int(m) for m in labels))),
        c_mn=MappingProxyType(dict(pairs)),
        cusp_count=len(links),
    )

#!/usr/bin/env python3
"""
Labeled isomorphism test between two polyhedron models, by
backtracking over face maps.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
from collections import Counter, deque
from typing import Optional

# Internal libraries
from .combinatorics import PolyhedronCombinatorics, canonical_cycle

logger = logging.getLogger(__name__)


def _signature(P: PolyhedronCombinatorics, face: int) -> tuple:
    """
    Invariant of a face under labeled isomorphisms.
    """
    labels = tuple(sorted(int(P.label(face, g)) for g in P.neighbors(face)))
    sizes = tuple(sorted(len(c) for c in P.cusps_of(face)))
    return (labels, sizes)


def _search_order(P: PolyhedronCombinatorics) -> list[int]:
    """
    Faces in breadth-first order so that each face but the first of a
    component has an already mapped neighbor.
    """
    order: list[int] = []
    seen: set[int] = set()
    for root in range(P.face_count):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            face = queue.popleft()
            order.append(face)
            for g in P.neighbors(face):
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
    return order


def find_isomorphism(
    P: PolyhedronCombinatorics, Q: PolyhedronCombinatorics
) -> Optional[dict[int, int]]:
    """
    Look for a face bijection carrying edges to edges with the same
    labels and cusps to cusps up to rotation and reflection.

    Returns:
        Optional[dict[int, int]]: Face map from P to Q, `None` if the
            models are not isomorphic.
    """
    if (P.face_count, len(P.edges), len(P.cusps)) != (
        Q.face_count,
        len(Q.edges),
        len(Q.cusps),
    ):
        return None

    sig_p = [_signature(P, f) for f in range(P.face_count)]
    sig_q = [_signature(Q, f) for f in range(Q.face_count)]
    if Counter(sig_p) != Counter(sig_q):
        return None

    target_cusps = {canonical_cycle(c) for c in Q.cusps}
    order = _search_order(P)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(p: int, q: int) -> bool:
        for p_other, q_other in mapping.items():
            if P.has_edge(p, p_other) != Q.has_edge(q, q_other):
                return False
            if P.has_edge(p, p_other) and P.label(p, p_other) != Q.label(q, q_other):
                return False
        return True

    def extend(depth: int) -> bool:
        if depth == len(order):
            mapped = {canonical_cycle([mapping[f] for f in c]) for c in P.cusps}
            return mapped == target_cusps

        p = order[depth]
        for q in range(Q.face_count):
            if q in used or sig_q[q] != sig_p[p] or not consistent(p, q):
                continue
            mapping[p] = q
            used.add(q)
            if extend(depth + 1):
                return True
            del mapping[p]
            used.discard(q)
        return False

    if extend(0):
        return dict(mapping)
    return None


def is_isomorphic(P: PolyhedronCombinatorics, Q: PolyhedronCombinatorics) -> bool:
    """
    Returns:
        bool: `True` iff a labeled isomorphism exists.
    """
    found = find_isomorphism(P, Q) is not None
    logger.debug(f"'{P.name}' and '{Q.name}' isomorphic: {found}.")
    return found

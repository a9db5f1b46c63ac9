"""Brute-force ground truth for the minimum illumination number.

Whether a direction illuminates a vertex depends only on the signs of its
products with the tight normals, so directions are quantified over the
full-dimensional cells of the central hyperplane arrangement of the
normals. One exact-feasibility check per sign vector enumerates the
cells; exhaustive set cover over the cells gives the true minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil

from .errors import InternalInvariantError, ScaleLimitError
from .kernel import Vec, dot, vscale
from .lp import GE, feasible
from .polytope import HPolytope

CELL_GUARD = 10 ** 6


@dataclass(frozen=True)
class DirectionClass:
    representative: Vec
    illuminated: tuple[int, ...]  # vertex indices, aligned with P.vertices


def enumerate_direction_classes(P: HPolytope) -> tuple[DirectionClass, ...]:
    """One interior representative per full-dimensional cell of the
    arrangement {<n, .> == 0}, with the set of vertices it illuminates."""
    normals = P.normal_set.normals
    if 2 ** len(normals) > CELL_GUARD:
        raise ScaleLimitError(
            f"2^{len(normals)} sign vectors exceed the cell guard ({CELL_GUARD})")
    classes = []
    for signs in product((1, -1), repeat=len(normals)):
        rep = feasible([(vscale(s, m), Fraction(1), GE)
                        for s, m in zip(signs, normals)])
        if rep is None:
            continue
        lit = tuple(i for i, v in enumerate(P.vertices)
                    if all(dot(m, rep) > 0 for m in v.tight))
        classes.append(DirectionClass(rep, lit))
    return tuple(classes)


def min_illumination_number(P: HPolytope) -> tuple[int, tuple[Vec, ...]]:
    """Exact minimum number of directions illuminating every vertex, with
    one optimal selection of cell representatives.

    Cells whose illuminated sets are contained in another cell's are
    dominated and dropped; the remainder is searched exhaustively by
    increasing cover size, so the result is the certified optimum.
    """
    classes = enumerate_direction_classes(P)
    sets = [frozenset(c.illuminated) for c in classes]
    keep = []
    for i, s in enumerate(sets):
        dominated = any(
            (s < sets[j]) or (s == sets[j] and j < i)
            for j in range(len(sets)) if j != i)
        if not dominated:
            keep.append(classes[i])
    universe = frozenset(range(len(P.vertices)))
    if not keep or frozenset().union(*(set(c.illuminated) for c in keep)) != universe:
        raise InternalInvariantError("some vertex is illuminated by no cell")
    largest = max(len(c.illuminated) for c in keep)
    lower = max(1, ceil(len(universe) / largest))
    for k in range(lower, len(keep) + 1):
        for combo in combinations(keep, k):
            covered = set()
            for c in combo:
                covered.update(c.illuminated)
            if covered == universe:
                return k, tuple(c.representative for c in combo)
    raise InternalInvariantError("exhaustive cover search found no cover")

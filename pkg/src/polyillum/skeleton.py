"""Skeleton extraction for strongly monotypic normal sets.

A swap-stable basis B is grown inside the normal set until every other
normal expands over B with all-nonpositive or all-nonnegative
coefficients. The all-nonpositive normals' supports form a laminar
family; the inclusion-maximal supports partition the basis indices and
each yields one part X_l = {b_i : i in S_l} + {x_l}, a simplex with the
origin in its relative interior. A mixed sign pattern or a laminar
violation is converted into a conical-position certificate and reported
as NotStronglyMonotypic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .classify import validate_normal_set
from .errors import CoverageError, InternalInvariantError, NotStronglyMonotypicError
from .kernel import Vec, rank, simplex_dependence
from .polytope import NormalSet
from .position import (ALL_NONNEGATIVE, ALL_NONPOSITIVE, MIXED, SINGLE_POSITIVE,
                       classify_signs, cone_membership, is_conical_position)


@dataclass(frozen=True)
class Skeleton:
    basis: tuple[Vec, ...]
    parts: tuple[tuple[Vec, ...], ...]
    part_supports: tuple[tuple[int, ...], ...]

    @property
    def product_of_part_sizes(self) -> int:
        q = 1
        for part in self.parts:
            q *= len(part)
        return q


def _first_independent_subset(N: NormalSet) -> tuple[Vec, ...]:
    for subset in combinations(N.normals, N.dim):
        if rank(subset) == N.dim:
            return subset
    raise InternalInvariantError("validated normal set has no independent subset")


def _captured_count(N: NormalSet, basis: Sequence[Vec]) -> int:
    return sum(1 for m in N.normals if cone_membership(m, basis) is not None)


def refine_basis(N: NormalSet, start: Optional[Sequence[Vec]] = None) -> tuple[Vec, ...]:
    """Swap-stable basis B within N: every other normal classifies as
    all_nonpositive or all_nonnegative over B.

    Starting from the lexicographically first independent n-subset (or the
    given start), the first normal with a single_positive pattern replaces
    the positively-weighted basis element, which strictly enlarges pos(B);
    a mixed pattern is a conical-position certificate and aborts.
    """
    validate_normal_set(N)
    basis = list(start) if start is not None else list(_first_independent_subset(N))
    if rank(basis) != N.dim:
        raise InternalInvariantError("starting basis is not independent")
    captured = _captured_count(N, basis)
    swaps = 0
    while True:
        for x in N.normals:
            if x in basis:
                continue
            sc = classify_signs(basis, x)
            if sc.tag == MIXED:
                cert = tuple(sorted([x] + basis, reverse=True))
                if not is_conical_position(cert):
                    raise InternalInvariantError(
                        "mixed sign pattern did not yield a conical certificate")
                raise NotStronglyMonotypicError(
                    "mixed sign pattern during basis refinement", cert)
            if sc.tag == SINGLE_POSITIVE:
                basis[sc.positive_index] = x
                swaps += 1
                if swaps > len(N.normals):
                    raise InternalInvariantError("basis refinement did not terminate")
                now = _captured_count(N, basis)
                if now <= captured:
                    raise InternalInvariantError(
                        "swap failed to enlarge the captured normal count")
                captured = now
                break
        else:
            return tuple(basis)


def cartesian_support(basis: Sequence[Vec], x: Vec) -> tuple[int, ...]:
    """Indices of the nonzero coefficients of x over the basis."""
    sc = classify_signs(basis, x)
    return tuple(i for i, c in enumerate(sc.coefficients) if c != 0)


def _laminar_certificate(basis: Sequence[Vec], x: Vec, sx: tuple[int, ...],
                         y: Vec, sy: tuple[int, ...]) -> tuple[Vec, ...]:
    """Two overlapping non-nested negative-side supports force a conical
    (n+1)-subset: drop a shared basis element and add both normals."""
    for i in set(sx) & set(sy):
        candidate = tuple(sorted(
            [x, y] + [b for j, b in enumerate(basis) if j != i], reverse=True))
        if is_conical_position(candidate):
            return candidate
    raise InternalInvariantError(
        "laminar violation did not yield a conical certificate")


def extract_skeleton(N: NormalSet) -> Skeleton:
    basis = refine_basis(N)
    negatives: list[tuple[Vec, tuple[int, ...]]] = []
    for x in N.normals:
        if x in basis:
            continue
        sc = classify_signs(basis, x)
        if sc.tag not in (ALL_NONPOSITIVE, ALL_NONNEGATIVE):
            raise InternalInvariantError("stable basis produced a mixed pattern")
        if sc.tag == ALL_NONPOSITIVE:
            negatives.append((x, tuple(i for i, c in enumerate(sc.coefficients)
                                       if c != 0)))

    for a in range(len(negatives)):
        for b in range(a + 1, len(negatives)):
            x, sx = negatives[a]
            y, sy = negatives[b]
            fx, fy = set(sx), set(sy)
            if fx & fy and not (fx <= fy or fy <= fx):
                cert = _laminar_certificate(basis, x, sx, y, sy)
                raise NotStronglyMonotypicError(
                    "overlapping non-nested supports", cert)

    supports = {frozenset(s) for _, s in negatives}
    maximal = sorted((s for s in supports
                      if not any(s < t for t in supports)),
                     key=min)
    covered: set[int] = set()
    for s in maximal:
        if covered & s:
            raise InternalInvariantError("maximal supports are not disjoint")
        covered |= s
    if covered != set(range(N.dim)):
        raise CoverageError(
            "maximal supports do not cover the basis; the origin is not "
            "interior to the convex hull of the normals")

    parts = []
    part_supports = []
    for s in maximal:
        key = tuple(sorted(s))
        x_l = next(x for x, sup in negatives if tuple(sorted(sup)) == key)
        parts.append(tuple(basis[i] for i in key) + (x_l,))
        part_supports.append(key)
    skeleton = Skeleton(tuple(basis), tuple(parts), tuple(part_supports))
    verify_skeleton(N, skeleton)
    return skeleton


def verify_skeleton(N: NormalSet, skeleton: Skeleton) -> None:
    """Independent recheck of the three structural claims: each part is a
    simplex with the origin in its relative interior, the part spans are
    independent, and they sum to the whole space."""
    n = N.dim
    seen: set[Vec] = set()
    for part, support in zip(skeleton.parts, skeleton.part_supports):
        if len(part) != len(support) + 1:
            raise InternalInvariantError("part size does not match its support")
        if seen & set(part):
            raise InternalInvariantError("parts are not pairwise disjoint")
        seen |= set(part)
        dep = simplex_dependence(part)
        if dep is None:
            raise InternalInvariantError("part is not a simplex with a unique dependence")
        if any(c == 0 for c in dep):
            raise InternalInvariantError("part dependence has a zero coefficient")
        if not (all(c > 0 for c in dep) or all(c < 0 for c in dep)):
            raise InternalInvariantError(
                "origin is not in the relative interior of a part's convex hull")
    total_rank = rank([v for part in skeleton.parts for v in part])
    if total_rank != sum(len(s) for s in skeleton.part_supports) or total_rank != n:
        raise InternalInvariantError("part spans do not directly sum to the space")
    if skeleton.product_of_part_sizes > 2 ** n:
        raise InternalInvariantError("part size product exceeds 2^n")

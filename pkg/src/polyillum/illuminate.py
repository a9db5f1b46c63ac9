"""Construction of the illumination set from a skeleton, with exact delta
and epsilon, plus the two independent verification checks.

One cone per choice of a dropped element from each skeleton part; its
direction is the unique vector pairing to 1 with every generator. The
slack bound delta is half the minimum positive vertex-facet slack, and
epsilon = delta / max |<n, v_j>| over the strictly negative products, so
that stepping by epsilon*v never crosses a non-tight facet.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .classify import check_strong_monotypy
from .errors import (AssignmentError, InputError, InternalInvariantError,
                     NotStronglyMonotypicError)
from .kernel import Vec, dot, rank, solve_rows, vscale, vsub
from .polytope import INTERIOR, HPolytope
from .position import cone_membership
from .skeleton import Skeleton, extract_skeleton


@dataclass(frozen=True)
class IlluminationSet:
    directions: tuple[Vec, ...]
    epsilon: Fraction
    scaled: tuple[Vec, ...]
    assignment: tuple[int, ...]  # per vertex, aligned with P.vertices
    delta: Fraction


@dataclass(frozen=True)
class VertexReport:
    point: Vec
    direction_index: Optional[int]
    directional_ok: bool
    interior_ok: bool

    @property
    def ok(self) -> bool:
        return self.directional_ok and self.interior_ok


def cone_selections(skeleton: Skeleton) -> tuple[tuple[Vec, ...], ...]:
    """For every choice of one dropped element per part, the union of the
    remaining generators: exactly n independent vectors each, listed in
    deterministic product order."""
    n = sum(len(s) for s in skeleton.part_supports)
    selections = []
    for drop in product(*(range(len(part)) for part in skeleton.parts)):
        gens = tuple(g for part, d in zip(skeleton.parts, drop)
                     for i, g in enumerate(part) if i != d)
        if len(gens) != n or rank(gens) != n:
            raise InternalInvariantError("cone selection is not a full basis")
        selections.append(gens)
    return tuple(selections)


def cone_direction(generators: Sequence[Vec]) -> Vec:
    """The unique v with <g, v> == 1 for every generator; consequently
    <y, v> > 0 for every nonzero y in the generated cone."""
    v = solve_rows(list(generators), [Fraction(1)] * len(generators))
    if v is None:
        raise InputError("cone generators are singular")
    return v


def compute_delta(P: HPolytope) -> Fraction:
    """Half the minimum positive vertex-facet slack; small enough that the
    slack-delta tight set at every vertex equals the exact tight set."""
    slacks = [h - dot(m, v.point)
              for v in P.vertices
              for m, h in zip(P.normal_set.normals, P.offsets)
              if h - dot(m, v.point) > 0]
    if not slacks:
        raise InternalInvariantError("no positive vertex-facet slack")
    delta = min(slacks) / 2
    for v in P.vertices:
        if P.tight_normals(v.point, delta) != v.tight:
            raise InternalInvariantError(
                f"slack {delta} does not isolate the tight set at {v.point}")
    return delta


def compute_epsilon(P: HPolytope, directions: Sequence[Vec],
                    delta: Fraction) -> Fraction:
    """delta divided by the largest |<n, v_j>| over strictly negative
    products; delta itself in the (degenerate) absence of any."""
    if delta <= 0:
        raise InputError("delta must be positive")
    magnitudes = [-dot(m, v)
                  for m in P.normal_set.normals
                  for v in directions
                  if dot(m, v) < 0]
    epsilon = delta / max(magnitudes) if magnitudes else delta
    if epsilon <= 0 or (magnitudes and epsilon * max(magnitudes) > delta):
        raise InternalInvariantError("epsilon bound failed its own check")
    return epsilon


def build_illumination_set(P: HPolytope) -> IlluminationSet:
    strong, cert = check_strong_monotypy(P.normal_set)
    if not strong:
        raise NotStronglyMonotypicError(
            "illumination construction requires strong monotypy", cert)
    skeleton = extract_skeleton(P.normal_set)
    selections = cone_selections(skeleton)
    directions = tuple(cone_direction(gens) for gens in selections)
    for gens, v in zip(selections, directions):
        for g in gens:
            if dot(g, v) != 1:
                raise InternalInvariantError("direction does not pair to 1 exactly")
    if len(directions) > 2 ** P.dim:
        raise InternalInvariantError("more cones than 2^n")
    delta = compute_delta(P)
    epsilon = compute_epsilon(P, directions, delta)
    assignment = []
    for vert in P.vertices:
        j = next((j for j, gens in enumerate(selections)
                  if all(cone_membership(m, gens) is not None for m in vert.tight)),
                 None)
        if j is None:
            raise AssignmentError(
                f"no cone contains the tight normals of vertex {vert.point}; "
                f"the covering claim fails")
        assignment.append(j)
    return IlluminationSet(
        directions=directions,
        epsilon=epsilon,
        scaled=tuple(vscale(epsilon, v) for v in directions),
        assignment=tuple(assignment),
        delta=delta,
    )


def _verify_with_assignment(P: HPolytope, directions: Sequence[Vec],
                            epsilon: Fraction,
                            assignment: Sequence[Optional[int]]):
    reports = []
    for vert, j in zip(P.vertices, assignment):
        if j is None:
            reports.append(VertexReport(vert.point, None, False, False))
            continue
        v = directions[j]
        directional = all(dot(m, v) > 0 for m in vert.tight)
        interior = P.point_location(vsub(vert.point, vscale(epsilon, v))) == INTERIOR
        reports.append(VertexReport(vert.point, j, directional, interior))
    return all(r.ok for r in reports), tuple(reports)


def verify_illumination(P: HPolytope, ill: IlluminationSet):
    """Two independent checks, both required: the assigned direction has
    strictly positive product with every tight normal of its vertex, and
    the explicitly displaced vertex lands strictly inside P. Tight sets of
    all boundary points are contained in vertex tight sets, so passing at
    the vertices covers the whole boundary."""
    if len(ill.assignment) != len(P.vertices):
        raise InputError("assignment length does not match the vertex count")
    return _verify_with_assignment(P, ill.directions, ill.epsilon, ill.assignment)


def verify_directions(P: HPolytope, directions: Sequence[Vec],
                      epsilon: Fraction):
    """Assignment-free variant for externally supplied direction sets: each
    vertex takes the first direction illuminating it, if any."""
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    assignment = []
    for vert in P.vertices:
        j = next((j for j, v in enumerate(directions)
                  if all(dot(m, v) > 0 for m in vert.tight)), None)
        assignment.append(j)
    return _verify_with_assignment(P, directions, epsilon, assignment)

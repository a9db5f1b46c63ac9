"""The H-polytope model: validated normal sets, exact vertex enumeration,
support values, tight normals and point location.

Normal sets are kept in a canonical descending lexicographic order; every
downstream tie-break (certificates, basis refinement, cone listings)
derives from that order, so all outputs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import InputError, InternalInvariantError
from .kernel import Vec, as_vec, dot, is_zero, primitive_form, rank, solve_rows, vneg, vsub
from .lp import GE, feasible
from .position import cone_membership

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"


@dataclass(frozen=True)
class NormalSet:
    dim: int
    normals: tuple[Vec, ...]

    @staticmethod
    def from_vectors(dim: int, vectors: Iterable) -> "NormalSet":
        vecs = [as_vec(v) for v in vectors]
        if dim <= 0:
            raise InputError(f"dimension must be positive, got {dim}")
        seen: dict[Vec, int] = {}
        for i, v in enumerate(vecs):
            if len(v) != dim:
                raise InputError(f"normal {i} has dimension {len(v)}, expected {dim}",
                                 facet_index=i)
            if is_zero(v):
                raise InputError(f"normal {i} is the zero vector", facet_index=i)
            p = primitive_form(v)
            if p in seen:
                raise InputError(
                    f"normal {i} is a positive multiple of normal {seen[p]}",
                    facet_index=i)
            seen[p] = i
        return NormalSet(dim, tuple(sorted(vecs, reverse=True)))

    def __iter__(self):
        return iter(self.normals)

    def __len__(self):
        return len(self.normals)


@dataclass(frozen=True)
class Vertex:
    point: Vec
    tight: tuple[Vec, ...]


@dataclass(frozen=True)
class HPolytope:
    normal_set: NormalSet
    offsets: tuple[Fraction, ...]
    vertices: tuple[Vertex, ...] = field(init=False, compare=False, repr=False)
    _offset_index: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        N = self.normal_set
        if len(self.offsets) != len(N.normals):
            raise InputError("offset count does not match normal count")
        object.__setattr__(self, "_offset_index",
                           {n: h for n, h in zip(N.normals, self.offsets)})
        self._validate_bounded()
        object.__setattr__(self, "vertices", self._enumerate_vertices())
        self._validate_irredundant()

    @classmethod
    def from_facets(cls, dim: int, facets: Sequence[tuple]) -> "HPolytope":
        pairs = [(as_vec(n), Fraction(h)) for n, h in facets]
        N = NormalSet.from_vectors(dim, [n for n, _ in pairs])
        lookup = {primitive_form(n): h for n, h in pairs}
        offsets = tuple(lookup[primitive_form(n)] for n in N.normals)
        return cls(N, offsets)

    # -- validation ---------------------------------------------------------

    def _validate_bounded(self):
        N = self.normal_set
        n = N.dim
        for i in range(n):
            for sign in (1, -1):
                e = tuple(Fraction(sign if j == i else 0) for j in range(n))
                if cone_membership(e, N.normals) is None:
                    # Farkas direction: <m, d> <= 0 for all normals, <e, d> > 0
                    d = feasible([(vneg(m), Fraction(0), GE) for m in N.normals]
                                 + [(e, Fraction(1), GE)])
                    raise InputError(
                        f"constraint system is unbounded along {d}", witness=d)
        w = feasible([(vneg(m), -h, GE)
                      for m, h in zip(N.normals, self.offsets)])
        if w is None:
            raise InputError("constraint system is empty (infeasible)")

    def _enumerate_vertices(self) -> tuple[Vertex, ...]:
        N = self.normal_set
        n = N.dim
        points: set[Vec] = set()
        for idx in combinations(range(len(N.normals)), n):
            rows = [N.normals[i] for i in idx]
            rhs = [self.offsets[i] for i in idx]
            x = solve_rows(rows, rhs)
            if x is None:
                continue
            if all(dot(m, x) <= h for m, h in zip(N.normals, self.offsets)):
                points.add(x)
        vertices = []
        for p in sorted(points):
            tight = tuple(m for m, h in zip(N.normals, self.offsets)
                          if dot(m, p) == h)
            if rank(tight) != n:
                raise InternalInvariantError(
                    f"tight set at {p} does not span the space")
            vertices.append(Vertex(p, tight))
        if not vertices:
            raise InternalInvariantError("bounded nonempty polytope has no vertex")
        return tuple(vertices)

    def _validate_irredundant(self):
        n = self.normal_set.dim
        for i, (m, h) in enumerate(zip(self.normal_set.normals, self.offsets)):
            tight_points = [v.point for v in self.vertices if m in v.tight]
            if not tight_points:
                raise InputError(
                    f"facet with normal {m} is redundant (offset never attained)",
                    facet_index=i)
            base = tight_points[0]
            if rank([vsub(p, base) for p in tight_points[1:]]) != n - 1:
                raise InputError(
                    f"facet with normal {m} is redundant (tight set is not a facet)",
                    facet_index=i)

    # -- queries ------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.normal_set.dim

    def offset_of(self, n: Vec) -> Fraction:
        try:
            return self._offset_index[n]
        except KeyError:
            raise InputError(f"{n} is not a normal of this polytope")

    def support_value(self, n: Vec) -> Fraction:
        if is_zero(n):
            raise InputError("support value of the zero vector is undefined")
        return max(dot(n, v.point) for v in self.vertices)

    def point_location(self, x: Vec) -> str:
        if len(x) != self.dim:
            raise InputError("dimension mismatch in point_location")
        tight = False
        for m, h in zip(self.normal_set.normals, self.offsets):
            s = h - dot(m, x)
            if s < 0:
                return OUTSIDE
            if s == 0:
                tight = True
        return BOUNDARY if tight else INTERIOR

    def tight_normals(self, x: Vec, slack: Fraction = Fraction(0)) -> tuple[Vec, ...]:
        if slack < 0:
            raise InputError("slack must be nonnegative")
        if self.point_location(x) == OUTSIDE:
            raise InputError(f"point {x} is outside the polytope")
        return tuple(m for m, h in zip(self.normal_set.normals, self.offsets)
                     if h - dot(m, x) <= slack)

    @property
    def is_simple(self) -> bool:
        return all(len(v.tight) == self.dim for v in self.vertices)

    def non_simple_vertices(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if len(v.tight) != self.dim)

"""Pointwise geometric predicates: sign classification of a point against a
basis, conical position, positive-hull membership, primitivity.

Every negative verdict carries a witness so it can be re-checked without
trusting the code path that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InputError
from .kernel import Vec, dot, rank, solve_linear
from .lp import GE, feasible, solve_eq_nonneg

ALL_NONPOSITIVE = "all_nonpositive"
ALL_NONNEGATIVE = "all_nonnegative"
SINGLE_POSITIVE = "single_positive"
MIXED = "mixed"


@dataclass(frozen=True)
class SignClass:
    tag: str
    coefficients: Vec
    positive_index: Optional[int] = None


def classify_signs(basis: Sequence[Vec], x: Vec) -> SignClass:
    """Sign pattern of the unique expansion of x over an independent basis.

    all_nonpositive: every coefficient <= 0 (the set {x} + basis is not
    strictly separable from the origin); all_nonnegative / single_positive:
    one of the points lies in the positive hull of the others; mixed
    (>= 2 positive, >= 1 negative): {x} + basis is in conical position.
    """
    lam = solve_linear(basis, x)
    if lam is None:
        raise InputError("singular basis in classify_signs")
    pos = [i for i, c in enumerate(lam) if c > 0]
    neg = [i for i, c in enumerate(lam) if c < 0]
    if not pos:
        return SignClass(ALL_NONPOSITIVE, lam)
    if not neg:
        return SignClass(ALL_NONNEGATIVE, lam)
    if len(pos) == 1:
        return SignClass(SINGLE_POSITIVE, lam, positive_index=pos[0])
    return SignClass(MIXED, lam)


def cone_membership(x: Vec, generators: Sequence[Vec]) -> Optional[tuple[Fraction, ...]]:
    """Nonnegative mu with x == sum(mu_i * g_i), or None if x is outside
    the positive hull of the generators."""
    if not generators:
        return () if all(c == 0 for c in x) else None
    d = len(x)
    if any(len(g) != d for g in generators):
        raise InputError("dimension mismatch in cone_membership")
    rows = [[g[i] for g in generators] for i in range(d)]
    mu = solve_eq_nonneg(rows, list(x))
    return None if mu is None else tuple(mu)


@dataclass(frozen=True)
class ConicalVerdict:
    in_conical_position: bool
    # witness for a positive verdict: a vector v with <s, v> >= 1 for all s
    separator: Optional[Vec] = None
    # witnesses for a negative verdict
    not_separated: bool = False
    hull_member: Optional[Vec] = None
    hull_coefficients: Optional[tuple[Fraction, ...]] = None

    def __bool__(self) -> bool:
        return self.in_conical_position


def is_conical_position(points: Sequence[Vec]) -> ConicalVerdict:
    """A set is in conical position iff it is strictly separated from the
    origin and no point lies in the positive hull of the others."""
    if not points:
        raise InputError("is_conical_position needs a nonempty set")
    separator = feasible([(p, Fraction(1), GE) for p in points])
    if separator is None:
        return ConicalVerdict(False, not_separated=True)
    for i, p in enumerate(points):
        others = [q for j, q in enumerate(points) if j != i]
        mu = cone_membership(p, others)
        if mu is not None:
            return ConicalVerdict(False, hull_member=p, hull_coefficients=mu)
    return ConicalVerdict(True, separator=separator)


def is_primitive(subset: Sequence[Vec], all_normals: Sequence[Vec]) -> bool:
    """Independent normals whose positive hull contains no other normal."""
    if rank(subset) != len(subset):
        return False
    members = set(subset)
    for n in all_normals:
        if n in members:
            continue
        if cone_membership(n, subset) is not None:
            return False
    return True

"""Exact rational vectors and linear algebra.

Every geometric verdict in this package reduces to sign decisions, so all
coefficients are `fractions.Fraction` and nothing here touches floating
point. Vectors are plain tuples of Fraction.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import InputError

Vec = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (decimal integers, optional leading minus)."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise InputError(f"not a rational literal: {text!r}")
    if "/" in s:
        p, q = s.split("/")
        if int(q) == 0:
            raise InputError(f"zero denominator in rational literal: {text!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def vec(*entries) -> Vec:
    return tuple(Fraction(e) for e in entries)


def as_vec(entries: Iterable) -> Vec:
    return tuple(Fraction(e) for e in entries)


def zero_vec(dim: int) -> Vec:
    return (Fraction(0),) * dim


def dot(a: Vec, b: Vec) -> Fraction:
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * x for x in a)


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def is_zero(a: Vec) -> bool:
    return all(x == 0 for x in a)


def primitive_form(v: Vec) -> Vec:
    """Scale v by a positive rational so its entries are coprime integers.

    Two vectors are positive multiples of each other iff their primitive
    forms coincide; negation flips the form.
    """
    if is_zero(v):
        raise InputError("zero vector has no direction")
    lcm = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    ints = [int(x * lcm) for x in v]
    g = reduce(gcd, (abs(i) for i in ints), 0)
    return tuple(Fraction(i // g) for i in ints)


def _row_reduce(matrix: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place forward elimination; returns (matrix, pivot column indices)."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        inv = matrix[r][c]
        matrix[r] = [x / inv for x in matrix[r]]
        for i in range(rows):
            if i != r and matrix[i][c] != 0:
                f = matrix[i][c]
                matrix[i] = [x - f * y for x, y in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return matrix, pivots


def rank(vectors: Sequence[Vec]) -> int:
    if not vectors:
        return 0
    m = [list(v) for v in vectors]
    _, pivots = _row_reduce(m)
    return len(pivots)


def solve_linear(basis: Sequence[Vec], target: Vec) -> Optional[Vec]:
    """Coefficients lam with sum(lam_i * basis_i) == target, or None if the
    basis is singular. The basis must be n vectors in dimension n."""
    n = len(target)
    if len(basis) != n or any(len(b) != n for b in basis):
        raise InputError("solve_linear needs n vectors of dimension n")
    # columns are the basis vectors
    aug = [[basis[j][i] for j in range(n)] + [target[i]] for i in range(n)]
    reduced, pivots = _row_reduce(aug)
    if len(pivots) < n or pivots != list(range(n)):
        return None
    return tuple(reduced[i][n] for i in range(n))


def solve_rows(rows: Sequence[Vec], rhs: Sequence[Fraction]) -> Optional[Vec]:
    """Solve the square system <rows_i, x> = rhs_i, or None if singular."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows) or len(rhs) != n:
        raise InputError("solve_rows needs a square system")
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    reduced, pivots = _row_reduce(aug)
    if len(pivots) < n or pivots != list(range(n)):
        return None
    return tuple(reduced[i][n] for i in range(n))


def kernel_vector(vectors: Sequence[Vec]) -> Optional[Vec]:
    """A nontrivial dependence: coefficients mu (not all zero) with
    sum(mu_i * vectors_i) == 0, or None if the vectors are independent."""
    k = len(vectors)
    if k == 0:
        return None
    n = len(vectors[0])
    m = [[vectors[j][i] for j in range(k)] for i in range(n)]
    reduced, pivots = _row_reduce(m)
    free = [c for c in range(k) if c not in pivots]
    if not free:
        return None
    f = free[0]
    mu = [Fraction(0)] * k
    mu[f] = Fraction(1)
    for r, c in enumerate(pivots):
        mu[c] = -reduced[r][f]
    return tuple(mu)


def simplex_dependence(points: Sequence[Vec]) -> Optional[Vec]:
    """The unique (up to scale) dependence of d+1 points spanning a d-space.

    Returns None unless rank(points) == len(points) - 1.
    """
    if rank(points) != len(points) - 1:
        return None
    return kernel_vector(points)

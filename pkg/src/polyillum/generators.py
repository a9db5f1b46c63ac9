"""Built-in instance families and deterministic offset randomization.

The randomizer draws offsets in [1, 2] with denominator 16 from a
splitmix64 stream, so the same seed reproduces the same polytope
bit-for-bit in any implementation of the same stream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InputError
from .polytope import HPolytope, NormalSet

FAMILIES = ("box", "simplex", "simplex_product", "square_pyramid")

_MASK = (1 << 64) - 1


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15; z = state;
    z = (z ^ z>>30) * 0xBF58476D1CE4E5B9; z = (z ^ z>>27) * 0x94D049BB133111EB;
    return z ^ z>>31. All arithmetic mod 2^64."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    dims: tuple[int, ...] = ()
    offsets: Optional[tuple[Fraction, ...]] = None
    seed: Optional[int] = None


def _unit(n: int, i: int, sign: int = 1) -> tuple[Fraction, ...]:
    return tuple(Fraction(sign if j == i else 0) for j in range(n))


def box_normals(n: int) -> list[tuple[Fraction, ...]]:
    return [_unit(n, i, s) for i in range(n) for s in (1, -1)]


def simplex_normals(n: int) -> list[tuple[Fraction, ...]]:
    return [_unit(n, i) for i in range(n)] + [(Fraction(-1),) * n]


def simplex_product_normals(dims) -> list[tuple[Fraction, ...]]:
    total = sum(dims)
    normals = []
    offset = 0
    for d in dims:
        for i in range(d):
            normals.append(_unit(total, offset + i))
        normals.append(tuple(Fraction(-1 if offset <= j < offset + d else 0)
                             for j in range(total)))
        offset += d
    return normals


SQUARE_PYRAMID_NORMALS = [
    (Fraction(0), Fraction(0), Fraction(-1)),
    (Fraction(1), Fraction(0), Fraction(1)),
    (Fraction(-1), Fraction(0), Fraction(1)),
    (Fraction(0), Fraction(1), Fraction(1)),
    (Fraction(0), Fraction(-1), Fraction(1)),
]


def generate(spec: FamilySpec) -> HPolytope:
    if spec.family not in FAMILIES:
        raise InputError(f"unknown family {spec.family!r}; expected one of {FAMILIES}")
    if any(d <= 0 for d in spec.dims):
        raise InputError(f"dimensions must be positive, got {spec.dims}")
    if spec.family == "box":
        if len(spec.dims) != 1:
            raise InputError("box takes exactly one dimension")
        normals = box_normals(spec.dims[0])
        dim = spec.dims[0]
    elif spec.family == "simplex":
        if len(spec.dims) != 1:
            raise InputError("simplex takes exactly one dimension")
        normals = simplex_normals(spec.dims[0])
        dim = spec.dims[0]
    elif spec.family == "simplex_product":
        if not spec.dims:
            raise InputError("simplex_product takes at least one factor dimension")
        normals = simplex_product_normals(spec.dims)
        dim = sum(spec.dims)
    else:
        if spec.dims:
            raise InputError("square_pyramid takes no dimensions")
        normals = SQUARE_PYRAMID_NORMALS
        dim = 3
    offsets = spec.offsets
    if offsets is None:
        offsets = tuple(Fraction(1) for _ in normals)
    if len(offsets) != len(normals):
        raise InputError(
            f"expected {len(normals)} offsets, got {len(offsets)}")
    P = HPolytope.from_facets(dim, list(zip(normals, offsets)))
    if spec.seed is not None:
        P = randomize_offsets(P, spec.seed)
    return P


def randomize_offsets(P: HPolytope, seed: int) -> HPolytope:
    """Same normals, offsets drawn as (16 + z mod 17)/16 in [1, 2] per
    normal in canonical order; redraws (up to 100 times) if the result
    fails validation."""
    rng = SplitMix64(seed)
    last_error = None
    for _ in range(100):
        offsets = tuple(Fraction(16 + rng.next() % 17, 16)
                        for _ in P.normal_set.normals)
        try:
            return HPolytope(P.normal_set, offsets)
        except InputError as err:
            last_error = err
    raise InputError(
        f"100 offset draws failed for normal set {P.normal_set.normals}: "
        f"{last_error}")

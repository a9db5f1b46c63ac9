from fractions import Fraction

import pytest

from polyillum import HPolytope, NormalSet
from polyillum.generators import FamilySpec, generate

HEXAGON_FACETS = [
    ((1, 0), 1), ((-1, 0), 1), ((0, 1), 1),
    ((0, -1), 1), ((1, 1), 1), ((-1, -1), 1),
]

TRIANGLE_FACETS = [((1, 0), 1), ((0, 1), 1), ((-1, -1), 1)]


def hexagon() -> HPolytope:
    return HPolytope.from_facets(2, HEXAGON_FACETS)


def triangle() -> HPolytope:
    return HPolytope.from_facets(2, TRIANGLE_FACETS)


def box(n: int) -> HPolytope:
    return generate(FamilySpec("box", (n,)))


def simplex(n: int) -> HPolytope:
    return generate(FamilySpec("simplex", (n,)))


def simplex_product(dims) -> HPolytope:
    return generate(FamilySpec("simplex_product", tuple(dims)))


def square_pyramid() -> HPolytope:
    return generate(FamilySpec("square_pyramid"))


@pytest.fixture
def hex_polytope():
    return hexagon()


@pytest.fixture
def cube():
    return box(3)


@pytest.fixture
def pyramid():
    return square_pyramid()

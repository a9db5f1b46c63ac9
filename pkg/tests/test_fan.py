from fractions import Fraction

import pytest

from polyillum.errors import InputError
from polyillum.fan import enumerate_primitive_bases, normal_fan, verify_fan_uniqueness
from polyillum.generators import randomize_offsets
from polyillum.kernel import vec
from polyillum.oracle import enumerate_direction_classes
from polyillum.polytope import HPolytope, NormalSet
from polyillum.position import cone_membership
from tests.conftest import box, hexagon, simplex, simplex_product, square_pyramid, triangle

F = Fraction


class TestPrimitiveBases:
    def test_square(self):
        N = NormalSet.from_vectors(2, [(1, 0), (-1, 0), (0, 1), (0, -1)])
        cones = enumerate_primitive_bases(N)
        assert {frozenset(c.generators) for c in cones} == {
            frozenset({vec(1, 0), vec(0, 1)}),
            frozenset({vec(1, 0), vec(0, -1)}),
            frozenset({vec(-1, 0), vec(0, 1)}),
            frozenset({vec(-1, 0), vec(0, -1)}),
        }

    def test_hexagon_has_six_adjacent_pairs(self):
        cones = enumerate_primitive_bases(hexagon().normal_set)
        assert len(cones) == 6

    def test_triangle(self):
        assert len(enumerate_primitive_bases(triangle().normal_set)) == 3


class TestNormalFan:
    def test_cube_has_eight_orthants(self):
        cones = normal_fan(box(3))
        assert len(cones) == 8
        gens = {frozenset(c.generators) for c in cones}
        assert frozenset({vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)}) in gens

    def test_triangle_matches_primitive_bases(self):
        P = triangle()
        assert ({frozenset(c.generators) for c in normal_fan(P)}
                == {frozenset(c.generators)
                    for c in enumerate_primitive_bases(P.normal_set)})

    def test_pyramid_apex_errors(self):
        with pytest.raises(InputError, match="not simple"):
            normal_fan(square_pyramid())


class TestUniqueness:
    @pytest.mark.parametrize("P", [box(3), hexagon(), simplex_product([2, 1])],
                             ids=["cube", "hexagon", "prism"])
    def test_unique(self, P):
        assert verify_fan_uniqueness(P.normal_set, P)

    def test_prism_has_six_cones(self):
        assert len(normal_fan(simplex_product([2, 1]))) == 6

    def test_rejects_non_monotypic(self):
        P = square_pyramid()
        with pytest.raises(InputError, match="monotypic"):
            verify_fan_uniqueness(P.normal_set, P)

    def test_fan_is_offset_independent(self):
        P = hexagon()
        base = {frozenset(c.generators) for c in normal_fan(P)}
        for seed in range(5):
            Q = randomize_offsets(P, seed)
            assert {frozenset(c.generators) for c in normal_fan(Q)} == base
            assert verify_fan_uniqueness(Q.normal_set, Q)

    def test_cone_count_equals_vertex_count(self):
        for P in (box(3), hexagon(), triangle(), simplex(3)):
            assert (len(enumerate_primitive_bases(P.normal_set))
                    == len(P.vertices))

    def test_vertex_tight_sets_are_primitive_bases(self):
        for P in (box(3), hexagon(), simplex(3)):
            bases = {frozenset(c.generators)
                     for c in enumerate_primitive_bases(P.normal_set)}
            for v in P.vertices:
                assert frozenset(v.tight) in bases

    def test_direction_classes_lie_in_some_cone(self):
        for P in (hexagon(), box(3)):
            cones = enumerate_primitive_bases(P.normal_set)
            for cls in enumerate_direction_classes(P):
                assert any(cone_membership(cls.representative, c.generators)
                           is not None for c in cones)

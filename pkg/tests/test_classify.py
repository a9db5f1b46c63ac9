from fractions import Fraction

import pytest

from polyillum.classify import (check_monotypy, check_monotypy_mss,
                                check_strong_monotypy, classify_normal_set,
                                validate_normal_set)
from polyillum.errors import InputError, ScaleLimitError
from polyillum.kernel import vec, vscale
from polyillum.polytope import NormalSet
from polyillum.position import cone_membership, is_conical_position
from tests.conftest import box, simplex, square_pyramid

F = Fraction

PYRAMID_CERT = {vec(1, 0, 1), vec(-1, 0, 1), vec(0, 1, 1), vec(0, -1, 1)}


def hexagon_normals():
    return NormalSet.from_vectors(
        2, [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)])


class TestValidation:
    def test_non_spanning_rejected(self):
        N = NormalSet.from_vectors(2, [(1, 0), (-1, 0)])
        with pytest.raises(InputError, match="span"):
            validate_normal_set(N)

    def test_origin_not_interior_rejected(self):
        N = NormalSet.from_vectors(2, [(1, 0), (0, 1), (1, 1)])
        with pytest.raises(InputError, match="interior"):
            validate_normal_set(N)

    def test_guard_refuses_huge_instances(self):
        # 60 spanning normals in the plane: C(60, 3) is small, so build a
        # fake high-count instance by checking the guard arithmetic directly
        from polyillum.classify import MAX_SUBSET_COUNT, _guard
        big = NormalSet.from_vectors(
            2, [(k, 1) for k in range(-40, 41)] + [(0, -1)])
        from math import comb
        if comb(len(big.normals), 3) > MAX_SUBSET_COUNT:
            with pytest.raises(ScaleLimitError):
                _guard(big)
        else:
            _guard(big)


class TestStrongMonotypy:
    def test_cube_true(self):
        ok, cert = check_strong_monotypy(box(3).normal_set)
        assert ok and cert is None

    def test_pyramid_false_with_certificate(self):
        ok, cert = check_strong_monotypy(square_pyramid().normal_set)
        assert not ok
        assert set(cert) == PYRAMID_CERT
        assert is_conical_position(cert)

    def test_hexagon_true(self):
        ok, _ = check_strong_monotypy(hexagon_normals())
        assert ok


class TestMonotypy:
    def test_pyramid_false(self):
        N = square_pyramid().normal_set
        ok, cert = check_monotypy(N)
        assert not ok
        assert set(cert) == PYRAMID_CERT
        # re-verify: conical and no further normal is captured
        assert is_conical_position(cert)
        others = [m for m in N.normals if m not in set(cert)]
        assert all(cone_membership(m, cert) is None for m in others)

    def test_cube_true(self):
        ok, _ = check_monotypy(box(3).normal_set)
        assert ok

    def test_hexagon_vacuously_true(self):
        ok, _ = check_monotypy(hexagon_normals())
        assert ok


class TestMonotypyMss:
    def test_pyramid_false_with_recheckable_certificate(self):
        ok, cert = check_monotypy_mss(square_pyramid().normal_set)
        assert not ok
        v1, v2, point = cert
        assert not set(v1) & set(v2)
        assert any(c != 0 for c in point)
        assert cone_membership(point, v1) is not None
        assert cone_membership(point, v2) is not None

    def test_cube_true(self):
        ok, _ = check_monotypy_mss(box(3).normal_set)
        assert ok

    def test_triangle_true(self):
        ok, _ = check_monotypy_mss(simplex(2).normal_set)
        assert ok


class TestCrossProperties:
    CASES = [
        box(2).normal_set, box(3).normal_set,
        simplex(2).normal_set, simplex(3).normal_set,
        hexagon_normals(), square_pyramid().normal_set,
    ]

    @pytest.mark.parametrize("N", CASES, ids=lambda N: f"n{N.dim}_{len(N.normals)}")
    def test_characterizations_agree(self, N):
        assert check_monotypy(N)[0] == check_monotypy_mss(N)[0]

    @pytest.mark.parametrize("N", CASES, ids=lambda N: f"n{N.dim}_{len(N.normals)}")
    def test_strong_implies_monotypic(self, N):
        if check_strong_monotypy(N)[0]:
            assert check_monotypy(N)[0]

    def test_scale_invariance(self):
        N = square_pyramid().normal_set
        scaled = NormalSet.from_vectors(
            3, [vscale(F(k + 1, 2), m) for k, m in enumerate(N.normals)])
        for check in (check_strong_monotypy, check_monotypy, check_monotypy_mss):
            assert check(scaled)[0] == check(N)[0]

    def test_combined_verdict(self):
        v = classify_normal_set(square_pyramid().normal_set)
        assert not v.strongly_monotypic and not v.monotypic
        assert v.certificate is not None
        v = classify_normal_set(box(3).normal_set)
        assert v.strongly_monotypic and v.monotypic and v.certificate is None

import math
import random

import pytest

from conftest import assert_close
from geodiff import homogeneity
from geodiff.homogeneity import registry, scale_residual, scaled_point

BY_NAME = {fd.name: fd for fd in registry()}


class TestRegistry:
    def test_size(self):
        # 17 closed-form operations plus the circle-area and sphere-volume laws
        assert len(registry()) == 19

    def test_dimension_table(self):
        assert BY_NAME["euler_distance"].out_dim == 1
        assert BY_NAME["euler_distance"].arg_dims == (1, 1)
        assert BY_NAME["trirect_face_area"].out_dim == 2
        assert BY_NAME["trirect_face_area"].arg_dims == (1, 1, 1)
        assert BY_NAME["third_side"].arg_dims == (1, 0, 0)
        assert BY_NAME["inscribed_angle"].out_dim == 0
        assert BY_NAME["sphere_volume"].out_dim == 3
        assert BY_NAME["incenter_ratio"].out_dim == 0

    def test_every_formula_has_sampler(self):
        rng = random.Random(7)
        for fd in registry():
            point = fd.sample(rng)
            assert len(point) == len(fd.arg_dims)
            fd.evaluate(*point)  # must be in-domain


class TestScaleResidual:
    def test_area_identity_at_3_4_5(self):
        # 2A = x dA/dx + y dA/dy + z dA/dz
        assert scale_residual(BY_NAME["triangle_area"], (3.0, 4.0, 5.0)) < 1e-12

    def test_third_side_identity(self):
        # y = x dy/dx, the angles do not scale
        assert scale_residual(BY_NAME["third_side"], (2.0, 0.7, 1.1)) < 1e-12

    def test_angle_is_degree_zero(self):
        assert scale_residual(BY_NAME["angle_from_sides"], (2.0, 3.0, 4.0)) < 1e-12

    def test_sweep_all_formulas(self, rng):
        for fd in registry():
            for _ in range(50):
                assert scale_residual(fd, fd.sample(rng)) < 1e-10, fd.name


class TestFiniteLambdaScaling:
    def test_direct_scaling(self, rng):
        for fd in registry():
            for _ in range(25):
                point = fd.sample(rng)
                f0 = fd.evaluate(*point)
                for lam in (0.5, 2.0):
                    scaled = fd.evaluate(*scaled_point(fd, point, lam))
                    assert_close(scaled, lam ** fd.out_dim * f0, 1e-12, fd.name)


class TestDerivativesMatchFiniteDifferences:
    def test_all_formulas(self, rng):
        for fd in registry():
            for _ in range(10):
                point = fd.sample(rng)
                _, grads = homogeneity.partials(fd, point)
                for i, g in enumerate(grads):
                    h = 1e-6 * max(abs(point[i]), 1.0)
                    hi = list(point)
                    lo = list(point)
                    hi[i] += h
                    lo[i] -= h
                    try:
                        fd_grad = (fd.evaluate(*hi) - fd.evaluate(*lo)) / (2 * h)
                    except ValueError:
                        continue  # stepped out of the domain
                    if abs(fd_grad) < 1e-10:
                        assert abs(g - fd_grad) < 1e-6, fd.name
                    else:
                        assert_close(g, fd_grad, 1e-6, f"{fd.name} d/dx_{i}")


def test_out_of_domain_is_an_error():
    with pytest.raises(ValueError):
        homogeneity.scale_residual(BY_NAME["triangle_area"], (1.0, 1.0, 5.0))

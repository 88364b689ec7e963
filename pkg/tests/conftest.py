import math
import random

import pytest
from hypothesis import strategies as st

from geodiff import geom

MARGIN = 1e-3


def valid_sides(x, y, z):
    peri = x + y + z
    return min(x + y - z, y + z - x, z + x - y) > MARGIN * peri


side = st.floats(min_value=0.1, max_value=10.0,
                 allow_nan=False, allow_infinity=False)

triangles = st.tuples(side, side, side).filter(lambda s: valid_sides(*s)) \
    .map(lambda s: geom.Triangle(*s))


def valid_quad(sides):
    total = sum(sides)
    return min(total - 2.0 * s for s in sides) > MARGIN * total


quads = st.tuples(side, side, side, side).filter(valid_quad) \
    .map(lambda s: geom.CyclicQuad(*s))


@pytest.fixture
def rng():
    return random.Random(20240811)


def rel_err(actual, expected):
    return abs(actual - expected) / max(abs(expected), 1e-30)


def assert_close(actual, expected, tol, label=""):
    err = rel_err(actual, expected)
    assert err < tol, f"{label}: {actual} vs {expected} (rel err {err:.3e})"


def rotate_translate(point, angle, shift):
    c, s = math.cos(angle), math.sin(angle)
    return (c * point[0] - s * point[1] + shift[0],
            s * point[0] + c * point[1] + shift[1])

"""Seeded generators for valid random inputs.

Lengths are log-uniform in [0.1, 10]; triangle and quadrilateral inequalities
are enforced by rejection with a relative degeneracy margin of 1e-3, which
keeps conditioning benign without hiding interesting shapes.
"""

from __future__ import annotations

import math
import random

from . import geom, oracle

LENGTH_LO = 0.1
LENGTH_HI = 10.0
MARGIN = 1e-3


def length(rng: random.Random, lo: float = LENGTH_LO, hi: float = LENGTH_HI) -> float:
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


def triangle(rng: random.Random, margin: float = MARGIN) -> geom.Triangle:
    while True:
        x, y, z = (length(rng) for _ in range(3))
        peri = x + y + z
        if min(x + y - z, y + z - x, z + x - y) > margin * peri:
            return geom.Triangle(x, y, z)


def cevian_split(rng: random.Random, z: float) -> geom.CevianSplit:
    frac = rng.uniform(0.1, 0.9)
    m = frac * z
    return geom.CevianSplit(m, z - m)


def cyclic_quad(rng: random.Random, margin: float = MARGIN) -> geom.CyclicQuad:
    """Cyclic quadrilateral constructible with the circumcenter inside."""
    while True:
        s = [length(rng) for _ in range(4)]
        total = sum(s)
        if min(total - 2.0 * v for v in s) <= margin * total:
            continue
        quad = geom.CyclicQuad(*s)
        try:
            oracle.embed_cyclic(quad)
        except oracle.NotConstructibleError:
            continue
        return quad


def trirect(rng: random.Random) -> geom.TrirectTetra:
    return geom.TrirectTetra(length(rng), length(rng), length(rng))


def incircle_pair(rng: random.Random) -> geom.IncirclePair:
    big_r = length(rng)
    return geom.IncirclePair(rng.uniform(0.02, 0.98) * big_r / 2.0, big_r)


def angle_pair(rng: random.Random) -> tuple[float, float]:
    """Angles (beta, gamma) with beta + gamma safely below pi."""
    beta = rng.uniform(0.05, math.pi - 0.15)
    gamma = rng.uniform(0.05, math.pi - beta - 0.05)
    return beta, gamma


def central_angle(rng: random.Random) -> float:
    return rng.uniform(0.05, 2.0 * math.pi - 0.05)


def bisector_lengths(rng: random.Random) -> tuple[float, float, float]:
    """Vertex-to-incenter bisector triple realized by some random triangle."""
    return geom.incenter_bisector_lengths(triangle(rng))

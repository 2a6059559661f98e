"""Seeded random generators for lattice-geometry sweeps and property tests."""

from __future__ import annotations

import random

from .geometry import LatticePoint2, LatticePolygon, LatticeVector2, convex_hull
from .triangulation import PrimitiveTriangle


def random_lattice_points(rng: random.Random, n: int, max_coord: int) -> list[LatticePoint2]:
    return [
        LatticePoint2(rng.randint(-max_coord, max_coord), rng.randint(-max_coord, max_coord))
        for _ in range(n)
    ]


def random_lattice_polygon(
    rng: random.Random,
    max_coord: int = 8,
    max_points: int = 10,
    min_dimension: int = 2,
) -> LatticePolygon:
    """Hull of a few random lattice points, resampled until the requested dimension."""
    while True:
        n = rng.randint(max(3, min_dimension + 1), max_points)
        P = convex_hull(random_lattice_points(rng, n, max_coord))
        if P.dimension >= min_dimension:
            return P


def random_segment_polygon(rng: random.Random, max_coord: int = 8) -> LatticePolygon:
    while True:
        p, q = random_lattice_points(rng, 2, max_coord)
        if p != q:
            return convex_hull([p, q])


def random_unimodular_basis(
    rng: random.Random, max_coord: int = 6
) -> tuple[LatticeVector2, LatticeVector2]:
    """A random integer basis with determinant +-1, built from shear steps."""
    while True:
        u = [1, 0]
        v = [0, 1]
        if rng.random() < 0.5:
            u, v = v, u  # determinant -1 half the time
        ok = True
        for _ in range(rng.randint(1, 10)):
            m = rng.randint(-3, 3)
            if rng.random() < 0.5:
                u[0] += m * v[0]
                u[1] += m * v[1]
            else:
                v[0] += m * u[0]
                v[1] += m * u[1]
            if max(abs(u[0]), abs(u[1]), abs(v[0]), abs(v[1])) > max_coord:
                ok = False
                break
        if ok:
            return LatticeVector2(*u), LatticeVector2(*v)


def random_primitive_triangle(rng: random.Random, max_coord: int = 10) -> PrimitiveTriangle:
    """A random primitive lattice triangle with all coordinates in [-max_coord, max_coord]."""
    basis_bound = max(2, max_coord // 2)
    while True:
        u, v = random_unimodular_basis(rng, basis_bound)
        if u.cross(v) == -1:
            u, v = v, u
        c = LatticePoint2(
            rng.randint(-max_coord, max_coord), rng.randint(-max_coord, max_coord)
        )
        a = c + u
        b = c + v
        coords = (a.x, a.y, b.x, b.y)
        if max(abs(t) for t in coords) <= max_coord:
            return PrimitiveTriangle(c, a, b)

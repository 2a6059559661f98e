"""Sumset decomposition certificates for lattice polygons.

Every lattice point w of the h-fold sumset hP is a sum of h lattice points
of P.  The construction locates a primitive triangle of a triangulation of P
whose dilation contains w, translates its smallest vertex c to the origin,
and solves the unimodular 2x2 system w - h*c = i*u + j*v exactly; the
resulting certificate is w = i*a + j*b + k*c with i + j + k = h and all
coefficients nonnegative.  Running this over all of (hP) and all h realizes
the integer decomposition property of plane lattice polygons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import (
    GeometryError,
    InternalInvariantError,
    LatticePoint2,
    LatticePolygon,
    LatticeVector2,
    NonUnimodularError,
    OutsideRegionError,
    as_point,
    as_vector,
    contains_point_scaled,
    require_scale,
    separating_edge,
)
from .minkowski import PointSet
from .triangulation import Triangulation, locate_triangle, triangulate_primitive


@dataclass(frozen=True)
class Decomposition:
    """Certificate writing a point of the h-fold sumset as i*a + j*b + k*c.

    The carrier validates nothing beyond field types, so invalid certificates
    can be represented and rejected by :func:`verify_decomposition`.
    """

    a: LatticePoint2
    b: LatticePoint2
    c: LatticePoint2
    i: int
    j: int
    k: int
    h: int

    def point(self) -> LatticePoint2:
        """The decomposed point i*a + j*b + k*c recovered from the certificate."""
        return LatticePoint2(
            self.i * self.a.x + self.j * self.b.x + self.k * self.c.x,
            self.i * self.a.y + self.j * self.b.y + self.k * self.c.y,
        )


def unimodular_triangle_points(u, v, h) -> PointSet:
    """The grid {i*u + j*v : i, j >= 0, i + j <= h} for a unimodular pair (u, v).

    These are exactly the lattice points of the h-dilated triangle with
    vertices 0, u, v, all (h+1)(h+2)/2 of them.
    """
    u = as_vector(u)
    v = as_vector(v)
    h = require_scale(h)
    if u.cross(v) not in (1, -1):
        raise NonUnimodularError(
            f"triangle 0, {tuple(u)}, {tuple(v)} is not primitive (determinant {u.cross(v)})"
        )
    pts = []
    for i in range(h + 1):
        x0, y0 = i * u.dx, i * u.dy
        for j in range(h - i + 1):
            pts.append((x0 + j * v.dx, y0 + j * v.dy))
    return PointSet(pts)


def solve_unimodular(u, v, t) -> tuple[int, int]:
    """The unique integers (i, j) with i*u + j*v = t, for det(u, v) = +-1.

    Cramer's rule in exact integer arithmetic: i = det(t, v)/det(u, v) and
    j = det(u, t)/det(u, v).
    """
    u = as_vector(u)
    v = as_vector(v)
    t = as_vector(t)
    d = u.cross(v)
    if d not in (1, -1):
        raise NonUnimodularError(f"basis determinant must be +-1, got {d}")
    i = (t.dx * v.dy - t.dy * v.dx) // d
    j = (u.dx * t.dy - u.dy * t.dx) // d
    return i, j


def _sorted_corners(tri) -> tuple[LatticePoint2, LatticePoint2, LatticePoint2]:
    # translation corner c is the lexicographically smallest vertex; the
    # other two follow in lexicographic order
    c, a, b = sorted(tri.vertices)
    return a, b, c


def _certificate_from_triangle(tri, w: LatticePoint2, h: int) -> Decomposition:
    a, b, c = _sorted_corners(tri)
    u = a - c
    v = b - c
    i, j = solve_unimodular(u, v, LatticeVector2(w.x - h * c.x, w.y - h * c.y))
    k = h - i - j
    if i < 0 or j < 0 or k < 0:
        raise InternalInvariantError(
            f"barycentric coefficients ({i}, {j}, {k}) for {tuple(w)} must be nonnegative"
        )
    d = Decomposition(a, b, c, i, j, k, h)
    if d.point() != w:
        raise InternalInvariantError(f"certificate for {tuple(w)} does not reproduce the point")
    return d


def _segment_data(P: LatticePolygon):
    p, q = P.vertices
    g = math.gcd(abs(q.x - p.x), abs(q.y - p.y))
    step = LatticeVector2((q.x - p.x) // g, (q.y - p.y) // g)
    return p, step, g


def _segment_certificate(p: LatticePoint2, step: LatticeVector2, g: int, m: int, h: int) -> Decomposition:
    # split m = r*(q+1) + (h-r)*q over h summands p + (multiple)*step,
    # every multiple staying within [0, g]
    q, r = divmod(m, h)
    b = p + step * q
    a = p + step * (q + 1) if r else p
    return Decomposition(a, b, p, r, h - r, 0, h)


def decompose(P: LatticePolygon, w, h, *, triangulation: Triangulation | None = None) -> Decomposition:
    """A certificate for one lattice point w of the h-fold sumset of P.

    Pipeline for 2-d polygons: locate a primitive triangle whose dilation
    contains w, then solve the translated unimodular system.  Degenerate
    polygons are decomposed along their direction vector.  Raises
    OutsideRegionError (with a separating edge where one exists) when w is
    not in h*P.
    """
    h = require_scale(h)
    w = as_point(w)
    verts = P.vertices
    if len(verts) == 1:
        p = verts[0]
        if w != p.scaled(h):
            raise OutsideRegionError(w, h)
        return Decomposition(p, p, p, h, 0, 0, h)
    if len(verts) == 2:
        if not contains_point_scaled(P, w, h):
            raise OutsideRegionError(w, h)
        p, step, g = _segment_data(P)
        m = (w.x - h * p.x) // step.dx if step.dx else (w.y - h * p.y) // step.dy
        return _segment_certificate(p, step, g, m, h)
    sep = separating_edge(P, w, h)
    if sep is not None:
        raise OutsideRegionError(w, h, sep)
    if triangulation is None:
        triangulation = triangulate_primitive(P)
    elif triangulation.polygon != P:
        raise GeometryError("supplied triangulation does not belong to this polygon")
    tri = locate_triangle(triangulation, w, h)
    return _certificate_from_triangle(tri, w, h)


def decompose_all(
    P: LatticePolygon, h, *, triangulation: Triangulation | None = None
) -> dict[LatticePoint2, Decomposition]:
    """Certificates for every lattice point of the h-fold sumset of P.

    One triangulation is shared across all points.  Triangles are swept in
    stored order and each contributes the coefficient grid of its dilation,
    keeping the first certificate per point; this reproduces exactly what
    per-point decomposition with the first-by-index location rule returns,
    at O(triangles * h^2) total cost.  Total success over the keys is the
    sumset equality h(P cap Z^2) = (hP) cap Z^2.
    """
    h = require_scale(h)
    verts = P.vertices
    if len(verts) == 1:
        p = verts[0]
        return {p.scaled(h): Decomposition(p, p, p, h, 0, 0, h)}
    if len(verts) == 2:
        p, step, g = _segment_data(P)
        out = {}
        for m in range(h * g + 1):
            w = LatticePoint2(h * p.x + m * step.dx, h * p.y + m * step.dy)
            out[w] = _segment_certificate(p, step, g, m, h)
        return out
    if triangulation is None:
        triangulation = triangulate_primitive(P)
    elif triangulation.polygon != P:
        raise GeometryError("supplied triangulation does not belong to this polygon")
    out = {}
    for tri in triangulation.triangles:
        a, b, c = _sorted_corners(tri)
        ux, uy = a.x - c.x, a.y - c.y
        vx, vy = b.x - c.x, b.y - c.y
        hx, hy = h * c.x, h * c.y
        for i in range(h + 1):
            x0 = hx + i * ux
            y0 = hy + i * uy
            ki = h - i
            for j in range(ki + 1):
                w = (x0 + j * vx, y0 + j * vy)
                if w not in out:
                    out[LatticePoint2(*w)] = Decomposition(a, b, c, i, j, ki - j, h)
    return out


def verify_decomposition(d: Decomposition, P: LatticePolygon, w, *, lattice_points=None):
    """Independent certificate check; returns (True, None) or (False, reason).

    Reasons: 'nonpositive h', 'negative coefficient', 'coefficient sum',
    'point outside polygon', 'sum mismatch'.  ``lattice_points`` may carry a
    precomputed point set of P to speed up membership tests; correctness does
    not depend on it.
    """
    w = as_point(w)
    if d.h < 1:
        return False, "nonpositive h"
    if d.i < 0 or d.j < 0 or d.k < 0:
        return False, "negative coefficient"
    if d.i + d.j + d.k != d.h:
        return False, "coefficient sum"
    if lattice_points is not None:
        inside = d.a in lattice_points and d.b in lattice_points and d.c in lattice_points
    else:
        inside = all(contains_point_scaled(P, p, 1) for p in (d.a, d.b, d.c))
    if not inside:
        return False, "point outside polygon"
    if d.point() != w:
        return False, "sum mismatch"
    return True, None

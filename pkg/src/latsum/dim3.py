"""Minimal exact 3D support: lattice tetrahedra, point containment by signed
volumes, enumeration, and the sumset-equality check that fails in space.

Unlike the plane, a lattice simplex in dimension 3 need not satisfy
h(T cap Z^3) = (hT) cap Z^3; the Reeve tetrahedron exhibits the failure
already at h = 2.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .geometry import GeometryError, InternalInvariantError, require_scale


class LatticePoint3(NamedTuple):
    """Point of the integer lattice in space; behaves as a plain (x, y, z) tuple."""

    x: int
    y: int
    z: int

    def __new__(cls, x, y, z):
        return super().__new__(
            cls, operator.index(x), operator.index(y), operator.index(z)
        )

    def scaled(self, k: int) -> "LatticePoint3":
        return LatticePoint3(self.x * k, self.y * k, self.z * k)


def _as_point3(p) -> LatticePoint3:
    return p if type(p) is LatticePoint3 else LatticePoint3(p[0], p[1], p[2])


def orient3d(p, q, r, s) -> int:
    """Sign of det(q - p, r - p, s - p): +1 if s is on the positive side of plane pqr."""
    ax, ay, az = q[0] - p[0], q[1] - p[1], q[2] - p[2]
    bx, by, bz = r[0] - p[0], r[1] - p[1], r[2] - p[2]
    cx, cy, cz = s[0] - p[0], s[1] - p[1], s[2] - p[2]
    d = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx)
    return (d > 0) - (d < 0)


@dataclass(frozen=True)
class LatticeTetrahedron:
    """Four non-coplanar lattice points in space."""

    v0: LatticePoint3
    v1: LatticePoint3
    v2: LatticePoint3
    v3: LatticePoint3

    def __post_init__(self):
        for name in ("v0", "v1", "v2", "v3"):
            object.__setattr__(self, name, _as_point3(getattr(self, name)))
        if orient3d(self.v0, self.v1, self.v2, self.v3) == 0:
            raise GeometryError("tetrahedron vertices are coplanar")

    @property
    def vertices(self) -> tuple[LatticePoint3, ...]:
        return (self.v0, self.v1, self.v2, self.v3)

    def bounding_box(self) -> tuple[int, int, int, int, int, int]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        zs = [v.z for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys), min(zs), max(zs)


def reeve_tetrahedron(height: int = 2) -> LatticeTetrahedron:
    """The classical simplex conv{0, e1, e2, (1, 1, height)}.

    For height >= 2 its only lattice points are the four vertices while its
    volume grows with the height, which is what breaks sumset decomposition
    in space.
    """
    return LatticeTetrahedron(
        LatticePoint3(0, 0, 0),
        LatticePoint3(1, 0, 0),
        LatticePoint3(0, 1, 0),
        LatticePoint3(1, 1, height),
    )


_FACETS = ((0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 3, 1), (1, 2, 3, 0))


def tetra_contains_scaled(T: LatticeTetrahedron, w, h) -> bool:
    """Whether w lies in the dilation h*T, by four exact signed-volume tests."""
    h = require_scale(h)
    wx, wy, wz = w[0], w[1], w[2]
    verts = T.vertices
    for ia, ib, ic, iop in _FACETS:
        a, b, c, opp = verts[ia], verts[ib], verts[ic], verts[iop]
        # det(b-a, c-a, w - h*a) carries the sign of the scaled-facet test
        side = orient3d(
            (h * a.x, h * a.y, h * a.z),
            (h * a.x + b.x - a.x, h * a.y + b.y - a.y, h * a.z + b.z - a.z),
            (h * a.x + c.x - a.x, h * a.y + c.y - a.y, h * a.z + c.z - a.z),
            (wx, wy, wz),
        )
        if side != 0 and side != orient3d(a, b, c, opp):
            return False
    return True


def enumerate_lattice_points_3d(T: LatticeTetrahedron, h) -> frozenset[LatticePoint3]:
    """All lattice points of h*T, by a bounding-box scan with exact containment."""
    h = require_scale(h)
    xmin, ymin, xmax, ymax, zmin, zmax = T.bounding_box()
    found = []
    for x in range(h * xmin, h * xmax + 1):
        for y in range(h * ymin, h * ymax + 1):
            for z in range(h * zmin, h * zmax + 1):
                if tetra_contains_scaled(T, (x, y, z), h):
                    found.append(LatticePoint3(x, y, z))
    return frozenset(found)


def hfold_pointset_3d(S: Iterable, h) -> frozenset[LatticePoint3]:
    """The h-fold sumset of a finite point set in space, by repeated pairwise sums."""
    h = require_scale(h)
    base = {(p[0], p[1], p[2]) for p in S}
    acc = base
    for _ in range(h - 1):
        acc = {(ax + bx, ay + by, az + bz) for ax, ay, az in acc for bx, by, bz in base}
    return frozenset(LatticePoint3(*p) for p in acc)


def check_idp_3d(T: LatticeTetrahedron, h):
    """Whether h(T cap Z^3) equals (hT) cap Z^3.

    Returns (True, None) on equality and (False, witness) otherwise, where
    the witness is the lexicographically smallest lattice point of hT that is
    not a sum of h lattice points of T.
    """
    h = require_scale(h)
    base = enumerate_lattice_points_3d(T, 1)
    folded = hfold_pointset_3d(base, h)
    dilated = enumerate_lattice_points_3d(T, h)
    extra = folded - dilated
    if extra:
        # h-fold sums of points of T always lie in h*T
        raise InternalInvariantError(f"sumset escaped the dilation at {sorted(extra)[:3]}")
    missing = dilated - folded
    if missing:
        return False, min(missing)
    return True, None

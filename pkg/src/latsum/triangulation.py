"""Triangulation of a lattice polygon into primitive lattice triangles.

The construction inserts every lattice point of the polygon into an initial
fan over the hull vertices.  A triangle of the final mesh contains no lattice
point besides its corners, and such a triangle has doubled area 1 by Pick's
identity, so primitivity needs no separate search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    DegeneratePolygonError,
    InternalInvariantError,
    LatticePoint2,
    LatticePolygon,
    OutsideRegionError,
    as_point,
    contains_point_scaled,
    require_scale,
    separating_edge,
)
from .counting import enumerate_lattice_points


@dataclass(frozen=True)
class PrimitiveTriangle:
    """Lattice triangle with doubled area 1; its only lattice points are its vertices.

    Vertices are positively oriented; the constructor rejects anything whose
    doubled area is not exactly 1.
    """

    a: LatticePoint2
    b: LatticePoint2
    c: LatticePoint2

    def __post_init__(self):
        a, b, c = as_point(self.a), as_point(self.b), as_point(self.c)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
        if d != 1:
            raise DegeneratePolygonError(
                f"vertices {tuple(a)}, {tuple(b)}, {tuple(c)} do not form a "
                f"positively oriented triangle of doubled area 1 (got {d})"
            )

    @property
    def vertices(self) -> tuple[LatticePoint2, LatticePoint2, LatticePoint2]:
        return (self.a, self.b, self.c)

    def contains_scaled(self, w, h: int) -> bool:
        """Whether w lies in the dilation h * triangle (boundary included)."""
        wx, wy = w
        a, b, c = self.a, self.b, self.c
        return (
            (b.x - a.x) * (wy - h * a.y) - (b.y - a.y) * (wx - h * a.x) >= 0
            and (c.x - b.x) * (wy - h * b.y) - (c.y - b.y) * (wx - h * b.x) >= 0
            and (a.x - c.x) * (wy - h * c.y) - (a.y - c.y) * (wx - h * c.x) >= 0
        )


@dataclass(frozen=True)
class Triangulation:
    """A list of primitive triangles exactly covering a polygon.

    The triangle order is deterministic for a given polygon and is the
    tie-break order used by point location.
    """

    polygon: LatticePolygon
    triangles: tuple[PrimitiveTriangle, ...]


def _insert_point(tris: list, p: tuple) -> None:
    # tris holds raw ((ax,ay),(bx,by),(cx,cy)) triples; p is never an
    # existing vertex of the mesh.
    px, py = p
    on_edge = []
    for idx, t in enumerate(tris):
        (ax, ay), (bx, by), (cx, cy) = t
        s_ab = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
        if s_ab < 0:
            continue
        s_bc = (cx - bx) * (py - by) - (cy - by) * (px - bx)
        if s_bc < 0:
            continue
        s_ca = (ax - cx) * (py - cy) - (ay - cy) * (px - cx)
        if s_ca < 0:
            continue
        zeros = (s_ab == 0) + (s_bc == 0) + (s_ca == 0)
        if zeros == 0:
            # strictly interior: replace by the three corner splits
            a, b, c = t
            tris[idx : idx + 1] = [(a, b, p), (b, c, p), (c, a, p)]
            return
        if zeros >= 2:
            raise InternalInvariantError(f"insertion point {p} coincides with a mesh vertex")
        # rotate so the touched edge is (a, b)
        if s_bc == 0:
            t = (t[1], t[2], t[0])
        elif s_ca == 0:
            t = (t[2], t[0], t[1])
        on_edge.append((idx, t))
    if not on_edge:
        raise InternalInvariantError(f"lattice point {p} not covered by the current mesh")
    # p lies on a boundary edge (one incident triangle) or an interior edge
    # (two); split each incident triangle in two, splicing from the back so
    # earlier indices stay valid.
    for idx, (a, b, c) in reversed(on_edge):
        tris[idx : idx + 1] = [(a, p, c), (p, b, c)]


def triangulate_primitive(P: LatticePolygon) -> Triangulation:
    """Deterministic triangulation of P into primitive lattice triangles.

    Starts from a fan over the hull vertices and inserts the remaining
    lattice points in lexicographic order, splitting the containing triangle
    (or both triangles sharing the containing edge).  The vertex set of the
    result is exactly the lattice-point set of P and the triangle count is
    the doubled area.
    """
    if P.dimension != 2:
        raise DegeneratePolygonError("only a 2-dimensional polygon can be triangulated")
    hull = [(v.x, v.y) for v in P.vertices]
    tris: list[tuple] = [(hull[0], hull[i], hull[i + 1]) for i in range(1, len(hull) - 1)]
    hull_set = set(hull)
    rest = sorted(p for p in enumerate_lattice_points(P) if p not in hull_set)
    for p in rest:
        _insert_point(tris, (p.x, p.y))
    return Triangulation(P, tuple(PrimitiveTriangle(*t) for t in tris))


def locate_triangle(T: Triangulation, w, h) -> PrimitiveTriangle:
    """The first triangle of T (in stored order) whose h-dilation contains w.

    Membership is decided by exact sign tests against the scaled edges, and
    the first-by-index rule makes the answer deterministic when w/h lies on a
    shared edge or vertex.
    """
    h = require_scale(h)
    w = as_point(w)
    if not contains_point_scaled(T.polygon, w, h):
        raise OutsideRegionError(w, h, separating_edge(T.polygon, w, h))
    for tri in T.triangles:
        if tri.contains_scaled(w, h):
            return tri
    raise InternalInvariantError(f"{tuple(w)} is covered by the polygon but by no triangle")

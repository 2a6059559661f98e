"""Exact integer primitives for plane lattice geometry.

Points and vectors are integer named tuples and every predicate is decided
by exact integer sign tests, so there is no epsilon anywhere in the package.
Python integers are arbitrary precision, which makes all arithmetic exact at
any coordinate size; inputs are validated to be integral (floats are
rejected), never silently truncated.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class GeometryError(ValueError):
    """A domain precondition was violated."""


class DegeneratePolygonError(GeometryError):
    """The operation requires a 2-dimensional polygon."""


class NonUnimodularError(GeometryError):
    """The basis vectors do not span the lattice (determinant is not +-1)."""


class OutsideRegionError(GeometryError):
    """A queried point lies outside the scaled region.

    For 2-dimensional polygons ``edge`` carries a separating edge of the
    unscaled polygon as a ``(v, w)`` vertex pair.
    """

    def __init__(self, point, scale, edge=None):
        self.point = point
        self.scale = scale
        self.edge = edge
        message = f"{tuple(point)} lies outside the {scale}-dilated region"
        if edge is not None:
            message += f" (separated by edge {tuple(edge[0])} -> {tuple(edge[1])})"
        super().__init__(message)


class InternalInvariantError(RuntimeError):
    """A mathematically guaranteed invariant failed at runtime (a bug)."""


class LatticeVector2(NamedTuple):
    """Integer displacement in the plane; the difference of two lattice points."""

    dx: int
    dy: int

    def __new__(cls, dx, dy):
        return super().__new__(cls, operator.index(dx), operator.index(dy))

    def __add__(self, other: "LatticeVector2") -> "LatticeVector2":
        return LatticeVector2(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "LatticeVector2") -> "LatticeVector2":
        return LatticeVector2(self.dx - other.dx, self.dy - other.dy)

    def __neg__(self) -> "LatticeVector2":
        return LatticeVector2(-self.dx, -self.dy)

    def __mul__(self, k: int) -> "LatticeVector2":
        return LatticeVector2(self.dx * k, self.dy * k)

    __rmul__ = __mul__

    def cross(self, other: "LatticeVector2") -> int:
        return self.dx * other.dy - self.dy * other.dx

    def dot(self, other: "LatticeVector2") -> int:
        return self.dx * other.dx + self.dy * other.dy


class LatticePoint2(NamedTuple):
    """Point of the integer lattice in the plane.

    Behaves as a plain ``(x, y)`` tuple for hashing, equality and
    lexicographic ordering.
    """

    x: int
    y: int

    def __new__(cls, x, y):
        return super().__new__(cls, operator.index(x), operator.index(y))

    def __add__(self, v: LatticeVector2) -> "LatticePoint2":
        if not isinstance(v, LatticeVector2):
            raise TypeError("can only translate a point by a LatticeVector2")
        return LatticePoint2(self.x + v.dx, self.y + v.dy)

    def __sub__(self, other):
        if isinstance(other, LatticeVector2):
            return LatticePoint2(self.x - other.dx, self.y - other.dy)
        if isinstance(other, tuple):
            return LatticeVector2(self.x - other[0], self.y - other[1])
        return NotImplemented

    def scaled(self, k: int) -> "LatticePoint2":
        """The dilation ``k * self`` about the origin."""
        return LatticePoint2(self.x * k, self.y * k)


def as_point(p) -> LatticePoint2:
    """Coerce an ``(x, y)`` pair with integral entries to a LatticePoint2."""
    return p if type(p) is LatticePoint2 else LatticePoint2(p[0], p[1])


def as_vector(v) -> LatticeVector2:
    return v if type(v) is LatticeVector2 else LatticeVector2(v[0], v[1])


def require_scale(h) -> int:
    h = operator.index(h)
    if h < 1:
        raise GeometryError(f"dilation factor must be a positive integer, got {h}")
    return h


def orientation(a, b, c) -> int:
    """Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right, 0 collinear."""
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def _cross3(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _direction_group(dx: int, dy: int) -> int:
    # 0 for directions in the half-open angular range (-90, 90] degrees,
    # 1 for (90, 270]; opposite vectors always land in different groups.
    return 0 if (dx > 0 or (dx == 0 and dy > 0)) else 1


def direction_less(u, v) -> bool:
    """Strict angular order of nonzero integer vectors over (-90, 270] degrees.

    This is the order in which edge directions occur along a canonical
    counter-clockwise vertex cycle that starts at the lexicographically
    smallest vertex.
    """
    gu = _direction_group(u[0], u[1])
    gv = _direction_group(v[0], v[1])
    if gu != gv:
        return gu < gv
    return u[0] * v[1] - u[1] * v[0] > 0


def _validate_canonical(verts: tuple) -> None:
    n = len(verts)
    if n == 0:
        raise GeometryError("a polygon needs at least one vertex")
    if n == 1:
        return
    if n == 2:
        if verts[0] == verts[1]:
            raise GeometryError("segment endpoints must be distinct")
        if not verts[0] < verts[1]:
            raise GeometryError("segment endpoints must be in lexicographic order")
        return
    if verts[0] != min(verts):
        raise GeometryError("vertex cycle must start at the lexicographically smallest vertex")
    prev = None
    for i in range(n):
        v = verts[i]
        w = verts[(i + 1) % n]
        d = (w.x - v.x, w.y - v.y)
        if d == (0, 0):
            raise GeometryError(f"repeated vertex {tuple(v)}")
        if prev is not None and not direction_less(prev, d):
            # strictly increasing edge directions <=> strictly convex, CCW,
            # single winding
            raise GeometryError("vertices are not in strictly convex counter-clockwise order")
        prev = d


@dataclass(frozen=True)
class LatticePolygon:
    """Convex lattice polygon in canonical form.

    Vertices are strictly convex, counter-clockwise, and start at the
    lexicographically smallest vertex, which makes equality a structural
    comparison.  A single point (1 vertex) and a segment (2 vertices) are
    first-class degenerate values.  Build from arbitrary points with
    :func:`convex_hull`; the constructor only validates canonical form.
    """

    vertices: tuple[LatticePoint2, ...]

    def __post_init__(self):
        verts = tuple(as_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        _validate_canonical(verts)

    @property
    def dimension(self) -> int:
        """0 for a point, 1 for a segment, 2 for a genuine polygon."""
        n = len(self.vertices)
        return 2 if n >= 3 else n - 1

    def edges(self) -> list[tuple[LatticePoint2, LatticePoint2]]:
        """Directed vertex pairs along the cycle (empty for a point)."""
        verts = self.vertices
        n = len(verts)
        if n == 1:
            return []
        return [(verts[i], verts[(i + 1) % n]) for i in range(n)]

    def bounding_box(self) -> tuple[int, int, int, int]:
        """(xmin, ymin, xmax, ymax) over the vertices."""
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def translated(self, v: LatticeVector2) -> "LatticePolygon":
        v = as_vector(v)
        return LatticePolygon(tuple(p + v for p in self.vertices))


def convex_hull(points: Iterable) -> LatticePolygon:
    """Canonical convex hull of a nonempty finite set of lattice points.

    Monotone chain with strict turns: collinear boundary points are never
    vertices.  Invariant under permutation and duplication of the input, and
    idempotent on a polygon's own vertices.
    """
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise GeometryError("convex hull of an empty point set")
    if len(pts) == 1:
        return LatticePolygon((pts[0],))
    lower: list[LatticePoint2] = []
    for p in pts:
        while len(lower) >= 2 and _cross3(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[LatticePoint2] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross3(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return LatticePolygon(tuple(lower[:-1] + upper[:-1]))


def separating_edge(P: LatticePolygon, w, h: int):
    """An edge (v, u) of the 2-d polygon P with w strictly outside h*(edge line), else None."""
    wx, wy = w
    verts = P.vertices
    n = len(verts)
    for i in range(n):
        v = verts[i]
        u = verts[(i + 1) % n]
        # sign of cross(h*u - h*v, w - h*v) without the positive factor h
        if (u.x - v.x) * (wy - h * v.y) - (u.y - v.y) * (wx - h * v.x) < 0:
            return (v, u)
    return None


def contains_point_scaled(P: LatticePolygon, w, h) -> bool:
    """Whether w lies in the dilation h*P (equivalently w/h lies in P).

    Decided entirely with integer sign tests against the scaled edges; the
    boundary counts as inside.
    """
    h = require_scale(h)
    wx, wy = w[0], w[1]
    verts = P.vertices
    if len(verts) == 1:
        p = verts[0]
        return wx == h * p.x and wy == h * p.y
    if len(verts) == 2:
        p, q = verts
        dx, dy = q.x - p.x, q.y - p.y
        tx, ty = wx - h * p.x, wy - h * p.y
        if dx * ty - dy * tx != 0:
            return False
        s = tx * dx + ty * dy
        return 0 <= s <= h * (dx * dx + dy * dy)
    return separating_edge(P, (wx, wy), h) is None

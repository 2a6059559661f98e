"""Sumset algebra: Minkowski sums of convex lattice polygons, dilations, and
sumsets of finite point sets.

For a convex region the h-fold sumset coincides with the scalar dilation, so
polygon-level h-fold sums reduce to vertex scaling; point-set sums do not,
which is exactly the gap the decomposition machinery closes for lattice
polygons.
"""

from __future__ import annotations

from typing import Iterable

from .geometry import (
    LatticePoint2,
    LatticePolygon,
    as_point,
    convex_hull,
    direction_less,
    require_scale,
)


class PointSet:
    """Deduplicated finite set of lattice points with lexicographic iteration order."""

    __slots__ = ("points", "_set")

    def __init__(self, points: Iterable = ()):
        pts = sorted({as_point(p) for p in points})
        self.points = tuple(pts)
        self._set = frozenset(pts)

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return p in self._set

    def __eq__(self, other):
        if isinstance(other, PointSet):
            return self.points == other.points
        if isinstance(other, (set, frozenset)):
            return self._set == other
        return NotImplemented

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PointSet({[tuple(p) for p in self.points]!r})"


def _as_pointset(S) -> PointSet:
    return S if isinstance(S, PointSet) else PointSet(S)


def minkowski_sum_by_hull(P: LatticePolygon, Q: LatticePolygon) -> LatticePolygon:
    """Reference construction: convex hull of all pairwise vertex sums (quadratic)."""
    return convex_hull(
        LatticePoint2(p.x + q.x, p.y + q.y) for p in P.vertices for q in Q.vertices
    )


def _edge_merge_sum(P: LatticePolygon, Q: LatticePolygon) -> LatticePolygon:
    # Rotating merge of the two CCW edge cycles.  Both canonical cycles start
    # at the lexicographically smallest vertex, so their edge directions are
    # already sorted in the same angular order and the sum's smallest vertex
    # is the sum of the two smallest vertices.  Parallel edges are combined,
    # which keeps the vertex list strictly convex.
    pe = [(u.x - v.x, u.y - v.y) for v, u in P.edges()]
    qe = [(u.x - v.x, u.y - v.y) for v, u in Q.edges()]
    cx = P.vertices[0].x + Q.vertices[0].x
    cy = P.vertices[0].y + Q.vertices[0].y
    verts = [LatticePoint2(cx, cy)]
    i = j = 0
    while i < len(pe) or j < len(qe):
        if j == len(qe):
            d = pe[i]
            i += 1
        elif i == len(pe):
            d = qe[j]
            j += 1
        elif direction_less(pe[i], qe[j]):
            d = pe[i]
            i += 1
        elif direction_less(qe[j], pe[i]):
            d = qe[j]
            j += 1
        else:
            d = (pe[i][0] + qe[j][0], pe[i][1] + qe[j][1])
            i += 1
            j += 1
        cx += d[0]
        cy += d[1]
        verts.append(LatticePoint2(cx, cy))
    # the merged cycle closes back on the start vertex
    assert verts[-1] == verts[0]
    return LatticePolygon(tuple(verts[:-1]))


def minkowski_sum(P: LatticePolygon, Q: LatticePolygon) -> LatticePolygon:
    """The convex polygon P + Q.

    Uses the linear edge merge when both summands are 2-dimensional and the
    pairwise-sum hull otherwise (degenerate summands are cheap and fiddly to
    merge); the two constructions agree everywhere.
    """
    if P.dimension == 2 and Q.dimension == 2:
        return _edge_merge_sum(P, Q)
    return minkowski_sum_by_hull(P, Q)


def dilate(P: LatticePolygon, h) -> LatticePolygon:
    """Scale every vertex by the positive integer h; vertex count is preserved."""
    h = require_scale(h)
    return LatticePolygon(tuple(LatticePoint2(h * v.x, h * v.y) for v in P.vertices))


def hfold_sumset_polygon(P: LatticePolygon, h) -> LatticePolygon:
    """The h-fold sumset P + ... + P, which equals dilate(P, h) because P is convex."""
    return dilate(P, h)


def pointset_sum(S, T) -> PointSet:
    """All pairwise sums of two finite point sets, deduplicated."""
    A = _as_pointset(S).points
    B = _as_pointset(T).points
    return PointSet({(px + qx, py + qy) for px, py in A for qx, qy in B})


def hfold_pointset(S, h) -> PointSet:
    """The h-fold sumset of a finite point set by repeated pairwise sums.

    Deduplication after every step keeps intermediates no larger than the
    corresponding dilated-region point count.
    """
    h = require_scale(h)
    S = _as_pointset(S)
    result = S
    for _ in range(h - 1):
        result = pointset_sum(result, S)
    return result

"""Exact integer geometry for lattice polygons.

Convex hulls and orientation predicates over Z^2, Pick-style lattice-point
counting, Minkowski sumset algebra, primitive triangulations, and
constructive certificates showing that every lattice point of the h-fold
sumset hP of a lattice polygon P is a sum of h lattice points of P, together
with the 3D tetrahedron where the analogous equality fails.
"""

from .geometry import (
    DegeneratePolygonError,
    GeometryError,
    InternalInvariantError,
    LatticePoint2,
    LatticePolygon,
    LatticeVector2,
    NonUnimodularError,
    OutsideRegionError,
    contains_point_scaled,
    convex_hull,
    orientation,
)
from .counting import (
    PickCounts,
    boundary_count,
    count_dilated_primitive,
    enumerate_lattice_points,
    interior_count,
    pick_counts,
    twice_area,
)
from .minkowski import (
    PointSet,
    dilate,
    hfold_pointset,
    hfold_sumset_polygon,
    minkowski_sum,
    minkowski_sum_by_hull,
    pointset_sum,
)
from .triangulation import (
    PrimitiveTriangle,
    Triangulation,
    locate_triangle,
    triangulate_primitive,
)
from .decompose import (
    Decomposition,
    decompose,
    decompose_all,
    solve_unimodular,
    unimodular_triangle_points,
    verify_decomposition,
)
from .dim3 import (
    LatticePoint3,
    LatticeTetrahedron,
    check_idp_3d,
    enumerate_lattice_points_3d,
    hfold_pointset_3d,
    orient3d,
    reeve_tetrahedron,
    tetra_contains_scaled,
)
from .svg import emit_svg

__version__ = "0.1.0"

__all__ = [
    "DegeneratePolygonError",
    "GeometryError",
    "InternalInvariantError",
    "LatticePoint2",
    "LatticePoint3",
    "LatticePolygon",
    "LatticeVector2",
    "LatticeTetrahedron",
    "NonUnimodularError",
    "OutsideRegionError",
    "PickCounts",
    "PointSet",
    "PrimitiveTriangle",
    "Triangulation",
    "Decomposition",
    "boundary_count",
    "check_idp_3d",
    "contains_point_scaled",
    "convex_hull",
    "count_dilated_primitive",
    "decompose",
    "decompose_all",
    "dilate",
    "emit_svg",
    "enumerate_lattice_points",
    "enumerate_lattice_points_3d",
    "hfold_pointset",
    "hfold_pointset_3d",
    "hfold_sumset_polygon",
    "interior_count",
    "locate_triangle",
    "minkowski_sum",
    "minkowski_sum_by_hull",
    "orient3d",
    "orientation",
    "pick_counts",
    "pointset_sum",
    "reeve_tetrahedron",
    "solve_unimodular",
    "tetra_contains_scaled",
    "triangulate_primitive",
    "twice_area",
    "unimodular_triangle_points",
    "verify_decomposition",
]

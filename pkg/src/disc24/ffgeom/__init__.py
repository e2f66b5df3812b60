"""Finite-field constructions of the nodal surfaces and their scans."""

from .build import (
    NodalDelPezzoModel,
    TwoNodalScrollModel,
    build_nodal_del_pezzo,
    build_two_nodal_scroll,
    conic_threefold_quadric_dim,
    fresh_surface_points,
    pencil_cubic,
    quadric_pencil,
)
from .certify import (
    NodeCertificate,
    PlaneContainmentRecord,
    containment_check,
    cubic_through,
    curve_cubic_dim_in_plane,
    node_certificate,
    plane_containment_check,
    random_plane_control,
)
from .ideals import IdealPiece, ideal_piece
from .parametrize import (
    Parametrization,
    PrimeFieldSpec,
    ProjPointSet,
    linear_projection,
    parametrize_del_pezzo,
    parametrize_scroll,
    sample_points,
)
from .scan import ScanResult, residual_scan, singular_scan

__all__ = [
    "IdealPiece",
    "NodalDelPezzoModel",
    "NodeCertificate",
    "Parametrization",
    "PlaneContainmentRecord",
    "PrimeFieldSpec",
    "ProjPointSet",
    "ScanResult",
    "TwoNodalScrollModel",
    "build_nodal_del_pezzo",
    "build_two_nodal_scroll",
    "conic_threefold_quadric_dim",
    "containment_check",
    "cubic_through",
    "curve_cubic_dim_in_plane",
    "fresh_surface_points",
    "ideal_piece",
    "linear_projection",
    "node_certificate",
    "parametrize_del_pezzo",
    "parametrize_scroll",
    "pencil_cubic",
    "plane_containment_check",
    "quadric_pencil",
    "random_plane_control",
    "residual_scan",
    "sample_points",
    "singular_scan",
]

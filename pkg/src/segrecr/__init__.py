"""Exact-arithmetic workbench for the Segre cubic and the
Castelnuovo-Richmond quartic: configuration geometry, projective duality,
section classification, numerical K-theory, and quiver algebra checks."""

from .parsing import parse_polynomial
from .polynomials import Polynomial, polynomial_square_root, square_root_up_to_scalar
from .projective import Hypersurface, LinearSubspace, ProjectivePoint, singular_locus_scan
from .segre import SegreIgusaData, build_all, duality_map, plucker_teissier_degree
from .suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "parse_polynomial",
    "polynomial_square_root",
    "square_root_up_to_scalar",
    "ProjectivePoint",
    "LinearSubspace",
    "Hypersurface",
    "singular_locus_scan",
    "SegreIgusaData",
    "build_all",
    "duality_map",
    "plucker_teissier_degree",
    "run_suite",
    "__version__",
]

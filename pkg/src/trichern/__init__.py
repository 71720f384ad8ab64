"""Exact Chern-Euler numbers of triangulated circle bundles.

The pipeline: validate a simplicial map as a circle bundle, orient the
fibers and the base surface, read the colored necklace of every stalk,
evaluate the exact parity local value, and sum against the fundamental
class.  All arithmetic is exact rational.
"""

from .complexes import (
    DeltaCell,
    DeltaComplex,
    SimplicialComplex,
    SimplicialMap,
    Simplex,
    ValidationReport,
    build_complex,
    is_simplicial,
    preimage_subcomplex,
    validate_map,
)
from .necklaces import (
    Necklace,
    chern_local,
    delete_letter,
    enumerate_necklaces,
    is_block_word,
    parity,
    parity_bruteforce,
    permutation_sign,
    relabel,
)
from .bundles import (
    CircleBundle,
    ElementaryStalk,
    FiberOrientation,
    extract_necklace,
    propagate_orientation,
    stalk,
    validate_bundle,
)
from .chern import (
    ChernResult,
    SurfaceOrientation,
    check_parity_bound,
    chern_number,
    orient_closed_surface,
    verify_bound,
)
from .constructions import (
    AnnulusRealization,
    SolidTorusRealization,
    product_bundle,
    realize_annulus,
    realize_over_triangle,
    screen_realizable,
)
from . import bases, errors

__version__ = "0.1.0"

__all__ = [
    "AnnulusRealization",
    "ChernResult",
    "CircleBundle",
    "DeltaCell",
    "DeltaComplex",
    "ElementaryStalk",
    "FiberOrientation",
    "Necklace",
    "SimplicialComplex",
    "SimplicialMap",
    "Simplex",
    "SolidTorusRealization",
    "SurfaceOrientation",
    "ValidationReport",
    "bases",
    "build_complex",
    "check_parity_bound",
    "chern_local",
    "chern_number",
    "delete_letter",
    "enumerate_necklaces",
    "errors",
    "extract_necklace",
    "is_block_word",
    "is_simplicial",
    "orient_closed_surface",
    "parity",
    "parity_bruteforce",
    "permutation_sign",
    "preimage_subcomplex",
    "product_bundle",
    "propagate_orientation",
    "realize_annulus",
    "realize_over_triangle",
    "relabel",
    "screen_realizable",
    "stalk",
    "validate_bundle",
    "validate_map",
    "verify_bound",
]

"""Finite compact metric structures: isometry and bi-Lipschitz invariants,
group and heap encodings, clopen-algebra coding and cube embeddings."""

from .core import (
    INFINITY,
    MetricStructure,
    Relation,
    SignatureMismatch,
    StructureError,
    ValidationReport,
    covering_radius,
    discrete_structure,
    product_metric,
    relation_covering_radius,
    scale_metric,
    validate_structure,
)
from .isometry import (
    ZetaPattern,
    all_C_zeta,
    brute_force_isometric_iso,
    compute_C_zeta,
    decide_isometric_iso,
    distance_matrix,
    full_signature,
)
from .bilipschitz import (
    LipZetaPattern,
    base_matrices,
    canonical_pattern,
    compute_D_zeta,
    dominates,
    is_alpha_perturbation,
    optimal_distortion,
)

__version__ = "0.1.0"

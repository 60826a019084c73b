"""lexdiv: a diversity-aware multilingual lexical database and bias toolkit."""

from .store import Store
from .metrics import (
    PerfRecord,
    BiasReport,
    DistancePair,
    bias,
    greenberg,
    lcs_distance,
    avg_semantic_distance,
)
from .mapping import (
    Endpoint,
    MappingRelation,
    MappingSet,
    ModelCapability,
    CoverageReport,
    FULL_CAPABILITY,
    NO_GAP_CAPABILITY,
    NO_BN_CAPABILITY,
    pivot_capability,
    derive_mappings,
    derive_gold,
    apply_capability,
    coverage,
)

__all__ = [
    "Store",
    "PerfRecord", "BiasReport", "DistancePair",
    "bias", "greenberg", "lcs_distance", "avg_semantic_distance",
    "Endpoint", "MappingRelation", "MappingSet", "ModelCapability",
    "CoverageReport", "FULL_CAPABILITY", "NO_GAP_CAPABILITY",
    "NO_BN_CAPABILITY", "pivot_capability",
    "derive_mappings", "derive_gold", "apply_capability", "coverage",
]

__version__ = "0.1.0"

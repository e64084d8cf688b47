"""Clifford theory for biproducts A (x) K[Z_p] and the arithmetic of dimension pq."""

from .analysis import CliffordAnalysis, clifford_analysis
from .arithmetic import (
    NotApplicable,
    NotPrime,
    PqArithmetic,
    ResidueRow,
    ScreenResult,
    ScreenTable,
    ScreenVerdict,
    pq_arithmetic,
    pq_refined,
    pq_screen,
    pq_screen_table,
)
from .characters import CharacterPairing, bar, convolve, counit_twist, normalized_integral, pairing
from .idempotents import (
    NotCommutative,
    NotSemisimple,
    NotSplittable,
    SplittingFieldTooSmall,
    idempotent_checks,
    primitive_idempotents,
)
from .linkage import character_orthogonality, linkage_check
from .modules import RepData, simple_modules_of_biproduct
from .orbits import CliffordData, orbit_analysis

__all__ = [
    "CharacterPairing",
    "CliffordAnalysis",
    "CliffordData",
    "NotApplicable",
    "NotCommutative",
    "NotPrime",
    "NotSemisimple",
    "NotSplittable",
    "PqArithmetic",
    "RepData",
    "ResidueRow",
    "ScreenResult",
    "ScreenTable",
    "ScreenVerdict",
    "SplittingFieldTooSmall",
    "bar",
    "character_orthogonality",
    "clifford_analysis",
    "convolve",
    "counit_twist",
    "idempotent_checks",
    "linkage_check",
    "normalized_integral",
    "orbit_analysis",
    "pairing",
    "pq_arithmetic",
    "pq_refined",
    "pq_screen",
    "pq_screen_table",
    "primitive_idempotents",
    "simple_modules_of_biproduct",
]

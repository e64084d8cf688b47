"""The construction families: framework, A_G, the even family, the biproduct and the second construction."""

from .adjoint import AdjointActions, build_adjoint_actions
from .ag import a_p, build_AG, integrals_ag
from .apm import EvenData, build_Apm, build_even
from .base import BasisScheme, ChiConditionViolation, ConstructionData, MainAssumptionViolation, YDHopfAlgebra
from .biproduct import (
    Biproduct,
    biproduct_crossed_product,
    biproduct_extension,
    biproduct_integrals,
    build_biproduct,
)
from .factory import ConstructionFactory, bp_params, construction_data
from .framework import CompatibilityViolation, FrameworkData, build_framework
from .moddual import ModifiedDual, build_modified_dual
from .second import (
    NormalBasis,
    SecondConstruction,
    biproduct_embedding,
    normal_basis,
    second_construction,
    second_extension,
    second_integrals,
)

__all__ = [
    "AdjointActions",
    "BasisScheme",
    "Biproduct",
    "ChiConditionViolation",
    "CompatibilityViolation",
    "EvenData",
    "ConstructionData",
    "ConstructionFactory",
    "FrameworkData",
    "MainAssumptionViolation",
    "ModifiedDual",
    "NormalBasis",
    "SecondConstruction",
    "YDHopfAlgebra",
    "a_p",
    "biproduct_crossed_product",
    "biproduct_embedding",
    "biproduct_extension",
    "biproduct_integrals",
    "bp_params",
    "build_AG",
    "build_Apm",
    "build_adjoint_actions",
    "build_biproduct",
    "build_even",
    "build_framework",
    "build_modified_dual",
    "construction_data",
    "integrals_ag",
    "normal_basis",
    "second_construction",
    "second_extension",
    "second_integrals",
]

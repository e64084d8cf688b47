"""Morphisms, isomorphism tests, structure recovery and classification counts."""

from .bp import (
    BpAlgebra,
    BpClassification,
    BpDistinguished,
    BpParams,
    BpWitness,
    bp_base,
    bplus_bminus_iso,
    build_Bp,
    build_Bpm,
    count_Bp_classes,
    iso_test_Bp,
    verify_distinguished,
)
from .decompose import (
    Decomposition,
    NoGrouplikeBasis,
    NotCocommutative,
    TrivialAlgebra,
    ag_grouplikes,
    decompose_structure,
    fourier_basis,
)
from .isotest import (
    ApWitness,
    Dim2Classification,
    EvenWitness,
    TrivialInput,
    ap_data,
    ap_invariants,
    classify_dim_p2,
    iso_test_Ap,
    iso_test_even,
    verify_Apm_noniso,
)
from .morphisms import (
    MorphismData,
    NotAMorphism,
    cohomologous_morphism,
    compose_morphisms,
    identity_morphism,
    morphism_apply,
)

__all__ = [
    "ApWitness",
    "BpAlgebra",
    "BpClassification",
    "BpDistinguished",
    "BpParams",
    "BpWitness",
    "Decomposition",
    "Dim2Classification",
    "EvenWitness",
    "MorphismData",
    "NoGrouplikeBasis",
    "NotAMorphism",
    "NotCocommutative",
    "TrivialAlgebra",
    "TrivialInput",
    "ag_grouplikes",
    "ap_data",
    "ap_invariants",
    "bp_base",
    "bplus_bminus_iso",
    "build_Bp",
    "build_Bpm",
    "classify_dim_p2",
    "cohomologous_morphism",
    "compose_morphisms",
    "count_Bp_classes",
    "decompose_structure",
    "fourier_basis",
    "identity_morphism",
    "iso_test_Ap",
    "iso_test_Bp",
    "iso_test_even",
    "morphism_apply",
    "verify_Apm_noniso",
    "verify_distinguished",
]

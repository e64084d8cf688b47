"""Structure-constant Hopf algebras, Yetter-Drinfel'd structures and their verifiers."""

from .antipode import NoAntipode, solve_antipode, with_solved_antipode
from .center import center, is_simple_ideal
from .dual import dual_yd_structure, dualize
from .form import BilinearForm, verify_form, yd_bilinear_form
from .grouplikes import grouplikes
from .integrals import IntegralData, find_integral, integral_verify
from .serialize import from_json, to_json
from .structure import (
    Element,
    HopfData,
    LinearMap,
    SCAlgebra,
    SCCoalgebra,
    Tensor,
    coopposite,
    function_algebra,
    group_algebra,
    tensor_hopf,
)
from .verify import is_hopf_map, is_isomorphism, verify_hopf
from .yd import (
    Triviality,
    YDData,
    YDStructure,
    braided_square,
    grouplike_check,
    grouplike_flags,
    triviality_test,
    verify_yd_hopf,
    verify_yd_structure,
)

__all__ = [
    "BilinearForm",
    "Element",
    "HopfData",
    "IntegralData",
    "LinearMap",
    "NoAntipode",
    "SCAlgebra",
    "SCCoalgebra",
    "Tensor",
    "Triviality",
    "YDData",
    "YDStructure",
    "braided_square",
    "center",
    "coopposite",
    "dual_yd_structure",
    "dualize",
    "find_integral",
    "from_json",
    "function_algebra",
    "group_algebra",
    "grouplike_check",
    "grouplike_flags",
    "grouplikes",
    "integral_verify",
    "is_hopf_map",
    "is_isomorphism",
    "is_simple_ideal",
    "solve_antipode",
    "tensor_hopf",
    "to_json",
    "triviality_test",
    "verify_form",
    "verify_hopf",
    "verify_yd_hopf",
    "verify_yd_structure",
    "with_solved_antipode",
    "yd_bilinear_form",
]

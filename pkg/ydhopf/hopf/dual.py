"""
Duals of finite-dimensional Hopf algebras and of YD structures over K[C].

The dual basis b_0..b_{n-1} of H* sits at the same indices as the basis of H.
"""

from typing import Dict, List, Tuple

from ..algebra.cyclonum import CycElement
from .structure import Element, HopfData, SCAlgebra, SCCoalgebra, Tensor, add_term, function_algebra
from .yd import YDStructure


def dualize(H: HopfData) -> HopfData:
    """H* with transposed structure tensors: b_i b_j = sum_k Delta_k[i, j] b_k, Delta(b_k) = sum m_ij^k b_i (x) b_j."""
    field = H.field
    n = H.dim
    mult: Dict[Tuple[int, int], Element] = {}
    for k, delta in enumerate(H.coalgebra.comult):
        for (i, j), c in delta.items():
            add_term(mult.setdefault((i, j), {}), k, c)
    mult = {key: value for key, value in mult.items() if value}

    comult: List[Tensor] = [{} for _ in range(n)]
    for (i, j), prod in H.algebra.mult.items():
        for k, c in prod.items():
            add_term(comult[k], (i, j), c)

    unit: Element = {i: c for i, c in enumerate(H.coalgebra.counit) if not c.is_zero()}
    counit: List[CycElement] = [H.one.get(i, field.zero) for i in range(n)]
    antipode = H.antipode.transpose() if H.antipode is not None else None
    labels = [f"{label}*" for label in H.labels] if H.labels else None
    return HopfData(
        SCAlgebra(n, field, mult, unit),
        SCCoalgebra(n, field, comult, counit),
        antipode,
        name=f"({H.name})*",
        labels=labels,
    )


def dual_yd_structure(yds: YDStructure) -> YDStructure:
    """A* as a YD module over K^C for a diagonal YD module A over K[C].

    delta_x acts on b_j by projection onto the degree x, and the coaction is
    b_j -> sum_x lambda_x(j) delta_x (x) b_j where c -> a_j = lambda_c(j) a_j.
    """
    C = yds.group
    if C is None or yds.grades is None:
        raise ValueError("Dual YD structure needs a homogeneous module over a group algebra")
    for (c, i), image in yds.action.items():
        if set(image) != {i}:
            raise ValueError(f"Action of {C.labels[c]} on a_{i} is not diagonal")
    field = yds.field
    H_dual = function_algebra(C, field)
    action = {(yds.grades[j], j): {j: field.one} for j in range(yds.dim)}
    coaction: List[Tensor] = []
    for j in range(yds.dim):
        coaction.append({(x, j): yds.weight(x, j) for x in C.elements})
    return YDStructure(H_dual, yds.dim, action, coaction, group=None, grades=None)

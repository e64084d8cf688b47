"""
Antipode solving: the convolution inverse of the identity.
"""

from typing import Dict, List, Tuple

from loguru import logger

from ..algebra.cyclonum import CycElement
from ..algebra.linalg import InconsistentSystem, SingularSystem, Vector, solve_sparse
from ..errors import ConstructionError
from .structure import Element, HopfData, LinearMap
from .verify import verify_antipode


def solve_antipode(H: HopfData) -> LinearMap:
    """Solve S * id = unit o counit for S and confirm id * S as well.

    The unknown (j, k) is the coefficient of e_k in S(e_j); the equation (i, n)
    is the e_n coordinate of sum c_jl S(e_j) e_l = eps(e_i) 1.
    """
    dim, field = H.dim, H.field
    mult = H.algebra.mult
    equations: Dict[Tuple[int, int], Vector] = {}
    right_lookup: Dict[int, List[Tuple[int, Element]]] = {}
    for (k, l), prod in mult.items():
        right_lookup.setdefault(l, []).append((k, prod))

    for i in range(dim):
        for (j, l), c in H.coalgebra.comult[i].items():
            for k, prod in right_lookup.get(l, ()):
                for n, v in prod.items():
                    row = equations.setdefault((i, n), {})
                    key = j * dim + k
                    value = row[key] + c * v if key in row else c * v
                    if value.is_zero():
                        row.pop(key, None)
                    else:
                        row[key] = value

    rows = []
    for i in range(dim):
        if not H.coalgebra.counit[i].is_zero():
            for n in H.one:
                equations.setdefault((i, n), {})
    for (i, n), row in equations.items():
        rhs = H.coalgebra.counit[i] * H.one.get(n, field.zero)
        rows.append((row, rhs))
    logger.debug(f"Antipode system for {H.name}: {dim * dim} unknowns, {len(rows)} equations")

    try:
        values = solve_sparse(rows, dim * dim, field)
    except (InconsistentSystem, SingularSystem) as e:
        raise NoAntipode(f"{H.name}: identity is not convolution invertible ({e})") from e

    columns: List[Element] = []
    for j in range(dim):
        col: Element = {}
        for k in range(dim):
            v: CycElement = values[j * dim + k]
            if not v.is_zero():
                col[k] = v
        columns.append(col)
    S = LinearMap(field, columns)

    check = verify_antipode(H, S)
    if not check.ok:
        raise NoAntipode(f"{H.name}: solved S fails {check.failures[0].name} at {check.failures[0].witness}")
    logger.info(f"Solved antipode of {H.name} (dim {dim})")
    return S


def with_solved_antipode(H: HopfData) -> HopfData:
    return HopfData(H.algebra, H.coalgebra, solve_antipode(H), name=H.name, labels=H.labels)


def antipode_discrepancies(solved: LinearMap, claimed: LinearMap) -> List[int]:
    """Basis indices on which a claimed antipode differs from the solved one."""
    return [j for j, (a, b) in enumerate(zip(solved.columns, claimed.columns)) if a != b]


class NoAntipode(ConstructionError):
    """The identity map is not convolution invertible."""
    pass

"""
Centers and simple ideals of structure-constant algebras.
"""

import math
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from ..algebra.linalg import Vector, in_span, independent_subset, kernel
from ..errors import InputError
from .structure import Element, SCAlgebra, add_into, basis


def center(A: SCAlgebra) -> List[Element]:
    """A basis of Z(A), from the linear system x e_j = e_j x for all j."""
    # row (j, k): coordinate k of x e_j - e_j x, as a linear form in the coordinates of x
    rows: Dict[Tuple[int, int], Vector] = {}
    for (i, j), prod in A.mult.items():
        for k, c in prod.items():
            add_into(rows.setdefault((j, k), {}), c, {i: A.field.one})
            add_into(rows.setdefault((i, k), {}), -c, {j: A.field.one})
    result = kernel([row for row in rows.values() if row], A.dim, A.field)
    logger.debug(f"Center of algebra of dim {A.dim} has dim {len(result)}")
    return result


def _relative_center(A: SCAlgebra, spanning: Sequence[Element]) -> List[Vector]:
    """Coordinates, relative to spanning, of the elements of the span commuting with it."""
    rows: Dict[Tuple[int, int], Vector] = {}
    for s, v in enumerate(spanning):
        for t, w in enumerate(spanning):
            diff: Element = {}
            add_into(diff, A.field.one, A.product(w, v))
            add_into(diff, -A.field.one, A.product(v, w))
            for k, c in diff.items():
                add_into(rows.setdefault((s, k), {}), c, {t: A.field.one})
    return kernel([row for row in rows.values() if row], len(spanning), A.field)


def is_simple_ideal(A: SCAlgebra, ideal: Sequence[Element]) -> bool:
    """True when the ideal spanned by the given elements is a full matrix algebra.

    In a semisimple algebra an ideal is simple iff its center is
    one-dimensional; its dimension is then a perfect square.
    """
    chosen = independent_subset(list(ideal), A.field)
    spanning = [ideal[k] for k in chosen]
    for v in spanning:
        for j in range(A.dim):
            e = basis(j, A.field)
            for product in (A.product(e, v), A.product(v, e)):
                if product and not in_span(product, spanning, A.field):
                    raise NotAnIdeal(f"Span is not closed under multiplication by e_{j}")
    dim = len(spanning)
    root = math.isqrt(dim)
    simple = len(_relative_center(A, spanning)) == 1 and root * root == dim
    logger.debug(f"Ideal of dim {dim}: {'simple' if simple else 'not simple'}")
    return simple


class NotAnIdeal(InputError):
    """The given subspace is not a two-sided ideal."""
    pass

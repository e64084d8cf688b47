"""
Enumeration of the grouplike elements of a finite-dimensional Hopf algebra.

A grouplike g of H is an algebra map H* -> K. Such maps vanish on the
commutator ideal I of H*, and on its annihilator D the operators
T_i(g) = (b_i (x) id) Delta(g) commute and are diagonalizable; the joint
eigenvectors with eps(g) = 1 are the grouplikes. Eigenvalues outside
Q(zeta_N) are dropped, so the result is the set of grouplikes defined over
the working field.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List

from loguru import logger
from sympy import I, Poly, QQ, Symbol, exp, pi
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyclasses import DMP

from ..algebra.cyclonum import CycElement, CycField
from ..algebra.linalg import Span, Vector, coordinates, kernel
from .structure import Element, HopfData, add_into, basis, scaled
from .dual import dualize
from .yd import grouplike_check

_X = Symbol("x")


@lru_cache(maxsize=None)
def _sympy_domain(N: int, degree: int):
    if degree == 1:
        return QQ
    return QQ.algebraic_field(exp(2 * pi * I / N))


def _to_domain(K, c: CycElement):
    if K == QQ:
        return QQ(c.nums[0], c.den)
    return K.new([QQ(n, c.den) for n in reversed(c.nums)])


def _from_domain(K, field: CycField, a) -> CycElement:
    if K == QQ:
        return field.rational(Fraction(int(a.numerator), int(a.denominator)))
    coeffs = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(a.to_list())]
    return field.from_coefficients(coeffs or [0])


def eigenvalues(matrix: List[List[CycElement]], field: CycField) -> List[CycElement]:
    """Distinct eigenvalues in Q(zeta_N) of a square matrix over Q(zeta_N)."""
    K = _sympy_domain(field.N, field.degree)
    r = len(matrix)
    dm = DomainMatrix([[_to_domain(K, c) for c in row] for row in matrix], (r, r), K)
    poly = Poly.new(DMP(dm.charpoly(), K, 0), _X)
    _, factors = poly.factor_list()
    roots = []
    for factor, _ in factors:
        if factor.degree() != 1:
            continue
        a, b = factor.rep.to_list()
        roots.append(_from_domain(K, field, K.quo(K.neg(b), a)))
    return roots


def _commutator_ideal(B) -> List[Vector]:
    span = Span(B.field)
    one = B.field.one
    queue: List[Element] = []
    for i in range(B.dim):
        for j in range(i + 1, B.dim):
            diff: Element = {}
            add_into(diff, one, B.basis_product(i, j))
            add_into(diff, -one, B.basis_product(j, i))
            if diff:
                queue.append(diff)
    while queue:
        v = queue.pop()
        if not span.add(v):
            continue
        for k in range(B.dim):
            e = basis(k, B.field)
            for w in (B.product(e, v), B.product(v, e)):
                if w and w not in span:
                    queue.append(w)
    return span.basis


def _contract(H: HopfData, i: int, g: Element) -> Element:
    """(b_i (x) id) Delta(g)."""
    out: Element = {}
    for l, c in g.items():
        for (a, b), d in H.coalgebra.comult[l].items():
            if a == i:
                add_into(out, c * d, {b: H.field.one})
    return out


def grouplikes(H: HopfData) -> List[Element]:
    field = H.field
    ideal = _commutator_ideal(dualize(H).algebra)
    spaces: List[List[Vector]] = [kernel(ideal, H.dim, field)] if len(ideal) < H.dim else []
    logger.debug(f"{H.name}: commutator ideal of the dual has dim {len(ideal)}")

    for i in range(H.dim):
        if all(len(space) == 1 for space in spaces):
            break
        refined: List[List[Vector]] = []
        for space in spaces:
            if len(space) == 1:
                refined.append(space)
                continue
            matrix_cols = [coordinates(space, _contract(H, i, v), field) for v in space]
            r = len(space)
            matrix = [[matrix_cols[s][t] for s in range(r)] for t in range(r)]
            for lam in eigenvalues(matrix, field):
                rows = []
                for t in range(r):
                    row = {s: matrix[t][s] - (lam if s == t else field.zero) for s in range(r)}
                    row = {s: v for s, v in row.items() if not v.is_zero()}
                    if row:
                        rows.append(row)
                sub = kernel(rows, r, field)
                refined.append([_combine(space, c, field) for c in sub])
        spaces = refined

    found: List[Element] = []
    for space in spaces:
        if len(space) != 1:
            continue
        v = space[0]
        e = H.eps(v)
        if e.is_zero():
            continue
        g = scaled(v, e.inverse())
        if grouplike_check(H, g):
            found.append(g)
    logger.info(f"{H.name}: {len(found)} grouplike elements")
    return found


def _combine(space: List[Vector], coeffs: Vector, field: CycField) -> Vector:
    out: Vector = {}
    for s, c in coeffs.items():
        add_into(out, c, space[s])
    return out

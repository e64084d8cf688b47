"""
The character algebra of a finite-dimensional Hopf algebra B.

Characters and other functionals are lists indexed by the basis of B. The
product is convolution, (chi chi')(x) = chi(x_1) chi'(x_2), the involution is
chi-bar = chi o S, and

    <chi, chi'>_* = (chi chi'-bar)(Lambda)

with Lambda the two-sided integral normalized to eps(Lambda) = 1.
"""

from typing import List, Optional

from ..algebra.cyclonum import CycElement
from ..hopf.integrals import evaluate, find_integral
from ..hopf.structure import Element, HopfData, Tensor, basis, scaled
from ..hopf.yd import YDStructure
from .idempotents import NotSemisimple

Functional = List[CycElement]


def convolve(B: HopfData, chi: Functional, other: Functional) -> Functional:
    F = B.field
    out = []
    for delta in B.coalgebra.comult:
        total = F.zero
        for (a, b), c in delta.items():
            if chi[a].is_zero() or other[b].is_zero():
                continue
            total = total + c * chi[a] * other[b]
        out.append(total)
    return out


def bar(B: HopfData, chi: Functional) -> Functional:
    """chi o S."""
    F = B.field
    return [evaluate(chi, B.S(basis(i, F)), F) for i in range(B.dim)]


def counit_twist(A: HopfData, yds: YDStructure, k: int, zeta: CycElement) -> Functional:
    """eps_A (x) gamma_k on B = A (x) K[C], gamma_k(c_1) = zeta^k."""
    m = yds.hopf.dim
    out = []
    for a in range(A.dim):
        eps = A.coalgebra.counit[a]
        for h in range(m):
            out.append(eps * zeta ** (k * h))
    return out


def normalized_integral(B: HopfData) -> Element:
    Lambda = find_integral(B).Lambda
    eps = B.eps(Lambda)
    if eps.is_zero():
        raise NotSemisimple(f"eps(Lambda) = 0, so {B.name} is not semisimple")
    return scaled(Lambda, eps.inverse())


class CharacterPairing:
    """<chi, chi'>_* evaluated through the coproduct of the normalized integral."""

    def __init__(self, B: HopfData, Lambda: Optional[Element] = None):
        self.B = B
        self.Lambda = Lambda if Lambda is not None else normalized_integral(B)
        self.delta: Tensor = B.comul(self.Lambda)

    def product_at_integral(self, chi: Functional, other: Functional) -> CycElement:
        """(chi other)(Lambda)."""
        total = self.B.field.zero
        for (a, b), c in self.delta.items():
            if chi[a].is_zero() or other[b].is_zero():
                continue
            total = total + c * chi[a] * other[b]
        return total

    def __call__(self, chi: Functional, other: Functional) -> CycElement:
        return self.product_at_integral(chi, bar(self.B, other))


def pairing(B: HopfData, chi: Functional, other: Functional, Lambda: Optional[Element] = None) -> CycElement:
    return CharacterPairing(B, Lambda)(chi, other)

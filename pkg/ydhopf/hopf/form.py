"""
The bilinear form <a, a'> = rho(S(a) a') on a semisimple YD Hopf algebra.

With B = A (x) H acting on A by (a (x) h) -> a' = a (h -> a'), the form
satisfies
  <h -> a, a'> = <a, S_H(h) -> a'>
  a(-1) <a(0), a'> = S_H(a'(-1)) <a, a'(0)>
  <(a (x) h) -> a', a''> = <a', S_B(a (x) h) -> a''>
and is nondegenerate, so A* is isomorphic to A as a B-module.
"""

from itertools import product
from typing import List, Sequence

from loguru import logger

from ..algebra.cyclonum import CycElement
from ..algebra.linalg import rank
from ..utils.report import CheckResult, VerificationReport
from .integrals import evaluate
from .structure import Element, HopfData, add_into, basis
from .verify import scan
from .yd import YDStructure


class BilinearForm:
    """Gram table of <e_i, e_j> plus bilinear evaluation."""

    def __init__(self, A: HopfData, rho: Sequence[CycElement]):
        self.A = A
        self.rho = list(rho)
        field = A.field
        self.table: List[List[CycElement]] = [
            [evaluate(self.rho, A.mul(A.S(basis(i, field)), basis(j, field)), field) for j in range(A.dim)]
            for i in range(A.dim)
        ]

    def __call__(self, x: Element, y: Element) -> CycElement:
        total = self.A.field.zero
        for i, u in x.items():
            row = self.table[i]
            for j, v in y.items():
                if not row[j].is_zero():
                    total = total + u * v * row[j]
        return total

    def rank(self) -> int:
        rows = [{j: v for j, v in enumerate(row) if not v.is_zero()} for row in self.table]
        return rank(rows, self.A.field)

    def is_nondegenerate(self) -> bool:
        return self.rank() == self.A.dim


def yd_bilinear_form(A: HopfData, rho: Sequence[CycElement]) -> BilinearForm:
    form = BilinearForm(A, rho)
    logger.debug(f"Bilinear form on {A.name}: rank {form.rank()} of {A.dim}")
    return form


def verify_form(form: BilinearForm, yds: YDStructure) -> VerificationReport:
    """All three module identities exhaustively over basis tuples, plus nondegeneracy."""
    A, H = form.A, yds.hopf
    field = A.field
    report = VerificationReport(f"bilinear form on {A.name}")
    ad, hd = A.dim, H.dim

    def e(i: int) -> Element:
        return basis(i, field)

    def action_adjoint(h: int, i: int, j: int) -> bool:
        left = form(yds.act_basis(h, i), e(j))
        right = form(e(i), yds.act(H.S(basis(h, H.field)), e(j)))
        return left == right

    def coaction_adjoint(i: int, j: int) -> bool:
        left: Element = {}
        for (h, k), c in yds.coaction[i].items():
            add_into(left, c * form.table[k][j], {h: H.field.one})
        right: Element = {}
        for (h, l), c in yds.coaction[j].items():
            add_into(right, c * form.table[i][l], H.S(basis(h, H.field)))
        return left == right

    def biproduct_adjoint(a: int, h: int, i: int, j: int) -> bool:
        moved = A.mul(e(a), yds.act_basis(h, i))
        left = form(moved, e(j))
        # S_B(a (x) h) -> a'' = S_H(a(-1) h) -> (S_A(a(0)) a'')
        image: Element = {}
        for (x, k), c in yds.coaction[a].items():
            hk = H.S(H.mul(basis(x, H.field), basis(h, H.field)))
            add_into(image, c, yds.act(hk, A.mul(A.S(e(k)), e(j))))
        return left == form(e(i), image)

    report.add(scan("<h -> a, a'> = <a, S(h) -> a'>", list(product(range(hd), range(ad), range(ad))), action_adjoint))
    report.add(scan("coaction adjointness", list(product(range(ad), range(ad))), coaction_adjoint))
    report.add(scan("biproduct adjointness", list(product(range(ad), range(hd), range(ad), range(ad))), biproduct_adjoint))
    r = form.rank()
    report.add(CheckResult("nondegenerate", r == ad, None if r == ad else (r,), 1, 1))
    report.facts["rank"] = r
    return report

"""
Integrals in and on finite-dimensional (braided) Hopf algebras.

By Maschke's theorem eps(Lambda) != 0 certifies semisimplicity and
lam(1) != 0 certifies cosemisimplicity.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..algebra.cyclonum import CycElement, CycField
from ..algebra.linalg import Vector, kernel
from ..errors import ConstructionError
from ..utils.report import CheckResult, VerificationReport
from .structure import Element, HopfData, add_into, basis, scaled
from .verify import scan, single_cases


@dataclass
class IntegralData:
    """Lambda in H with h Lambda = eps(h) Lambda = Lambda h, and lam on H."""

    Lambda: Element
    lam: List[CycElement]
    g: Optional[Element] = None
    rho: Optional[List[CycElement]] = None


def evaluate(functional: Sequence[CycElement], x: Element, field: CycField) -> CycElement:
    total = field.zero
    for i, c in x.items():
        v = functional[i]
        if not v.is_zero():
            total = total + c * v
    return total


def _right_slot(H: HopfData, functional: Sequence[CycElement], i: int) -> Element:
    """(id (x) f) Delta(e_i)."""
    out: Element = {}
    for (a, b), c in H.coalgebra.comult[i].items():
        if not functional[b].is_zero():
            add_into(out, c * functional[b], {a: H.field.one})
    return out


def _left_slot(H: HopfData, functional: Sequence[CycElement], i: int) -> Element:
    """(f (x) id) Delta(e_i)."""
    out: Element = {}
    for (a, b), c in H.coalgebra.comult[i].items():
        if not functional[a].is_zero():
            add_into(out, c * functional[a], {b: H.field.one})
    return out


def integral_verify(H: HopfData, data: IntegralData) -> VerificationReport:
    report = VerificationReport(f"integrals of {H.name}")
    field = H.field
    Lam = data.Lambda

    def left_integral(i: int) -> bool:
        return H.mul(basis(i, field), Lam) == scaled(Lam, H.coalgebra.counit[i])

    def right_integral(i: int) -> bool:
        return H.mul(Lam, basis(i, field)) == scaled(Lam, H.coalgebra.counit[i])

    report.add(scan("Lambda left integral", single_cases(H.dim), left_integral))
    report.add(scan("Lambda right integral", single_cases(H.dim), right_integral))
    report.add(CheckResult("Lambda nonzero", bool(Lam), None if Lam else (), 1, 1))

    lam = data.lam
    g = data.g if data.g is not None else H.one

    def lam_left(i: int) -> bool:
        return _right_slot(H, lam, i) == scaled(H.one, lam[i])

    def lam_right(i: int) -> bool:
        return _left_slot(H, lam, i) == scaled(g, lam[i])

    report.add(scan("lam integral (id x lam)", single_cases(H.dim), lam_left))
    report.add(scan("lam integral (lam x id)", single_cases(H.dim), lam_right))

    if data.rho is not None:
        rho = data.rho

        def rho_right(i: int) -> bool:
            return _left_slot(H, rho, i) == scaled(H.one, rho[i])

        report.add(scan("rho right integral", single_cases(H.dim), rho_right))

    report.facts["eps_Lambda"] = H.eps(Lam)
    report.facts["lam_one"] = evaluate(lam, H.one, field)
    report.facts["semisimple"] = not H.eps(Lam).is_zero()
    report.facts["cosemisimple"] = not evaluate(lam, H.one, field).is_zero()
    logger.info(f"Integrals of {H.name}: eps(Lambda) = {report.facts['eps_Lambda']}, lam(1) = {report.facts['lam_one']}")
    return report


def _normalized(vector: Vector) -> Vector:
    first = vector[min(vector)]
    inv = first.inverse()
    return {k: v * inv for k, v in vector.items()}


def find_integral(H: HopfData) -> IntegralData:
    """Two-sided integrals in and on H, each scaled to coefficient 1 at its lowest basis index."""
    field = H.field
    one = field.one
    n = H.dim

    # h Lambda - eps(h) Lambda and Lambda h - eps(h) Lambda, coordinate k, as forms in Lambda
    rows: Dict[Tuple[str, int, int], Vector] = {}
    for (i, j), prod in H.algebra.mult.items():
        for k, c in prod.items():
            add_into(rows.setdefault(("l", i, k), {}), c, {j: one})
            add_into(rows.setdefault(("r", j, k), {}), c, {i: one})
    for i in range(n):
        eps = H.coalgebra.counit[i]
        if eps.is_zero():
            continue
        for k in range(n):
            add_into(rows.setdefault(("l", i, k), {}), -eps, {k: one})
            add_into(rows.setdefault(("r", i, k), {}), -eps, {k: one})
    Lambdas = kernel([row for row in rows.values() if row], n, field)
    if not Lambdas:
        raise NoIntegral(f"{H.name} has no two-sided integral")

    # (id x lam) Delta(e_i) - lam_i 1 and (lam x id) Delta(e_i) - lam_i 1, coordinate k
    frows: Dict[Tuple[str, int, int], Vector] = {}
    for i, delta in enumerate(H.coalgebra.comult):
        for (a, b), c in delta.items():
            add_into(frows.setdefault(("l", i, a), {}), c, {b: one})
            add_into(frows.setdefault(("r", i, b), {}), c, {a: one})
        for k, u in H.one.items():
            add_into(frows.setdefault(("l", i, k), {}), -u, {i: one})
            add_into(frows.setdefault(("r", i, k), {}), -u, {i: one})
    functionals = kernel([row for row in frows.values() if row], n, field)
    if not functionals:
        raise NoIntegral(f"{H.name} has no two-sided integral on it")

    Lam = _normalized(Lambdas[0])
    lam_vec = _normalized(functionals[0])
    lam = [lam_vec.get(k, field.zero) for k in range(n)]
    logger.debug(f"Integral spaces of {H.name}: {len(Lambdas)} in, {len(functionals)} on")
    return IntegralData(Lambda=dict(Lam), lam=lam, g=None, rho=list(lam))


class NoIntegral(ConstructionError):
    """No nonzero two-sided integral exists."""
    pass

"""
Shared data for the explicit construction families.

ConstructionData carries the ring, group and cohomological data of an
A_G(alpha, beta, q); BasisScheme fixes the flat index of every named basis;
ClosedFormReport records where a printed closed form disagrees with the
definitional construction it is compared against.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, List, Optional, Tuple

from loguru import logger

from ..algebra.cohom import Cocycle1, Cocycle2, GModule, ring_module, verify_cocycle1, verify_cocycle2
from ..algebra.cyclonum import CycElement, CycField
from ..algebra.finitestruct import AbelianCharacter, FiniteGroup, FiniteRing, NotACocycle, UnitHom
from ..errors import ConstructionError, InputError
from ..hopf.structure import HopfData
from ..hopf.yd import YDData, YDStructure
from ..utils.report import CheckResult, VerificationReport


@dataclass
class ConstructionData:
    """(R, G, nu, alpha, beta, q) together with the characters chi and eta of (R, +)."""

    R: FiniteRing
    G: FiniteGroup
    nu: UnitHom
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]
    q: Cocycle2
    chi: AbelianCharacter
    eta: AbelianCharacter
    name: str = "A_G"
    _module: Optional[GModule] = field(default=None, repr=False)

    @property
    def field(self) -> CycField:
        return self.chi.field

    @property
    def module(self) -> GModule:
        """The G-module _G R, s.u = nu(s) u."""
        if self._module is None:
            self._module = ring_module(self.G, self.R, self.nu)
        return self._module

    @property
    def scheme(self) -> "BasisScheme":
        return BasisScheme(self.R.order, self.G.order)

    # scalar helpers

    def X(self, r: int) -> CycElement:
        return self.chi(r)

    def E(self, r: int) -> CycElement:
        return self.eta(r)

    def nu_inv(self, s: int) -> int:
        return self.nu(self.G.inv(s))

    def verify(self) -> VerificationReport:
        report = VerificationReport(f"data of {self.name}")
        R, G = self.R, self.G
        report.add(_renamed(self.nu.verify(), "nu"))
        module = self.module
        for label, values in (("alpha", self.alpha), ("beta", self.beta)):
            if len(values) != G.order or any(not 0 <= v < R.order for v in values):
                report.add(CheckResult.failed(label, (), detail="wrong length or values outside R"))
                continue
            report.add(_renamed(verify_cocycle1(Cocycle1(module, tuple(values))), label))
        report.add(_renamed(verify_cocycle2(Cocycle2(module, self.q.table, normalized=True)), "q"))
        report.add(_renamed(self.chi.verify(), "chi"))
        report.add(_renamed(self.eta.verify(), "eta"))
        report.add(self.chi_condition())
        return report

    def chi_condition(self) -> CheckResult:
        """chi(uvw) = chi(vuw) for all u, v, w."""
        R = self.R
        n = R.order
        for u in R.elements:
            for v in R.elements:
                uv, vu = R.mul(u, v), R.mul(v, u)
                if uv == vu:
                    continue
                for w in R.elements:
                    if self.chi(R.mul(uv, w)) != self.chi(R.mul(vu, w)):
                        return CheckResult.failed("chi condition", (u, v, w), total=n**3)
        return CheckResult.passed("chi condition", checked=n**3)

    def main_assumption(self) -> CheckResult:
        """chi(u alpha(s) beta(t)) = chi(u beta(s) alpha(t)) for all u, s, t."""
        R, G = self.R, self.G
        total = R.order * G.order**2
        for s in G.elements:
            for t in G.elements:
                ab = R.mul(self.alpha[s], self.beta[t])
                ba = R.mul(self.beta[s], self.alpha[t])
                if ab == ba:
                    continue
                for u in R.elements:
                    if self.chi(R.mul(u, ab)) != self.chi(R.mul(u, ba)):
                        return CheckResult.failed("main assumption", (u, s, t), total=total)
        return CheckResult.passed("main assumption", checked=total)

    def check(self) -> None:
        """Raise on the first violated condition."""
        report = self.verify()
        for result in report.failures:
            if result.name == "chi condition":
                raise ChiConditionViolation(f"{self.name}: chi(uvw) != chi(vuw) at (u, v, w) = {result.witness}")
            if result.name.startswith(("alpha", "beta", "q")):
                raise NotACocycle(f"{self.name}: {result.name} fails at {result.witness}")
            raise InputError(f"{self.name}: {result.name} fails at {result.witness} {result.detail}".rstrip())
        logger.debug(f"Construction data of {self.name} verified")

    def require_main_assumption(self) -> None:
        result = self.main_assumption()
        if not result:
            raise MainAssumptionViolation(
                f"{self.name}: chi(u alpha(s) beta(t)) != chi(u beta(s) alpha(t)) at (u, s, t) = {result.witness}"
            )


def _renamed(result: CheckResult, name: str) -> CheckResult:
    result.name = f"{name} {result.name}" if result.name != name else name
    return result


@dataclass(frozen=True)
class BasisScheme:
    """Flat indices for the named bases built from R and G.

    e_u x_s and c_u d_s sit at u*|G| + s; b_uv(s) at (u*|G| + s)*|R| + v;
    z_uvw(s, t) at ((u*|G| + s)*|R| + v)*|R||G| + w*|G| + t; y_vw(s) at
    (s*|R| + v)*|R| + w.
    """

    r: int
    g: int

    @property
    def dim_A(self) -> int:
        return self.r * self.g

    @property
    def dim_B(self) -> int:
        return self.r * self.r * self.g

    @property
    def dim_Z(self) -> int:
        return self.r**3 * self.g**2

    @property
    def dim_T(self) -> int:
        return self.g * self.r * self.r

    def a(self, u: int, s: int) -> int:
        return u * self.g + s

    def a_split(self, i: int) -> Tuple[int, int]:
        return divmod(i, self.g)

    def b(self, u: int, v: int, s: int) -> int:
        return self.a(u, s) * self.r + v

    def b_split(self, i: int) -> Tuple[int, int, int]:
        a, v = divmod(i, self.r)
        u, s = self.a_split(a)
        return u, v, s

    def z(self, u: int, v: int, w: int, s: int, t: int) -> int:
        return (self.a(u, s) * self.r + v) * self.dim_A + self.a(w, t)

    def z_split(self, i: int) -> Tuple[int, int, int, int, int]:
        head, tail = divmod(i, self.dim_A)
        a, v = divmod(head, self.r)
        u, s = self.a_split(a)
        w, t = self.a_split(tail)
        return u, v, w, s, t

    def y(self, s: int, v: int, w: int) -> int:
        return (s * self.r + v) * self.r + w

    def y_split(self, i: int) -> Tuple[int, int, int]:
        head, w = divmod(i, self.r)
        s, v = divmod(head, self.r)
        return s, v, w

    def a_labels(self, G: FiniteGroup, prefix: Tuple[str, str] = ("e", "x")) -> List[str]:
        e, x = prefix
        return [f"{e}{u}{x}{G.labels[s]}" for u in range(self.r) for s in range(self.g)]

    def b_labels(self, G: FiniteGroup) -> List[str]:
        return [f"b{u}{v}({G.labels[s]})" for u in range(self.r) for s in range(self.g) for v in range(self.r)]

    def z_labels(self, G: FiniteGroup) -> List[str]:
        return [
            f"z{u}{v}{w}({G.labels[s]},{G.labels[t]})"
            for u in range(self.r) for s in range(self.g) for v in range(self.r)
            for w in range(self.r) for t in range(self.g)
        ]


@dataclass
class ClosedFormReport:
    """Coordinates where a printed closed form differs from the definitional value."""

    name: str
    mismatches: List[Tuple[Any, ...]] = field(default_factory=list)
    checked: int = 0
    detail: str = ""

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __bool__(self) -> bool:
        return self.ok

    def to_check(self) -> CheckResult:
        if self.ok:
            return CheckResult.passed(f"closed form {self.name}", checked=self.checked, detail=self.detail)
        return CheckResult.failed(
            f"closed form {self.name}",
            self.mismatches[0],
            checked=self.checked,
            total=self.checked,
            detail=f"{len(self.mismatches)} mismatching coordinates",
        )


def compare_closed_form(
    name: str,
    keys: Iterable[Any],
    definitional: Callable[[Any], Any],
    claimed: Callable[[Any], Any],
    limit: int = 1000,
) -> ClosedFormReport:
    """Evaluate both sides on every key and record the keys where they differ."""
    report = ClosedFormReport(name)
    for key in keys:
        report.checked += 1
        if definitional(key) != claimed(key):
            if len(report.mismatches) < limit:
                report.mismatches.append(key if isinstance(key, tuple) else (key,))
    if report.ok:
        logger.debug(f"Closed form {name} agrees on {report.checked} inputs")
    else:
        logger.warning(f"Closed form {name} differs from the definitional value on {len(report.mismatches)} of {report.checked} inputs, first at {report.mismatches[0]}")
    return report


@dataclass
class YDHopfAlgebra:
    """A built YD Hopf algebra with everything the builders know about it."""

    hopf: HopfData
    yds: YDStructure
    yd: Optional[YDData] = None
    data: Optional[ConstructionData] = None
    scheme: Optional[BasisScheme] = None
    closed_forms: List[ClosedFormReport] = field(default_factory=list)

    @property
    def name(self) -> str:
        return self.hopf.name

    @property
    def dim(self) -> int:
        return self.hopf.dim


class ChiConditionViolation(ConstructionError):
    """chi does not satisfy chi(uvw) = chi(vuw)."""
    pass


class MainAssumptionViolation(ConstructionError):
    """chi(u alpha(s) beta(t)) and chi(u beta(s) alpha(t)) differ somewhere."""
    pass

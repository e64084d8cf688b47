"""
Simple modules of the Radford biproduct B = A (x) K[Z_p] for commutative A.

A purely unstable orbit O = {f, phi f, ..., phi^(p-1) f} gives the induced
module on W^p, W = Af, with

    (a (x) c_j) v_k = eta_f(c_-(k+j) -> a) v_(k+j)

and character eta_O (x) lambda_H. A stable orbit {f} gives p one-dimensional
modules a (x) c_i -> eta_f(a u_f(c_i)) zeta^(ki); Af is one-dimensional, so
C acts trivially on it and the lift u_f is constantly f.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..algebra.cyclonum import CycElement, CycField
from ..hopf.center import center
from ..hopf.integrals import evaluate
from ..hopf.structure import Element, HopfData, LinearMap, basis
from ..hopf.verify import pair_cases, scan
from ..hopf.yd import YDStructure
from ..utils.report import CheckResult, VerificationReport
from ..errors import InputError
from .characters import counit_twist, convolve
from .orbits import CliffordData


@dataclass
class RepData:
    """A simple B-module by its representation matrices on basis elements of B."""

    dim: int
    matrices: List[LinearMap]
    character: List[CycElement]
    orbit: int
    twist: Optional[int] = None
    kappa: Tuple[int, ...] = ()
    kappa_star: Tuple[int, ...] = ()
    name: str = "V"

    @property
    def stable(self) -> bool:
        return self.twist is not None

    @property
    def field(self) -> CycField:
        return self.matrices[0].field

    def rho(self, x: Element) -> LinearMap:
        F = self.field
        cols: List[Element] = [{} for _ in range(self.dim)]
        for i, c in x.items():
            for j, col in enumerate(self.matrices[i].columns):
                for k, v in col.items():
                    new = cols[j].get(k, F.zero) + c * v
                    if new.is_zero():
                        cols[j].pop(k, None)
                    else:
                        cols[j][k] = new
        return LinearMap(F, cols)

    def verify(self, B: HopfData) -> VerificationReport:
        """rho(xy) = rho(x) rho(y) on basis pairs, rho(1) = id and chi(1) = dim."""
        report = VerificationReport(f"representation {self.name}")

        def multiplicative(i: int, j: int) -> bool:
            return self.rho(B.algebra.basis_product(i, j)) == self.matrices[i].compose(self.matrices[j])

        report.add(scan("rho(xy) = rho(x)rho(y)", pair_cases(B.dim), multiplicative))
        unital = self.rho(B.one).is_identity()
        report.add(CheckResult("rho(1) = id", unital, None if unital else (), 1, 1))
        degree = evaluate(self.character, B.one, self.field) == self.dim
        report.add(CheckResult("chi(1) = dim", degree, None if degree else (), 1, 1))
        return report

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "dim": self.dim,
            "orbit": self.orbit,
            "stable": self.stable,
            "twist": self.twist,
            "kappa": list(self.kappa),
            "kappa_star": list(self.kappa_star),
        }


def trace(f: LinearMap) -> CycElement:
    total = f.field.zero
    for j, col in enumerate(f.columns):
        v = col.get(j)
        if v is not None:
            total = total + v
    return total


def block_character(A: HopfData, f: Element) -> List[CycElement]:
    """eta_f with a f = eta_f(a) f, for f a primitive idempotent of commutative A."""
    F = A.field
    lead = min(f)
    eta = []
    for a in range(A.dim):
        image = A.mul(basis(a, F), f)
        eta.append(image.get(lead, F.zero) / f[lead])
    return eta


def _matrix(F: CycField, dim: int, images: List[Tuple[int, int, CycElement]]) -> LinearMap:
    cols: List[Element] = [{} for _ in range(dim)]
    for k, target, value in images:
        if not value.is_zero():
            cols[k][target] = value
    return LinearMap(F, cols)


def induced_module(
    A: HopfData, yds: YDStructure, B: HopfData, data: CliffordData, orbit: int,
) -> RepData:
    """The module W^p induced from W = Af, f the first idempotent of a purely unstable orbit."""
    F = A.field
    C = yds.group
    p, m = data.p, yds.hopf.dim
    f = data.E[data.orbits[orbit][0]]
    eta = block_character(A, f)
    # eta_f(c_h -> a) for every h and basis element a
    moved = [[evaluate(eta, yds.act_basis(h, a), F) for a in range(A.dim)] for h in C.elements]
    matrices = []
    for a in range(A.dim):
        for j in C.elements:
            images = []
            for k in range(p):
                target = C.mul(k, j)
                images.append((k, target, moved[C.inv(target)][a]))
            matrices.append(_matrix(F, p, images))
    character = [trace(x) for x in matrices]
    return RepData(p, matrices, character, orbit, name=f"Ind(O{orbit})")


def stable_modules(A: HopfData, yds: YDStructure, data: CliffordData, orbit: int) -> Tuple[List[RepData], CheckResult]:
    """The p twists a (x) c_i -> eta_f(a u_f(c_i)) zeta^(ki) of a stable orbit {f}, with the lift check."""
    F = A.field
    C = yds.group
    f = data.E[data.orbits[orbit][0]]
    eta = block_character(A, f)
    u = [f for _ in C.elements]
    # c -> a = u(c) a u(c)^-1 on Af = Kf, with u(c) = f its own inverse there
    lift = all(yds.act(basis(c, F), f) == A.mul(A.mul(u[c], f), u[c]) for c in C.elements)
    homomorphism = all(A.mul(u[c], u[d]) == u[C.mul(c, d)] for c in C.elements for d in C.elements)
    check = CheckResult(
        f"u lifts the action on orbit {orbit}", lift and homomorphism, None if lift and homomorphism else (orbit,), 1, 1,
    )
    modules = []
    for k in range(data.p):
        matrices = []
        for a in range(A.dim):
            au = evaluate(eta, A.mul(basis(a, F), u[0]), F)
            for i in C.elements:
                matrices.append(_matrix(F, 1, [(0, 0, au * data.zeta ** (k * i))]))
        character = [trace(x) for x in matrices]
        modules.append(RepData(1, matrices, character, orbit, twist=k, name=f"L(O{orbit},{k})"))
    return modules, check


def restriction_multiplicities(V: RepData, data: CliffordData, m: int, identity: int = 0) -> Dict[int, int]:
    """e -> rank rho(e (x) 1), the multiplicity of Ae in the restriction of V to A."""
    out: Dict[int, int] = {}
    for i, e in enumerate(data.E):
        value = trace(V.rho({a * m + identity: c for a, c in e.items()}))
        if not value.is_zero():
            out[i] = int(value.to_fraction())
    return out


def simple_modules_of_biproduct(
    A: HopfData, yds: YDStructure, B: HopfData, data: CliffordData, verify: bool = True,
) -> Tuple[List[RepData], VerificationReport]:
    """Every simple B-module, one per stable twist and one per purely unstable orbit, with kappa and kappa*."""
    C = yds.group
    m = yds.hopf.dim
    if B.dim != A.dim * m:
        raise InputError(f"{B.name} is not A (x) H for A = {A.name}")
    report = VerificationReport(f"simple modules of {B.name}")
    modules: List[RepData] = []
    for orbit in range(len(data.orbits)):
        if data.is_stable(orbit):
            twists, lift = stable_modules(A, yds, data, orbit)
            report.add(lift)
            modules.extend(twists)
        else:
            modules.append(induced_module(A, yds, B, data, orbit))

    twists = [counit_twist(A, yds, k, data.zeta) for k in range(data.p)]
    for index, V in enumerate(modules):
        V.kappa = tuple(sorted(restriction_multiplicities(V, data, m, C.identity)))
        V.kappa_star = tuple(k for k in range(data.p) if convolve(B, V.character, twists[k]) == V.character)
        data.kappa[index] = data.orbit_of(V.kappa[0]) if V.kappa else -1
        data.kappa_star[index] = V.kappa_star
        if verify:
            report.merge(V.verify(B), prefix=f"{V.name}: ")

    dims = [V.dim for V in modules]
    squares = sum(d * d for d in dims)
    report.add(CheckResult("sum of dim^2 = dim B", squares == B.dim, None if squares == B.dim else (squares,), 1, 1))
    z = len(center(B.algebra))
    report.add(CheckResult("number of simples = dim Z(B)", z == len(modules), None if z == len(modules) else (z, len(modules)), 1, 1))
    odd = [d for d in dims if d not in (1, data.p)]
    report.add(CheckResult("simple dimensions are 1 or p", not odd, (odd[0],) if odd else None, len(dims), len(dims)))
    distinct = len({tuple(V.character) for V in modules}) == len(modules)
    report.add(CheckResult("characters pairwise distinct", distinct, None if distinct else (), 1, 1))
    report.facts["dimensions"] = dims
    logger.info(f"{B.name}: {len(modules)} simple modules of dimensions {sorted(dims)}")
    return modules, report

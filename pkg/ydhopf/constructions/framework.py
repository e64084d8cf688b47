"""
The general framework: A = K^P (x) K[G] as a YD Hopf algebra over K[C].

G acts on the finite group P; z_s(u) lies in the center of C, gamma_s(u) is a
character of C and sigma_u(s, t) a scalar. With these data

    (e_u x_s)(e_v x_t) = delta_{u, s.v} sigma_u(s, t) e_u x_st
    Delta(e_u x_s)     = sum_{u'} e_u' x_s (x) e_{u'^-1 u} x_s
    c_b -> e_u x_s     = gamma_s(u)(b) e_u x_s
    delta(e_u x_s)     = c_{z_s(u)} (x) e_u x_s
    S(e_u x_s)         = sigma_{u^-1}(s, s^-1)^-1 e_{s^-1.u^-1} x_{s^-1}
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger
from sympy import isprime

from ..algebra.cohom import GModule
from ..algebra.cyclonum import CycElement, CycField
from ..algebra.finitestruct import FiniteGroup, NotACocycle
from ..errors import ConstructionError
from ..hopf.structure import Element, HopfData, LinearMap, SCAlgebra, SCCoalgebra, Tensor
from ..hopf.yd import YDData, YDStructure
from ..utils.report import CheckResult, VerificationReport
from .base import YDHopfAlgebra


@dataclass
class FrameworkData:
    """Tabulated data: action[s][u] = s.u, z[s][u] in Z(C), gamma[s][u][b], sigma[u][s][t]."""

    C: FiniteGroup
    G: FiniteGroup
    P: FiniteGroup
    action: Sequence[Sequence[int]]
    z: Sequence[Sequence[int]]
    gamma: Sequence[Sequence[Sequence[CycElement]]]
    sigma: Sequence[Sequence[Sequence[CycElement]]]
    field: CycField
    name: str = "A"

    def act(self, s: int, u: int) -> int:
        return self.action[s][u]

    def act_inv(self, s: int, u: int) -> int:
        """s^-1 . u."""
        return self.action[self.G.inv(s)][u]

    def verify(self) -> VerificationReport:
        report = VerificationReport(f"framework data of {self.name}")
        C, G, P = self.C, self.G, self.P
        one = self.field.one

        report.add(GModule(G, P, self.action, name=P.name).verify())

        center = set(C.center())
        report.add(_first(
            "z central homomorphism",
            ((s, u, v) for s in G.elements for u in P.elements for v in P.elements),
            lambda s, u, v: self.z[s][u] in center and self.z[s][P.mul(u, v)] == C.mul(self.z[s][u], self.z[s][v]),
        ))
        report.add(_first(
            "z cocycle",
            ((s, t, u) for s in G.elements for t in G.elements for u in P.elements),
            lambda s, t, u: self.z[G.mul(s, t)][u] == C.mul(self.z[s][u], self.z[t][self.act_inv(s, u)]),
        ))

        def gamma_hom(s: int, u: int, v: int, b: int, c: int) -> bool:
            g = self.gamma[s]
            return (
                g[u][C.mul(b, c)] == g[u][b] * g[u][c]
                and g[P.mul(u, v)][b] == g[u][b] * g[v][b]
            )

        report.add(_first(
            "gamma bicharacter",
            ((s, u, v, b, c) for s in G.elements for u in P.elements for v in P.elements
             for b in C.elements for c in C.elements),
            gamma_hom,
        ))
        report.add(_first(
            "gamma cocycle",
            ((s, t, u, b) for s in G.elements for t in G.elements for u in P.elements for b in C.elements),
            lambda s, t, u, b: self.gamma[G.mul(s, t)][u][b] == self.gamma[s][u][b] * self.gamma[t][self.act_inv(s, u)][b],
        ))

        sig = self.sigma
        e = G.identity
        report.add(_first(
            "sigma normalized",
            ((u, s) for u in P.elements for s in G.elements),
            lambda u, s: sig[u][e][s] == one and sig[u][s][e] == one,
        ))
        report.add(_first(
            "sigma cocycle",
            ((u, s, t, r) for u in P.elements for s in G.elements for t in G.elements for r in G.elements),
            lambda u, s, t, r: (
                sig[self.act_inv(s, u)][t][r] * sig[u][s][G.mul(t, r)]
                == sig[u][G.mul(s, t)][r] * sig[u][s][t]
            ),
        ))
        report.add(self.compatibility())
        return report

    def compatibility(self) -> CheckResult:
        """sigma_{uv}(s, t) = gamma_t(s^-1.u)(z_s(v)) sigma_u(s, t) sigma_v(s, t)."""
        G, P = self.G, self.P
        sig = self.sigma
        return _first(
            "compatibility",
            ((u, v, s, t) for u in P.elements for v in P.elements for s in G.elements for t in G.elements),
            lambda u, v, s, t: (
                sig[P.mul(u, v)][s][t]
                == self.gamma[t][self.act_inv(s, u)][self.z[s][v]] * sig[u][s][t] * sig[v][s][t]
            ),
        )

    def check(self) -> None:
        report = self.verify()
        for result in report.failures:
            if result.name == "compatibility":
                raise CompatibilityViolation(
                    f"{self.name}: compatibility condition fails at (u, v, s, t) = {result.witness}", result.witness
                )
            raise NotACocycle(f"{self.name}: {result.name} fails at {result.witness}")


def _first(name: str, cases, predicate) -> CheckResult:
    checked = 0
    for case in cases:
        checked += 1
        if not predicate(*case):
            return CheckResult.failed(name, case, checked=checked)
    return CheckResult.passed(name, checked=checked)


def build_framework(fw: FrameworkData, check: bool = True) -> YDHopfAlgebra:
    """The YD Hopf algebra K^P (x) K[G] over K[C]; e_u x_s at index u*|G| + s."""
    if check:
        fw.check()
    C, G, P = fw.C, fw.G, fw.P
    F = fw.field
    one = F.one
    g = G.order
    dim = P.order * g

    def idx(u: int, s: int) -> int:
        return u * g + s

    mult: Dict[Tuple[int, int], Element] = {}
    for u in P.elements:
        for s in G.elements:
            for t in G.elements:
                v = fw.act_inv(s, u)
                mult[(idx(u, s), idx(v, t))] = {idx(u, G.mul(s, t)): fw.sigma[u][s][t]}
    unit = {idx(u, G.identity): one for u in P.elements}

    comult: List[Tensor] = []
    counit: List[CycElement] = []
    for u in P.elements:
        for s in G.elements:
            comult.append({(idx(w, s), idx(P.mul(P.inv(w), u), s)): one for w in P.elements})
            counit.append(one if u == P.identity else F.zero)

    images = []
    for u in P.elements:
        for s in G.elements:
            si = G.inv(s)
            ui = P.inv(u)
            images.append((idx(fw.act(si, ui), si), fw.sigma[ui][s][si].inverse()))
    antipode = LinearMap.from_monomial(F, images)

    labels = [f"e{P.labels[u]}x{G.labels[s]}" for u in P.elements for s in G.elements]
    hopf = HopfData(
        SCAlgebra(dim, F, mult, unit),
        SCCoalgebra(dim, F, comult, counit),
        antipode,
        name=fw.name,
        labels=labels,
    )

    grades = [fw.z[s][u] for u in P.elements for s in G.elements]
    yds = YDStructure.diagonal(C, F, grades, lambda b, i: fw.gamma[i % g][i // g][b])
    yd = framework_yd_data(fw) if _is_cyclic_prime(C) else None
    logger.info(f"Built {fw.name} from framework data (dim {dim}, over K[{C.name}])")
    return YDHopfAlgebra(hopf, yds, yd)


def _is_cyclic_prime(C: FiniteGroup) -> bool:
    return C.modulus is not None and C.modulus == C.order and isprime(C.order)


def framework_yd_data(fw: FrameworkData) -> Optional[YDData]:
    """phi = action of c_1 and psi(e_u x_s) = zeta^{z_s(u)} e_u x_s, for C = Z_p."""
    C, G, P = fw.C, fw.G, fw.P
    F = fw.field
    p = C.order
    zeta = F.root_of_order(p)
    phi = LinearMap(F, [{u * G.order + s: fw.gamma[s][u][1]} for u in P.elements for s in G.elements])
    psi = LinearMap(F, [{u * G.order + s: zeta ** fw.z[s][u]} for u in P.elements for s in G.elements])
    return YDData(phi, psi, p, zeta)


class CompatibilityViolation(ConstructionError):
    """sigma, gamma and z violate the compatibility condition."""

    def __init__(self, message: str, witness: Optional[Tuple[int, ...]] = None):
        super().__init__(message)
        self.witness = witness

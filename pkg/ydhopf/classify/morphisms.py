"""
Morphisms between members of the A_G family.

A triple (f, x, w) with f: G -> G', x a unit of R and w: G -> R a cochain with
w(1) = 0 induces

    f_A(e_u x_s) = eta(u x w(s)) e_{ux} x'_{f(s)}

whenever nu = nu' f, alpha = x alpha' f, beta = x beta' f and
q(s,t) = x (q'(f(s), f(t)) + nu(s) w(t) - w(st) + w(s)).
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from loguru import logger

from ..algebra.cohom import cohomologous2
from ..algebra.cyclonum import CycElement
from ..algebra.finitestruct import GroupHom
from ..constructions.base import ConstructionData, YDHopfAlgebra
from ..errors import ConstructionError
from ..hopf.structure import LinearMap, basis
from ..hopf.verify import apply_tensor, is_hopf_map, scan, single_cases
from ..hopf.yd import YDStructure
from ..utils.report import CheckResult, VerificationReport


@dataclass(frozen=True)
class MorphismData:
    """The triple (f, x, w)."""

    f: GroupHom
    x: int
    w: Tuple[int, ...]

    def check(self, source: ConstructionData, target: ConstructionData) -> None:
        """Raise NotAMorphism naming the first condition that fails."""
        f, x, w = self.f, self.x, self.w
        R, G = source.R, source.G
        if f.source.order != G.order or f.target.order != target.G.order:
            raise NotAMorphism("f does not map G to G'", "shape")
        if not f.verify():
            raise NotAMorphism("f is not a group homomorphism", "homomorphism")
        if x not in R.unit_set:
            raise NotAMorphism(f"x = {x} is not a unit", "unit")
        for s in G.elements:
            image = target.nu(f(s))
            if R.mul(x, image) != R.mul(image, x):
                raise NotAMorphism(f"x does not commute with nu'(f({s}))", "centralizer")
        if len(w) != G.order or w[G.identity] != R.zero:
            raise NotAMorphism("w must be a cochain with w(1) = 0", "cochain")

        for s in G.elements:
            fs = f(s)
            if source.nu(s) != target.nu(fs):
                raise NotAMorphism(f"nu(s) != nu'(f(s)) at s = {s}", "nu")
            if source.alpha[s] != R.mul(x, target.alpha[fs]):
                raise NotAMorphism(f"alpha(s) != x alpha'(f(s)) at s = {s}", "alpha")
            if source.beta[s] != R.mul(x, target.beta[fs]):
                raise NotAMorphism(f"beta(s) != x beta'(f(s)) at s = {s}", "beta")
        for s in G.elements:
            for t in G.elements:
                inner = R.sum(
                    target.q(f(s), f(t)),
                    R.mul(source.nu(s), w[t]),
                    R.neg(w[G.mul(s, t)]),
                    w[s],
                )
                if source.q(s, t) != R.mul(x, inner):
                    raise NotAMorphism(f"q condition fails at (s, t) = {(s, t)}", "q")


def identity_morphism(data: ConstructionData) -> MorphismData:
    """(id_G, 1_R, 0)."""
    return MorphismData(GroupHom.identity(data.G), data.R.one, tuple([data.R.zero] * data.G.order))


def compose_morphisms(second: MorphismData, first: MorphismData, data: ConstructionData) -> MorphismData:
    """second o first = (f' f, x x', x'^-1 w + w' f); data is the source of first."""
    R = data.R
    x_inv = R.unit_inverse(second.x)
    w = tuple(
        R.add(R.mul(x_inv, first.w[s]), second.w[first.f(s)])
        for s in first.f.source.elements
    )
    return MorphismData(second.f.compose(first.f), R.mul(first.x, second.x), w)


def cohomologous_morphism(
    source: ConstructionData, target: ConstructionData, search_bound: int = 10**6
) -> Optional[MorphismData]:
    """(id, 1, w) when the two data differ only by a coboundary q = q' + dw."""
    if source.alpha != target.alpha or source.beta != target.beta or source.nu.values != target.nu.values:
        return None
    w = cohomologous2(target.q, source.q, search_bound=search_bound)
    if w is None:
        return None
    return MorphismData(GroupHom.identity(source.G), source.R.one, tuple(w))


def morphism_map(m: MorphismData, source: ConstructionData, target: ConstructionData) -> LinearMap:
    R = source.R
    sc, tc = source.scheme, target.scheme
    images: List[Tuple[int, CycElement]] = [(0, source.field.zero)] * sc.dim_A
    for u in R.elements:
        ux = R.mul(u, m.x)
        for s in source.G.elements:
            coef = source.E(R.prod(u, m.x, m.w[s]))
            images[sc.a(u, s)] = (tc.a(ux, m.f(s)), coef)
    return LinearMap.from_monomial(source.field, images, tc.dim_A)


def morphism_apply(
    m: MorphismData, source: YDHopfAlgebra, target: YDHopfAlgebra
) -> Tuple[LinearMap, VerificationReport]:
    """f_A together with an exhaustive check that it is a morphism of YD Hopf algebras."""
    if source.data is None or target.data is None:
        raise ValueError("morphism_apply needs algebras built by build_AG")
    m.check(source.data, target.data)
    f = morphism_map(m, source.data, target.data)
    report = is_hopf_map(f, source.hopf, target.hopf)
    report.extend(yd_map_checks(f, source.yds, target.yds))
    logger.debug(f"f_A: {source.name} -> {target.name}: {'pass' if report.ok else 'fail'}")
    return f, report


def yd_map_checks(f: LinearMap, source: YDStructure, target: YDStructure) -> List[CheckResult]:
    """H-linearity and H-colinearity of f, on basis vectors of H and the source."""
    F = f.field
    H = source.hopf

    def linear(h: int, i: int) -> bool:
        return f.apply(source.act_basis(h, i)) == target.act(basis(h, F), f.columns[i])

    def colinear(i: int) -> bool:
        identity = LinearMap.identity(H.dim, F)
        return apply_tensor(identity, f, source.coaction[i]) == target.coact(f.columns[i])

    cases = [(h, i) for h in range(H.dim) for i in range(source.dim)]
    return [scan("H-linear", cases, linear), scan("H-colinear", single_cases(source.dim), colinear)]


class NotAMorphism(ConstructionError):
    """(f, x, w) violates one of the morphism conditions."""

    def __init__(self, message: str, condition: str):
        super().__init__(message)
        self.condition = condition

"""
The family A_G(alpha, beta, q) = K^R (x) K[G] over K[R].

build_AG goes through the framework: the z, gamma and sigma below are
tabulated, verified on their own and fed to build_framework. The closed forms

    (e_u x_s)(e_v x_t) = delta_{u nu(s), v} eta(u q(s,t)) chi(u^2 nu(s) beta(s) alpha(t)) e_u x_st
    S(e_u x_s)         = eta(u q(s,s^-1)) chi(u^2 beta(s) alpha(s)) e_{-u nu(s)} x_{s^-1}
    c_b -> e_u x_s     = chi(b u alpha(s))^2 e_u x_s
    delta(e_u x_s)     = c_{u beta(s)} (x) e_u x_s

are then evaluated independently and diffed against the built structure.
"""

from typing import List, Optional, Tuple

from loguru import logger

from ..algebra.cohom import Cocycle2, carry_cocycle, ring_module
from ..algebra.cyclonum import CycField, get_field
from ..algebra.finitestruct import UnitHom, cyclic_group, ring_zn, standard_characters
from ..hopf.integrals import IntegralData, integral_verify
from ..hopf.structure import Element, Tensor
from ..utils.report import VerificationReport
from .base import BasisScheme, ClosedFormReport, ConstructionData, YDHopfAlgebra, compare_closed_form
from .framework import FrameworkData, build_framework


def framework_from_data(data: ConstructionData) -> FrameworkData:
    """P = C = (R, +), s.u = u nu(s^-1), z_s(u) = u beta(s), gamma_s(u)(b) = chi(b u alpha(s))^2,
    sigma_u(s, t) = eta(u q(s,t)) chi(u^2 nu(s) beta(s) alpha(t))."""
    R, G = data.R, data.G
    al, be, nu, q = data.alpha, data.beta, data.nu, data.q
    action = [[R.mul(u, data.nu_inv(s)) for u in R.elements] for s in G.elements]
    z = [[R.mul(u, be[s]) for u in R.elements] for s in G.elements]
    gamma = [
        [[data.X(R.prod(b, u, al[s])) ** 2 for b in R.elements] for u in R.elements]
        for s in G.elements
    ]
    sigma = [
        [
            [data.E(R.mul(u, q(s, t))) * data.X(R.prod(u, u, nu(s), be[s], al[t])) for t in G.elements]
            for s in G.elements
        ]
        for u in R.elements
    ]
    return FrameworkData(
        C=R.additive,
        G=G,
        P=R.additive,
        action=action,
        z=z,
        gamma=gamma,
        sigma=sigma,
        field=data.field,
        name=data.name,
    )


def build_AG(data: ConstructionData, compare: bool = True) -> YDHopfAlgebra:
    """A_G(alpha, beta, q) as a YD Hopf algebra over K[R]."""
    data.check()
    fw = framework_from_data(data)
    built = build_framework(fw, check=True)
    scheme = data.scheme
    built.hopf.labels = scheme.a_labels(data.G)
    built.data = data
    built.scheme = scheme
    if compare:
        built.closed_forms.extend(ag_closed_forms(data, built))
    logger.info(f"Built {data.name} (dim {built.dim})")
    return built


# closed forms

def ag_mult_claim(data: ConstructionData, i: int, j: int) -> Element:
    R, G = data.R, data.G
    sc = data.scheme
    u, s = sc.a_split(i)
    v, t = sc.a_split(j)
    if R.mul(u, data.nu(s)) != v:
        return {}
    coef = data.E(R.mul(u, data.q(s, t))) * data.X(R.prod(u, u, data.nu(s), data.beta[s], data.alpha[t]))
    return {sc.a(u, G.mul(s, t)): coef}


def ag_antipode_claim(data: ConstructionData, i: int, inverse: bool = False) -> Element:
    R, G = data.R, data.G
    sc = data.scheme
    u, s = sc.a_split(i)
    si = G.inv(s)
    square = R.prod(u, u, data.beta[s], data.alpha[s])
    coef = data.E(R.mul(u, data.q(s, si))) * data.X(R.neg(square) if inverse else square)
    return {sc.a(R.neg(R.mul(u, data.nu(s))), si): coef}


def ag_action_claim(data: ConstructionData, b: int, i: int) -> Element:
    u, s = data.scheme.a_split(i)
    return {i: data.X(data.R.prod(b, u, data.alpha[s])) ** 2}


def ag_coaction_claim(data: ConstructionData, i: int) -> Tensor:
    u, s = data.scheme.a_split(i)
    return {(data.R.mul(u, data.beta[s]), i): data.field.one}


def ag_closed_forms(data: ConstructionData, built: YDHopfAlgebra) -> List[ClosedFormReport]:
    H, yds = built.hopf, built.yds
    n = H.dim
    pairs = [(i, j) for i in range(n) for j in range(n)]
    return [
        compare_closed_form(
            "A_G multiplication", pairs,
            lambda k: H.algebra.basis_product(*k), lambda k: ag_mult_claim(data, *k),
        ),
        compare_closed_form(
            "A_G antipode", range(n),
            lambda i: H.antipode.columns[i], lambda i: ag_antipode_claim(data, i),
        ),
        compare_closed_form(
            "A_G inverse antipode", range(n),
            lambda i: H.inverse_antipode.columns[i], lambda i: ag_antipode_claim(data, i, inverse=True),
        ),
        compare_closed_form(
            "A_G action", [(b, i) for b in data.R.elements for i in range(n)],
            lambda k: yds.act_basis(*k), lambda k: ag_action_claim(data, *k),
        ),
        compare_closed_form(
            "A_G coaction", range(n),
            lambda i: yds.coaction[i], lambda i: ag_coaction_claim(data, i),
        ),
    ]


def a_p(p: int, m: int = 1, n: int = 0, field: Optional[CycField] = None) -> ConstructionData:
    """A_p(alpha_m, id, q_n): R = G = Z_p, nu trivial, alpha = m*id, beta = id, q = q_n."""
    F = field or get_field(p)
    R, G = ring_zn(p), cyclic_group(p)
    nu = UnitHom.trivial(G, R)
    chi, eta = standard_characters(p, F)
    return ConstructionData(
        R=R,
        G=G,
        nu=nu,
        alpha=tuple((m * s) % p for s in G.elements),
        beta=tuple(G.elements),
        q=Cocycle2(ring_module(G, R, nu), carry_cocycle(p, p, n).table),
        chi=chi,
        eta=eta,
        name=f"A_{p}(a{m},id,q{n})",
    )


def integrals_ag(built: YDHopfAlgebra) -> Tuple[IntegralData, VerificationReport]:
    """Lambda_A = sum_s e_0 x_s and lam_A(e_u x_s) = delta_{s1}."""
    data = built.data
    if data is None:
        raise ValueError("integrals_ag needs an algebra built by build_AG")
    F = data.field
    sc: BasisScheme = data.scheme
    G = data.G
    Lam = {sc.a(data.R.zero, s): F.one for s in G.elements}
    lam = [F.one if sc.a_split(i)[1] == G.identity else F.zero for i in range(built.dim)]
    integrals = IntegralData(Lambda=Lam, lam=lam, g=None, rho=list(lam))
    return integrals, integral_verify(built.hopf, integrals)

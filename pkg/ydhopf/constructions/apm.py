"""
The even family over K[Z_2] and its smallest members A_+ and A_-.

P = C = Z_2, z_s(i) = i beta(s), gamma_s(i)(j) = (-1)^(ij alpha(s)),
sigma_0 = 1 and sigma_1(s, t) = iota^q(s, t) for a Z_4-valued cocycle q
reducing to beta(s) alpha(t) modulo 2. Needs a primitive fourth root of unity.
With compare set, the closed forms

    (e_i x_s)(e_j x_t) = delta_ij iota^(i q(s,t)) e_i x_st
    S(e_i x_s)         = iota^(-i q(s,s^-1)) e_i x_s^-1
    c_b -> e_i x_s     = (-1)^(b i alpha(s)) e_i x_s
    delta(e_i x_s)     = c_(i beta(s)) (x) e_i x_s

are diffed against the built structure.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from ..algebra.cohom import Cocycle2, q_minus, q_plus, verify_cocycle2
from ..algebra.cyclonum import CycField, get_field
from ..algebra.finitestruct import FiniteGroup, GroupHom, NotACocycle, cyclic_group
from ..errors import InputError
from .base import BasisScheme, ClosedFormReport, YDHopfAlgebra, compare_closed_form
from .framework import CompatibilityViolation, FrameworkData, build_framework


def even_framework(
    G: FiniteGroup,
    alpha: Sequence[int],
    beta: Sequence[int],
    q: Cocycle2,
    field: CycField,
    name: str = "A",
) -> FrameworkData:
    Z2 = cyclic_group(2)
    for label, values in (("alpha", alpha), ("beta", beta)):
        hom = GroupHom(G, Z2, tuple(values))
        if not hom.verify():
            raise NotACocycle(f"{label} is not a homomorphism G -> Z_2")
    if q.module.module.modulus != 4 or not verify_cocycle2(q):
        raise NotACocycle("q must be a normalized Z_4-valued 2-cocycle")
    for s in G.elements:
        for t in G.elements:
            if q(s, t) % 2 != (beta[s] * alpha[t]) % 2:
                raise CompatibilityViolation(f"q(s, t) mod 2 != beta(s) alpha(t) at {(s, t)}", (1, 1, s, t))

    iota = field.root_of_order(4)
    one = field.one
    minus = -one
    return FrameworkData(
        C=Z2,
        G=G,
        P=Z2,
        action=[[0, 1] for _ in G.elements],
        z=[[(i * beta[s]) % 2 for i in range(2)] for s in G.elements],
        gamma=[
            [[minus if (i * j * alpha[s]) % 2 else one for j in range(2)] for i in range(2)]
            for s in G.elements
        ],
        sigma=[
            [[one for _ in G.elements] for _ in G.elements],
            [[iota ** q(s, t) for t in G.elements] for s in G.elements],
        ],
        field=field,
        name=name,
    )


def build_even(
    G: FiniteGroup,
    alpha: Sequence[int],
    beta: Sequence[int],
    q: Cocycle2,
    field: Optional[CycField] = None,
    name: str = "A",
) -> YDHopfAlgebra:
    """K^{Z_2} (x) K[G] over K[Z_2] from the even-family data."""
    F = field or get_field(4)
    if F.N % 4:
        raise InputError(f"The even family needs a fourth root of unity; conductor {F.N} is not a multiple of 4")
    built = build_framework(even_framework(G, alpha, beta, q, F, name))
    built.scheme = BasisScheme(2, G.order)
    return built


@dataclass(frozen=True)
class EvenData:
    """(G, alpha, beta, q) for the even family; alpha and beta take values in Z_2, q in Z_4."""

    G: FiniteGroup
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]
    q: Cocycle2
    name: str = "A"

    @property
    def nontrivial(self) -> bool:
        return any(self.alpha) or any(self.beta)

    def build(self, field: Optional[CycField] = None, compare: bool = False) -> YDHopfAlgebra:
        built = build_even(self.G, self.alpha, self.beta, self.q, field, self.name)
        if compare:
            built.closed_forms.extend(even_closed_forms(self, built))
        return built

    @classmethod
    def pm(cls, sign: str) -> "EvenData":
        if sign not in ("+", "-"):
            raise InputError(f"sign must be '+' or '-', got {sign!r}")
        q = q_plus() if sign == "+" else q_minus()
        return cls(cyclic_group(2), (0, 1), (0, 1), q, name=f"A_{sign}")


def build_Apm(sign: str, field: Optional[CycField] = None, compare: bool = True) -> YDHopfAlgebra:
    """A_+ or A_-: G = Z_2, alpha = beta = id, q = q_+ or q_-."""
    built = EvenData.pm(sign).build(field, compare=compare)
    if not built.hopf.algebra.is_commutative():
        logger.warning(f"A_{sign} came out noncommutative")
    return built


def even_closed_forms(data: EvenData, built: YDHopfAlgebra) -> List[ClosedFormReport]:
    H, yds = built.hopf, built.yds
    F = H.algebra.field
    G = data.G
    sc = BasisScheme(2, G.order)
    iota = F.root_of_order(4)
    n = H.dim

    def mult(k: Tuple[int, int]):
        (i, s), (j, t) = sc.a_split(k[0]), sc.a_split(k[1])
        return {sc.a(i, G.mul(s, t)): iota ** (i * data.q(s, t))} if i == j else {}

    def antipode(k: int):
        i, s = sc.a_split(k)
        si = G.inv(s)
        return {sc.a(i, si): iota ** ((-i * data.q(s, si)) % 4)}

    def action(k: Tuple[int, int]):
        b, (i, s) = k[0], sc.a_split(k[1])
        return {k[1]: -F.one if (b * i * data.alpha[s]) % 2 else F.one}

    def coaction(k: int):
        i, s = sc.a_split(k)
        return {((i * data.beta[s]) % 2, k): F.one}

    return [
        compare_closed_form(
            "even family multiplication", [(i, j) for i in range(n) for j in range(n)],
            lambda k: H.algebra.basis_product(*k), mult,
        ),
        compare_closed_form("even family antipode", range(n), lambda k: H.antipode.columns[k], antipode),
        compare_closed_form(
            "even family action", [(b, i) for b in range(2) for i in range(n)],
            lambda k: yds.act_basis(*k), action,
        ),
        compare_closed_form("even family coaction", range(n), lambda k: yds.coaction[k], coaction),
    ]

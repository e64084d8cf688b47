"""
Adjoint and coadjoint actions of A and its modified dual, and the map #.

    a -> a'   = a_(2)(0) a'(0) S_A^-1(S_H^-1(a_(2)(-1) a'(-1)) -> a_(1))
    b' <- b   = S*^-1(b_(2) <- S_H(b'(1) b_(1)(1))) b'(0) b_(1)(0)
    <b -> a, b'>* = <a, b' <- b>*     with <a, b>* = <S_A^-1 a, b>
    <a', b <- a>  = <a -> a', b>
    b # a     = <a_(1), b_(1)>* b_(1)(1) a_(2)(-1) <a_(2), b_(2)>

The left and right actions above are computed from the structure constants
only; the closed forms for A_G are evaluated separately and diffed.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from loguru import logger

from ..hopf.structure import Element, HopfData, add_into, basis
from ..hopf.verify import pair_cases
from .base import ClosedFormReport, ConstructionData, YDHopfAlgebra, compare_closed_form
from .moddual import ModifiedDual, build_modified_dual


@dataclass
class AdjointActions:
    """Basis tables of ->, <- (adjoint), -> and <- (coadjoint) and #, filled on first use."""

    base: YDHopfAlgebra
    dual: ModifiedDual
    closed_forms: List[ClosedFormReport] = field(default_factory=list)
    _left: Dict[Tuple[int, int], Element] = field(default_factory=dict, repr=False)
    _right: Dict[Tuple[int, int], Element] = field(default_factory=dict, repr=False)
    _left_co: Dict[Tuple[int, int], Element] = field(default_factory=dict, repr=False)
    _right_co: Dict[Tuple[int, int], Element] = field(default_factory=dict, repr=False)
    _sharp: Dict[Tuple[int, int], Element] = field(default_factory=dict, repr=False)

    @property
    def A(self) -> HopfData:
        return self.base.hopf

    @property
    def D(self) -> HopfData:
        return self.dual.hopf

    @property
    def dim(self) -> int:
        return self.A.dim

    def left_adjoint(self, i: int, j: int) -> Element:
        """a_i -> a_j."""
        key = (i, j)
        if key not in self._left:
            A, yds = self.A, self.base.yds
            H = yds.hopf
            F = A.field
            out: Element = {}
            for (a1, a2), c in A.coalgebra.comult[i].items():
                for (h, k), d in yds.coaction[a2].items():
                    for (h2, l), e in yds.coaction[j].items():
                        moved = yds.act(H.S_inv(H.algebra.basis_product(h, h2)), basis(a1, F))
                        if not moved:
                            continue
                        left = A.mul(basis(k, F), basis(l, F))
                        if left:
                            add_into(out, c * d * e, A.mul(left, A.S_inv(moved)))
            self._left[key] = out
        return self._left[key]

    def right_adjoint(self, m: int, j: int) -> Element:
        """b_m <- b_j."""
        key = (m, j)
        if key not in self._right:
            D = self.D
            C = self.base.yds.group
            dual = self.dual
            out: Element = {}
            for (x, y), c in D.coalgebra.comult[j].items():
                g = C.inv(C.mul(dual.grades[m], dual.grades[x]))
                moved = D.S_inv({y: c * dual.weight(y, g)})
                if moved:
                    add_into(out, D.field.one, D.mul(moved, D.algebra.basis_product(m, x)))
            self._right[key] = out
        return self._right[key]

    def left_coadjoint(self, j: int, i: int) -> Element:
        """b_j -> a_i."""
        key = (j, i)
        if key not in self._left_co:
            A = self.A
            F = A.field
            pre = A.S_inv(basis(i, F))
            x: Element = {}
            for m in range(self.dim):
                value = self.dual.pairing(pre, self.right_adjoint(m, j))
                if not value.is_zero():
                    x[m] = value
            self._left_co[key] = A.S(x)
        return self._left_co[key]

    def right_coadjoint(self, m: int, i: int) -> Element:
        """b_m <- a_i."""
        key = (m, i)
        if key not in self._right_co:
            out: Element = {}
            for k in range(self.dim):
                value = self.left_adjoint(i, k).get(m)
                if value is not None:
                    out[k] = value
            self._right_co[key] = out
        return self._right_co[key]

    def sharp(self, j: int, i: int) -> Element:
        """b_j # a_i, an element of H."""
        key = (j, i)
        if key not in self._sharp:
            A, D = self.A, self.D
            yds = self.base.yds
            C = yds.group
            F = A.field
            out: Element = {}
            for (i1, i2), c in A.coalgebra.comult[i].items():
                paired = A.S_inv(basis(i1, F))
                for (j1, j2), d in D.coalgebra.comult[j].items():
                    if j2 != i2:
                        continue
                    value = paired.get(j1)
                    if value is None:
                        continue
                    h = C.mul(self.dual.grades[j1], yds.grade(i2))
                    add_into(out, c * d * value, {h: F.one})
            self._sharp[key] = out
        return self._sharp[key]


def build_adjoint_actions(built: YDHopfAlgebra, compare: bool = True) -> AdjointActions:
    """Adjoint data of an A_G; refuses data violating chi(u alpha(s) beta(t)) = chi(u beta(s) alpha(t))."""
    if built.data is None:
        raise ValueError("build_adjoint_actions needs an algebra built by build_AG")
    built.data.require_main_assumption()
    actions = AdjointActions(built, build_modified_dual(built, compare=compare))
    if compare:
        actions.closed_forms.extend(adjoint_closed_forms(built.data, actions))
    logger.info(f"Computed adjoint and coadjoint actions of {built.name}")
    return actions


# closed forms

def left_adjoint_claim(data: ConstructionData, i: int, j: int) -> Element:
    R, G = data.R, data.G
    sc = data.scheme
    nu = data.nu
    u, s = sc.a_split(i)
    v, t = sc.a_split(j)
    si = G.inv(s)
    if R.mul(u, nu(s)) != R.sub(v, R.mul(v, nu(t))):
        return {}
    st = G.mul(s, t)
    conj = G.mul(st, si)
    vs = R.mul(v, nu(si))
    eta_arg = R.mul(vs, R.sum(data.q(s, t), data.q(st, si), R.neg(R.mul(nu(conj), data.q(s, si)))))
    inner = R.sum(
        R.mul(nu(s), data.beta[t]),
        R.mul(nu(t), data.beta[st]),
        R.neg(R.mul(nu(G.mul(t, t)), data.beta[s])),
    )
    chi_arg = R.prod(v, v, nu(G.mul(si, si)), inner, data.alpha[s])
    return {sc.a(vs, conj): data.E(eta_arg) * data.X(chi_arg)}


def right_adjoint_claim(data: ConstructionData, m: int, j: int) -> Element:
    """(c_v d_t) <- (c_u d_s) = delta_s1 chi(-vu nu(t) beta(t) alpha(t))^2 c_v d_t."""
    R, G = data.R, data.G
    v, t = data.scheme.a_split(m)
    u, s = data.scheme.a_split(j)
    if s != G.identity:
        return {}
    return {m: data.X(R.neg(R.prod(v, u, data.nu(t), data.beta[t], data.alpha[t]))) ** 2}


def left_coadjoint_claim(data: ConstructionData, j: int, i: int) -> Element:
    """(c_u d_s) -> (e_v x_t) = delta_s1 chi(vu nu(t^-2) beta(t) alpha(t))^2 e_v x_t."""
    R, G = data.R, data.G
    u, s = data.scheme.a_split(j)
    v, t = data.scheme.a_split(i)
    if s != G.identity:
        return {}
    ti = G.inv(t)
    return {i: data.X(R.prod(v, u, data.nu(G.mul(ti, ti)), data.beta[t], data.alpha[t])) ** 2}


def right_coadjoint_claim(data: ConstructionData, m: int, i: int, printed: bool = False) -> Element:
    """(c_v d_t) <- (e_u x_s); the printed variant squares the chi factor."""
    R, G = data.R, data.G
    sc = data.scheme
    nu = data.nu
    v, t = sc.a_split(m)
    u, s = sc.a_split(i)
    if u != R.sub(v, R.mul(v, nu(t))):
        return {}
    si = G.inv(s)
    conj = G.mul(G.mul(si, t), s)
    ts = G.mul(t, s)
    eta_arg = R.mul(v, R.sum(data.q(s, conj), data.q(ts, si), R.neg(R.mul(nu(t), data.q(s, si)))))
    inner = R.sum(
        R.mul(nu(s), data.beta[conj]),
        R.mul(nu(t), data.beta[ts]),
        R.neg(R.mul(nu(G.mul(t, t)), data.beta[s])),
    )
    chi = data.X(R.prod(v, v, inner, data.alpha[s]))
    if printed:
        chi = chi**2
    return {sc.a(R.mul(v, nu(s)), conj): data.E(eta_arg) * chi}


def sharp_claim(data: ConstructionData, j: int, i: int) -> Element:
    """(c_u d_s) # (e_v x_t) = delta_v0 delta_s1 c_{2u beta(t)}."""
    R, G = data.R, data.G
    u, s = data.scheme.a_split(j)
    v, t = data.scheme.a_split(i)
    if v != R.zero or s != G.identity:
        return {}
    return {R.times(2, R.mul(u, data.beta[t])): data.field.one}


def adjoint_closed_forms(data: ConstructionData, actions: AdjointActions) -> List[ClosedFormReport]:
    pairs = pair_cases(actions.dim)
    return [
        compare_closed_form(
            "left adjoint action", pairs,
            lambda k: actions.left_adjoint(*k), lambda k: left_adjoint_claim(data, *k),
        ),
        compare_closed_form(
            "right adjoint action", pairs,
            lambda k: actions.right_adjoint(*k), lambda k: right_adjoint_claim(data, *k),
        ),
        compare_closed_form(
            "left coadjoint action", pairs,
            lambda k: actions.left_coadjoint(*k), lambda k: left_coadjoint_claim(data, *k),
        ),
        compare_closed_form(
            "right coadjoint action", pairs,
            lambda k: actions.right_coadjoint(*k), lambda k: right_coadjoint_claim(data, *k),
        ),
        compare_closed_form(
            "right coadjoint action (printed)", pairs,
            lambda k: actions.right_coadjoint(*k), lambda k: right_coadjoint_claim(data, *k, printed=True),
        ),
        compare_closed_form(
            "sharp", pairs,
            lambda k: actions.sharp(*k), lambda k: sharp_claim(data, *k),
        ),
    ]

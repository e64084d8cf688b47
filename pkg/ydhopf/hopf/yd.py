"""
Yetter-Drinfel'd structures.

YDStructure is a left Yetter-Drinfel'd module structure on the carrier of a
HopfData over an arbitrary finite-dimensional Hopf algebra H, given by an
action table and a coaction tensor. YDData is the encoding over K[Z_p] by two
commuting operators of order p: phi (action of the generator) and psi
(psi(a) = zeta^k a on the k-th homogeneous component).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..algebra.cyclonum import CycElement, CycField
from ..algebra.finitestruct import FiniteGroup, cyclic_group
from ..config.settings import VerificationSettings
from ..utils.report import CheckResult, VerificationReport
from .structure import (
    Element,
    HopfData,
    LinearMap,
    SCAlgebra,
    Tensor,
    add_into,
    basis,
    group_algebra,
    tensor_of,
)
from .verify import (
    is_algebra_map,
    is_coalgebra_map,
    pair_cases,
    scan,
    single_cases,
    verify_antipode,
)


class Triviality(str, Enum):
    TRIVIAL_ACTION = "trivial_action"
    TRIVIAL_COACTION = "trivial_coaction"
    NONTRIVIAL = "nontrivial"


def braided_tensor_product(A: SCAlgebra, braid, X: Tensor, Y: Tensor) -> Tensor:
    """(a (x) b)(a' (x) b') = a sigma(b (x) a') b', extended bilinearly."""
    out: Tensor = {}
    for (a, b), u in X.items():
        for (a2, b2), v in Y.items():
            coef = u * v
            for (x, y), w in braid(b, a2).items():
                left = A.mult.get((a, x))
                if not left:
                    continue
                right = A.mult.get((y, b2))
                if not right:
                    continue
                c = coef * w
                for k, s in left.items():
                    for l, t in right.items():
                        key = (k, l)
                        value = c * s * t
                        new = out[key] + value if key in out else value
                        if new.is_zero():
                            out.pop(key, None)
                        else:
                            out[key] = new
    return out


@dataclass
class YDStructure:
    """A left YD module over the Hopf algebra H on a space with basis a_0..a_{dim-1}."""

    hopf: HopfData
    dim: int
    action: Dict[Tuple[int, int], Element]
    coaction: List[Tensor]
    group: Optional[FiniteGroup] = None
    grades: Optional[List[int]] = None
    _braid: Dict[Tuple[int, int], Tensor] = field(default_factory=dict, repr=False)
    _braid_inv: Dict[Tuple[int, int], Tensor] = field(default_factory=dict, repr=False)

    @classmethod
    def over_group(
        cls,
        C: FiniteGroup,
        field_: CycField,
        grades: Sequence[int],
        actions: Sequence[LinearMap],
    ) -> "YDStructure":
        """Over K[C]: c acts by actions[c], a_i has degree grades[i] in C."""
        one = field_.one
        dim = len(grades)
        action = {(c, i): actions[c].columns[i] for c in C.elements for i in range(dim) if actions[c].columns[i]}
        coaction = [{(grades[i], i): one} for i in range(dim)]
        return cls(group_algebra(C, field_), dim, action, coaction, group=C, grades=list(grades))

    @classmethod
    def diagonal(
        cls,
        C: FiniteGroup,
        field_: CycField,
        grades: Sequence[int],
        weight: Callable[[int, int], CycElement],
    ) -> "YDStructure":
        """Over K[C]: c -> a_i = weight(c, i) a_i and a_i has degree grades[i]."""
        actions = [
            LinearMap(field_, [{i: weight(c, i)} for i in range(len(grades))]) for c in C.elements
        ]
        return cls.over_group(C, field_, grades, actions)

    @property
    def field(self):
        return self.hopf.field

    def act_basis(self, h: int, i: int) -> Element:
        return self.action.get((h, i), {})

    def act(self, h: Element, x: Element) -> Element:
        out: Element = {}
        for k, u in h.items():
            for i, v in x.items():
                image = self.action.get((k, i))
                if image:
                    add_into(out, u * v, image)
        return out

    def coact(self, x: Element) -> Tensor:
        out: Tensor = {}
        for i, v in x.items():
            add_into(out, v, self.coaction[i])
        return out

    def weight(self, c: int, i: int) -> CycElement:
        """Coefficient of a_i in c -> a_i (diagonal group case)."""
        return self.action.get((c, i), {}).get(i, self.field.zero)

    def grade(self, i: int) -> int:
        if self.grades is None:
            raise ValueError("Coaction is not homogeneous")
        return self.grades[i]

    def braid(self, i: int, j: int) -> Tensor:
        """sigma(a_i (x) a_j) = a_i(-1) -> a_j (x) a_i(0)."""
        key = (i, j)
        if key not in self._braid:
            out: Tensor = {}
            for (h, k), c in self.coaction[i].items():
                for l, v in self.action.get((h, j), {}).items():
                    add_into(out, c * v, {(l, k): self.field.one})
            self._braid[key] = out
        return self._braid[key]

    def braid_inverse(self, i: int, j: int) -> Tensor:
        """sigma^-1(a_i (x) a_j) = a_j(0) (x) S^-1(a_j(-1)) -> a_i."""
        key = (i, j)
        if key not in self._braid_inv:
            out: Tensor = {}
            for (h, l), c in self.coaction[j].items():
                moved = self.act(self.hopf.S_inv(basis(h, self.field)), basis(i, self.field))
                for k, v in moved.items():
                    add_into(out, c * v, {(l, k): self.field.one})
            self._braid_inv[key] = out
        return self._braid_inv[key]


@dataclass
class YDData:
    """The (phi, psi) encoding of a YD structure over K[Z_p]."""

    phi: LinearMap
    psi: LinearMap
    p: int
    zeta: CycElement
    _phi_powers: List[LinearMap] = field(default_factory=list, repr=False)
    _projections: List[LinearMap] = field(default_factory=list, repr=False)
    _grades: Optional[List[Optional[int]]] = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.phi.dim_in

    @property
    def field(self):
        return self.phi.field

    def phi_power(self, k: int) -> LinearMap:
        if not self._phi_powers:
            powers = [LinearMap.identity(self.dim, self.field)]
            for _ in range(1, self.p):
                powers.append(self.phi.compose(powers[-1]))
            self._phi_powers = powers
        return self._phi_powers[k % self.p]

    def projection(self, k: int) -> LinearMap:
        """P_k = (1/p) sum_m zeta^(-km) psi^m, the projection onto the zeta^k eigenspace of psi."""
        if not self._projections:
            psi_powers = [LinearMap.identity(self.dim, self.field)]
            for _ in range(1, self.p):
                psi_powers.append(self.psi.compose(psi_powers[-1]))
            inv_p = self.field.rational(1) / self.p
            projections = []
            for j in range(self.p):
                cols = []
                for i in range(self.dim):
                    col: Element = {}
                    for m in range(self.p):
                        add_into(col, inv_p * self.zeta ** (-j * m), psi_powers[m].columns[i])
                    cols.append(col)
                projections.append(LinearMap(self.field, cols))
            self._projections = projections
        return self._projections[k % self.p]

    def grade(self, i: int) -> Optional[int]:
        """k with psi(a_i) = zeta^k a_i, or None if a_i is not homogeneous."""
        if self._grades is None:
            grades: List[Optional[int]] = []
            for i_ in range(self.dim):
                col = self.psi.columns[i_]
                grade = None
                if list(col) == [i_]:
                    for k in range(self.p):
                        if col[i_] == self.zeta**k:
                            grade = k
                            break
                grades.append(grade)
            self._grades = grades
        return self._grades[i]

    def braid(self, i: int, j: int) -> Tensor:
        """sigma(a_i (x) a_j) = sum_k phi^k(a_j) (x) P_k(a_i)."""
        g = self.grade(i)
        if g is not None:
            return tensor_of(self.phi_power(g).columns[j], basis(i, self.field))
        out: Tensor = {}
        for k in range(self.p):
            add_into(out, self.field.one, tensor_of(self.phi_power(k).columns[j], self.projection(k).columns[i]))
        return out

    def to_structure(self) -> YDStructure:
        """The same structure as a YDStructure over K[Z_p]."""
        C = cyclic_group(self.p)
        H = group_algebra(C, self.field)
        action = {
            (m, i): self.phi_power(m).columns[i]
            for m in range(self.p) for i in range(self.dim) if self.phi_power(m).columns[i]
        }
        coaction: List[Tensor] = []
        for i in range(self.dim):
            tensor: Tensor = {}
            for k in range(self.p):
                for a, v in self.projection(k).columns[i].items():
                    tensor[(k, a)] = v
            coaction.append(tensor)
        grades = [self.grade(i) for i in range(self.dim)]
        return YDStructure(
            H,
            self.dim,
            action,
            coaction,
            group=C,
            grades=None if any(g is None for g in grades) else [g for g in grades if g is not None],
        )


def braided_square(A: HopfData, yd: YDData) -> SCAlgebra:
    """A (x)^ A with (a (x) b)(a' (x) b') = 1/p sum zeta^(-ij) a phi^i(a') (x) psi^j(b) b'; (i, j) at i*dim + j."""
    n = A.dim
    mult: Dict[Tuple[int, int], Element] = {}
    for a, b, a2, b2 in ((a, b, a2, b2) for a in range(n) for b in range(n) for a2 in range(n) for b2 in range(n)):
        prod = braided_tensor_product(A.algebra, yd.braid, {(a, b): A.field.one}, {(a2, b2): A.field.one})
        if prod:
            mult[(a * n + b, a2 * n + b2)] = {k * n + l: v for (k, l), v in prod.items()}
    unit = {k * n + l: u * v for k, u in A.one.items() for l, v in A.one.items()}
    return SCAlgebra(n * n, A.field, mult, unit)


def verify_yd_hopf(A: HopfData, yd: YDData, settings: Optional[VerificationSettings] = None) -> VerificationReport:
    """Axioms of a YD Hopf algebra over K[Z_p] in the (phi, psi) encoding."""
    settings = settings or VerificationSettings()
    report = VerificationReport(f"YD {A.name}")
    phi, psi = yd.phi, yd.psi
    identity = LinearMap.identity(A.dim, A.field)

    commute = phi.compose(psi) == psi.compose(phi)
    report.add(CheckResult("phi psi commute", commute, None if commute else (), 1, 1))
    for name, op in (("phi", phi), ("psi", psi)):
        ok = op.power(yd.p) == identity
        report.add(CheckResult(f"{name}^p = id", ok, None if ok else (), 1, 1))
        report.add(is_algebra_map(op, A.algebra, A.algebra, name=f"{name} algebra map"))
        report.add(is_coalgebra_map(op, A.coalgebra, A.coalgebra, name=f"{name} coalgebra map"))

    C = A.coalgebra

    def braided_mult(i: int, j: int) -> bool:
        lhs = C.coproduct(A.algebra.basis_product(i, j))
        return lhs == braided_tensor_product(A.algebra, yd.braid, C.comult[i], C.comult[j])

    def eps_mult(i: int, j: int) -> bool:
        return C.epsilon(A.algebra.basis_product(i, j)) == C.counit[i] * C.counit[j]

    pairs = pair_cases(A.dim)
    report.add(scan("comultiplication braided multiplicative", pairs, braided_mult, settings.threads))
    report.add(scan("counit multiplicative", pairs, eps_mult))
    unit_ok = C.coproduct(A.one) == tensor_of(A.one, A.one) and C.epsilon(A.one) == 1
    report.add(CheckResult("unit grouplike", unit_ok, None if unit_ok else (), 1, 1))

    if A.antipode is not None:
        report.merge(verify_antipode(A), "antipode.")
        S = A.antipode
        for name, op in (("phi", phi), ("psi", psi)):
            ok = S.compose(op) == op.compose(S)
            report.add(CheckResult(f"S commutes with {name}", ok, None if ok else (), 1, 1))
    report.facts["triviality"] = triviality_test(yd).value
    logger.info(f"YD verification of {A.name}: {'pass' if report.ok else 'FAIL'}")
    return report


def verify_yd_structure(A: HopfData, yds: YDStructure, settings: Optional[VerificationSettings] = None) -> VerificationReport:
    """Module, comodule and YD compatibility; (co)linearity of all structure maps; braided bialgebra law."""
    settings = settings or VerificationSettings()
    report = VerificationReport(f"YD {A.name} over {yds.hopf.name}")
    H = yds.hopf
    F = A.field
    hd, ad = H.dim, A.dim
    Hc = H.coalgebra

    def h_basis(h: int) -> Element:
        return basis(h, F)

    def module_law(h: int, k: int, i: int) -> bool:
        return yds.act(H.algebra.basis_product(h, k), basis(i, F)) == yds.act(h_basis(h), yds.act(h_basis(k), basis(i, F)))

    unit_ok = all(yds.act(H.one, basis(i, F)) == basis(i, F) for i in range(ad))
    report.add(CheckResult("module unit", unit_ok, None if unit_ok else (), ad, ad))
    report.add(scan("module associativity", [(h, k, i) for h in range(hd) for k in range(hd) for i in range(ad)], module_law))

    def comodule_law(i: int) -> bool:
        left: dict = {}
        right: dict = {}
        for (h, k), c in yds.coaction[i].items():
            for (x, y), d in Hc.comult[h].items():
                add_into(left, c * d, {(x, y, k): F.one})
            for (x, l), d in yds.coaction[k].items():
                add_into(right, c * d, {(h, x, l): F.one})
        counit: Element = {}
        for (h, k), c in yds.coaction[i].items():
            add_into(counit, c * Hc.counit[h], {k: F.one})
        return left == right and counit == basis(i, F)

    report.add(scan("comodule", single_cases(ad), comodule_law))

    def delta2(h: int) -> Dict[Tuple[int, int, int], CycElement]:
        out: dict = {}
        for (x, y), c in Hc.comult[h].items():
            for (u, v), d in Hc.comult[x].items():
                add_into(out, c * d, {(u, v, y): F.one})
        return out

    def yd_condition(h: int, i: int) -> bool:
        lhs = yds.coact(yds.act_basis(h, i))
        rhs: Tensor = {}
        for (h1, h2, h3), c in delta2(h).items():
            for (x, k), d in yds.coaction[i].items():
                left = H.mul(H.mul(h_basis(h1), h_basis(x)), H.S(h_basis(h3)))
                moved = yds.act_basis(h2, k)
                add_into(rhs, c * d, tensor_of(left, moved))
        return lhs == rhs

    report.add(scan("YD compatibility", [(h, i) for h in range(hd) for i in range(ad)], yd_condition))

    def module_algebra(h: int, i: int, j: int) -> bool:
        lhs = yds.act(h_basis(h), A.algebra.basis_product(i, j))
        rhs: Element = {}
        for (x, y), c in Hc.comult[h].items():
            add_into(rhs, c, A.mul(yds.act_basis(x, i), yds.act_basis(y, j)))
        return lhs == rhs

    def module_coalgebra(h: int, i: int) -> bool:
        lhs = A.comul(yds.act_basis(h, i))
        rhs: Tensor = {}
        for (x, y), c in Hc.comult[h].items():
            for (a, b), d in A.coalgebra.comult[i].items():
                add_into(rhs, c * d, tensor_of(yds.act_basis(x, a), yds.act_basis(y, b)))
        eps_ok = A.eps(yds.act_basis(h, i)) == Hc.counit[h] * A.coalgebra.counit[i]
        return lhs == rhs and eps_ok

    unit_lin = all(yds.act(h_basis(h), A.one) == {k: v * Hc.counit[h] for k, v in A.one.items() if not Hc.counit[h].is_zero()} for h in range(hd))
    report.add(CheckResult("unit linear", unit_lin, None if unit_lin else (), hd, hd))
    report.add(scan("multiplication linear", [(h, i, j) for h in range(hd) for i in range(ad) for j in range(ad)], module_algebra))
    report.add(scan("comultiplication linear", [(h, i) for h in range(hd) for i in range(ad)], module_coalgebra))

    def comodule_algebra(i: int, j: int) -> bool:
        lhs = yds.coact(A.algebra.basis_product(i, j))
        rhs: Tensor = {}
        for (h, k), c in yds.coaction[i].items():
            for (x, l), d in yds.coaction[j].items():
                add_into(rhs, c * d, tensor_of(H.mul(h_basis(h), h_basis(x)), A.algebra.basis_product(k, l)))
        return lhs == rhs

    def comodule_coalgebra(i: int) -> bool:
        lhs: dict = {}
        for (h, k), c in yds.coaction[i].items():
            for (a, b), d in A.coalgebra.comult[k].items():
                add_into(lhs, c * d, {(h, a, b): F.one})
        rhs: dict = {}
        for (a, b), c in A.coalgebra.comult[i].items():
            for (h, x), d in yds.coaction[a].items():
                for (k, y), e in yds.coaction[b].items():
                    for m, f in H.algebra.basis_product(h, k).items():
                        add_into(rhs, c * d * e * f, {(m, x, y): F.one})
        eps_lhs: Element = {}
        for (h, k), c in yds.coaction[i].items():
            add_into(eps_lhs, c * A.coalgebra.counit[k], {h: F.one})
        eps_rhs = {k: v * A.coalgebra.counit[i] for k, v in H.one.items()} if not A.coalgebra.counit[i].is_zero() else {}
        return lhs == rhs and eps_lhs == eps_rhs

    unit_colin = yds.coact(A.one) == tensor_of(H.one, A.one)
    report.add(CheckResult("unit colinear", unit_colin, None if unit_colin else (), 1, 1))
    report.add(scan("multiplication colinear", pair_cases(ad), comodule_algebra))
    report.add(scan("comultiplication colinear", single_cases(ad), comodule_coalgebra))

    def braided_mult(i: int, j: int) -> bool:
        lhs = A.comul(A.algebra.basis_product(i, j))
        return lhs == braided_tensor_product(A.algebra, yds.braid, A.coalgebra.comult[i], A.coalgebra.comult[j])

    report.add(scan("comultiplication braided multiplicative", pair_cases(ad), braided_mult, settings.threads))
    if A.antipode is not None:
        report.merge(verify_antipode(A), "antipode.")
    return report


def triviality_test(yd: YDData) -> Triviality:
    identity = LinearMap.identity(yd.dim, yd.field)
    if yd.phi == identity:
        return Triviality.TRIVIAL_ACTION
    if yd.psi == identity:
        return Triviality.TRIVIAL_COACTION
    return Triviality.NONTRIVIAL


@dataclass(frozen=True)
class GrouplikeFlags:
    grouplike: bool
    invariant: bool
    coinvariant: bool


def grouplike_check(A: HopfData, g: Element) -> bool:
    return A.comul(g) == tensor_of(g, g) and A.eps(g) == 1


def grouplike_flags(A: HopfData, yd: YDData, g: Element) -> GrouplikeFlags:
    return GrouplikeFlags(
        grouplike=grouplike_check(A, g),
        invariant=yd.phi.apply(g) == g,
        coinvariant=yd.psi.apply(g) == g,
    )

"""
The modified dual A* of a diagonal YD Hopf algebra over K[C].

A* has the dual basis b_j of A at the same indices and is paired with A by
<a_i, b_j> = delta_ij. Against the plain transpose dual it carries the
coopposite structure: the inverse braiding composed with the transpose
comultiplication, the coaction composed with S_H and the inverse antipode.
For A = A_G the basis b_j is c_u d_s.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from loguru import logger

from ..algebra.cyclonum import CycElement
from ..config.settings import VerificationSettings
from ..hopf.structure import Element, HopfData, SCAlgebra, SCCoalgebra, Tensor, add_term
from ..hopf.verify import pair_cases, scan, single_cases, verify_algebra, verify_antipode, verify_coalgebra
from ..hopf.yd import YDStructure
from ..utils.report import VerificationReport
from .base import ClosedFormReport, ConstructionData, YDHopfAlgebra, compare_closed_form


@dataclass
class ModifiedDual:
    """A* as a right YD Hopf algebra over the group algebra K[C] of the base module."""

    hopf: HopfData
    base: HopfData
    yds: YDStructure
    grades: List[int]
    closed_forms: List[ClosedFormReport] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.hopf.dim

    def weight(self, j: int, c: int) -> CycElement:
        """b_j <- c = weight(j, c) b_j."""
        return self.yds.weight(c, j)

    def act_right(self, j: int, c: int) -> Element:
        return {j: self.weight(j, c)}

    def coaction(self, j: int) -> Tensor:
        """b_j -> b_j (x) c_{g_j^-1}."""
        return {(j, self.grades[j]): self.hopf.field.one}

    def pairing(self, a: Element, b: Element) -> CycElement:
        total = self.hopf.field.zero
        for i, x in a.items():
            y = b.get(i)
            if y is not None:
                total = total + x * y
        return total

    def verify(self, settings: Optional[VerificationSettings] = None) -> VerificationReport:
        report = VerificationReport(f"modified dual {self.hopf.name}")
        D, A = self.hopf, self.base
        C = self.yds.group
        report.merge(verify_algebra(D.algebra, settings), "algebra.")
        report.merge(verify_coalgebra(D.coalgebra, settings), "coalgebra.")
        report.merge(verify_antipode(D), "antipode.")

        def antipode_pairing(i: int, j: int) -> bool:
            expected = D.field.one if i == j else D.field.zero
            return self.pairing(A.S(A.basis(i)), D.S(D.basis(j))) == expected

        report.add(scan("pairing antipode", pair_cases(D.dim), antipode_pairing))

        def action_multiplicative(c: int, i: int, j: int) -> bool:
            prod = D.algebra.basis_product(i, j)
            lhs = {k: v * self.weight(k, c) for k, v in prod.items()}
            w = self.weight(i, c) * self.weight(j, c)
            return lhs == {k: v * w for k, v in prod.items()}

        report.add(scan(
            "action multiplicative",
            [(c, i, j) for c in C.elements for i in range(D.dim) for j in range(D.dim)],
            action_multiplicative,
        ))

        def coaction_multiplicative(i: int, j: int) -> bool:
            grade = C.mul(self.grades[i], self.grades[j])
            return all(self.grades[k] == grade for k in D.algebra.basis_product(i, j))

        report.add(scan("coaction multiplicative", pair_cases(D.dim), coaction_multiplicative))

        def comultiplication_colinear(k: int) -> bool:
            return all(C.mul(self.grades[i], self.grades[j]) == self.grades[k] for (i, j) in D.coalgebra.comult[k])

        report.add(scan("comultiplication colinear", single_cases(D.dim), comultiplication_colinear))
        return report


def modified_dual(A: HopfData, yds: YDStructure, name: Optional[str] = None) -> ModifiedDual:
    """A* with b_i b_j = sum_k Delta_k[i, j] b_k and Delta(b_k) = sum lambda_{g_j}(i)^-1 m_ji^k b_i (x) b_j."""
    C = yds.group
    if C is None or yds.grades is None:
        raise ValueError("The modified dual needs a homogeneous YD module over a group algebra")
    F = A.field
    n = A.dim

    mult = {}
    for k, delta in enumerate(A.coalgebra.comult):
        for (i, j), c in delta.items():
            add_term(mult.setdefault((i, j), {}), k, c)
    mult = {key: value for key, value in mult.items() if value}
    unit: Element = {i: c for i, c in enumerate(A.coalgebra.counit) if not c.is_zero()}

    comult: List[Tensor] = [{} for _ in range(n)]
    for (j, i), prod in A.algebra.mult.items():
        twist = yds.weight(yds.grade(j), i).inverse()
        for k, c in prod.items():
            add_term(comult[k], (i, j), c * twist)
    counit: List[CycElement] = [A.one.get(i, F.zero) for i in range(n)]

    hopf = HopfData(
        SCAlgebra(n, F, mult, unit),
        SCCoalgebra(n, F, comult, counit),
        A.inverse_antipode.transpose(),
        name=name or f"{A.name}*",
    )
    hopf._inverse_antipode = A.antipode.transpose()
    grades = [C.inv(yds.grade(j)) for j in range(n)]
    logger.debug(f"Built modified dual {hopf.name} (dim {n})")
    return ModifiedDual(hopf, A, yds, grades)


def build_modified_dual(built: YDHopfAlgebra, compare: bool = True) -> ModifiedDual:
    dual = modified_dual(built.hopf, built.yds, name=f"{built.name}*")
    if built.data is not None:
        dual.hopf.labels = built.data.scheme.a_labels(built.data.G, prefix=("c", "d"))
        if compare:
            dual.closed_forms.extend(moddual_closed_forms(built.data, dual))
    logger.info(f"Built modified dual {dual.hopf.name}")
    return dual


# closed forms in the basis c_u d_s

def md_mult_claim(data: ConstructionData, i: int, j: int) -> Element:
    """delta_st c_{u+v} d_t."""
    sc = data.scheme
    u, s = sc.a_split(i)
    v, t = sc.a_split(j)
    return {sc.a(data.R.add(u, v), t): data.field.one} if s == t else {}


def md_comult_claim(data: ConstructionData, i: int) -> Tensor:
    """sum_t eta(u q(t, t^-1 s)) chi(-u^2 nu(t) beta(t) alpha(t^-1 s)) c_{u nu(t)} d_{t^-1 s} (x) c_u d_t."""
    R, G = data.R, data.G
    sc = data.scheme
    u, s = sc.a_split(i)
    out: Tensor = {}
    for t in G.elements:
        rest = G.mul(G.inv(t), s)
        coef = data.E(R.mul(u, data.q(t, rest))) * data.X(R.neg(R.prod(u, u, data.nu(t), data.beta[t], data.alpha[rest])))
        out[(sc.a(R.mul(u, data.nu(t)), rest), sc.a(u, t))] = coef
    return out


def md_antipode_claim(data: ConstructionData, i: int) -> Element:
    """eta(-u q(s, s^-1)) chi(-u^2 beta(s) alpha(s)) c_{-u nu(s)} d_{s^-1}."""
    R, G = data.R, data.G
    sc = data.scheme
    u, s = sc.a_split(i)
    si = G.inv(s)
    coef = data.E(R.neg(R.mul(u, data.q(s, si)))) * data.X(R.neg(R.prod(u, u, data.beta[s], data.alpha[s])))
    return {sc.a(R.neg(R.mul(u, data.nu(s))), si): coef}


def moddual_closed_forms(data: ConstructionData, dual: ModifiedDual) -> List[ClosedFormReport]:
    D = dual.hopf
    R, G = data.R, data.G
    sc = data.scheme
    F = data.field
    n = D.dim
    unit = {sc.a(R.zero, s): F.one for s in G.elements}
    return [
        compare_closed_form(
            "modified dual multiplication", pair_cases(n),
            lambda k: D.algebra.basis_product(*k), lambda k: md_mult_claim(data, *k),
        ),
        ClosedFormReport("modified dual unit", [] if D.one == unit else [()], 1),
        compare_closed_form(
            "modified dual comultiplication", range(n),
            lambda i: D.coalgebra.comult[i], lambda i: md_comult_claim(data, i),
        ),
        compare_closed_form(
            "modified dual counit", range(n),
            lambda i: D.coalgebra.counit[i], lambda i: F.one if sc.a_split(i)[1] == G.identity else F.zero,
        ),
        compare_closed_form(
            "modified dual antipode", range(n),
            lambda i: D.antipode.columns[i], lambda i: md_antipode_claim(data, i),
        ),
        compare_closed_form(
            "modified dual action", [(i, v) for i in range(n) for v in R.elements],
            lambda k: dual.weight(*k),
            lambda k: data.X(R.prod(k[1], sc.a_split(k[0])[0], data.alpha[sc.a_split(k[0])[1]])) ** 2,
        ),
        compare_closed_form(
            "modified dual coaction", range(n),
            lambda i: dual.grades[i],
            lambda i: R.neg(R.mul(sc.a_split(i)[0], data.beta[sc.a_split(i)[1]])),
        ),
    ]

"""
Radford biproducts A (x) H and the extension K^R -> B -> K[G x R].

radford_biproduct works for any YD Hopf algebra given by a YDStructure. For
B = A_G (x) K[R] the printed closed forms in the basis b_uv(s) are evaluated
separately and diffed against the generic structure.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from loguru import logger

from ..algebra.cyclonum import CycElement
from ..algebra.finitestruct import FiniteGroup, direct_product
from ..algebra.linalg import Vector, in_span, kernel
from ..hopf.dual import dual_yd_structure, dualize
from ..hopf.integrals import IntegralData, find_integral, integral_verify
from ..hopf.structure import (
    Element,
    HopfData,
    LinearMap,
    SCAlgebra,
    SCCoalgebra,
    Tensor,
    add_into,
    basis,
    function_algebra,
    group_algebra,
    scaled,
)
from ..hopf.verify import is_hopf_map, pair_cases, scan
from ..hopf.yd import YDStructure
from ..utils.report import CheckResult, VerificationReport
from .base import ClosedFormReport, ConstructionData, YDHopfAlgebra, compare_closed_form


def radford_biproduct(A: HopfData, yds: YDStructure, name: Optional[str] = None) -> HopfData:
    """A (x) H with the smash product and cosmash coproduct; a (x) h at index a*dim(H) + h."""
    H = yds.hopf
    F = A.field
    n, m = A.dim, H.dim

    mult: Dict[Tuple[int, int], Element] = {}
    for h in range(m):
        for a2 in range(n):
            moved: List[Tuple[Element, int, CycElement]] = []
            for (h1, h2), c in H.coalgebra.comult[h].items():
                image = yds.act_basis(h1, a2)
                if image:
                    moved.append((image, h2, c))
            if not moved:
                continue
            for a in range(n):
                for k in range(m):
                    out: Element = {}
                    for image, h2, c in moved:
                        left = A.mul(basis(a, F), image)
                        if not left:
                            continue
                        right = H.algebra.basis_product(h2, k)
                        for x, u in left.items():
                            for y, v in right.items():
                                add_into(out, c * u * v, {x * m + y: F.one})
                    if out:
                        mult[(a * m + h, a2 * m + k)] = out
    unit = {a * m + h: u * v for a, u in A.one.items() for h, v in H.one.items()}

    comult: List[Tensor] = []
    counit: List[CycElement] = []
    for a in range(n):
        for h in range(m):
            delta: Tensor = {}
            for (a1, a2), c in A.coalgebra.comult[a].items():
                for (x, a20), d in yds.coaction[a2].items():
                    for (h1, h2), e in H.coalgebra.comult[h].items():
                        for k, f in H.algebra.basis_product(x, h1).items():
                            add_into(delta, c * d * e * f, {(a1 * m + k, a20 * m + h2): F.one})
            comult.append(delta)
            counit.append(A.coalgebra.counit[a] * H.coalgebra.counit[h])

    algebra = SCAlgebra(n * m, F, mult, unit)
    labels = [f"{x}{y}" for x in A.labels for y in H.labels] if A.labels and H.labels else None
    B = HopfData(algebra, SCCoalgebra(n * m, F, comult, counit), None, name=name or f"{A.name}#{H.name}", labels=labels)
    if A.antipode is not None and H.antipode is not None:
        B.antipode = LinearMap(F, [_biproduct_antipode(A, yds, algebra, a, h) for a in range(n) for h in range(m)])
    logger.debug(f"Built biproduct {B.name} (dim {B.dim})")
    return B


def _biproduct_antipode(A: HopfData, yds: YDStructure, algebra: SCAlgebra, a: int, h: int) -> Element:
    """S(a (x) h) = (1 (x) S_H(a_(-1) h))(S_A(a_(0)) (x) 1)."""
    H = yds.hopf
    F = A.field
    m = H.dim
    out: Element = {}
    for (x, a0), c in yds.coaction[a].items():
        sh = H.S(H.algebra.basis_product(x, h))
        left = {i * m + k: u * v for i, u in A.one.items() for k, v in sh.items()}
        right = {i * m + k: u * v for i, u in A.S(basis(a0, F)).items() for k, v in H.one.items()}
        add_into(out, c, algebra.product(left, right))
    return out


def biproduct_dual_check(A: HopfData, yds: YDStructure) -> VerificationReport:
    """(A (x) H)* and A* (x) H* agree under the canonical identification of bases."""
    report = VerificationReport(f"dual of {A.name}#{yds.hopf.name}")
    left = dualize(radford_biproduct(A, yds))
    right = radford_biproduct(dualize(A), dual_yd_structure(yds))
    n = left.dim
    report.add(scan(
        "multiplication", pair_cases(n),
        lambda i, j: left.algebra.basis_product(i, j) == right.algebra.basis_product(i, j),
    ))
    report.add(scan("comultiplication", [(i,) for i in range(n)], lambda i: left.coalgebra.comult[i] == right.coalgebra.comult[i]))
    for name, ok in (
        ("unit", left.one == right.one),
        ("counit", left.coalgebra.counit == right.coalgebra.counit),
        ("antipode", left.antipode == right.antipode),
    ):
        report.add(CheckResult(name, ok, None if ok else (), 1, 1))
    return report


@dataclass
class Biproduct:
    """B = A_G (x) K[R] together with the algebra it was built from."""

    hopf: HopfData
    base: YDHopfAlgebra
    closed_forms: List[ClosedFormReport] = field(default_factory=list)

    @property
    def data(self) -> ConstructionData:
        if self.base.data is None:
            raise ValueError(f"{self.base.name} carries no construction data")
        return self.base.data

    @property
    def dim(self) -> int:
        return self.hopf.dim


def build_biproduct(built: YDHopfAlgebra, compare: bool = True) -> Biproduct:
    hopf = radford_biproduct(built.hopf, built.yds, name=f"B({built.name})")
    bp = Biproduct(hopf, built)
    if built.data is not None:
        hopf.labels = built.data.scheme.b_labels(built.data.G)
        if compare:
            bp.closed_forms.extend(biproduct_closed_forms(bp))
    logger.info(f"Built Radford biproduct {hopf.name} (dim {hopf.dim})")
    return bp


# closed forms in the basis b_uv(s)

def bp_mult_claim(data: ConstructionData, i: int, j: int) -> Element:
    """delta_{u nu(s), u'} eta(u q(s,s')) chi(2vu' alpha(s') + u^2 nu(s) beta(s) alpha(s')) b_{u,v+v'}(ss')."""
    R, G = data.R, data.G
    sc = data.scheme
    u, v, s = sc.b_split(i)
    u2, v2, s2 = sc.b_split(j)
    if R.mul(u, data.nu(s)) != u2:
        return {}
    exponent = R.add(R.times(2, R.prod(v, u2, data.alpha[s2])), R.prod(u, u, data.nu(s), data.beta[s], data.alpha[s2]))
    return {sc.b(u, R.add(v, v2), G.mul(s, s2)): data.E(R.mul(u, data.q(s, s2))) * data.X(exponent)}


def bp_comult_claim(data: ConstructionData, i: int) -> Tensor:
    """sum_w b_{u-w, w beta(s)+v}(s) (x) b_wv(s)."""
    R = data.R
    sc = data.scheme
    u, v, s = sc.b_split(i)
    one = data.field.one
    return {(sc.b(R.sub(u, w), R.add(R.mul(w, data.beta[s]), v), s), sc.b(w, v, s)): one for w in R.elements}


def bp_antipode_claim(data: ConstructionData, i: int, printed: bool = False) -> Element:
    """eta(u q(s,s^-1)) chi(-u^2 beta(s) alpha(s) - 2uv alpha(s)) b_{-u nu(s), -u beta(s) - v}(s^-1).

    The printed variant carries 2uv beta(s) alpha(s) in place of 2uv alpha(s).
    """
    R, G = data.R, data.G
    sc = data.scheme
    u, v, s = sc.b_split(i)
    si = G.inv(s)
    al, be = data.alpha[s], data.beta[s]
    if printed:
        exponent = R.neg(R.add(R.prod(u, u, be, al), R.times(2, R.prod(u, v, be, al))))
    else:
        exponent = R.sub(R.prod(u, u, be, al), R.times(2, R.prod(R.add(R.mul(u, be), v), u, al)))
    coef = data.E(R.mul(u, data.q(s, si))) * data.X(exponent)
    target = sc.b(R.neg(R.mul(u, data.nu(s))), R.sub(R.neg(R.mul(u, be)), v), si)
    return {target: coef}


def biproduct_closed_forms(bp: Biproduct) -> List[ClosedFormReport]:
    data = bp.data
    B = bp.hopf
    sc = data.scheme
    F = data.field
    n = B.dim
    unit = {sc.b(u, data.R.zero, data.G.identity): F.one for u in data.R.elements}
    unit_ok = B.one == unit
    return [
        compare_closed_form(
            "biproduct multiplication", pair_cases(n),
            lambda k: B.algebra.basis_product(*k), lambda k: bp_mult_claim(data, *k),
        ),
        compare_closed_form(
            "biproduct comultiplication", range(n),
            lambda i: B.coalgebra.comult[i], lambda i: bp_comult_claim(data, i),
        ),
        compare_closed_form(
            "biproduct counit", range(n),
            lambda i: B.coalgebra.counit[i], lambda i: F.one if sc.b_split(i)[0] == data.R.zero else F.zero,
        ),
        ClosedFormReport("biproduct unit", [] if unit_ok else [()], 1),
        compare_closed_form(
            "biproduct antipode", range(n),
            lambda i: B.antipode.columns[i], lambda i: bp_antipode_claim(data, i),
        ),
        compare_closed_form(
            "biproduct antipode (printed)", range(n),
            lambda i: B.antipode.columns[i], lambda i: bp_antipode_claim(data, i, printed=True),
        ),
    ]


def biproduct_integrals(bp: Biproduct) -> Tuple[IntegralData, VerificationReport]:
    """Integrals in and on B; both are nonzero on 1 and eps since B is semisimple and cosemisimple."""
    integrals = find_integral(bp.hopf)
    return integrals, integral_verify(bp.hopf, integrals)


# extensions

def coinvariants(B: HopfData, pi: LinearMap, Q: HopfData) -> List[Vector]:
    """A basis of {b in B : (id (x) pi) Delta(b) = b (x) 1}."""
    F = B.field
    rows: Dict[Tuple[int, int], Vector] = {}
    for i, delta in enumerate(B.coalgebra.comult):
        for (a, b), c in delta.items():
            for k, v in pi.columns[b].items():
                add_into(rows.setdefault((a, k), {}), c * v, {i: F.one})
        for k, v in Q.one.items():
            add_into(rows.setdefault((i, k), {}), -v, {i: F.one})
    return kernel([row for row in rows.values() if row], B.dim, F)


def exact_sequence_report(
    K: HopfData,
    iota: LinearMap,
    B: HopfData,
    pi: LinearMap,
    Q: HopfData,
) -> VerificationReport:
    """K -> B -> Q: iota and pi are Hopf maps and the pi-coinvariants are exactly iota(K)."""
    report = VerificationReport(f"{K.name} -> {B.name} -> {Q.name}")
    report.merge(is_hopf_map(iota, K, B), "iota.")
    report.merge(is_hopf_map(pi, B, Q), "pi.")
    injective = len(kernel(_rows_of(iota), K.dim, K.field)) == 0
    report.add(CheckResult("iota injective", injective, None if injective else (), 1, 1))
    surjective = {k for col in pi.columns for k in col} == set(range(Q.dim))
    report.add(CheckResult("pi surjective", surjective, None if surjective else (), 1, 1))

    space = coinvariants(B, pi, Q)
    images = list(iota.columns)
    contained = all(in_span(x, space, B.field) for x in images)
    same_dim = len(space) == K.dim
    ok = contained and same_dim
    report.add(CheckResult(
        "coinvariants = iota(K)", ok, None if ok else (len(space),), 1, 1,
        detail=f"coinvariant dimension {len(space)}",
    ))
    report.facts["coinvariant_dim"] = len(space)
    logger.info(f"Extension {report.subject}: coinvariant dimension {len(space)}")
    return report


def _rows_of(f: LinearMap) -> List[Vector]:
    """Rows of the matrix of f, as vectors over its input basis."""
    rows: Dict[int, Vector] = {}
    for j, col in enumerate(f.columns):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    return list(rows.values())


def biproduct_extension(bp: Biproduct) -> Tuple[LinearMap, LinearMap, VerificationReport]:
    """iota: e_u -> b_u0(1) and pi: b_uv(s) -> delta_{u0} (s, v) into K[G x R]."""
    data = bp.data
    R, G = data.R, data.G
    F = data.field
    sc = data.scheme
    K = function_algebra(R.additive, F)
    GR = direct_product(G, R.additive)
    Q = group_algebra(GR, F)
    r = R.order
    iota = LinearMap.from_monomial(F, [(sc.b(u, R.zero, G.identity), F.one) for u in R.elements], dim_out=bp.dim)
    pi = LinearMap.from_function(
        bp.dim, F,
        lambda i: {sc.b_split(i)[2] * r + sc.b_split(i)[1]: F.one} if sc.b_split(i)[0] == R.zero else {},
        dim_out=Q.dim,
    )
    return iota, pi, exact_sequence_report(K, iota, bp.hopf, pi, Q)


# crossed products

def crossed_product_check(
    H: HopfData,
    phi: Callable[[int, int], int],
    n_points: int,
    X: FiniteGroup,
    act: Callable[[int, int], int],
    rho: Callable[[int, int, int], CycElement],
    name: str = "crossed product",
) -> VerificationReport:
    """Check Phi(k, x) Phi(k', y) = delta_{k, x.k'} rho_k(x, y) Phi(k, xy) on basis vectors and the cocycle identity of rho."""
    report = VerificationReport(f"{name} of {H.name}")
    F = H.field
    points = range(n_points)

    def product_rule(k: int, x: int, k2: int, y: int) -> bool:
        lhs = H.algebra.basis_product(phi(k, x), phi(k2, y))
        if act(x, k2) != k:
            return not lhs
        return lhs == scaled({phi(k, X.mul(x, y)): F.one}, rho(k, x, y))

    report.add(scan(
        "crossed product multiplication",
        [(k, x, k2, y) for k in points for x in X.elements for k2 in points for y in X.elements],
        product_rule,
    ))
    report.add(cocycle_identity(n_points, X, act, rho))
    return report


def cocycle_identity(
    n_points: int,
    X: FiniteGroup,
    act: Callable[[int, int], int],
    rho: Callable[[int, int, int], CycElement],
) -> CheckResult:
    """rho_k(x, y) rho_k(xy, z) = rho_{x^-1.k}(y, z) rho_k(x, yz)."""

    def identity(k: int, x: int, y: int, z: int) -> bool:
        lhs = rho(k, x, y) * rho(k, X.mul(x, y), z)
        return lhs == rho(act(X.inv(x), k), y, z) * rho(k, x, X.mul(y, z))

    cases = [(k, x, y, z) for k in range(n_points) for x in X.elements for y in X.elements for z in X.elements]
    return scan("cocycle identity", cases, identity)


def section_cocycle(
    H: HopfData,
    phi: Callable[[int, int], int],
    n_points: int,
    X: FiniteGroup,
) -> List[List[List[CycElement]]]:
    """rho_k(x, y) read off gamma(x) gamma(y) with gamma(x) = sum_k Phi(k, x)."""
    F = H.field
    gamma = [{phi(k, x): F.one for k in range(n_points)} for x in X.elements]
    table = [[[F.zero] * X.order for _ in X.elements] for _ in range(n_points)]
    for x in X.elements:
        for y in X.elements:
            prod = H.mul(gamma[x], gamma[y])
            xy = X.mul(x, y)
            for k in range(n_points):
                table[k][x][y] = prod.get(phi(k, xy), F.zero)
    return table


def tau(data: ConstructionData, u: int, s: int, v: int, t: int, w: int) -> CycElement:
    """tau_u(s, v; t, w) = eta(u q(s,t)) chi(2uv nu(s) alpha(t) + u^2 nu(s) beta(s) alpha(t))."""
    R = data.R
    exponent = R.add(
        R.times(2, R.prod(u, v, data.nu(s), data.alpha[t])),
        R.prod(u, u, data.nu(s), data.beta[s], data.alpha[t]),
    )
    return data.E(R.mul(u, data.q(s, t))) * data.X(exponent)


def biproduct_crossed_product(bp: Biproduct) -> VerificationReport:
    """B as the crossed product of K^R by G x R with cocycle tau and (s, v).u = u nu(s^-1)."""
    data = bp.data
    R, G = data.R, data.G
    sc = data.scheme
    r = R.order
    GR = direct_product(G, R.additive)

    def phi(u: int, x: int) -> int:
        s, v = divmod(x, r)
        return sc.b(u, v, s)

    def act(x: int, u: int) -> int:
        return R.mul(u, data.nu_inv(x // r))

    def rho(u: int, x: int, y: int) -> CycElement:
        s, v = divmod(x, r)
        t, w = divmod(y, r)
        return tau(data, u, s, v, t, w)

    report = crossed_product_check(bp.hopf, phi, r, GR, act, rho, name="tau crossed product")
    derived = section_cocycle(bp.hopf, phi, r, GR)
    same = all(derived[u][x][y] == rho(u, x, y) for u in R.elements for x in GR.elements for y in GR.elements)
    report.add(CheckResult("tau from section", same, None if same else (), 1, 1))
    return report

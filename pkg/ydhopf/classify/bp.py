"""
The dimension-p^3 biproducts B_p(a, b, q) = A_p(a id, b id, q) (x) K[Z_p].

In the basis b_ijk = e_i x_j (x) d_k with d_k = 1/p sum_l zeta^(-kl) c_l:

    b_ijk b_lmn  = delta_{k-n, alm} delta_il zeta^(i q(j,m)) zeta^(ab jm i^2/2) b_{i,j+m,n}
    1            = sum_{i,k} b_i0k
    Delta(b_ijk) = sum_{l,m} zeta^(b(i-l)jm) b_ljm (x) b_{i-l,j,k-m}
    eps(b_ijk)   = delta_i0 delta_k0
    S(b_ijk)     = zeta^(bjk) zeta^(ab i^2 j^2/2) zeta^(i q(j,-j)) b_{-i,-j,-k-aij}

The biproduct is built definitionally and transported to this basis; the
closed forms are diffed against it. B_p(a, b, q) and B_p(a', b', q') are
isomorphic iff a' = ta/r, b' = b/(rt) and q ~ r q' for units r, t, with
b_ijk -> zeta^(i v(j)) b'_{ri,j,tk} as the explicit map.
"""

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..algebra.cohom import Cocycle2, carry_cocycle, cohomologous2, h2_class, scale, verify_cocycle2
from ..algebra.cyclonum import CycElement, CycField, get_field, half
from ..constructions.ag import a_p, build_AG
from ..constructions.apm import build_Apm
from ..constructions.base import ClosedFormReport, YDHopfAlgebra, compare_closed_form
from ..constructions.biproduct import build_biproduct
from ..errors import InputError, VerificationFailure
from ..hopf.grouplikes import grouplikes
from ..hopf.structure import Element, HopfData, LinearMap, Tensor, add_into, transport
from ..hopf.verify import is_isomorphism, pair_cases, scan, single_cases
from ..hopf.yd import grouplike_check
from ..utils.report import CheckResult, VerificationReport
from ..utils.unionfind import find_orbits

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class BpParams:
    """(p, a, b, q) with a, b units of Z_p and q a normalized Z_p-valued cocycle on Z_p."""

    p: int
    a: int
    b: int
    q: Cocycle2

    def __post_init__(self):
        if self.p % 2 == 0:
            raise InputError(f"B_p needs p odd, got {self.p}")
        if self.a % self.p == 0 or self.b % self.p == 0:
            raise InputError(f"B_p needs a, b nonzero mod {self.p}, got a={self.a}, b={self.b}")
        if self.q.module.group.order != self.p or self.q.module.module.order != self.p:
            raise InputError("q must be a Z_p-valued cocycle on Z_p")

    @classmethod
    def carry(cls, p: int, a: int, b: int, n: int) -> "BpParams":
        return cls(p, a % p, b % p, carry_cocycle(p, p, n))

    @property
    def n(self) -> int:
        """The cohomology class of q."""
        return h2_class(self.q)

    @property
    def triple(self) -> Triple:
        return self.a, self.b, self.n

    @property
    def name(self) -> str:
        return f"B_{self.p}({self.a},{self.b},q{self.n})"


def bp_index(p: int, i: int, j: int, k: int) -> int:
    return ((i % p) * p + j % p) * p + k % p


def bp_split(p: int, x: int) -> Triple:
    return x // (p * p), (x // p) % p, x % p


@dataclass
class BpDistinguished:
    """g_Z = u (x) c_0, g_N = 1 (x) c_1, the character chi and Omega = (id (x) chi) Delta."""

    g_Z: Element
    g_N: Element
    chi: List[CycElement]
    Omega: LinearMap


@dataclass
class BpAlgebra:
    params: BpParams
    hopf: HopfData
    distinguished: BpDistinguished
    closed_forms: List[ClosedFormReport] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.hopf.dim


def bp_base(params: BpParams, field: CycField) -> YDHopfAlgebra:
    """A_p(a id, b id, q), the YD Hopf algebra whose biproduct is B_p(a, b, q)."""
    p, a, b = params.p, params.a, params.b
    base = a_p(p, 1, 0, field)
    data = replace(
        base,
        alpha=tuple((a * s) % p for s in base.G.elements),
        beta=tuple((b * s) % p for s in base.G.elements),
        q=Cocycle2(base.module, params.q.table),
        name=f"A_{p}({a}id,{b}id,q)",
    )
    return build_AG(data, compare=False)


def build_Bp(params: BpParams, field: Optional[CycField] = None, compare: bool = True) -> BpAlgebra:
    """B_p(a, b, q) in the basis b_ijk."""
    p = params.p
    F = field or get_field(p)
    if F.N % p:
        raise InputError(f"B_{p} needs a primitive {p}-th root of unity; conductor {F.N}")
    if not verify_cocycle2(params.q):
        raise InputError(f"{params.name}: q is not a cocycle")
    zeta = F.root_of_order(p)

    biproduct = build_biproduct(bp_base(params, F), compare=False)
    P = fourier_change(p, F, zeta)
    dim = p**3
    labels = [f"b{i}{j}{k}" for i in range(p) for j in range(p) for k in range(p)]
    hopf = transport(biproduct.hopf, P, name=params.name, labels=labels)

    Q = P.inverse()
    one = F.one
    u = {(i * p) * p: zeta**i for i in range(p)}
    g_N = {(i * p) * p + 1: one for i in range(p)}
    # omega(e_i x_j) = delta_i0 zeta^j, paired with eps on K[Z_p]
    chi_old = [zeta ** ((x // p) % p) if x < p * p else F.zero for x in range(dim)]
    chi = [sum((c * chi_old[x] for x, c in P.columns[k].items()), F.zero) for k in range(dim)]
    Omega = LinearMap(F, [_omega(hopf, chi, k) for k in range(dim)])
    built = BpAlgebra(params, hopf, BpDistinguished(Q.apply(u), Q.apply(g_N), chi, Omega))
    if compare:
        built.closed_forms.extend(bp_closed_forms(built, zeta))
    logger.info(f"Built {params.name} (dim {dim})")
    return built


def fourier_change(p: int, F: CycField, zeta: CycElement) -> LinearMap:
    """Columns b_ijk written in the basis e_i x_j (x) c_l."""
    inv_p = F.rational(1) / p
    columns = []
    for a in range(p * p):
        for k in range(p):
            columns.append({a * p + l: inv_p * zeta ** (-k * l) for l in range(p)})
    return LinearMap(F, columns)


def _omega(H: HopfData, chi: List[CycElement], k: int) -> Element:
    out: Element = {}
    for (x, y), c in H.coalgebra.comult[k].items():
        if not chi[y].is_zero():
            add_into(out, c * chi[y], {x: H.field.one})
    return out


# closed forms


def bp_mult_claim(params: BpParams, zeta: CycElement, x: int, y: int) -> Element:
    p, a, b, q = params.p, params.a, params.b, params.q
    i, j, k = bp_split(p, x)
    l, m, n = bp_split(p, y)
    if i != l or (k - n - a * l * m) % p:
        return {}
    exponent = i * q(j, m) + half((a * b * j * m * i * i) % p, p)
    return {bp_index(p, i, j + m, n): zeta**exponent}


def bp_unit_claim(params: BpParams, F: CycField) -> Element:
    p = params.p
    return {bp_index(p, i, 0, k): F.one for i in range(p) for k in range(p)}


def bp_comult_claim(params: BpParams, zeta: CycElement, x: int) -> Tensor:
    p, b = params.p, params.b
    i, j, k = bp_split(p, x)
    return {
        (bp_index(p, l, j, m), bp_index(p, i - l, j, k - m)): zeta ** (b * (i - l) * j * m)
        for l in range(p) for m in range(p)
    }


def bp_antipode_claim(params: BpParams, zeta: CycElement, x: int) -> Element:
    p, a, b, q = params.p, params.a, params.b, params.q
    i, j, k = bp_split(p, x)
    exponent = b * j * k + half((a * b * i * i * j * j) % p, p) + i * q(j, (-j) % p)
    return {bp_index(p, -i, -j, -k - a * i * j): zeta**exponent}


def bp_closed_forms(built: BpAlgebra, zeta: CycElement) -> List[ClosedFormReport]:
    H, params = built.hopf, built.params
    p, F = params.p, H.field
    dim = H.dim
    singles = list(range(dim))
    reports = [
        compare_closed_form(
            "B_p multiplication", pair_cases(dim),
            lambda key: H.algebra.basis_product(*key), lambda key: bp_mult_claim(params, zeta, *key),
        ),
        compare_closed_form("B_p unit", [0], lambda _: H.one, lambda _: bp_unit_claim(params, F)),
        compare_closed_form(
            "B_p comultiplication", singles,
            lambda x: H.coalgebra.comult[x], lambda x: bp_comult_claim(params, zeta, x),
        ),
        compare_closed_form(
            "B_p counit", singles,
            lambda x: H.coalgebra.counit[x],
            lambda x: F.one if bp_split(p, x)[0] == 0 and bp_split(p, x)[2] == 0 else F.zero,
        ),
        compare_closed_form(
            "B_p antipode (printed)", singles,
            lambda x: H.antipode.columns[x], lambda x: bp_antipode_claim(params, zeta, x),
        ),
        compare_closed_form(
            "B_p character chi", singles,
            lambda x: built.distinguished.chi[x],
            lambda x: zeta ** bp_split(p, x)[1] if bp_split(p, x)[0] == 0 and bp_split(p, x)[2] == 0 else F.zero,
        ),
    ]
    return reports


# distinguished elements


def verify_distinguished(built: BpAlgebra, exhaustive_grouplikes: bool = False) -> VerificationReport:
    """g_Z central grouplike, g_N non-central grouplike, chi a central character,
    the eigen-equations of b_ijk and the grouplike group {g_Z^i g_N^j}."""
    H, dist = built.hopf, built.distinguished
    p, F = built.params.p, H.field
    zeta = F.root_of_order(p)
    dim = H.dim
    report = VerificationReport(f"distinguished elements of {H.name}")
    gZ, gN, chi = dist.g_Z, dist.g_N, dist.chi

    report.add(CheckResult(name="g_Z grouplike", ok=grouplike_check(H, gZ), checked=1, total=1))
    report.add(CheckResult(name="g_N grouplike", ok=grouplike_check(H, gN), checked=1, total=1))
    report.add(scan("g_Z central", single_cases(dim), lambda x: H.mul(gZ, H.basis(x)) == H.mul(H.basis(x), gZ)))
    moving = [x for x in range(dim) if H.mul(gN, H.basis(x)) != H.mul(H.basis(x), gN)]
    report.add(
        CheckResult.passed("g_N not central", checked=1)
        if moving
        else CheckResult.failed("g_N not central", (), detail="g_N commutes with every basis vector")
    )

    def chi_of(x: Element) -> CycElement:
        return sum((c * chi[k] for k, c in x.items()), F.zero)

    report.add(
        scan("chi multiplicative", pair_cases(dim), lambda x, y: chi_of(H.algebra.basis_product(x, y)) == chi[x] * chi[y])
    )
    report.add(CheckResult(name="chi unital", ok=chi_of(H.one) == F.one, checked=1, total=1))

    def central(x: int) -> bool:
        left: Element = {}
        right: Element = {}
        for (y, z), c in H.coalgebra.comult[x].items():
            add_into(left, c * chi[y], {z: F.one})
            add_into(right, c * chi[z], {y: F.one})
        return left == right

    report.add(scan("chi central in the dual", single_cases(dim), central))

    triples = set()

    def eigen(x: int) -> bool:
        i, j, k = bp_split(p, x)
        e = H.basis(x)
        triples.add((i, j, k))
        return (
            H.mul(gZ, e) == {x: zeta**i}
            and H.mul(e, gN) == {x: zeta**k}
            and dist.Omega.columns[x] == {x: zeta**j}
        )

    report.add(scan("eigen-equations", single_cases(dim), eigen))
    report.add(
        CheckResult(name="simultaneous eigenspaces one-dimensional", ok=len(triples) == dim, checked=dim, total=dim)
    )

    group = [H.mul(H.algebra.power(gZ, i), H.algebra.power(gN, j)) for i in range(p) for j in range(p)]
    distinct = len({tuple(sorted(g.items())) for g in group}) == p * p
    elementary = (
        H.algebra.power(gZ, p) == H.one
        and H.algebra.power(gN, p) == H.one
        and H.mul(gZ, gN) == H.mul(gN, gZ)
    )
    report.add(
        CheckResult(
            name="grouplikes g_Z^i g_N^j",
            ok=distinct and elementary and all(grouplike_check(H, g) for g in group),
            checked=p * p,
            total=p * p,
        )
    )
    report.facts["grouplike_count"] = p * p
    if exhaustive_grouplikes:
        count = len(grouplikes(H))
        report.facts["grouplike_count"] = count
        report.add(CheckResult(name="no other grouplikes", ok=count == p * p, checked=1, total=1))
    return report


# isomorphisms


@dataclass
class BpWitness:
    """(r, t, v) and the map b_ijk -> zeta^(i v(j)) b'_{ri,j,tk}."""

    r: int
    t: int
    v: Tuple[int, ...]
    map: Optional[LinearMap] = None
    report: Optional[VerificationReport] = None

    def to_dict(self) -> Dict[str, object]:
        return {"r": self.r, "t": self.t, "v": list(self.v)}


def bp_map(p: int, witness: BpWitness, F: CycField) -> LinearMap:
    zeta = F.root_of_order(p)
    images = []
    for x in range(p**3):
        i, j, k = bp_split(p, x)
        images.append((bp_index(p, witness.r * i, j, witness.t * k), zeta ** (i * witness.v[j])))
    return LinearMap.from_monomial(F, images)


def bp_candidates(P: BpParams, P2: BpParams, search_bound: int = 10**6) -> Optional[BpWitness]:
    """First (r, t) with a' = ta/r, b' = b/(rt) and r q' - q a coboundary."""
    if P.p != P2.p:
        return None
    p = P.p
    for r in range(1, p):
        r_inv = pow(r, -1, p)
        for t in range(1, p):
            if P2.a != (t * P.a * r_inv) % p or P2.b != (P.b * pow(r * t, -1, p)) % p:
                continue
            s = cohomologous2(P.q, scale(P2.q, r), search_bound=search_bound)
            if s is not None:
                return BpWitness(r, t, tuple((-x) % p for x in s))
    return None


def iso_test_Bp(
    P: BpParams,
    P2: BpParams,
    field: Optional[CycField] = None,
    verify: bool = True,
    search_bound: int = 10**6,
) -> Optional[BpWitness]:
    """The (r, t) search; with verify the explicit map is checked to be a Hopf isomorphism."""
    witness = bp_candidates(P, P2, search_bound)
    if witness is None or not verify:
        return witness
    F = field or get_field(P.p)
    source, target = build_Bp(P, F, compare=False), build_Bp(P2, F, compare=False)
    witness.map = bp_map(P.p, witness, F)
    witness.report = is_isomorphism(witness.map, source.hopf, target.hopf)
    if not witness.report.ok:
        raise VerificationFailure(f"{P.name} -> {P2.name}: explicit map failed {witness.report.failures[0].name}")
    logger.debug(f"{P.name} ~ {P2.name} via r={witness.r}, t={witness.t}")
    return witness


@dataclass
class BpClassification:
    p: int
    orbits: Dict[Triple, List[Triple]]

    @property
    def count(self) -> int:
        return len(self.orbits)

    @property
    def lengths(self) -> List[int]:
        return sorted((len(points) for points in self.orbits.values()), reverse=True)

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "count": self.count,
            "orbit_lengths": self.lengths,
            "representatives": [list(rep) for rep in self.orbits],
        }


def orbit_action(p: int, g: Tuple[int, int], x: Triple) -> Triple:
    """(r, t).(a, b, n) = (ta/r, b/(rt), n/r)."""
    r, t = g
    a, b, n = x
    r_inv = pow(r, -1, p)
    return (t * a * r_inv) % p, (b * pow(r * t, -1, p)) % p, (n * r_inv) % p


def count_Bp_classes(p: int, cross_check: bool = False, search_bound: int = 10**6) -> BpClassification:
    """Orbits of (Z_p^x)^2 on M = Z_p^x x Z_p^x x Z_p by union-find."""
    if p % 2 == 0:
        raise InputError(f"p must be odd, got {p}")
    units = range(1, p)
    space = [(a, b, n) for a in units for b in units for n in range(p)]
    gens = [(r, t) for r in units for t in units]
    result = BpClassification(p, find_orbits(gens, space, lambda g, x: orbit_action(p, g, x)))
    if cross_check:
        _cross_check(result, search_bound)
    logger.info(f"p = {p}: {result.count} orbits, lengths {result.lengths}")
    return result


def _cross_check(result: BpClassification, search_bound: int) -> None:
    p = result.p
    params = {x: BpParams.carry(p, *x) for points in result.orbits.values() for x in points}
    reps = list(result.orbits)
    for i, x in enumerate(reps):
        for y in reps[i + 1:]:
            if bp_candidates(params[x], params[y], search_bound) is not None:
                raise VerificationFailure(f"orbit representatives {x} and {y} are isomorphic")
        for y in result.orbits[x]:
            if bp_candidates(params[x], params[y], search_bound) is None:
                raise VerificationFailure(f"{y} is not isomorphic to its orbit representative {x}")


# p = 2


@dataclass
class BpmIsomorphism:
    plus: HopfData
    minus: HopfData
    map: LinearMap
    report: VerificationReport
    closed_forms: List[ClosedFormReport] = field(default_factory=list)


def _b2(i: int, j: int, k: int) -> int:
    return ((i % 2) * 2 + j % 2) * 2 + k % 2


def build_Bpm(sign: str, field: Optional[CycField] = None) -> Tuple[HopfData, List[ClosedFormReport]]:
    """B_+ or B_- = A_+- (x) K[Z_2] in the basis b_ijk, with its closed forms diffed."""
    F = field or get_field(4)
    biproduct = build_biproduct(build_Apm(sign, F, compare=False), compare=False)
    minus_one = -F.one
    P = fourier_change(2, F, minus_one)
    labels = [f"b{i}{j}{k}" for i in range(2) for j in range(2) for k in range(2)]
    hopf = transport(biproduct.hopf, P, name=f"B_{sign}", labels=labels)
    sigma = _sigma_pm(sign, F)

    def mult(x: int, y: int) -> Element:
        i, j, k = bp_split(2, x)
        l, m, n = bp_split(2, y)
        if i != l or (k - n - l * m) % 2:
            return {}
        return {_b2(i, j + m, n): sigma[i][j][m]}

    def comult(x: int) -> Tensor:
        i, j, k = bp_split(2, x)
        return {
            (_b2(l, j, m), _b2(i - l, j, k - m)): minus_one ** ((i - l) * j * m)
            for l in range(2) for m in range(2)
        }

    def antipode(x: int) -> Element:
        i, j, k = bp_split(2, x)
        return {_b2(-i, -j, -k - i * j): minus_one ** (i * j * k) * sigma[i][j][j].inverse()}

    dim = 8
    reports = [
        compare_closed_form("B_pm multiplication", pair_cases(dim), lambda key: hopf.algebra.basis_product(*key), lambda key: mult(*key)),
        compare_closed_form("B_pm comultiplication", range(dim), lambda x: hopf.coalgebra.comult[x], comult),
        compare_closed_form(
            "B_pm counit", range(dim),
            lambda x: hopf.coalgebra.counit[x],
            lambda x: F.one if bp_split(2, x)[0] == 0 and bp_split(2, x)[2] == 0 else F.zero,
        ),
        compare_closed_form("B_pm antipode (printed)", range(dim), lambda x: hopf.antipode.columns[x], antipode),
    ]
    return hopf, reports


def _sigma_pm(sign: str, F: CycField) -> List[List[List[CycElement]]]:
    """sigma_0 = 1 and sigma_1(j, m) = iota^q(j, m) with q(1, 1) = 1 (+) or 3 (-)."""
    iota = F.root_of_order(4)
    top = 1 if sign == "+" else 3
    one = F.one
    return [
        [[one, one], [one, one]],
        [[one, one], [one, iota**top]],
    ]


def bplus_bminus_iso(field: Optional[CycField] = None) -> BpmIsomorphism:
    """b+_ijk -> sigma_1^+(i, j) b-_{i,j,k+i}, verified as a Hopf isomorphism B_+ -> B_-."""
    F = field or get_field(4)
    if F.N % 4:
        raise InputError(f"B_+ and B_- need a fourth root of unity; conductor {F.N}")
    plus, plus_forms = build_Bpm("+", F)
    minus, minus_forms = build_Bpm("-", F)
    sp, sm = _sigma_pm("+", F), _sigma_pm("-", F)
    images = []
    for x in range(8):
        i, j, k = bp_split(2, x)
        images.append((_b2(i, j, k + i), sp[1][i][j]))
    f = LinearMap.from_monomial(F, images)
    report = is_isomorphism(f, plus, minus)
    report.add(CheckResult(name="unit preserved", ok=f.apply(plus.one) == minus.one, checked=1, total=1))

    minus_one = -F.one
    cases = [(i, j, k) for i in range(2) for j in range(2) for k in range(2)]
    report.add(
        scan("sigma_i^-(j,k) = (-1)^(ijk) sigma_i^+(j,k)", cases, lambda i, j, k: sm[i][j][k] == minus_one ** (i * j * k) * sp[i][j][k])
    )
    report.add(
        scan(
            "sigma_1^+(i,j+k) = (-1)^(ijk) sigma_1^+(i,j) sigma_1^+(i,k)",
            cases,
            lambda i, j, k: sp[1][i][(j + k) % 2] == minus_one ** (i * j * k) * sp[1][i][j] * sp[1][i][k],
        )
    )
    report.facts["printed helper with sigma_1^- on the left holds"] = all(sm[1][i][(j + k) % 2] == minus_one ** (i * j * k) * sp[1][i][j] * sp[1][i][k] for i, j, k in cases)
    logger.info(f"B_+ -> B_-: {'isomorphism' if report.ok else 'not an isomorphism'}")
    return BpmIsomorphism(plus, minus, f, report, plus_forms + minus_forms)

"""
Recovering (G, nu, alpha, beta, q) from a cocommutative cosemisimple YD Hopf
algebra A over K[Z_p].

The grouplikes of A contain an invariant, coinvariant u of order p with
phi(g) = u^alpha g and psi(g) = u^beta g for every grouplike g. They are not
closed under the product, but they are under multiplication by powers of u.
The u-orbits are the grouplikes of the quotient A/AU+, a group G. With
representatives g_s (g_1 = 1) the elements

    e_i(s) = 1/p sum_j zeta^(-ij) u^j g_s

multiply as e_i(s) e_j(t) = delta_{i nu(s), j} sigma_i(s,t) e_i(st), and q is
read off sigma_1 by a discrete logarithm. e_i x_s -> e_i(s) is then an
isomorphism A_G(alpha, beta, q) -> A.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from loguru import logger

from ..algebra.cohom import Cocycle2, ring_module, trivial_module, verify_cocycle2
from ..algebra.cyclonum import CycElement, half
from ..algebra.finitestruct import AbelianCharacter, FiniteGroup, UnitHom, cyclic_group, ring_zn
from ..algebra.linalg import coordinates
from ..constructions.ag import build_AG
from ..constructions.apm import EvenData
from ..constructions.base import ConstructionData, YDHopfAlgebra
from ..errors import InputError, VerificationFailure
from ..hopf.grouplikes import grouplikes
from ..hopf.structure import Element, HopfData, LinearMap, add_into, scaled
from ..hopf.verify import is_isomorphism
from ..hopf.yd import Triviality, YDData, triviality_test
from ..utils.report import CheckResult, VerificationReport
from .morphisms import yd_map_checks


@dataclass
class Decomposition:
    """Recovered data plus everything the recovery used."""

    data: Union[ConstructionData, EvenData]
    u: Element
    representatives: List[Element]
    orbits: List[List[int]]
    quotient: FiniteGroup
    fourier: List[List[Element]]
    sigma: List[List[List[CycElement]]]
    iso: Optional[LinearMap] = None
    report: VerificationReport = field(default_factory=lambda: VerificationReport("decomposition"))

    @property
    def p(self) -> int:
        return len(self.fourier)

    def to_dict(self) -> Dict[str, object]:
        data = self.data
        return {
            "p": self.p,
            "G": {"order": self.quotient.order, "table": [list(row) for row in self.quotient.table]},
            "nu": list(data.nu.values) if isinstance(data, ConstructionData) else [1] * self.quotient.order,
            "alpha": list(data.alpha),
            "beta": list(data.beta),
            "q": [list(row) for row in data.q.table],
            "report": self.report.to_dict(),
        }


def _key(x: Element) -> Tuple:
    return tuple(sorted(x.items()))


def ag_grouplikes(built: YDHopfAlgebra) -> List[Element]:
    """sum_u zeta_n^(ku) e_u x_s over k in Z_n and s in G, for A_G over Z_n."""
    data = built.data
    if data is None or data.R.modulus is None:
        raise ValueError("ag_grouplikes needs an A_G over Z_n")
    F, n, sc = data.field, data.R.order, data.scheme
    return [
        {sc.a(u, s): F.root_of_order(n, (k * u) % n) for u in data.R.elements}
        for s in data.G.elements
        for k in range(n)
    ]


def fourier_basis(A: HopfData, u: Element, g: Element, p: int, zeta: CycElement) -> List[Element]:
    """e_i = 1/p sum_j zeta^(-ij) u^j g for i in Z_p."""
    F = A.field
    shifted = [A.mul(A.algebra.power(u, j), g) for j in range(p)]
    inv_p = F.rational(1) / p
    out = []
    for i in range(p):
        e: Element = {}
        for j in range(p):
            add_into(e, inv_p * zeta ** (-i * j), shifted[j])
        out.append(e)
    return out


def _ratio(x: Element, y: Element) -> Optional[CycElement]:
    """c with x = c y, or None."""
    if not y:
        return None
    k = next(iter(y))
    c = x.get(k)
    if c is None:
        return None
    return c / y[k] if scaled(y, c / y[k]) == x else None


@dataclass
class _Grouplikes:
    """The grouplikes of A, with phi and psi as permutations of them.

    G(A) is not closed under the product of A. Products with the powers of an
    invariant, coinvariant grouplike u are, so only those are looked up.
    """

    A: HopfData
    elements: List[Element]
    index: Dict[Tuple, int]
    one: int
    phi: List[int]
    psi: List[int]

    def __len__(self) -> int:
        return len(self.elements)

    def find(self, x: Element) -> Optional[int]:
        return self.index.get(_key(x))


def _grouplike_set(A: HopfData, yd: YDData, gls: Sequence[Element]) -> _Grouplikes:
    index = {_key(g): k for k, g in enumerate(gls)}

    def find(x: Element, what: str) -> int:
        k = index.get(_key(x))
        if k is None:
            raise VerificationFailure(f"{what} is not among the grouplikes")
        return k

    return _Grouplikes(
        A,
        list(gls),
        index,
        find(A.one, "the unit"),
        [find(yd.phi.apply(g), "a phi image") for g in gls],
        [find(yd.psi.apply(g), "a psi image") for g in gls],
    )


@dataclass
class _UChoice:
    c: int
    shifts: List[List[int]]  # shifts[g][j] is the index of u^j g
    nu: List[int]
    alpha: List[int]
    beta: List[int]


def _u_powers(GL: _Grouplikes, c: int, p: int) -> Optional[List[Element]]:
    """1, u, ..., u^(p-1) when u = GL.elements[c] has order exactly p."""
    A = GL.A
    powers = [A.one]
    for _ in range(p):
        powers.append(A.mul(powers[-1], GL.elements[c]))
    if len({_key(x) for x in powers[:p]}) != p or _key(powers[p]) != _key(A.one):
        return None
    return powers[:p]


def _find_u(GL: _Grouplikes, p: int) -> Optional[_UChoice]:
    """Lowest-index u with exponent tables nu, alpha, beta over all grouplikes."""
    A = GL.A
    for c in range(len(GL)):
        if c == GL.one or GL.phi[c] != c or GL.psi[c] != c:
            continue
        powers = _u_powers(GL, c, p)
        if powers is None:
            continue
        u = GL.elements[c]
        shifts: List[List[int]] = []
        nu, alpha, beta = [], [], []
        for k, g in enumerate(GL.elements):
            left = [GL.find(A.mul(x, g)) for x in powers]
            if None in left:
                break
            right = {GL.find(A.mul(g, x)) for x in powers}
            where = {h: j for j, h in enumerate(left)}
            a, b, v = where.get(GL.phi[k]), where.get(GL.psi[k]), where.get(GL.find(A.mul(g, u)))
            if a is None or b is None or v is None or GL.phi[k] not in right or GL.psi[k] not in right:
                break
            shifts.append(left)
            nu.append(v)
            alpha.append(a)
            beta.append(b)
        else:
            return _UChoice(c, shifts, nu, alpha, beta)
    return None


def _quotient_group(GL: _Grouplikes, reps: List[int], orbit_of: Dict[int, int]) -> FiniteGroup:
    """The group of classes in A/AU+: g_s g_t is spanned by the grouplikes of a single u-orbit."""
    A, F = GL.A, GL.A.field
    m = len(reps)
    table = []
    for s in range(m):
        row = []
        for t in range(m):
            product = A.mul(GL.elements[reps[s]], GL.elements[reps[t]])
            coords = coordinates(GL.elements, product, F)
            classes = {orbit_of[h] for h, coef in enumerate(coords) if not coef.is_zero()}
            if len(classes) != 1:
                raise VerificationFailure(f"g_{s} g_{t} does not lie over a single u-orbit")
            row.append(classes.pop())
        table.append(row)
    logger.debug(f"Quotient by the u-orbits has order {m}")
    return FiniteGroup(table, name="G", labels=[f"g{s}" for s in range(m)])


def _canonical_cyclic(
    quotient: FiniteGroup, reps: List[int], orbits: List[List[int]]
) -> Tuple[FiniteGroup, List[int], List[List[int]]]:
    """Relabel a cyclic quotient as Z_m along the powers of its lowest-index generator."""
    m = quotient.order
    gen = next((s for s in quotient.elements if quotient.element_order(s) == m), None)
    if gen is None:
        return quotient, reps, orbits
    order = [quotient.power(gen, k) for k in range(m)]
    return cyclic_group(m), [reps[s] for s in order], [orbits[s] for s in order]


def decompose_structure(
    A: HopfData,
    yd: YDData,
    grouplike_basis: Optional[Sequence[Element]] = None,
    verify: bool = True,
) -> Decomposition:
    """Recover construction data for A; the result's iso is checked to be a YD Hopf isomorphism."""
    if not A.coalgebra.is_cocommutative():
        raise NotCocommutative(f"{A.name} is not cocommutative")
    if triviality_test(yd) is not Triviality.NONTRIVIAL:
        raise TrivialAlgebra(f"{A.name}: the YD structure is trivial")
    p, F, zeta = yd.p, A.field, yd.zeta
    gls = list(grouplike_basis) if grouplike_basis is not None else grouplikes(A)
    if len(gls) != A.dim:
        raise NoGrouplikeBasis(f"{A.name}: {len(gls)} grouplikes over Q(zeta_{F.N}) for dimension {A.dim}")
    GL = _grouplike_set(A, yd, gls)

    found = _find_u(GL, p)
    if found is None:
        raise TrivialAlgebra(f"{A.name}: no invariant coinvariant grouplike of order {p} induces phi and psi")
    c = found.c
    u = gls[c]

    orbit_of: Dict[int, int] = {}
    orbits: List[List[int]] = []
    for g in [GL.one] + [g for g in range(len(gls)) if g != GL.one]:
        if g in orbit_of:
            continue
        members = found.shifts[g]
        for x in members:
            orbit_of[x] = len(orbits)
        orbits.append(members)
    reps = [members[0] for members in orbits]
    m = len(orbits)
    quotient = _quotient_group(GL, reps, orbit_of)
    quotient, reps, orbits = _canonical_cyclic(quotient, reps, orbits)
    nu = [found.nu[r] % p for r in reps]
    alpha = [found.alpha[r] % p for r in reps]
    beta = [found.beta[r] % p for r in reps]

    report = VerificationReport(f"decomposition of {A.name}")
    report.facts["u"] = c
    report.facts["quotient_dim"] = m
    report.add(
        CheckResult.passed("dim A/AU+ = dim A / p", checked=1)
        if m * p == A.dim
        else CheckResult.failed("dim A/AU+ = dim A / p", (m, A.dim))
    )
    report.add(_orbit_constancy(orbits, found.nu, found.alpha, found.beta, p))

    fourier = [[] for _ in range(p)]
    for r in reps:
        for i, e in enumerate(fourier_basis(A, u, gls[r], p, zeta)):
            fourier[i].append(e)

    sigma = [[[F.zero] * m for _ in range(m)] for _ in range(p)]
    for i in range(p):
        for s in range(m):
            for t in range(m):
                prod = A.mul(fourier[i][s], fourier[(i * nu[s]) % p][t])
                ratio = _ratio(prod, fourier[i][quotient.mul(s, t)])
                if ratio is None:
                    raise VerificationFailure(f"e_{i}(s) e_(i nu(s))(t) is not a multiple of e_{i}(st) at {(s, t)}")
                sigma[i][s][t] = ratio
    report.add(_sigma_compatibility(sigma, nu, alpha, beta, zeta, p))

    if p == 2:
        data: Union[ConstructionData, EvenData] = _even_data(quotient, alpha, beta, sigma, F, report)
    else:
        data = _odd_data(quotient, nu, alpha, beta, sigma, zeta, p, report)
    result = Decomposition(data, u, [gls[r] for r in reps], orbits, quotient, fourier, sigma, report=report)
    if verify:
        _verify_iso(A, yd, result)
    logger.info(f"Decomposed {A.name}: |G| = {m}, u = grouplike #{c}, alpha = {alpha}, beta = {beta}")
    return result


def _orbit_constancy(orbits: List[List[int]], nu_g, alpha_g, beta_g, p: int) -> CheckResult:
    name = "exponents constant on u-orbits"
    for k, members in enumerate(orbits):
        for table in (nu_g, alpha_g, beta_g):
            if len({table[g] % p for g in members}) != 1:
                return CheckResult.failed(name, (k,), total=len(orbits))
    return CheckResult.passed(name, checked=len(orbits))


def _sigma_compatibility(sigma, nu, alpha, beta, zeta: CycElement, p: int) -> CheckResult:
    """sigma_(i+j) = zeta^(ij nu(s) beta(s) alpha(t)) sigma_i sigma_j."""
    m = len(nu)
    cases = [(i, j, s, t) for i in range(p) for j in range(p) for s in range(m) for t in range(m)]
    for i, j, s, t in cases:
        lhs = sigma[(i + j) % p][s][t]
        rhs = zeta ** (i * j * nu[s] * beta[s] * alpha[t]) * sigma[i][s][t] * sigma[j][s][t]
        if lhs != rhs:
            return CheckResult.failed("sigma compatibility", (i, j, s, t), total=len(cases))
    return CheckResult.passed("sigma compatibility", checked=len(cases))


def _dlog_table(root: CycElement, order: int) -> Dict[CycElement, int]:
    return {root**k: k for k in range(order)}


def _odd_data(G, nu, alpha, beta, sigma, zeta, p, report) -> ConstructionData:
    R = ring_zn(p)
    F = zeta.field
    logs = _dlog_table(zeta, p)
    m = G.order
    table = []
    for s in range(m):
        row = []
        for t in range(m):
            value = sigma[1][s][t] * zeta ** (-half((nu[s] * beta[s] * alpha[t]) % p, p))
            k = logs.get(value)
            if k is None:
                raise VerificationFailure(f"sigma_1{(s, t)} is not a power of zeta times the expected factor")
            row.append(k)
        table.append(tuple(row))
    nu_hom = UnitHom(G, R, tuple(nu))
    q = Cocycle2(ring_module(G, R, nu_hom), tuple(table))
    _cocycle_checks(q, report)
    Zp = cyclic_group(p)
    chi = AbelianCharacter(Zp, F, tuple(zeta ** half(i, p) for i in range(p)))
    eta = AbelianCharacter(Zp, F, tuple(zeta**i for i in range(p)))
    return ConstructionData(R=R, G=G, nu=nu_hom, alpha=tuple(alpha), beta=tuple(beta), q=q, chi=chi, eta=eta, name="A_G")


def _even_data(G, alpha, beta, sigma, F, report) -> EvenData:
    if F.N % 4:
        raise InputError(f"reading q for p = 2 needs a fourth root of unity; conductor {F.N}")
    logs = _dlog_table(F.root_of_order(4), 4)
    m = G.order
    table = []
    for s in range(m):
        row = []
        for t in range(m):
            k = logs.get(sigma[1][s][t])
            if k is None:
                raise VerificationFailure(f"sigma_1{(s, t)} is not a fourth root of unity")
            row.append(k)
        table.append(tuple(row))
    q = Cocycle2(trivial_module(G, 4), tuple(table))
    _cocycle_checks(q, report)
    cup = all(q(s, t) % 2 == (beta[s] * alpha[t]) % 2 for s in range(m) for t in range(m))
    report.add(CheckResult(name="q mod 2 = beta cup alpha", ok=cup, checked=m * m, total=m * m))
    return EvenData(G, tuple(alpha), tuple(beta), q)


def _cocycle_checks(q: Cocycle2, report: VerificationReport) -> None:
    report.add(verify_cocycle2(q))
    G = q.module.group
    e = G.identity
    normalized = all(q(e, s) == q.module.zero and q(s, e) == q.module.zero for s in G.elements)
    report.add(CheckResult(name="q normalized", ok=normalized, checked=G.order, total=G.order))


def _verify_iso(A: HopfData, yd: YDData, result: Decomposition) -> None:
    data = result.data
    built = data.build(A.field) if isinstance(data, EvenData) else build_AG(data, compare=False)
    m = result.quotient.order
    columns = [result.fourier[i][s] for i in range(result.p) for s in range(m)]
    f = LinearMap(A.field, columns)
    report = result.report
    report.merge(is_isomorphism(f, built.hopf, A), prefix="iso: ")
    report.extend(yd_map_checks(f, built.yds, yd.to_structure()))
    result.iso = f
    if not report.ok:
        raise VerificationFailure(f"decomposition of {A.name} failed {report.failures[0].name}")


class TrivialAlgebra(InputError):
    """The structure is trivial or has no suitable grouplike u."""
    pass


class NotCocommutative(InputError):
    """The algebra is not cocommutative."""
    pass


class NoGrouplikeBasis(InputError):
    """The grouplikes do not span the algebra over the working field."""
    pass

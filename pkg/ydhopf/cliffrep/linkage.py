"""
Consistency checks across the simple modules of a biproduct B = A (x) K[C].

Two simple modules V, W are linked when any of the following holds, and
then all of them hold:

    kappa(V) = kappa(W)
    V and W restrict to isomorphic A-modules
    chi_W = chi_V (eps_A (x) gamma) for some gamma in C-hat
"""

import random
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..algebra.cyclonum import CycElement
from ..algebra.linalg import in_span
from ..config.settings import VerificationSettings
from ..hopf.structure import HopfData
from ..hopf.verify import pair_cases, scan, single_cases
from ..hopf.yd import YDStructure
from ..utils.report import CheckResult, VerificationReport
from .characters import CharacterPairing, Functional, bar, convolve, counit_twist
from .modules import RepData, restriction_multiplicities
from .orbits import CliffordData


def character_orthogonality(
    B: HopfData,
    modules: List[RepData],
    settings: Optional[VerificationSettings] = None,
    samples: int = 64,
) -> Tuple[List[List[CycElement]], VerificationReport]:
    """Gram matrix of <chi_i, chi_j>_* and sampled adjointness <chi chi', chi''>_* = <chi', chi-bar chi''>_*."""
    settings = settings or VerificationSettings()
    report = VerificationReport(f"character orthogonality for {B.name}")
    pair = CharacterPairing(B)
    chars = [V.character for V in modules]
    n = len(chars)
    bars = [bar(B, chi) for chi in chars]

    gram = [[pair.product_at_integral(chars[i], bars[j]) for j in range(n)] for i in range(n)]

    def orthonormal(i: int, j: int) -> bool:
        return gram[i][j] == (1 if i == j else 0)

    report.add(scan("Gram matrix is the identity", pair_cases(n), orthonormal))
    unit = pair(B.coalgebra.counit, B.coalgebra.counit)
    report.add(CheckResult("<eps, eps>_* = 1", unit == 1, None if unit == 1 else (), 1, 1))

    rng = random.Random(settings.sample_seed)
    triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(min(samples, n**3))]
    products: Dict[Tuple[int, int], Functional] = {}
    bar_products: Dict[Tuple[int, int], Functional] = {}

    def adjoint(i: int, j: int, k: int) -> bool:
        if (i, j) not in products:
            products[(i, j)] = convolve(B, chars[i], chars[j])
        if (i, k) not in bar_products:
            bar_products[(i, k)] = convolve(B, bars[i], chars[k])
        lhs = pair.product_at_integral(products[(i, j)], bars[k])
        rhs = pair(chars[j], bar_products[(i, k)])
        return lhs == rhs

    report.add(scan("<chi chi', chi''>_* = <chi', chi-bar chi''>_*", triples, adjoint, total=n**3))
    logger.debug(f"Gram matrix of {n} characters of {B.name} computed; {len(triples)} adjointness triples")
    return gram, report


def linkage_check(
    A: HopfData,
    yds: YDStructure,
    B: HopfData,
    data: CliffordData,
    modules: List[RepData],
) -> VerificationReport:
    """Linkage equivalence per pair, card kappa = card kappa*, kappa-equivariance and duality."""
    report = VerificationReport(f"linkage for {B.name}")
    F = B.field
    p = data.p
    m = yds.hopf.dim
    C = yds.group
    n = len(modules)
    chars = [tuple(V.character) for V in modules]
    position = {chi: i for i, chi in enumerate(chars)}
    twists = [counit_twist(A, yds, k, data.zeta) for k in range(p)]
    multiplicities = [restriction_multiplicities(V, data, m, C.identity) for V in modules]
    translates = [[tuple(convolve(B, V.character, twists[k])) for k in range(p)] for V in modules]

    def linked(i: int, j: int) -> bool:
        same_kappa = set(modules[i].kappa) == set(modules[j].kappa)
        same_restriction = multiplicities[i] == multiplicities[j]
        translate = chars[j] in translates[i]
        return same_kappa == same_restriction == translate

    report.add(scan("kappa(V) = kappa(W) iff V|A = W|A iff chi_W in chi_V C-hat", pair_cases(n), linked))

    def is_orbit(i: int) -> bool:
        V = modules[i]
        return bool(V.kappa) and set(V.kappa) == set(data.orbits[data.kappa[i]])

    report.add(scan("kappa(V) is a C-orbit", single_cases(n), is_orbit))
    report.add(scan(
        "card kappa(V) = card kappa*(V)", single_cases(n),
        lambda i: len(modules[i].kappa) == len(modules[i].kappa_star),
    ))

    def equivariant(i: int, k: int) -> bool:
        twisted = tuple(convolve(B, twists[k], modules[i].character))
        j = position.get(twisted)
        if j is None:
            return False
        expected = {data.psi_power(e, -k % p) for e in modules[i].kappa}
        return expected == set(modules[j].kappa)

    report.add(scan(
        "gamma.V is simple with kappa(gamma.V) = psi^-k(kappa(V))",
        [(i, k) for i in range(n) for k in range(p)], equivariant,
    ))

    duals: Dict[int, int] = {}
    for i, V in enumerate(modules):
        j = position.get(tuple(bar(B, V.character)))
        if j is not None:
            duals[i] = j
    missing = [i for i in range(n) if i not in duals]
    report.add(CheckResult("chi_V o S is a simple character", not missing, (missing[0],) if missing else None, n, n))

    def dual_span(i: int) -> bool:
        if i not in duals:
            return False
        target = [data.E[e] for e in modules[duals[i]].kappa]
        return len(target) == len(modules[i].kappa) and all(
            in_span(A.S_inv(data.E[e]), target, F) for e in modules[i].kappa
        )

    unstable = [(i,) for i, V in enumerate(modules) if not V.stable]
    report.add(scan("span kappa(V*) = S_A^-1(span kappa(V)) for purely unstable V", unstable, dual_span))
    report.facts["duals"] = {str(i): j for i, j in duals.items()}
    logger.info(f"{B.name}: linkage checked over {n} simple modules")
    return report

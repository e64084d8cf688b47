"""
Isomorphism tests for the dimension-p^2 members of the A_G family.

For odd p, A_p(alpha, beta, q) with alpha and beta nonzero is determined up to
isomorphism by m = alpha(1)/beta(1) and the class of q/beta(1) in
H^2(Z_p, Z_p); an explicit isomorphism is e_i x_s -> zeta^(kiw(s)) e_ki x'_f(s)
for a unit k, an automorphism f of Z_p and a cochain w. For p = 2 the even
family is searched exhaustively.
"""

from dataclasses import dataclass, field, replace
from itertools import product
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..algebra.cohom import (
    Cocycle2,
    carry_cocycle,
    cohomologous2,
    h2_class,
    pullback,
    ring_scale,
    trivial_module,
)
from ..algebra.cyclonum import CycField, get_field
from ..algebra.finitestruct import GroupHom, automorphisms_cyclic, cyclic_group, group_isomorphisms
from ..constructions.ag import a_p, build_AG
from ..constructions.apm import EvenData
from ..constructions.base import ConstructionData
from ..errors import InputError, VerificationFailure
from ..hopf.structure import LinearMap
from ..hopf.verify import is_isomorphism
from ..utils.report import VerificationReport
from .morphisms import MorphismData, morphism_apply, yd_map_checks


@dataclass
class ApWitness:
    """An isomorphism A_p(alpha, beta, q) -> A_p(alpha', beta', q') given by (k, f, w)."""

    k: int
    f: GroupHom
    w: Tuple[int, ...]
    map: Optional[LinearMap] = None
    report: Optional[VerificationReport] = None

    @property
    def morphism(self) -> MorphismData:
        return MorphismData(self.f, self.k, self.w)

    def to_dict(self) -> Dict[str, object]:
        return {"k": self.k, "f": list(self.f.values), "w": list(self.w)}


def ap_data(p: int, a: int, b: int, n: int, field: Optional[CycField] = None) -> ConstructionData:
    """A_p(a id, b id, q_n)."""
    base = a_p(p, 1, n, field)
    return replace(
        base,
        alpha=tuple((a * s) % p for s in base.G.elements),
        beta=tuple((b * s) % p for s in base.G.elements),
        name=f"A_{p}({a}id,{b}id,q{n})",
    )


def _require_ap(data: ConstructionData) -> int:
    p = data.R.order
    if data.R.modulus != p or data.G.modulus != p or p % 2 == 0:
        raise InputError(f"{data.name} is not an A_p with p odd")
    if any(v != data.R.one for v in data.nu.values):
        raise InputError(f"{data.name}: nu must be trivial")
    if not any(data.alpha) or not any(data.beta):
        raise TrivialInput(f"{data.name}: alpha and beta must both be nonzero")
    return p


def ap_invariants(data: ConstructionData) -> Tuple[int, int]:
    """(m, n) with m = alpha(1)/beta(1) and n the class of q/beta(1)."""
    p = _require_ap(data)
    b_inv = data.R.unit_inverse(data.beta[1])
    m = (data.alpha[1] * b_inv) % p
    return m, h2_class(ring_scale(data.q, b_inv))


def ap_witness(A: ConstructionData, B: ConstructionData, search_bound: int = 10**6) -> Optional[ApWitness]:
    """First (k, f, w) in search order with alpha = k alpha' f, beta = k beta' f and
    k^-1 q = f*q' + dw."""
    p = _require_ap(A)
    _require_ap(B)
    if B.R.order != p:
        return None
    R = A.R
    for k in sorted(R.units):
        k_inv = R.unit_inverse(k)
        for auto in automorphisms_cyclic(p):
            f = GroupHom(A.G, B.G, auto.values)
            if any(A.alpha[s] != R.mul(k, B.alpha[f(s)]) or A.beta[s] != R.mul(k, B.beta[f(s)]) for s in A.G.elements):
                continue
            pulled = pullback(B.q, f, module=A.module)
            w = cohomologous2(pulled, ring_scale(A.q, k_inv), search_bound=search_bound)
            if w is not None:
                return ApWitness(k, f, tuple(w))
    return None


def iso_test_Ap(
    A: ConstructionData, B: ConstructionData, verify: bool = True, search_bound: int = 10**6
) -> Optional[ApWitness]:
    """Compare invariants, search for a witness, and insist the two verdicts agree."""
    fast = ap_invariants(A) == ap_invariants(B)
    witness = ap_witness(A, B, search_bound)
    if fast != (witness is not None):
        raise VerificationFailure(
            f"{A.name} vs {B.name}: invariants say {fast} but the witness search says {witness is not None}"
        )
    if witness is None:
        return None
    if verify:
        source, target = build_AG(A, compare=False), build_AG(B, compare=False)
        witness.map, witness.report = morphism_apply(witness.morphism, source, target)
        witness.report.merge(is_isomorphism(witness.map, source.hopf, target.hopf))
        if not witness.report.ok:
            raise VerificationFailure(f"{A.name} -> {B.name}: witness map failed {witness.report.failures[0].name}")
    logger.debug(f"{A.name} ~ {B.name} via k={witness.k}, f={witness.f.values}, w={witness.w}")
    return witness


# p = 2


@dataclass
class EvenWitness:
    """An isomorphism e_i x_s -> (-1)^(i w(s)) e_i x'_f(s) of the even family."""

    f: GroupHom
    w: Tuple[int, ...]
    map: Optional[LinearMap] = None
    report: Optional[VerificationReport] = None

    def to_dict(self) -> Dict[str, object]:
        return {"f": list(self.f.values), "w": list(self.w)}


def even_map(A: EvenData, B: EvenData, f: GroupHom, w: Tuple[int, ...], F: CycField) -> LinearMap:
    g = A.G.order
    images = []
    for i in range(2):
        for s in A.G.elements:
            sign = -F.one if (i * w[s]) % 2 else F.one
            images.append((i * g + f(s), sign))
    return LinearMap.from_monomial(F, images)


def even_candidates(A: EvenData, B: EvenData) -> List[EvenWitness]:
    """Every (f, w) with alpha = alpha' f, beta = beta' f and q - f*q' = 2 dw."""
    G = A.G
    found: List[EvenWitness] = []
    others = [s for s in G.elements if s != G.identity]
    for f in group_isomorphisms(G, B.G):
        if any(A.alpha[s] != B.alpha[f(s)] or A.beta[s] != B.beta[f(s)] for s in G.elements):
            continue
        diff = [[(A.q(s, t) - B.q(f(s), f(t))) % 4 for t in G.elements] for s in G.elements]
        for choice in product((0, 1), repeat=len(others)):
            w = [0] * G.order
            for s, v in zip(others, choice):
                w[s] = v
            if all(
                diff[s][t] == (2 * (w[t] - w[G.mul(s, t)] + w[s])) % 4
                for s in G.elements for t in G.elements
            ):
                found.append(EvenWitness(f, tuple(w)))
    return found


def iso_test_even(
    A: EvenData, B: EvenData, field: Optional[CycField] = None, verify: bool = True
) -> Optional[EvenWitness]:
    """Exhaustive search over (f, w); the first candidate is verified as a YD Hopf isomorphism."""
    if not A.nontrivial or not B.nontrivial:
        raise TrivialInput("the even-family test needs alpha or beta nonzero")
    if A.G.order != B.G.order:
        return None
    candidates = even_candidates(A, B)
    if not candidates:
        logger.debug(f"{A.name} vs {B.name}: no (f, w) out of the exhaustive search")
        return None
    witness = candidates[0]
    if verify:
        F = field or get_field(4)
        source, target = A.build(F), B.build(F)
        witness.map = even_map(A, B, witness.f, witness.w, F)
        witness.report = is_isomorphism(witness.map, source.hopf, target.hopf)
        witness.report.extend(yd_map_checks(witness.map, source.yds, target.yds))
        if not witness.report.ok:
            raise VerificationFailure(f"{A.name} -> {B.name}: witness map failed {witness.report.failures[0].name}")
    return witness


def apm_obstruction(search_bound: int = 10**6) -> bool:
    """True when the Z_2-valued cocycle with q(1, 1) = 1 is not a coboundary."""
    q = carry_cocycle(2, 2, 1)
    zero = Cocycle2(trivial_module(cyclic_group(2), 2), ((0, 0), (0, 0)))
    return cohomologous2(zero, q, search_bound=search_bound) is None


def verify_Apm_noniso(field: Optional[CycField] = None, search_bound: int = 10**6) -> bool:
    """A_+ and A_- are not isomorphic: no (f, w) exists in either direction."""
    plus, minus = EvenData.pm("+"), EvenData.pm("-")
    none_found = iso_test_even(minus, plus, field) is None and iso_test_even(plus, minus, field) is None
    obstruction = apm_obstruction(search_bound)
    if none_found != obstruction:
        raise VerificationFailure("exhaustive search and the coboundary obstruction disagree on A_+ vs A_-")
    logger.info(f"A_+ and A_- are {'not ' if none_found else ''}isomorphic")
    return none_found


# classification


@dataclass
class Dim2Classification:
    """Isomorphism classes of nontrivial dimension-p^2 YD Hopf algebras over K[Z_p]."""

    p: int
    representatives: List[str]
    classes: Dict[Tuple[int, int], List[Tuple[int, int, int]]] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.representatives)

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "count": self.count,
            "representatives": self.representatives,
            "classes": {f"m={m},n={n}": [list(x) for x in members] for (m, n), members in self.classes.items()},
        }


def classify_dim_p2(
    p: int, field: Optional[CycField] = None, cross_check: bool = False, search_bound: int = 10**6
) -> Dim2Classification:
    """Partition all (alpha = a id, beta = b id, q_n) by isomorphism; p = 2 gives A_+ and A_-."""
    if p == 2:
        if not verify_Apm_noniso(field, search_bound):
            raise VerificationFailure("A_+ and A_- came out isomorphic")
        return Dim2Classification(2, ["A_+", "A_-"])
    if p % 2 == 0:
        raise InputError(f"p must be prime, got {p}")
    F = field or get_field(p)
    classes: Dict[Tuple[int, int], List[Tuple[int, int, int]]] = {}
    members: Dict[Tuple[int, int, int], ConstructionData] = {}
    for a in range(1, p):
        for b in range(1, p):
            for n in range(p):
                data = ap_data(p, a, b, n, F)
                members[(a, b, n)] = data
                classes.setdefault(ap_invariants(data), []).append((a, b, n))

    result = Dim2Classification(
        p,
        [f"A_{p}(a{m},id,q{n})" for m, n in sorted(classes)],
        {key: classes[key] for key in sorted(classes)},
    )
    if cross_check:
        _cross_check(result, members, F, search_bound)
    logger.info(f"p = {p}: {result.count} isomorphism classes among {len(members)} data")
    return result


def _cross_check(
    result: Dim2Classification,
    members: Dict[Tuple[int, int, int], ConstructionData],
    F: CycField,
    search_bound: int,
) -> None:
    reps = {key: a_p(result.p, key[0], key[1], F) for key in result.classes}
    for key, triples in result.classes.items():
        for triple in triples:
            if iso_test_Ap(members[triple], reps[key], verify=True, search_bound=search_bound) is None:
                raise VerificationFailure(f"{triple} is not isomorphic to its class representative {key}")
    keys = list(reps)
    for i, x in enumerate(keys):
        for y in keys[i + 1:]:
            if iso_test_Ap(reps[x], reps[y], verify=False, search_bound=search_bound) is not None:
                raise VerificationFailure(f"representatives {x} and {y} are isomorphic")


class TrivialInput(InputError):
    """The isomorphism criterion needs nonzero alpha and beta."""
    pass

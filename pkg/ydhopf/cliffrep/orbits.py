"""
The C-action on primitive idempotents.

For a commutative semisimple YD Hopf algebra A over K[Z_p], phi (action of
c_1) and psi (psi(a) = zeta^k a on degree k) are algebra automorphisms and so
permute the set E of primitive idempotents. A phi-orbit has length 1 (stable)
or p (purely unstable); purely unstable orbits are also psi-invariant.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..algebra.cyclonum import CycElement
from ..errors import InputError, VerificationFailure
from ..hopf.structure import Element, HopfData, add_into, basis
from ..hopf.yd import YDStructure
from ..utils.report import CheckResult, VerificationReport
from ..utils.unionfind import find_orbits
from .idempotents import idempotent_checks, idempotent_index, lookup, primitive_idempotents


@dataclass
class CliffordData:
    """Primitive idempotents of A, the permutations phi and psi of them, and the C-orbits."""

    p: int
    zeta: CycElement
    E: List[Element]
    phi: Tuple[int, ...]
    psi: Tuple[int, ...]
    orbits: List[Tuple[int, ...]]
    psi_orbits: List[Tuple[int, ...]]
    report: VerificationReport
    kappa: Dict[int, int] = field(default_factory=dict)
    kappa_star: Dict[int, Tuple[int, ...]] = field(default_factory=dict)

    @property
    def isotropy(self) -> List[Tuple[int, ...]]:
        """C_e for every e, as exponents i with phi^i(e) = e."""
        out = []
        for i in range(len(self.E)):
            fixed, j = [], i
            for k in range(self.p):
                if j == i:
                    fixed.append(k)
                j = self.phi[j]
            out.append(tuple(fixed))
        return out

    def orbit_of(self, i: int) -> int:
        for k, orbit in enumerate(self.orbits):
            if i in orbit:
                return k
        raise KeyError(i)

    def is_stable(self, orbit: int) -> bool:
        return len(self.orbits[orbit]) == 1

    @property
    def stable_orbits(self) -> List[int]:
        return [k for k in range(len(self.orbits)) if self.is_stable(k)]

    @property
    def unstable_orbits(self) -> List[int]:
        return [k for k in range(len(self.orbits)) if not self.is_stable(k)]

    def psi_power(self, i: int, k: int) -> int:
        for _ in range(k % self.p):
            i = self.psi[i]
        return i

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "idempotents": len(self.E),
            "orbits": [list(o) for o in self.orbits],
            "stable": self.stable_orbits,
            "purely_unstable": self.unstable_orbits,
            "psi_orbits": [list(o) for o in self.psi_orbits],
            "kappa": {str(k): v for k, v in self.kappa.items()},
            "kappa_star": {str(k): list(v) for k, v in self.kappa_star.items()},
        }


def phi_map(yds: YDStructure, x: Element) -> Element:
    """c_1 -> x."""
    return yds.act(basis(1, yds.field), x)


def psi_map(yds: YDStructure, x: Element, zeta: CycElement, k: int = 1) -> Element:
    """gamma(x_(-1)) x_(0) with gamma(c_1) = zeta^k."""
    out: Element = {}
    for (h, j), c in yds.coact(x).items():
        add_into(out, c * zeta ** (k * h), {j: yds.field.one})
    return out


def _permutation(E: List[Element], images: List[Element], name: str) -> Tuple[int, ...]:
    index = idempotent_index(E)
    perm = []
    for i, image in enumerate(images):
        j = lookup(index, image)
        if j is None:
            raise VerificationFailure(f"{name} maps idempotent {i} outside the set of primitive idempotents")
        perm.append(j)
    return tuple(perm)


def _cycles(perm: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    seen = set()
    cycles = []
    for i in range(len(perm)):
        if i in seen:
            continue
        cycle, j = [], i
        while j not in seen:
            seen.add(j)
            cycle.append(j)
            j = perm[j]
        cycles.append(tuple(cycle))
    return cycles


def orbit_analysis(
    A: HopfData,
    yds: YDStructure,
    idempotents: Optional[List[Element]] = None,
    zeta: Optional[CycElement] = None,
) -> CliffordData:
    """phi-orbits on E with stability tags, psi-orbits, and the psi-invariance of purely unstable orbits."""
    C = yds.group
    if C is None or C.modulus != C.order:
        raise InputError(f"{A.name}: Clifford analysis needs a YD structure over K[Z_p]")
    p = C.order
    F = A.field
    zeta = zeta or F.root_of_order(p)
    E = idempotents if idempotents is not None else primitive_idempotents(A.algebra)

    report = VerificationReport(f"Clifford data of {A.name}")
    report.merge(idempotent_checks(A.algebra, E), prefix="E: ")
    phi = _permutation(E, [phi_map(yds, e) for e in E], "phi")
    psi = _permutation(E, [psi_map(yds, e, zeta) for e in E], "psi")
    n = len(E)

    orbits = _cycles(phi)
    bad = [o for o in orbits if len(o) not in (1, p)]
    report.add(CheckResult(
        "orbit lengths are 1 or p", not bad, tuple(bad[0]) if bad else None, len(orbits), len(orbits),
    ))
    commute = [i for i in range(n) if phi[psi[i]] != psi[phi[i]]]
    report.add(CheckResult("phi and psi commute on E", not commute, (commute[0],) if commute else None, n, n))

    psi_orbits = [tuple(o) for o in find_orbits([psi], list(range(n)), lambda g, x: g[x]).values()]
    unstable = [o for o in orbits if len(o) == p and p > 1]
    leaks = [o for o in unstable if any(psi[i] not in o for i in o)]
    report.add(CheckResult(
        "psi(O) in O for purely unstable O", not leaks, tuple(leaks[0]) if leaks else None,
        len(unstable), len(unstable),
    ))

    data = CliffordData(p, zeta, E, phi, psi, orbits, psi_orbits, report)
    report.facts["stable_orbits"] = len(data.stable_orbits)
    report.facts["unstable_orbits"] = len(data.unstable_orbits)
    logger.info(
        f"{A.name}: {n} primitive idempotents in {len(orbits)} C-orbits "
        f"({len(data.stable_orbits)} stable, {len(data.unstable_orbits)} purely unstable)"
    )
    return data

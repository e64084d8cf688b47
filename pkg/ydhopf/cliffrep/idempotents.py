"""
Primitive idempotents of commutative split semisimple algebras.

Splitting starts from the basis elements that are already orthogonal
idempotents summing to 1 (the e_u x_1 of a crossed product), or from 1 when
there are none. Every current idempotent f is then split by every basis
element b: once y = bf satisfies y^k = lam f, the eigenvalues of y on Af are
k-th roots mu of lam, and f is the sum of the nonzero

    f_mu = (1/k) sum_j mu^-j y^j.

No characteristic polynomial is ever factored; the candidates mu are read off
the roots of unity of Q(zeta_N).
"""

from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..algebra.cyclonum import CycElement, CycField, get_field
from ..algebra.linalg import rank
from ..errors import InputError
from ..hopf.structure import Element, SCAlgebra, add_into, basis, scaled
from ..hopf.verify import pair_cases, scan, single_cases
from ..utils.report import CheckResult, VerificationReport


def primitive_idempotents(A: SCAlgebra, conductor: Optional[int] = None) -> List[Element]:
    """The complete orthogonal set of primitive idempotents of A, ordered by leading index.

    With a conductor, A is first embedded into Q(zeta_conductor).
    """
    if conductor is not None and conductor != A.field.N:
        A = embed_algebra(A, conductor)
    if not A.is_commutative():
        raise NotCommutative(f"algebra of dim {A.dim} is not commutative")
    F = A.field
    current = _initial_idempotents(A)
    bound = 2 * F.N * A.dim
    for b in range(A.dim):
        refined: List[Element] = []
        for f in current:
            refined.extend(_split(A, f, b, bound))
        current = refined
    current.sort(key=min)
    logger.debug(f"{len(current)} primitive idempotents over Q(zeta_{F.N}) in an algebra of dim {A.dim}")
    return current


def embed_algebra(A: SCAlgebra, conductor: int) -> SCAlgebra:
    """A with every structure constant mapped into Q(zeta_conductor)."""
    target = get_field(conductor)

    def up(x: Element) -> Element:
        return {k: v.embed(conductor) for k, v in x.items()}

    return SCAlgebra(A.dim, target, {key: up(x) for key, x in A.mult.items()}, up(A.unit))


def _initial_idempotents(A: SCAlgebra) -> List[Element]:
    F = A.field
    candidates = [i for i in range(A.dim) if A.basis_product(i, i) == {i: F.one}]
    orthogonal = all(not A.basis_product(i, j) for i in candidates for j in candidates if i != j)
    if candidates and orthogonal and {i: F.one for i in candidates} == A.unit:
        return [basis(i, F) for i in candidates]
    return [dict(A.unit)]


def _scalar_multiple(x: Element, f: Element) -> Optional[CycElement]:
    """lam with x = lam f, or None."""
    lead = min(f)
    lam = x.get(lead, f[lead].field.zero) / f[lead]
    return lam if x == scaled(f, lam) else None


def _split(A: SCAlgebra, f: Element, b: int, bound: int) -> List[Element]:
    F = A.field
    y = A.product(basis(b, F), f)
    if not y:
        return [f]
    powers = [f, y]
    lam = _scalar_multiple(y, f)
    k = 1
    while lam is None:
        if k >= bound:
            raise NotSplittable(f"no power of e_{b} f up to {bound} is a multiple of f")
        powers.append(A.product(powers[-1], y))
        k += 1
        lam = _scalar_multiple(powers[k], f)
    if lam.is_zero():
        raise NotSemisimple(f"e_{b} is nilpotent on a block, so the algebra is not semisimple")
    if k == 1:
        return [f]

    mus = kth_roots(F, lam, k)
    if len(mus) < k:
        suggested = suggested_conductor(F, lam, k)
        raise SplittingFieldTooSmall(
            f"the {k}-th roots of {lam} are not all in Q(zeta_{F.N})"
            + (f"; retry with conductor {suggested}" if suggested else ""),
            suggested,
        )
    inv_k = F.rational(Fraction(1, k))
    parts: List[Element] = []
    for mu in mus:
        part: Element = {}
        mu_inv = mu.inverse()
        for j in range(k):
            add_into(part, inv_k * mu_inv**j, powers[j])
        if part:
            parts.append(part)
    return parts


def kth_roots(F: CycField, lam: CycElement, k: int) -> List[CycElement]:
    """All mu in Q(zeta_N) that are roots of unity with mu^k = lam."""
    candidates = list(F.roots)
    if F.N % 2:
        candidates += [-r for r in F.roots]
    found: List[CycElement] = []
    for mu in candidates:
        if mu**k == lam and mu not in found:
            found.append(mu)
    return found


def root_order(F: CycField, x: CycElement) -> Optional[int]:
    """Multiplicative order of x when it is a root of unity of Q(zeta_N)."""
    power = x
    for m in range(1, 2 * F.N + 1):
        if power == F.one:
            return m
        power = power * x
    return None


def suggested_conductor(F: CycField, lam: CycElement, k: int) -> Optional[int]:
    """Smallest conductor containing every k-th root of lam, or None when lam is no root of unity."""
    m = root_order(F, lam)
    if m is None:
        return None
    needed = k * m
    N = F.N * needed // gcd(F.N, needed)
    return N // 2 if N % 4 == 2 else N


def idempotent_checks(A: SCAlgebra, E: List[Element]) -> VerificationReport:
    """Orthogonality, completeness and primitivity of E."""
    report = VerificationReport(f"primitive idempotents ({len(E)})")
    F = A.field
    n = len(E)

    def orthogonal(i: int, j: int) -> bool:
        expected = E[i] if i == j else {}
        return A.product(E[i], E[j]) == expected

    def primitive(i: int) -> bool:
        return rank([A.product(basis(b, F), E[i]) for b in range(A.dim)], F) == 1

    total: Element = {}
    for e in E:
        add_into(total, F.one, e)
    report.add(scan("e_i e_j = delta_ij e_i", pair_cases(n), orthogonal))
    report.add(CheckResult("sum of idempotents is 1", total == A.unit, None if total == A.unit else (), 1, 1))
    report.add(scan("A e is one-dimensional", single_cases(n), primitive))
    report.add(CheckResult(
        "count equals dim A", n == A.dim, None if n == A.dim else (n, A.dim), 1, 1,
    ))
    return report


def idempotent_index(E: List[Element]) -> Dict[Tuple, int]:
    """Lookup from the sorted items of an idempotent to its position in E."""
    return {_key(e): i for i, e in enumerate(E)}


def _key(x: Element) -> Tuple:
    return tuple(sorted(x.items(), key=lambda kv: kv[0]))


def lookup(index: Dict[Tuple, int], x: Element) -> Optional[int]:
    return index.get(_key(x))


class NotCommutative(InputError):
    """Primitive idempotents are only computed for commutative algebras."""
    pass


class NotSemisimple(InputError):
    """A nonzero nilpotent element turned up while splitting."""
    pass


class NotSplittable(InputError):
    """Some basis element has no power that acts as a scalar on a block."""
    pass


class SplittingFieldTooSmall(InputError):
    """The eigenvalues needed for splitting lie outside Q(zeta_N)."""

    def __init__(self, message: str, suggested_conductor: Optional[int] = None):
        super().__init__(message)
        self.suggested_conductor = suggested_conductor

"""
Axiom scans for structure-constant algebras, coalgebras, bialgebras and Hopf algebras.

Pair and per-element scans are always exhaustive. Associativity evaluates only
the triples that meet the support of the structure constants. It is exhaustive
up to the exhaustive threshold, and above it while those triples fit the triple
budget; otherwise it is sampled with a fixed seed. The resulting CheckResult
records its coverage.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from ..algebra.linalg import SingularSystem
from ..config.settings import VerificationSettings
from ..utils.report import CheckResult, VerificationReport
from .structure import (
    Element,
    HopfData,
    LinearMap,
    SCAlgebra,
    SCCoalgebra,
    Tensor,
    add_into,
    basis,
    tensor_of,
)

Witness = Tuple[int, ...]


def scan(
    name: str,
    cases: Sequence[Witness],
    check: Callable[..., bool],
    threads: int = 1,
    total: Optional[int] = None,
) -> CheckResult:
    """Run check over cases and report the first failing case in case order."""
    total = len(cases) if total is None else total
    if threads <= 1 or len(cases) < 256:
        for case in cases:
            if not check(*case):
                return CheckResult.failed(name, case, total=total)
        return CheckResult.passed(name, checked=len(cases), total=total)

    chunk = (len(cases) + threads - 1) // threads
    chunks = [cases[k:k + chunk] for k in range(0, len(cases), chunk)]

    def run(part: Sequence[Witness]) -> Optional[Witness]:
        for case in part:
            if not check(*case):
                return case
        return None

    with ThreadPoolExecutor(max_workers=threads) as pool:
        for witness in pool.map(run, chunks):
            if witness is not None:
                return CheckResult.failed(name, witness, total=total)
    return CheckResult.passed(name, checked=len(cases), total=total)


class SupportRows:
    """For each j: the i with e_i e_j != 0 and the k with e_j e_k != 0.

    Both sides of (e_i e_j) e_k = e_i (e_j e_k) vanish unless e_i e_j or e_j e_k
    is nonzero, so only those k are evaluated for a pair (i, j).
    """

    def __init__(self, A: SCAlgebra):
        self.dim = A.dim
        self.left: List[set] = [set() for _ in range(A.dim)]
        self.right: List[List[int]] = [[] for _ in range(A.dim)]
        for (i, j), value in A.mult.items():
            if any(not c.is_zero() for c in value.values()):
                self.left[j].add(i)
                self.right[i].append(j)
        for ks in self.right:
            ks.sort()

    def ks(self, i: int, j: int) -> Sequence[int]:
        return range(self.dim) if i in self.left[j] else self.right[j]

    def count(self) -> int:
        return sum(len(L) * self.dim + (self.dim - len(L)) * len(R) for L, R in zip(self.left, self.right))


def sampled_triples(dim: int, settings: VerificationSettings) -> List[Witness]:
    rng = random.Random(settings.sample_seed)
    logger.warning(f"Sampling {settings.sample_size} of {dim**3} basis triples")
    return [(rng.randrange(dim), rng.randrange(dim), rng.randrange(dim)) for _ in range(settings.sample_size)]


def pair_cases(dim: int) -> List[Witness]:
    return list(product(range(dim), repeat=2))


def single_cases(dim: int) -> List[Witness]:
    return [(i,) for i in range(dim)]


def tensor_product(A: SCAlgebra, X: Tensor, Y: Tensor) -> Tensor:
    """Product in the ordinary tensor square A (x) A."""
    out: Tensor = {}
    for (a, b), u in X.items():
        for (c, d), v in Y.items():
            left = A.mult.get((a, c))
            if not left:
                continue
            right = A.mult.get((b, d))
            if not right:
                continue
            coef = u * v
            for k, x in left.items():
                for l, y in right.items():
                    key = (k, l)
                    value = coef * x * y
                    new = out[key] + value if key in out else value
                    if new.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = new
    return out


def apply_tensor(f: LinearMap, g: LinearMap, X: Tensor) -> Tensor:
    """(f (x) g)(X)."""
    out: Tensor = {}
    for (a, b), c in X.items():
        add_into(out, c, tensor_of(f.columns[a], g.columns[b]))
    return out


def verify_algebra(A: SCAlgebra, settings: Optional[VerificationSettings] = None) -> VerificationReport:
    settings = settings or VerificationSettings()
    report = VerificationReport("algebra")
    field = A.field

    def assoc(i: int, j: int, k: int) -> bool:
        return A.product(A.basis_product(i, j), basis(k, field)) == A.product(basis(i, field), A.basis_product(j, k))

    total = A.dim**3
    rows = SupportRows(A)
    if A.dim > settings.exhaustive_threshold and rows.count() > settings.triple_budget:
        report.add(scan("associativity", sampled_triples(A.dim, settings), assoc, settings.threads, total))
    else:
        def assoc_row(i: int, j: int) -> bool:
            return all(assoc(i, j, k) for k in rows.ks(i, j))

        result = scan("associativity", pair_cases(A.dim), assoc_row, settings.threads)
        if result.ok:
            result = CheckResult.passed("associativity", checked=total, detail=f"{rows.count()} triples on the support")
        else:
            i, j = result.witness
            k = next(k for k in rows.ks(i, j) if not assoc(i, j, k))
            result = CheckResult.failed("associativity", (i, j, k), total=total)
        report.add(result)

    def unit(i: int) -> bool:
        e = basis(i, field)
        return A.product(A.unit, e) == e and A.product(e, A.unit) == e

    report.add(scan("unit", single_cases(A.dim), unit))
    logger.debug(f"Algebra scan of dim {A.dim}: {'pass' if report.ok else 'fail'}")
    return report


def verify_coalgebra(C: SCCoalgebra, settings: Optional[VerificationSettings] = None) -> VerificationReport:
    settings = settings or VerificationSettings()
    report = VerificationReport("coalgebra")

    def coassoc(i: int) -> bool:
        left: dict = {}
        right: dict = {}
        for (a, b), c in C.comult[i].items():
            for (x, y), d in C.comult[a].items():
                add_into(left, c * d, {(x, y, b): C.field.one})
            for (x, y), d in C.comult[b].items():
                add_into(right, c * d, {(a, x, y): C.field.one})
        return left == right

    def counit(i: int) -> bool:
        left: Element = {}
        right: Element = {}
        for (a, b), c in C.comult[i].items():
            add_into(left, c * C.counit[a], {b: C.field.one})
            add_into(right, c * C.counit[b], {a: C.field.one})
        target = {i: C.field.one}
        return left == target and right == target

    report.add(scan("coassociativity", single_cases(C.dim), coassoc, settings.threads))
    report.add(scan("counit", single_cases(C.dim), counit))
    return report


def verify_bialgebra(H: HopfData, settings: Optional[VerificationSettings] = None) -> VerificationReport:
    """Delta and epsilon are algebra maps, checked on all basis pairs."""
    settings = settings or VerificationSettings()
    report = VerificationReport("bialgebra")
    A, C = H.algebra, H.coalgebra

    def delta_mult(i: int, j: int) -> bool:
        return C.coproduct(A.basis_product(i, j)) == tensor_product(A, C.comult[i], C.comult[j])

    def eps_mult(i: int, j: int) -> bool:
        return C.epsilon(A.basis_product(i, j)) == C.counit[i] * C.counit[j]

    pairs = pair_cases(H.dim)
    report.add(scan("comultiplication multiplicative", pairs, delta_mult, settings.threads))
    report.add(scan("counit multiplicative", pairs, eps_mult))
    unit_ok = C.coproduct(A.unit) == tensor_of(A.unit, A.unit) and C.epsilon(A.unit) == 1
    report.add(CheckResult("unit grouplike", unit_ok, None if unit_ok else (), 1, 1))
    return report


def verify_antipode(H: HopfData, antipode: Optional[LinearMap] = None) -> VerificationReport:
    report = VerificationReport("antipode")
    S = antipode or H.antipode
    if S is None:
        report.add(CheckResult.failed("antipode present", ()))
        return report

    def left(i: int) -> bool:
        out: Element = {}
        for (a, b), c in H.coalgebra.comult[i].items():
            add_into(out, c, H.mul(S.columns[a], basis(b, H.field)))
        return out == _scaled_unit(H, i)

    def right(i: int) -> bool:
        out: Element = {}
        for (a, b), c in H.coalgebra.comult[i].items():
            add_into(out, c, H.mul(basis(a, H.field), S.columns[b]))
        return out == _scaled_unit(H, i)

    report.add(scan("S * id = unit o counit", single_cases(H.dim), left))
    report.add(scan("id * S = unit o counit", single_cases(H.dim), right))
    return report


def _scaled_unit(H: HopfData, i: int) -> Element:
    c = H.coalgebra.counit[i]
    if c.is_zero():
        return {}
    return {k: v * c for k, v in H.one.items()}


def verify_hopf(H: HopfData, settings: Optional[VerificationSettings] = None) -> VerificationReport:
    report = VerificationReport(H.name)
    report.merge(verify_algebra(H.algebra, settings), "algebra.")
    report.merge(verify_coalgebra(H.coalgebra, settings), "coalgebra.")
    report.merge(verify_bialgebra(H, settings), "bialgebra.")
    if H.antipode is not None:
        report.merge(verify_antipode(H), "antipode.")
    report.facts["dim"] = H.dim
    logger.info(f"Verified {H.name} (dim {H.dim}): {'pass' if report.ok else 'FAIL'}")
    return report


def is_algebra_map(f: LinearMap, A: SCAlgebra, B: SCAlgebra, name: str = "algebra map") -> CheckResult:
    if f.apply(A.unit) != B.unit:
        return CheckResult.failed(f"{name}.unit", ())

    def mult(i: int, j: int) -> bool:
        return f.apply(A.basis_product(i, j)) == B.product(f.columns[i], f.columns[j])

    return scan(name, pair_cases(A.dim), mult)


def is_coalgebra_map(f: LinearMap, C: SCCoalgebra, D: SCCoalgebra, name: str = "coalgebra map") -> CheckResult:
    def comult(i: int) -> bool:
        return apply_tensor(f, f, C.comult[i]) == D.coproduct(f.columns[i]) and D.epsilon(f.columns[i]) == C.counit[i]

    return scan(name, single_cases(C.dim), comult)


def is_hopf_map(f: LinearMap, H: HopfData, K: HopfData) -> VerificationReport:
    report = VerificationReport(f"{H.name} -> {K.name}")
    report.add(is_algebra_map(f, H.algebra, K.algebra))
    report.add(is_coalgebra_map(f, H.coalgebra, K.coalgebra))
    return report


def is_isomorphism(f: LinearMap, H: HopfData, K: HopfData) -> VerificationReport:
    report = is_hopf_map(f, H, K)
    try:
        f.inverse()
        report.add(CheckResult.passed("bijective", checked=1))
    except SingularSystem:
        report.add(CheckResult.failed("bijective", ()))
    return report


def first_failures(reports: Iterable[VerificationReport]) -> List[CheckResult]:
    return [check for report in reports for check in report.failures]

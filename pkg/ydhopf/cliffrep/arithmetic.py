"""
Class-equation arithmetic for semisimple Hopf algebras of dimension pq.

The dimensions of the simple modules of the character ring split as

    1 + p n_p + q n_q = pq,    0 < n_p < q,  0 < n_q < p,

which has exactly one solution. The screen below evaluates the inequality

    (q^2 - 9q + 9 n_p) p >= 24q + 9q n_p - 9

(for q = 5 the sharper (61 n_p - 180) p >= 225 n_p + 139), which must hold
when B has no nontrivial grouplike element. A violated inequality therefore
forces a grouplike.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from loguru import logger
from sympy import isprime, primerange

from ..errors import InputError, VerificationFailure


@dataclass(frozen=True)
class PqArithmetic:
    p: int
    q: int
    n_p: int
    n_q: int

    def holds(self) -> bool:
        return (
            1 + self.p * self.n_p + self.q * self.n_q == self.p * self.q
            and 0 < self.n_p < self.q
            and 0 < self.n_q < self.p
        )

    def to_dict(self) -> Dict[str, int]:
        return {"p": self.p, "q": self.q, "n_p": self.n_p, "n_q": self.n_q}


class ScreenVerdict(str, Enum):
    FORCES_GROUPLIKE = "forces_grouplike"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ScreenResult:
    """One evaluation of the grouplike screen for dim B = pq."""

    p: int
    q: int
    n_p: int
    coefficient: int
    bound: int
    verdict: ScreenVerdict
    conclusion: str

    @property
    def inequality(self) -> str:
        return render_inequality(self.coefficient, self.bound)

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "q": self.q,
            "n_p": self.n_p,
            "inequality": self.inequality,
            "verdict": self.verdict.value,
            "conclusion": self.conclusion,
        }


@dataclass
class ResidueRow:
    """The screen for all p = residue mod q."""

    residue: int
    n_p: int
    coefficient: int
    bound: int
    always_forced: bool
    forced: List[int] = field(default_factory=list)

    @property
    def inequality(self) -> str:
        return render_inequality(self.coefficient, self.bound)

    def to_dict(self) -> Dict[str, object]:
        return {
            "residue": self.residue,
            "n_p": self.n_p,
            "inequality": self.inequality,
            "always_forced": self.always_forced,
            "forced": self.forced,
        }


@dataclass
class ScreenTable:
    q: int
    pmax: int
    rows: List[ResidueRow]
    exceptions: List[int]

    def to_dict(self) -> Dict[str, object]:
        return {
            "q": self.q,
            "pmax": self.pmax,
            "rows": [row.to_dict() for row in self.rows],
            "exceptions": self.exceptions,
        }


def render_inequality(coefficient: int, bound: int) -> str:
    """'-58p ≥ 589' style, with a typographic minus."""
    return f"{coefficient}p ≥ {bound}".replace("-", "−")


def _check_primes(p: int, q: int) -> None:
    if not (isprime(p) and isprime(q)):
        raise NotPrime(f"p = {p} and q = {q} must both be prime")
    if p == q:
        raise NotPrime(f"p and q must be distinct, got p = q = {p}")


def _n_for(p: int, q: int) -> int:
    """The n in 0 < n < q with p n = -1 mod q."""
    return (-pow(p, -1, q)) % q


def pq_arithmetic(p: int, q: int) -> PqArithmetic:
    """(n_p, n_q) with 1 + p n_p + q n_q = pq, by the Chinese remainder theorem."""
    _check_primes(p, q)
    n_p = _n_for(p, q)
    n_q = (p * q - 1 - p * n_p) // q
    solutions = [
        (a, b) for a in range(q) for b in range(p) if 1 + p * a + q * b == p * q
    ]
    result = PqArithmetic(p, q, n_p, n_q)
    if solutions != [(n_p, n_q)] or not result.holds():
        raise VerificationFailure(f"class equation for ({p}, {q}) has solutions {solutions}, expected {(n_p, n_q)}")
    return result


def pq_refined(p: int, q: int) -> Tuple[int, int]:
    """(n_p, n_q) = ((q - 1)/p, p - 1) when p divides q - 1."""
    _check_primes(p, q)
    if (q - 1) % p:
        raise NotApplicable(f"{p} does not divide {q} - 1")
    refined = ((q - 1) // p, p - 1)
    general = pq_arithmetic(p, q)
    if refined != (general.n_p, general.n_q):
        raise VerificationFailure(f"refined values {refined} disagree with {general.to_dict()}")
    return refined


def screen_coefficients(q: int, n_p: int) -> Tuple[int, int]:
    """(coefficient, bound) of the screen inequality coefficient * p >= bound."""
    if q == 5:
        return 61 * n_p - 180, 225 * n_p + 139
    return q * q - 9 * q + 9 * n_p, 24 * q + 9 * q * n_p - 9


def conclusion_for(p: int, q: int) -> str:
    """'and' when no group of order pq is nonabelian, otherwise 'or'."""
    return "or" if (q - 1) % p == 0 or (p - 1) % q == 0 else "and"


def pq_screen(p: int, q: int) -> ScreenResult:
    _check_primes(p, q)
    if p == 2 or q == 2:
        raise NotApplicable("the grouplike screen needs odd primes")
    n_p = pq_arithmetic(p, q).n_p
    coefficient, bound = screen_coefficients(q, n_p)
    forced = coefficient * p < bound
    verdict = ScreenVerdict.FORCES_GROUPLIKE if forced else ScreenVerdict.INCONCLUSIVE
    return ScreenResult(p, q, n_p, coefficient, bound, verdict, conclusion_for(p, q))


def pq_screen_table(q: int, pmax: int) -> ScreenTable:
    """Per-residue screen for all odd primes p <= pmax, p != q.

    A residue class whose coefficient is not positive forces a grouplike for
    every p in it. The exceptions are the remaining forced primes for which
    B is then commutative and cocommutative.
    """
    if not isprime(q) or q == 2:
        raise NotPrime(f"q = {q} must be an odd prime")
    primes = [p for p in primerange(3, pmax + 1) if p != q]
    rows = []
    exceptions = []
    for residue in range(1, q):
        n_p = _n_for(residue, q)
        coefficient, bound = screen_coefficients(q, n_p)
        always = coefficient <= 0 < bound
        row = ResidueRow(residue, n_p, coefficient, bound, always)
        for p in primes:
            if p % q != residue:
                continue
            result = pq_screen(p, q)
            if result.verdict is ScreenVerdict.FORCES_GROUPLIKE:
                row.forced.append(p)
                if not always and result.conclusion == "and":
                    exceptions.append(p)
        rows.append(row)
    exceptions.sort()
    logger.info(f"Screen q = {q}, p <= {pmax}: exceptions {exceptions}")
    return ScreenTable(q, pmax, rows, exceptions)


class NotPrime(InputError):
    """The arithmetic of dimension pq needs distinct primes."""
    pass


class NotApplicable(InputError):
    """The requested refinement does not apply to these primes."""
    pass

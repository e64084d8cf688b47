"""
Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1) modulo the
cyclotomic polynomial Phi_N, as an integer numerator vector over one positive
common denominator. The canonical form makes equality and zero tests exact.
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from loguru import logger
from sympy import Poly, QQ, ZZ, Symbol, divisors

from ..errors import InputError

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, "CycElement"]

_X = Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Phi_n = (x^n - 1) / prod(Phi_d for d | n, d < n), by exact division.
    """
    if n < 1:
        raise InputError(f"Conductor must be positive, got {n}")
    poly = Poly(_X**n - 1, _X, domain=ZZ)
    for d in divisors(n)[:-1]:
        poly = poly.exquo(Poly(list(reversed(cyclotomic_coefficients(d))), _X, domain=ZZ))
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


class CycField:
    """The cyclotomic field Q(zeta_N)."""

    def __init__(self, N: int):
        self.N = N
        self.modulus = cyclotomic_coefficients(N)
        self.degree = len(self.modulus) - 1
        self._reduction = self._build_reduction_table()
        self._roots: Optional[List["CycElement"]] = None
        self._root_index: Optional[Dict[Tuple[Tuple[int, ...], int], int]] = None
        self.zero = CycElement(self, (0,) * self.degree, 1, _canonical=True)
        self.one = self.rational(1)
        logger.debug(f"Built Q(zeta_{N}) of degree {self.degree}")

    def _build_reduction_table(self) -> Dict[int, Tuple[int, ...]]:
        d = self.degree
        table: Dict[int, Tuple[int, ...]] = {}
        # x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1}) since Phi_N is monic
        current = [-c for c in self.modulus[:d]]
        for k in range(d, 2 * d - 1):
            table[k] = tuple(current)
            top = current[-1]
            current = [0] + current[:-1]
            if top:
                for t in range(d):
                    current[t] -= top * self.modulus[t]
        return table

    def __repr__(self) -> str:
        return f"CycField({self.N})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CycField) and other.N == self.N

    def __hash__(self) -> int:
        return hash(("CycField", self.N))

    # construction helpers

    def rational(self, value: Rational) -> "CycElement":
        value = Fraction(value)
        nums = [0] * self.degree
        nums[0] = value.numerator
        return CycElement(self, tuple(nums), value.denominator, _canonical=True)

    def from_coefficients(self, coeffs: Sequence[Rational]) -> "CycElement":
        """Element with the given power-basis coordinates (reduced if longer than phi(N))."""
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        nums = [int(f * den) for f in fracs]
        return CycElement(self, tuple(self._reduce(nums)), den)

    def coerce(self, value: Scalar) -> "CycElement":
        if isinstance(value, CycElement):
            if value.field != self:
                raise FieldMismatch(f"Element of Q(zeta_{value.field.N}) used in Q(zeta_{self.N})")
            return value
        if isinstance(value, (int, Fraction)):
            return self.rational(value)
        raise TypeError(f"Cannot coerce {type(value).__name__} into {self!r}")

    def root(self, k: int) -> "CycElement":
        """zeta_N^k."""
        return self.roots[k % self.N]

    @property
    def roots(self) -> List["CycElement"]:
        if self._roots is None:
            d = self.degree
            roots: List[CycElement] = []
            current = [1] + [0] * (d - 1)
            for _ in range(self.N):
                roots.append(CycElement(self, tuple(current), 1, _canonical=True))
                current = self._reduce([0] + current)
            self._roots = roots
        return self._roots

    def root_of_order(self, n: int, k: int = 1) -> "CycElement":
        """zeta_n^k, embedded via zeta_n = zeta_N^(N/n)."""
        if self.N % n:
            raise NotDivisible(f"Q(zeta_{self.N}) does not contain a primitive {n}-th root of unity")
        return self.root(k * (self.N // n))

    def dlog(self, element: "CycElement") -> Optional[int]:
        """k with zeta_N^k == element, or None when element is not an N-th root of unity."""
        if self._root_index is None:
            self._root_index = {(r.nums, r.den): k for k, r in enumerate(self.roots)}
        return self._root_index.get((element.nums, element.den))

    def is_root_of_unity(self, element: "CycElement") -> bool:
        return self.dlog(element) is not None

    # polynomial plumbing

    def _reduce(self, nums: List[int]) -> List[int]:
        d = self.degree
        if len(nums) <= d:
            return nums + [0] * (d - len(nums))
        work = list(nums)
        for k in range(len(work) - 1, d - 1, -1):
            c = work[k]
            if c:
                for t in range(d):
                    work[k - d + t] -= c * self.modulus[t]
                work[k] = 0
        return work[:d]

    def _mul_nums(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> List[int]:
        d = self.degree
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        res = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for t, r in enumerate(self._reduction[k]):
                    if r:
                        res[t] += c * r
        return res


class CycElement:
    """An exact element of Q(zeta_N). Immutable."""

    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, field: CycField, nums: Tuple[int, ...], den: int = 1, _canonical: bool = False):
        if not _canonical:
            if den == 0:
                raise DivisionByZero("Zero denominator")
            if den < 0:
                nums = tuple(-n for n in nums)
                den = -den
            g = math.gcd(den, *nums)
            if g > 1:
                nums = tuple(n // g for n in nums)
                den //= g
            if not any(nums):
                den = 1
        self.field = field
        self.nums = tuple(nums)
        self.den = den
        self._hash: Optional[int] = None

    # inspection

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise InputError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def dlog(self) -> Optional[int]:
        return self.field.dlog(self)

    # arithmetic

    def _other(self, other: Scalar) -> "CycElement":
        if isinstance(other, CycElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"Q(zeta_{self.field.N}) vs Q(zeta_{other.field.N})")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar) -> "CycElement":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return CycElement(self.field, tuple(a + b for a, b in zip(self.nums, o.nums)), self.den)
        return CycElement(
            self.field,
            tuple(a * o.den + b * self.den for a, b in zip(self.nums, o.nums)),
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self) -> "CycElement":
        return CycElement(self.field, tuple(-a for a in self.nums), self.den, _canonical=True)

    def __sub__(self, other: Scalar) -> "CycElement":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "CycElement":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "CycElement":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_rational():
            k = o.nums[0]
            return CycElement(self.field, tuple(a * k for a in self.nums), self.den * o.den)
        if self.is_rational():
            k = self.nums[0]
            return CycElement(self.field, tuple(a * k for a in o.nums), self.den * o.den)
        return CycElement(self.field, tuple(self.field._mul_nums(self.nums, o.nums)), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycElement":
        if self.is_zero():
            raise DivisionByZero("Inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycElement(self.field, (self.den,) + (0,) * (self.field.degree - 1), self.nums[0])
        k = self.field.dlog(self)
        if k is not None:
            return self.field.root(-k)
        modulus = Poly(list(reversed(self.field.modulus)), _X, domain=QQ)
        poly = Poly(list(reversed(self.nums)), _X, domain=QQ)
        inv = poly.invert(modulus)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return self.field.from_coefficients(coeffs) * self.den

    def __truediv__(self, other: Scalar) -> "CycElement":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> "CycElement":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "CycElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "CycElement":
        """Image under zeta -> zeta^-1."""
        total = self.field.zero
        for k, n in enumerate(self.nums):
            if n:
                total = total + self.field.root(-k) * n
        return total * Fraction(1, self.den)

    def embed(self, M: int) -> "CycElement":
        """Image in Q(zeta_M) under zeta_N -> zeta_M^(M/N)."""
        if M % self.field.N:
            raise NotDivisible(f"{self.field.N} does not divide {M}")
        target = get_field(M)
        step = M // self.field.N
        nums = [0] * target.degree
        for k, n in enumerate(self.nums):
            if n:
                for t, r in enumerate(target.root(k * step).nums):
                    nums[t] += n * r
        return CycElement(target, tuple(nums), self.den)

    # comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycElement):
            return self.field.N == other.field.N and self.nums == other.nums and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.field.N, self.nums, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CycElement({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        k = self.field.dlog(self)
        if k is not None and k != 0:
            return f"z{self.field.N}^{k}"
        terms = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{coef}z{self.field.N}^{power}")
        return " + ".join(terms)

    def to_strings(self) -> List[str]:
        """Exact 'num/den' coordinates for canonical JSON."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]


@lru_cache(maxsize=None)
def get_field(N: int) -> CycField:
    """Shared field instance for conductor N."""
    return CycField(N)


def cyc_root(field: CycField, k: int) -> CycElement:
    return field.root(k)


def cyc_arith(op: str, a: CycElement, b: CycElement) -> CycElement:
    if a.field != b.field:
        raise FieldMismatch(f"Q(zeta_{a.field.N}) vs Q(zeta_{b.field.N})")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise InputError(f"Unknown operation: {op}")


def cyc_embed(a: CycElement, M: int) -> CycElement:
    return a.embed(M)


def cyc_sum(values: Iterable[CycElement], field: CycField) -> CycElement:
    total = field.zero
    for v in values:
        total = total + v
    return total


def half(i: int, n: int) -> int:
    """i/2 in Z_n for odd n, computed as i*(n+1)/2."""
    if n % 2 == 0:
        raise EvenPrime(f"2 is not invertible in Z_{n}")
    return (i * ((n + 1) // 2)) % n


class FieldMismatch(InputError):
    """Arithmetic between elements of different cyclotomic fields."""
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    """Division by the zero element."""
    pass


class NotDivisible(InputError):
    """Embedding into a field whose conductor is not a multiple."""
    pass


class EvenPrime(InputError):
    """Halving exponents needs an odd modulus."""
    pass

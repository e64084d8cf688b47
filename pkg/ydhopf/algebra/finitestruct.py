"""
Finite groups and rings given by Cayley tables, their characters and homomorphisms.

Elements are dense integer indices. Canonical cyclic groups and the rings Z_n
place the residue i at index i.
"""

import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..errors import ConstructionError, InputError
from ..utils.report import CheckResult
from .cyclonum import CycElement, CycField, EvenPrime, half


class FiniteGroup:
    """A finite group stored as an index multiplication table."""

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        name: str = "G",
        labels: Optional[Sequence[str]] = None,
        modulus: Optional[int] = None,
        check: bool = True,
    ):
        self.table: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.name = name
        self.modulus = modulus
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.order))

        if self.order == 0 or any(len(row) != self.order for row in self.table):
            raise InputError(f"{name}: multiplication table must be square and nonempty")
        if any(not 0 <= x < self.order for row in self.table for x in row):
            raise InputError(f"{name}: table entries out of range")

        self.identity = self._find_identity()
        self.inverse_table = self._find_inverses()
        if check:
            result = self.check_associativity()
            if not result:
                raise AssociativityFailure(f"{name}: associativity fails at {result.witness}", result.witness)

    def _find_identity(self) -> int:
        for e in range(self.order):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(self.order)):
                return e
        raise InputError(f"{self.name}: no identity element")

    def _find_inverses(self) -> Tuple[int, ...]:
        inverses = []
        for x in range(self.order):
            row = self.table[x]
            try:
                y = row.index(self.identity)
            except ValueError:
                raise InputError(f"{self.name}: element {x} has no inverse") from None
            if self.table[y][x] != self.identity:
                raise InputError(f"{self.name}: element {x} has no two-sided inverse")
            inverses.append(y)
        return tuple(inverses)

    def check_associativity(self) -> CheckResult:
        t = self.table
        n = self.order
        for a in range(n):
            ta = t[a]
            for b in range(n):
                ab = ta[b]
                tb = t[b]
                tab = t[ab]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        return CheckResult.failed(f"{self.name}.associativity", (a, b, c), total=n**3)
        return CheckResult.passed(f"{self.name}.associativity", checked=n**3)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse_table[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = self.identity
        for _ in range(k):
            result = self.table[result][a]
        return result

    def conj(self, s: int, t: int) -> int:
        """s^-1 t s."""
        return self.mul(self.mul(self.inv(s), t), s)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(a))

    def center(self) -> List[int]:
        return [a for a in self.elements if all(self.table[a][b] == self.table[b][a] for b in self.elements)]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


class FiniteRing:
    """A finite ring with one, stored as addition and multiplication tables."""

    def __init__(
        self,
        add: Sequence[Sequence[int]],
        mul: Sequence[Sequence[int]],
        name: str = "R",
        modulus: Optional[int] = None,
        check: bool = True,
    ):
        self.name = name
        self.modulus = modulus
        self.additive = FiniteGroup(add, name=f"({name},+)", modulus=modulus, check=check)
        self.order = self.additive.order
        self.mul_table: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in mul)
        if len(self.mul_table) != self.order or any(len(row) != self.order for row in self.mul_table):
            raise InputError(f"{name}: multiplication table has the wrong shape")
        self.zero = self.additive.identity
        self.one = self._find_one()
        if check:
            self._check_axioms()
        self.units: Tuple[int, ...] = tuple(
            a for a in self.elements
            if any(self.mul(a, b) == self.one and self.mul(b, a) == self.one for b in self.elements)
        )
        self._unit_inverse: Dict[int, int] = {
            a: next(b for b in self.elements if self.mul(a, b) == self.one) for a in self.units
        }

    def _find_one(self) -> int:
        for e in range(self.order):
            if all(self.mul_table[e][x] == x and self.mul_table[x][e] == x for x in range(self.order)):
                return e
        raise InputError(f"{self.name}: no multiplicative identity")

    def _check_axioms(self) -> None:
        if not self.additive.is_abelian():
            raise InputError(f"{self.name}: addition is not commutative")
        for a, b, c in product(self.elements, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise AssociativityFailure(f"{self.name}: multiplication not associative at {(a, b, c)}", (a, b, c))
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                raise InputError(f"{self.name}: left distributivity fails at {(a, b, c)}")
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)):
                raise InputError(f"{self.name}: right distributivity fails at {(a, b, c)}")

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def unit_set(self) -> frozenset:
        return frozenset(self.units)

    def add(self, a: int, b: int) -> int:
        return self.additive.table[a][b]

    def neg(self, a: int) -> int:
        return self.additive.inverse_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def prod(self, *factors: int) -> int:
        result = self.one
        for f in factors:
            result = self.mul(result, f)
        return result

    def sum(self, *terms: int) -> int:
        result = self.zero
        for t in terms:
            result = self.add(result, t)
        return result

    def times(self, k: int, a: int) -> int:
        """The integer multiple k*a."""
        return self.additive.power(a, k)

    def from_int(self, k: int) -> int:
        return self.times(k, self.one)

    def unit_inverse(self, a: int) -> int:
        try:
            return self._unit_inverse[a]
        except KeyError:
            raise InputError(f"{self.name}: {a} is not a unit") from None

    def is_commutative(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a) for a in self.elements for b in range(a))

    def additive_group(self) -> FiniteGroup:
        return self.additive

    def unit_group(self) -> FiniteGroup:
        index = {u: k for k, u in enumerate(self.units)}
        table = [[index[self.mul(a, b)] for b in self.units] for a in self.units]
        return FiniteGroup(table, name=f"U({self.name})", labels=[str(u) for u in self.units], check=False)

    def __repr__(self) -> str:
        return f"FiniteRing({self.name}, order={self.order})"


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError(f"Cyclic group order must be positive, got {n}")
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], name=f"Z{n}", modulus=n, check=False)


def ring_zn(n: int) -> FiniteRing:
    if n < 1:
        raise InputError(f"Ring order must be positive, got {n}")
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    return FiniteRing(add, mul, name=f"Z{n}", modulus=n, check=False)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with (a, b) at index a*|H| + b."""
    m = H.order
    table = [
        [G.mul(a1, a2) * m + H.mul(b1, b2) for a2 in G.elements for b2 in H.elements]
        for a1 in G.elements for b1 in H.elements
    ]
    labels = [f"({G.labels[a]},{H.labels[b]})" for a in G.elements for b in H.elements]
    return FiniteGroup(table, name=f"{G.name}x{H.name}", labels=labels, check=False)


def group_from_function(elements: Sequence, op: Callable, name: str = "G", check: bool = True) -> FiniteGroup:
    """Tabulate a group given by explicit element objects and a binary operation."""
    index = {x: k for k, x in enumerate(elements)}
    try:
        table = [[index[op(a, b)] for b in elements] for a in elements]
    except KeyError as e:
        raise InputError(f"{name}: operation leaves the element set ({e})") from None
    return FiniteGroup(table, name=name, labels=[str(x) for x in elements], check=check)


@dataclass(frozen=True)
class AbelianCharacter:
    """A homomorphism from a finite abelian group into the roots of unity of a field."""

    domain: FiniteGroup
    field: CycField
    values: Tuple[CycElement, ...]

    def __call__(self, a: int) -> CycElement:
        return self.values[a]

    def verify(self) -> CheckResult:
        name = "character"
        if self.values[self.domain.identity] != 1:
            return CheckResult.failed(name, (self.domain.identity,))
        for a in self.domain.elements:
            if not self.field.is_root_of_unity(self.values[a]):
                return CheckResult.failed(name, (a,), detail="value is not a root of unity")
            for b in self.domain.elements:
                if self.values[self.domain.mul(a, b)] != self.values[a] * self.values[b]:
                    return CheckResult.failed(name, (a, b), total=self.domain.order**2)
        return CheckResult.passed(name, checked=self.domain.order**2)


@dataclass(frozen=True)
class GroupHom:
    """A group homomorphism given by its value table."""

    source: FiniteGroup
    target: FiniteGroup
    values: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.values[a]

    def verify(self) -> CheckResult:
        S, T = self.source, self.target
        for a in S.elements:
            for b in S.elements:
                if self.values[S.mul(a, b)] != T.mul(self.values[a], self.values[b]):
                    return CheckResult.failed("homomorphism", (a, b), total=S.order**2)
        return CheckResult.passed("homomorphism", checked=S.order**2)

    def compose(self, first: "GroupHom") -> "GroupHom":
        """self o first."""
        return GroupHom(first.source, self.target, tuple(self.values[first.values[a]] for a in first.source.elements))

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.values)) == self.source.order

    @classmethod
    def identity(cls, G: FiniteGroup) -> "GroupHom":
        return cls(G, G, tuple(G.elements))


@dataclass(frozen=True)
class UnitHom:
    """A homomorphism G -> U(R), stored by ring-element values."""

    source: FiniteGroup
    ring: FiniteRing
    values: Tuple[int, ...]

    def __call__(self, s: int) -> int:
        return self.values[s]

    def verify(self) -> CheckResult:
        G, R = self.source, self.ring
        for s in G.elements:
            if self.values[s] not in R.unit_set:
                return CheckResult.failed("unit homomorphism", (s,), detail="value is not a unit")
        for s in G.elements:
            for t in G.elements:
                if self.values[G.mul(s, t)] != R.mul(self.values[s], self.values[t]):
                    return CheckResult.failed("unit homomorphism", (s, t), total=G.order**2)
        return CheckResult.passed("unit homomorphism", checked=G.order**2)

    @classmethod
    def trivial(cls, G: FiniteGroup, R: FiniteRing) -> "UnitHom":
        return cls(G, R, (R.one,) * G.order)


def automorphisms_cyclic(n: int) -> List[GroupHom]:
    """All automorphisms i -> k*i of Z_n."""
    G = cyclic_group(n)
    return [GroupHom(G, G, tuple((k * i) % n for i in range(n))) for k in range(1, n) if math.gcd(k, n) == 1] or [GroupHom.identity(G)]


def group_isomorphisms(G: FiniteGroup, H: FiniteGroup) -> List[GroupHom]:
    """All isomorphisms G -> H, by extending images of a greedy generating set."""
    if G.order != H.order:
        return []
    gens: List[int] = []
    span = {G.identity}
    for a in G.elements:
        if a not in span:
            gens.append(a)
            span = _closure(G, gens)

    candidates = [[b for b in H.elements if H.element_order(b) == G.element_order(a)] for a in gens]
    found: List[GroupHom] = []
    for images in product(*candidates):
        values: Dict[int, int] = {G.identity: H.identity}
        frontier = [G.identity]
        consistent = True
        while frontier and consistent:
            nxt = []
            for x in frontier:
                for a, b in zip(gens, images):
                    y, image = G.mul(x, a), H.mul(values[x], b)
                    if y not in values:
                        values[y] = image
                        nxt.append(y)
                    elif values[y] != image:
                        consistent = False
                        break
                if not consistent:
                    break
            frontier = nxt
        if not consistent:
            continue
        hom = GroupHom(G, H, tuple(values[a] for a in G.elements))
        if hom.is_bijective() and hom.verify():
            found.append(hom)
    return found


def _closure(G: FiniteGroup, gens: Sequence[int]) -> set:
    span = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for a in gens:
                y = G.mul(x, a)
                if y not in span:
                    span.add(y)
                    nxt.append(y)
        frontier = nxt
    return span


def standard_characters(n: int, field: CycField) -> Tuple[AbelianCharacter, AbelianCharacter]:
    """The characters chi(i) = zeta^(i/2) and eta(i) = zeta^i of (Z_n, +) for odd n."""
    if n % 2 == 0:
        raise EvenPrime(f"chi(i) = zeta^(i/2) needs odd n, got {n}")
    G = cyclic_group(n)
    chi = tuple(field.root_of_order(n, half(i, n)) for i in range(n))
    eta = tuple(field.root_of_order(n, i) for i in range(n))
    return AbelianCharacter(G, field, chi), AbelianCharacter(G, field, eta)


def default_characters(n: int, field: CycField) -> Tuple[AbelianCharacter, AbelianCharacter]:
    """Characters for A_G recipes over Z_n: the standard pair for odd n, chi = eta = zeta_n^i for even n."""
    if n % 2:
        return standard_characters(n, field)
    G = cyclic_group(n)
    values = tuple(field.root_of_order(n, i) for i in range(n))
    return AbelianCharacter(G, field, values), AbelianCharacter(G, field, values)


def semidirect_T(G: FiniteGroup, R: FiniteRing, nu: UnitHom, beta: Sequence[int]) -> FiniteGroup:
    """T = G x| (R x R) with (s,v,w)(s',v',w') = (ss', v + v' + 2w beta(s'), w nu(s') + w').

    The element (s, v, w) sits at index s*|R|^2 + v*|R| + w.
    """
    for s in G.elements:
        for t in G.elements:
            if beta[G.mul(s, t)] != R.add(beta[s], R.mul(nu(s), beta[t])):
                raise NotACocycle(f"beta is not a 1-cocycle at {(s, t)}")
    r = R.order

    def index(s: int, v: int, w: int) -> int:
        return (s * r + v) * r + w

    table = [[0] * (G.order * r * r) for _ in range(G.order * r * r)]
    for s, v, w in product(G.elements, R.elements, R.elements):
        x = index(s, v, w)
        for s2, v2, w2 in product(G.elements, R.elements, R.elements):
            twist = R.mul(w, beta[s2])
            table[x][index(s2, v2, w2)] = index(
                G.mul(s, s2),
                R.sum(v, v2, twist, twist),
                R.add(R.mul(w, nu(s2)), w2),
            )
    labels = [f"({G.labels[s]},{v},{w})" for s, v, w in product(G.elements, R.elements, R.elements)]
    T = FiniteGroup(table, name="T", labels=labels, check=True)
    logger.debug(f"Built semidirect product T of order {T.order}")
    return T


def t_index(R: FiniteRing, s: int, v: int, w: int) -> int:
    r = R.order
    return (s * r + v) * r + w


def t_split(R: FiniteRing, x: int) -> Tuple[int, int, int]:
    r = R.order
    return x // (r * r), (x // r) % r, x % r


class AssociativityFailure(ConstructionError):
    """A multiplication table is not associative."""

    def __init__(self, message: str, witness: Optional[Tuple[int, ...]] = None):
        super().__init__(message)
        self.witness = witness


class NotACocycle(ConstructionError):
    """A map fails the cocycle identity."""
    pass

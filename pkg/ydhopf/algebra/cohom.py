"""
Group cohomology in degrees 1 and 2 for finite groups acting on finite groups.

Modules are written additively when abelian. A GModule whose module is the
canonical Z_n and whose group acts by multiplication with scalars k_g can use
the linear route in cohomologous2.
"""

import math
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger
from sympy import isprime
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from ..errors import InputError
from ..utils.report import CheckResult
from .finitestruct import FiniteGroup, FiniteRing, GroupHom, UnitHom, cyclic_group


class GModule:
    """A finite group M with an action of G by automorphisms."""

    def __init__(
        self,
        group: FiniteGroup,
        module: FiniteGroup,
        action: Sequence[Sequence[int]],
        name: str = "M",
        scalars: Optional[Sequence[int]] = None,
        ring: Optional[FiniteRing] = None,
    ):
        self.group = group
        self.module = module
        self.action: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in action)
        self.name = name
        self.scalars = tuple(scalars) if scalars is not None else None
        self.ring = ring
        if len(self.action) != group.order or any(len(row) != module.order for row in self.action):
            raise InputError(f"{name}: action table has the wrong shape")

    def act(self, g: int, m: int) -> int:
        return self.action[g][m]

    def add(self, a: int, b: int) -> int:
        return self.module.mul(a, b)

    def neg(self, a: int) -> int:
        return self.module.inv(a)

    def sub(self, a: int, b: int) -> int:
        return self.module.mul(a, self.module.inv(b))

    @property
    def zero(self) -> int:
        return self.module.identity

    def is_trivial(self) -> bool:
        return all(self.action[g][m] == m for g in self.group.elements for m in self.module.elements)

    def verify(self) -> CheckResult:
        G, M = self.group, self.module
        for m in M.elements:
            if self.act(G.identity, m) != m:
                return CheckResult.failed("module.unit", (m,))
        for g in G.elements:
            if len(set(self.action[g])) != M.order:
                return CheckResult.failed("module.bijective", (g,))
            for a in M.elements:
                for b in M.elements:
                    if self.act(g, M.mul(a, b)) != M.mul(self.act(g, a), self.act(g, b)):
                        return CheckResult.failed("module.automorphism", (g, a, b))
        for g in G.elements:
            for h in G.elements:
                for m in M.elements:
                    if self.act(G.mul(g, h), m) != self.act(g, self.act(h, m)):
                        return CheckResult.failed("module.action", (g, h, m))
        return CheckResult.passed("module", checked=G.order * M.order)


def trivial_module(G: FiniteGroup, n: int) -> GModule:
    """Z_n with trivial G-action."""
    M = cyclic_group(n)
    return GModule(G, M, [list(M.elements)] * G.order, name=f"Z{n}", scalars=[1] * G.order)


def ring_module(G: FiniteGroup, R: FiniteRing, nu: UnitHom) -> GModule:
    """(R, +) with s.u = nu(s) u."""
    action = [[R.mul(nu(s), u) for u in R.elements] for s in G.elements]
    scalars = list(nu.values) if R.modulus is not None else None
    return GModule(G, R.additive, action, name=f"_G{R.name}", scalars=scalars, ring=R)


@dataclass(frozen=True)
class Cocycle1:
    """A map s: G -> M, meant to satisfy s(gh) = s(g) (g.s(h))."""

    module: GModule
    values: Tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.values[g]


@dataclass(frozen=True)
class Cocycle2:
    """A map q: G x G -> M into an abelian module."""

    module: GModule
    table: Tuple[Tuple[int, ...], ...]
    normalized: bool = True

    def __call__(self, g: int, h: int) -> int:
        return self.table[g][h]

    @classmethod
    def from_function(cls, module: GModule, fn, normalized: bool = True) -> "Cocycle2":
        G = module.group
        return cls(module, tuple(tuple(fn(g, h) for h in G.elements) for g in G.elements), normalized)

    def is_symmetric(self) -> bool:
        G = self.module.group
        return all(self.table[g][h] == self.table[h][g] for g in G.elements for h in G.elements)


def verify_cocycle1(s: Cocycle1) -> CheckResult:
    mod = s.module
    G, M = mod.group, mod.module
    for g, h in product(G.elements, repeat=2):
        if s(G.mul(g, h)) != M.mul(s(g), mod.act(g, s(h))):
            return CheckResult.failed("cocycle1", (g, h), checked=0, total=G.order**2)
    # consequences: s(1) = 1 and s(g^-1) = (g^-1 . s(g))^-1
    if s(G.identity) != M.identity:
        return CheckResult.failed("cocycle1.identity", (G.identity,))
    for g in G.elements:
        gi = G.inv(g)
        if s(gi) != M.inv(mod.act(gi, s(g))):
            return CheckResult.failed("cocycle1.inverse", (g,))
    return CheckResult.passed("cocycle1", checked=G.order**2)


def verify_cocycle2(q: Cocycle2) -> CheckResult:
    mod = q.module
    G = mod.group
    n = G.order
    for a, b, c in product(G.elements, repeat=3):
        lhs = mod.add(mod.act(a, q(b, c)), q(a, G.mul(b, c)))
        rhs = mod.add(q(G.mul(a, b), c), q(a, b))
        if lhs != rhs:
            return CheckResult.failed("cocycle2", (a, b, c), total=n**3)
    if q.normalized:
        e = G.identity
        for g in G.elements:
            if q(g, e) != mod.zero or q(e, g) != mod.zero:
                return CheckResult.failed("cocycle2.normalized", (g,))
    return CheckResult.passed("cocycle2", checked=n**3)


def coboundary(module: GModule, w: Sequence[int]) -> Cocycle2:
    """(dw)(g, h) = g.w(h) - w(gh) + w(g)."""
    G = module.group
    return Cocycle2.from_function(
        module,
        lambda g, h: module.add(module.sub(module.act(g, w[h]), w[G.mul(g, h)]), w[g]),
        normalized=w[G.identity] == module.zero,
    )


def add_cocycles(q: Cocycle2, r: Cocycle2) -> Cocycle2:
    mod = q.module
    return Cocycle2.from_function(mod, lambda g, h: mod.add(q(g, h), r(g, h)), q.normalized and r.normalized)


def scale(q: Cocycle2, k: int) -> Cocycle2:
    """k*q, computed in the module group."""
    mod = q.module
    return Cocycle2.from_function(mod, lambda g, h: mod.module.power(q(g, h), k), q.normalized)


def ring_scale(q: Cocycle2, x: int, left: bool = True) -> Cocycle2:
    """x*q (or q*x) for a ring module; a trivial Z_n counts as the ring Z_n."""
    mod = q.module
    if mod.ring is None:
        if mod.module.modulus is not None and mod.is_trivial():
            return scale(q, x)
        raise InputError("ring_scale needs a ring module or a trivial Z_n")
    R = mod.ring
    if left:
        return Cocycle2.from_function(mod, lambda g, h: R.mul(x, q(g, h)), q.normalized)
    return Cocycle2.from_function(mod, lambda g, h: R.mul(q(g, h), x), q.normalized)


def pullback(q: Cocycle2, f: GroupHom, module: Optional[GModule] = None) -> Cocycle2:
    """(f*q)(g, h) = q(f(g), f(h)), as a cocycle on the source of f."""
    target = module or GModule(
        f.source,
        q.module.module,
        [q.module.action[f(g)] for g in f.source.elements],
        name=q.module.name,
        scalars=None if q.module.scalars is None else [q.module.scalars[f(g)] for g in f.source.elements],
        ring=q.module.ring,
    )
    return Cocycle2.from_function(target, lambda g, h: q(f(g), f(h)), q.normalized)


def cohomologous2(q: Cocycle2, q2: Cocycle2, search_bound: int = 10**6) -> Optional[Tuple[int, ...]]:
    """A 1-cochain s with s(1) = 0 and q2 = q + ds, or None when none exists."""
    mod = q.module
    G, M = mod.group, mod.module
    diff = [[mod.sub(q2(g, h), q(g, h)) for h in G.elements] for g in G.elements]

    if all(v == mod.zero for row in diff for v in row):
        return tuple([mod.zero] * G.order)

    if M.modulus is not None and mod.scalars is not None and isprime(M.modulus):
        return _solve_coboundary_linear(mod, diff)

    others = [g for g in G.elements if g != G.identity]
    space = M.order ** len(others)
    if space > search_bound:
        raise SearchSpaceTooLarge(
            f"Cochain space of size {space} exceeds the search bound {search_bound}"
        )
    logger.debug(f"Brute-force coboundary search over {space} cochains")
    for choice in product(M.elements, repeat=len(others)):
        w = [mod.zero] * G.order
        for g, v in zip(others, choice):
            w[g] = v
        if _is_coboundary_of(mod, diff, w):
            return tuple(w)
    return None


def _is_coboundary_of(mod: GModule, diff: List[List[int]], w: Sequence[int]) -> bool:
    G = mod.group
    for g in G.elements:
        for h in G.elements:
            value = mod.add(mod.sub(mod.act(g, w[h]), w[G.mul(g, h)]), w[g])
            if value != diff[g][h]:
                return False
    return True


def _solve_coboundary_linear(mod: GModule, diff: List[List[int]]) -> Optional[Tuple[int, ...]]:
    """Solve k_g s(h) - s(gh) + s(g) = d(g, h) over GF(p)."""
    G = mod.group
    p = mod.module.modulus
    assert p is not None and mod.scalars is not None
    domain = GF(p)
    others = [g for g in G.elements if g != G.identity]
    column = {g: c for c, g in enumerate(others)}
    width = len(others) + 1
    rows = []
    for g in G.elements:
        for h in G.elements:
            row = [0] * width
            if h in column:
                row[column[h]] += mod.scalars[g]
            gh = G.mul(g, h)
            if gh in column:
                row[column[gh]] -= 1
            if g in column:
                row[column[g]] += 1
            row[-1] = diff[g][h]
            rows.append([domain(v % p) for v in row])
    matrix = DomainMatrix(rows, (len(rows), width), domain)
    reduced, pivots = matrix.rref()
    if width - 1 in pivots:
        return None
    entries = reduced.to_list()
    w = [0] * G.order
    for r, c in enumerate(pivots):
        w[others[c]] = int(entries[r][-1]) % p
    result = tuple(w)
    if not _is_coboundary_of(mod, diff, result):
        raise InputError("Linear coboundary solve produced an invalid cochain")
    return result


def cup_product(s: Cocycle1, t: Cocycle1) -> Cocycle2:
    """(s u t)(g, g') = s(g) (g.t(g')) in Z_n (x) Z_n = Z_n."""
    ms, mt = s.module, t.module
    n = ms.module.modulus
    if n is None or mt.module.modulus != n:
        raise InputError("cup_product is defined here for Z_n-valued cocycles with the same n")
    if ms.scalars is None or mt.scalars is None:
        raise InputError("cup_product needs modules acting by scalars")
    G = ms.group
    scalars = [(a * b) % n for a, b in zip(ms.scalars, mt.scalars)]
    target = GModule(G, ms.module, [[(k * m) % n for m in range(n)] for k in scalars], name=f"Z{n}", scalars=scalars)
    return Cocycle2.from_function(target, lambda g, h: (s(g) * mt.act(g, t(h))) % n)


def carry_cocycle(p: int, m: int, n: int) -> Cocycle2:
    """q_n(i, j) = n * floor((i + j) / p) in Z_m, on the trivial Z_p-module Z_m."""
    mod = trivial_module(cyclic_group(p), m)
    return Cocycle2.from_function(mod, lambda i, j: (n * ((i + j) // p)) % m)


def h2_representatives(p: int, m: int) -> List[Cocycle2]:
    """Carry cocycles q_0, ..., q_{g-1}, g = gcd(p, m): one per class of H^2(Z_p, Z_m).

    For (2, 4) these are q_0 and q_1 = q_+. q_- = q_3 lies in the class of q_+;
    A_+ and A_- are told apart modulo 2-coboundaries 2dw, not by H^2.
    """
    count = math.gcd(p, m)
    return [carry_cocycle(p, m, n) for n in range(count)]


def h2_class(q: Cocycle2) -> int:
    """The class of q in H^2(Z_p, Z_m) = Z_gcd(p, m), as sum_i q(i, 1)."""
    mod = q.module
    p, m = mod.group.order, mod.module.modulus
    if m is None or mod.group.modulus is None or not mod.is_trivial():
        raise InputError("h2_class needs a trivial cyclic module Z_m over a canonical Z_p")
    generator = 1 % p
    return sum(q(i, generator) for i in range(p)) % math.gcd(p, m)


def q_plus() -> Cocycle2:
    """The Z_4-valued cocycle on Z_2 with q(1, 1) = 1."""
    return carry_cocycle(2, 4, 1)


def q_minus() -> Cocycle2:
    """The Z_4-valued cocycle on Z_2 with q(1, 1) = 3."""
    return carry_cocycle(2, 4, 3)


def extension_group(q: Cocycle2) -> FiniteGroup:
    """M x G with (x, i)(y, j) = (x + y + q(i, j), ij); (x, i) at index i*|M| + x."""
    mod = q.module
    G, M = mod.group, mod.module
    if not mod.is_trivial():
        raise InputError("extension_group is built for trivial modules")
    m = M.order
    table = [
        [G.mul(i, j) * m + M.mul(M.mul(x, y), q(i, j)) for j in G.elements for y in M.elements]
        for i in G.elements for x in M.elements
    ]
    return FiniteGroup(table, name=f"E({G.name},{M.name})", check=True)


class SearchSpaceTooLarge(InputError):
    """Neither the linear route nor brute force applies within the bound."""
    pass

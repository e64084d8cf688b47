"""
Finite-dimensional algebras, coalgebras and Hopf algebras given by sparse
structure constants over Q(zeta_N).

An Element is a dict {basis index: coefficient} with zero entries omitted; a
Tensor is the same keyed by pairs of basis indices.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra.cyclonum import CycElement, CycField
from ..algebra.finitestruct import FiniteGroup
from ..algebra.linalg import Vector, axpy, invert_columns

Element = Dict[int, CycElement]
Tensor = Dict[Tuple[int, int], CycElement]


# element helpers

def basis(i: int, field: CycField) -> Element:
    return {i: field.one}


def add_into(target: dict, coef: CycElement, source: dict) -> None:
    """target += coef * source for Elements or Tensors."""
    axpy(target, coef, source)  # type: ignore[arg-type]


def add_term(target: dict, key, value: CycElement) -> None:
    new = target[key] + value if key in target else value
    if new.is_zero():
        target.pop(key, None)
    else:
        target[key] = new


def scaled(x: dict, coef: CycElement) -> dict:
    if coef.is_zero():
        return {}
    return {k: v * coef for k, v in x.items()}


def combine(*terms: Tuple[CycElement, dict]) -> dict:
    out: dict = {}
    for coef, x in terms:
        add_into(out, coef, x)
    return out


def tensor_of(x: Element, y: Element) -> Tensor:
    out: Tensor = {}
    for i, a in x.items():
        for j, b in y.items():
            out[(i, j)] = a * b
    return out


@dataclass
class LinearMap:
    """A linear map between spaces with bases, stored by the images of basis vectors."""

    field: CycField
    columns: List[Element]
    dim_out: int = -1

    def __post_init__(self):
        if self.dim_out < 0:
            self.dim_out = len(self.columns)

    @property
    def dim_in(self) -> int:
        return len(self.columns)

    @classmethod
    def identity(cls, dim: int, field: CycField) -> "LinearMap":
        return cls(field, [basis(i, field) for i in range(dim)])

    @classmethod
    def from_function(cls, dim: int, field: CycField, fn: Callable[[int], Element], dim_out: int = -1) -> "LinearMap":
        return cls(field, [dict(fn(i)) for i in range(dim)], dim_out)

    @classmethod
    def from_monomial(cls, field: CycField, images: Sequence[Tuple[int, CycElement]], dim_out: int = -1) -> "LinearMap":
        return cls(field, [{k: c} for k, c in images], dim_out)

    def __call__(self, x: Element) -> Element:
        return self.apply(x)

    def apply(self, x: Element) -> Element:
        out: Element = {}
        for j, c in x.items():
            add_into(out, c, self.columns[j])
        return out

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self o other."""
        return LinearMap(self.field, [self.apply(col) for col in other.columns], self.dim_out)

    def power(self, k: int) -> "LinearMap":
        result = LinearMap.identity(self.dim_in, self.field)
        for _ in range(k):
            result = self.compose(result)
        return result

    def transpose(self) -> "LinearMap":
        cols: List[Element] = [{} for _ in range(self.dim_out)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                cols[i][j] = v
        return LinearMap(self.field, cols, self.dim_in)

    def inverse(self) -> "LinearMap":
        return LinearMap(self.field, invert_columns(self.columns, self.dim_in, self.field))

    def entry(self, i: int, j: int) -> CycElement:
        return self.columns[j].get(i, self.field.zero)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.dim_out == other.dim_out and self.columns == other.columns

    def first_difference(self, other: "LinearMap") -> Optional[int]:
        for j, (a, b) in enumerate(zip(self.columns, other.columns)):
            if a != b:
                return j
        return None

    def is_identity(self) -> bool:
        return all(col == {j: self.field.one} for j, col in enumerate(self.columns))


@dataclass
class SCAlgebra:
    """Unital algebra with sparse multiplication constants (i, j) -> e_i e_j."""

    dim: int
    field: CycField
    mult: Dict[Tuple[int, int], Element]
    unit: Element

    def basis_product(self, i: int, j: int) -> Element:
        return self.mult.get((i, j), {})

    def product(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.mult.get((i, j))
                if prod:
                    add_into(out, a * b, prod)
        return out

    def product_many(self, *factors: Element) -> Element:
        result = self.unit
        for f in factors:
            result = self.product(result, f)
        return result

    def power(self, x: Element, k: int) -> Element:
        result = dict(self.unit)
        for _ in range(k):
            result = self.product(result, x)
        return result

    def left_multiplication(self, x: Element) -> LinearMap:
        return LinearMap.from_function(self.dim, self.field, lambda j: self.product(x, basis(j, self.field)))

    def right_multiplication(self, x: Element) -> LinearMap:
        return LinearMap.from_function(self.dim, self.field, lambda j: self.product(basis(j, self.field), x))

    def is_commutative(self) -> bool:
        return all(self.mult.get((i, j), {}) == self.mult.get((j, i), {}) for (i, j) in self.mult)

    def opposite(self) -> "SCAlgebra":
        return SCAlgebra(self.dim, self.field, {(j, i): v for (i, j), v in self.mult.items()}, self.unit)


@dataclass
class SCCoalgebra:
    """Counital coalgebra with sparse comultiplication constants i -> Delta(e_i)."""

    dim: int
    field: CycField
    comult: List[Tensor]
    counit: List[CycElement]

    def coproduct(self, x: Element) -> Tensor:
        out: Tensor = {}
        for i, a in x.items():
            add_into(out, a, self.comult[i])
        return out

    def epsilon(self, x: Element) -> CycElement:
        total = self.field.zero
        for i, a in x.items():
            c = self.counit[i]
            if not c.is_zero():
                total = total + a * c
        return total

    def is_cocommutative(self) -> bool:
        return all(
            {(b, a): v for (a, b), v in delta.items()} == delta for delta in self.comult
        )


@dataclass
class HopfData:
    """A bialgebra with an optional antipode."""

    algebra: SCAlgebra
    coalgebra: SCCoalgebra
    antipode: Optional[LinearMap] = None
    name: str = "H"
    labels: Optional[List[str]] = None
    _inverse_antipode: Optional[LinearMap] = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> CycField:
        return self.algebra.field

    @property
    def one(self) -> Element:
        return self.algebra.unit

    def mul(self, x: Element, y: Element) -> Element:
        return self.algebra.product(x, y)

    def comul(self, x: Element) -> Tensor:
        return self.coalgebra.coproduct(x)

    def eps(self, x: Element) -> CycElement:
        return self.coalgebra.epsilon(x)

    def S(self, x: Element) -> Element:
        if self.antipode is None:
            raise ValueError(f"{self.name} has no antipode")
        return self.antipode.apply(x)

    def S_inv(self, x: Element) -> Element:
        return self.inverse_antipode.apply(x)

    @property
    def inverse_antipode(self) -> LinearMap:
        if self._inverse_antipode is None:
            if self.antipode is None:
                raise ValueError(f"{self.name} has no antipode")
            self._inverse_antipode = self.antipode.inverse()
        return self._inverse_antipode

    def basis(self, i: int) -> Element:
        return basis(i, self.field)

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def tensor_product_algebra(self, other: "HopfData") -> SCAlgebra:
        """Ordinary tensor product algebra, (i, j) at index i*dim(other) + j."""
        m = other.dim
        mult: Dict[Tuple[int, int], Element] = {}
        for (i, k), x in self.algebra.mult.items():
            for (j, l), y in other.algebra.mult.items():
                mult[(i * m + j, k * m + l)] = {a * m + b: u * v for a, u in x.items() for b, v in y.items()}
        unit = {a * m + b: u * v for a, u in self.one.items() for b, v in other.one.items()}
        return SCAlgebra(self.dim * m, self.field, mult, unit)


def group_algebra(G: FiniteGroup, field: CycField) -> HopfData:
    """K[G] with basis c_g."""
    one = field.one
    mult = {(a, b): {G.mul(a, b): one} for a in G.elements for b in G.elements}
    comult = [{(g, g): one} for g in G.elements]
    alg = SCAlgebra(G.order, field, mult, {G.identity: one})
    coalg = SCCoalgebra(G.order, field, comult, [one] * G.order)
    antipode = LinearMap.from_monomial(field, [(G.inv(g), one) for g in G.elements])
    return HopfData(alg, coalg, antipode, name=f"K[{G.name}]", labels=[f"c_{G.labels[g]}" for g in G.elements])


def function_algebra(G: FiniteGroup, field: CycField) -> HopfData:
    """K^G with basis the point functions delta_g."""
    one = field.one
    mult = {(g, g): {g: one} for g in G.elements}
    comult: List[Tensor] = []
    for g in G.elements:
        comult.append({(a, G.mul(G.inv(a), g)): one for a in G.elements})
    counit = [one if g == G.identity else field.zero for g in G.elements]
    alg = SCAlgebra(G.order, field, mult, {g: one for g in G.elements})
    coalg = SCCoalgebra(G.order, field, comult, counit)
    antipode = LinearMap.from_monomial(field, [(G.inv(g), one) for g in G.elements])
    return HopfData(alg, coalg, antipode, name=f"K^{G.name}", labels=[f"d_{G.labels[g]}" for g in G.elements])


def convolution(H: HopfData, f: LinearMap, g: LinearMap) -> LinearMap:
    """f * g = mu o (f (x) g) o Delta."""
    cols = []
    for i in range(H.dim):
        out: Element = {}
        for (a, b), c in H.coalgebra.comult[i].items():
            add_into(out, c, H.mul(f.columns[a], g.columns[b]))
        cols.append(out)
    return LinearMap(H.field, cols)


def unit_counit(H: HopfData) -> LinearMap:
    return LinearMap.from_function(H.dim, H.field, lambda i: scaled(H.one, H.coalgebra.counit[i]))


def tensor_hopf(H: HopfData, K: HopfData, name: Optional[str] = None) -> HopfData:
    """H (x) K with componentwise structure; (i, j) at index i*dim(K) + j."""
    m = K.dim
    field = H.field
    comult: List[Tensor] = []
    for i in range(H.dim):
        for j in range(m):
            delta: Tensor = {}
            for (a, b), u in H.coalgebra.comult[i].items():
                for (c, d), v in K.coalgebra.comult[j].items():
                    delta[(a * m + c, b * m + d)] = u * v
            comult.append(delta)
    counit = [x * y for x in H.coalgebra.counit for y in K.coalgebra.counit]
    antipode = None
    if H.antipode is not None and K.antipode is not None:
        antipode = LinearMap(
            field,
            [{a * m + b: u * v for a, u in H.antipode.columns[i].items() for b, v in K.antipode.columns[j].items()}
             for i in range(H.dim) for j in range(m)],
        )
    labels = None
    if H.labels and K.labels:
        labels = [f"{x}{y}" for x in H.labels for y in K.labels]
    return HopfData(
        H.tensor_product_algebra(K),
        SCCoalgebra(H.dim * m, field, comult, counit),
        antipode,
        name=name or f"{H.name}(x){K.name}",
        labels=labels,
    )


def coopposite(H: HopfData) -> HopfData:
    """H^cop: flipped comultiplication, inverse antipode."""
    comult = [{(b, a): v for (a, b), v in delta.items()} for delta in H.coalgebra.comult]
    antipode = H.inverse_antipode if H.antipode is not None else None
    return HopfData(
        H.algebra,
        SCCoalgebra(H.dim, H.field, comult, list(H.coalgebra.counit)),
        antipode,
        name=f"{H.name}^cop",
        labels=H.labels,
    )


def transport(H: HopfData, P: LinearMap, name: Optional[str] = None, labels: Optional[List[str]] = None) -> HopfData:
    """H in the basis whose k-th vector is column k of P (written in the old basis)."""
    field = H.field
    Q = P.inverse()
    n = H.dim

    def back(x: Element) -> Element:
        return Q.apply(x)

    def back2(X: Tensor) -> Tensor:
        out: Tensor = {}
        for (a, b), c in X.items():
            add_into(out, c, tensor_of(Q.columns[a], Q.columns[b]))
        return out

    mult: Dict[Tuple[int, int], Element] = {}
    for i in range(n):
        for j in range(n):
            prod = back(H.mul(P.columns[i], P.columns[j]))
            if prod:
                mult[(i, j)] = prod
    comult = [back2(H.comul(P.columns[k])) for k in range(n)]
    counit = [H.eps(P.columns[k]) for k in range(n)]
    antipode = None
    if H.antipode is not None:
        antipode = LinearMap(field, [back(H.S(P.columns[k])) for k in range(n)])
    return HopfData(
        SCAlgebra(n, field, mult, back(H.one)),
        SCCoalgebra(n, field, comult, counit),
        antipode,
        name=name or H.name,
        labels=labels,
    )

"""
Sparse exact linear algebra over cyclotomic fields.

Vectors are dicts {index: CycElement} with zero entries omitted. Systems are
split into connected components of the unknown-incidence graph before Gaussian
elimination; the Hopf-algebra systems here are block diagonal after that split.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..errors import InputError
from ..utils.unionfind import UnionFind
from .cyclonum import CycElement, CycField

Vector = Dict[int, CycElement]
Row = Tuple[Vector, CycElement]


def axpy(target: Vector, coef: CycElement, source: Vector) -> None:
    """target += coef * source, in place, dropping zeros."""
    for k, v in source.items():
        new = target[k] + coef * v if k in target else coef * v
        if new.is_zero():
            target.pop(k, None)
        else:
            target[k] = new


class _Eliminator:
    """Incremental forward elimination with pivots kept in creation order."""

    def __init__(self, field: CycField):
        self.field = field
        self.pivots: Dict[int, Row] = {}
        self.order: Dict[int, int] = {}

    def reduce(self, row: Vector, rhs: CycElement) -> Row:
        row = dict(row)
        while True:
            candidates = [c for c in row if c in self.pivots]
            if not candidates:
                return row, rhs
            col = min(candidates, key=self.order.__getitem__)
            coef = row[col]
            prow, prhs = self.pivots[col]
            axpy(row, -coef, prow)
            rhs = rhs - coef * prhs

    def add(self, row: Vector, rhs: CycElement) -> Optional[int]:
        """Add an equation; returns the new pivot column, or None if it reduced to 0 = rhs."""
        row, rhs = self.reduce(row, rhs)
        if not row:
            if not rhs.is_zero():
                raise InconsistentSystem("Equation reduces to 0 = nonzero")
            return None
        col = min(row)
        inv = row[col].inverse()
        normalized = {c: v * inv for c, v in row.items()}
        self.pivots[col] = (normalized, rhs * inv)
        self.order[col] = len(self.order)
        return col

    def back_substitute(self) -> None:
        """Bring the pivot rows to reduced echelon form."""
        by_order = sorted(self.pivots, key=self.order.__getitem__, reverse=True)
        done: Dict[int, Row] = {}
        for col in by_order:
            row, rhs = self.pivots[col]
            row = dict(row)
            for c in [c for c in row if c != col and c in done]:
                coef = row[c]
                drow, drhs = done[c]
                axpy(row, -coef, drow)
                rhs = rhs - coef * drhs
            done[col] = (row, rhs)
        self.pivots = done


def solve_sparse(rows: Sequence[Row], n_unknowns: int, field: CycField) -> List[CycElement]:
    """The unique solution of a square-or-overdetermined sparse system.

    Raises InconsistentSystem when there is no solution and SingularSystem when
    the solution is not unique.
    """
    uf = UnionFind(range(n_unknowns))
    for coeffs, rhs in rows:
        keys = list(coeffs)
        if not keys:
            if not rhs.is_zero():
                raise InconsistentSystem("Empty equation with nonzero right-hand side")
            continue
        for k in keys[1:]:
            uf.union(keys[0], k)
    by_component: Dict[int, List[Row]] = {}
    for coeffs, rhs in rows:
        if coeffs:
            by_component.setdefault(uf.find(next(iter(coeffs))), []).append((coeffs, rhs))

    solution: List[Optional[CycElement]] = [None] * n_unknowns
    sizes = []
    for root, component_rows in by_component.items():
        elim = _Eliminator(field)
        for coeffs, rhs in component_rows:
            elim.add(coeffs, rhs)
        elim.back_substitute()
        for col, (row, rhs) in elim.pivots.items():
            if len(row) != 1:
                raise SingularSystem(f"Unknown {col} is not determined")
            solution[col] = rhs
        sizes.append(len(component_rows))
    missing = [k for k, v in enumerate(solution) if v is None]
    if missing:
        raise SingularSystem(f"{len(missing)} unknowns are not determined (first: {missing[0]})")
    logger.debug(f"Solved {n_unknowns} unknowns in {len(sizes)} components (largest {max(sizes, default=0)} rows)")
    return solution  # type: ignore[return-value]


def rref(rows: Sequence[Vector], field: CycField) -> Dict[int, Vector]:
    """Reduced row echelon form: pivot column -> row with pivot coefficient 1."""
    elim = _Eliminator(field)
    for row in rows:
        if row:
            elim.add(row, field.zero)
    elim.back_substitute()
    return {col: row for col, (row, _) in elim.pivots.items()}


def rank(rows: Sequence[Vector], field: CycField) -> int:
    return len(rref(rows, field))


def kernel(rows: Sequence[Vector], n_columns: int, field: CycField) -> List[Vector]:
    """A basis of {x : row . x = 0 for all rows}."""
    reduced = rref(rows, field)
    free = [c for c in range(n_columns) if c not in reduced]
    basis = []
    for f in free:
        vector: Vector = {f: field.one}
        for col, row in reduced.items():
            coef = row.get(f)
            if coef is not None:
                vector[col] = -coef
        basis.append(vector)
    return basis


def independent_subset(vectors: Sequence[Vector], field: CycField) -> List[int]:
    """Indices of a maximal linearly independent subset, greedily in order."""
    elim = _Eliminator(field)
    chosen = []
    for k, v in enumerate(vectors):
        if elim.add(v, field.zero) is not None:
            chosen.append(k)
    return chosen


def in_span(vector: Vector, basis: Sequence[Vector], field: CycField) -> bool:
    elim = _Eliminator(field)
    for v in basis:
        elim.add(v, field.zero)
    row, _ = elim.reduce(vector, field.zero)
    return not row


class Span:
    """An incrementally grown subspace with membership tests."""

    def __init__(self, field: CycField):
        self._elim = _Eliminator(field)
        self.basis: List[Vector] = []

    def add(self, vector: Vector) -> bool:
        """Add vector; False when it already lies in the span."""
        if self._elim.add(vector, self._elim.field.zero) is None:
            return False
        self.basis.append(vector)
        return True

    def __contains__(self, vector: Vector) -> bool:
        row, _ = self._elim.reduce(vector, self._elim.field.zero)
        return not row

    def __len__(self) -> int:
        return len(self.basis)


def coordinates(basis: Sequence[Vector], vector: Vector, field: CycField) -> List[CycElement]:
    """c with sum c_s basis[s] = vector, for linearly independent basis vectors."""
    rows: Dict[int, Vector] = {}
    for s, v in enumerate(basis):
        for k, c in v.items():
            rows.setdefault(k, {})[s] = c
    keys = set(rows) | set(vector)
    return solve_sparse([(rows.get(k, {}), vector.get(k, field.zero)) for k in sorted(keys)], len(basis), field)


def invert_columns(columns: Sequence[Vector], dim: int, field: CycField) -> List[Vector]:
    """Columns of M^-1 for the matrix whose j-th column is columns[j]."""
    rows: List[Vector] = [{} for _ in range(dim)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows[i][j] = v
    for i in range(dim):
        rows[i][dim + i] = field.one
    reduced = rref(rows, field)
    if any(c >= dim for c in reduced) or len(reduced) != dim:
        raise SingularSystem("Matrix is not invertible")
    inverse: List[Vector] = [{} for _ in range(dim)]
    for c, row in reduced.items():
        for k, v in row.items():
            if k >= dim:
                inverse[k - dim][c] = v
    return inverse


class InconsistentSystem(InputError):
    """A linear system without solutions."""
    pass


class SingularSystem(InputError):
    """A linear system whose solution is not unique."""
    pass

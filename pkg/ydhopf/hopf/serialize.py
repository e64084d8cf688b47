"""
Canonical JSON form of structure constants.

Coefficients are lists of exact "num/den" power-basis coordinates; all
sparse tensors are sorted triplet lists so equal structures give equal text.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from ..algebra.cyclonum import CycElement, CycField, get_field
from ..errors import InputError
from .structure import Element, HopfData, LinearMap, SCAlgebra, SCCoalgebra, Tensor


def _coef(c: CycElement) -> List[str]:
    return c.to_strings()


def _parse(field: CycField, coords: List[str]) -> CycElement:
    try:
        return field.from_coefficients([Fraction(s) for s in coords])
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"Bad coefficient {coords}: {e}") from e


def _element(x: Element) -> List[Any]:
    return [[k, _coef(v)] for k, v in sorted(x.items())]


def to_dict(H: HopfData) -> Dict[str, Any]:
    mult = [
        [i, j, k, _coef(v)]
        for (i, j), prod in sorted(H.algebra.mult.items())
        for k, v in sorted(prod.items())
    ]
    comult = [
        [i, a, b, _coef(v)]
        for i, delta in enumerate(H.coalgebra.comult)
        for (a, b), v in sorted(delta.items())
    ]
    antipode: Optional[List[Any]] = None
    if H.antipode is not None:
        antipode = [[j, k, _coef(v)] for j, col in enumerate(H.antipode.columns) for k, v in sorted(col.items())]
    return {
        "name": H.name,
        "conductor": H.field.N,
        "dim": H.dim,
        "labels": list(H.labels) if H.labels else None,
        "mult": mult,
        "unit": _element(H.one),
        "comult": comult,
        "counit": [[i, _coef(v)] for i, v in enumerate(H.coalgebra.counit) if not v.is_zero()],
        "antipode": antipode,
    }


def to_json(H: HopfData, indent: Optional[int] = None) -> str:
    return json.dumps(to_dict(H), sort_keys=True, indent=indent)


def from_dict(data: Dict[str, Any]) -> HopfData:
    try:
        field = get_field(int(data["conductor"]))
        dim = int(data["dim"])
        mult: Dict[Any, Element] = {}
        for i, j, k, coords in data["mult"]:
            mult.setdefault((i, j), {})[k] = _parse(field, coords)
        unit = {k: _parse(field, coords) for k, coords in data["unit"]}
        comult: List[Tensor] = [{} for _ in range(dim)]
        for i, a, b, coords in data["comult"]:
            comult[i][(a, b)] = _parse(field, coords)
        counit = [field.zero] * dim
        for i, coords in data["counit"]:
            counit[i] = _parse(field, coords)
        antipode = None
        if data.get("antipode") is not None:
            columns: List[Element] = [{} for _ in range(dim)]
            for j, k, coords in data["antipode"]:
                columns[j][k] = _parse(field, coords)
            antipode = LinearMap(field, columns)
    except (KeyError, TypeError, IndexError) as e:
        raise InputError(f"Malformed structure-constant document: {e}") from e
    return HopfData(
        SCAlgebra(dim, field, mult, unit),
        SCCoalgebra(dim, field, comult, counit),
        antipode,
        name=data.get("name", "H"),
        labels=data.get("labels"),
    )


def from_json(text: str) -> HopfData:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Invalid JSON: {e}") from e
    return from_dict(data)

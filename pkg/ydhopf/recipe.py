"""
Construction recipes: the JSON documents the command line builds from.

A recipe names a family and its parameters, for example

    {"family": "A_G", "ring": {"zn": 3}, "group": {"cyclic": 3},
     "nu": [1, 1, 1], "alpha": [0, 1, 2], "beta": [0, 1, 2], "q": "carry:1"}
    {"family": "A_p", "p": 3, "m": 1, "n": 0}
    {"family": "A_pm", "sign": "+"}
    {"family": "B_p", "p": 3, "a": 1, "b": 1, "q": "carry:0"}

Cocycles are given as a raw table or through the shorthands "carry:n",
"qplus" and "qminus".
"""

import hashlib
import json
import re
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from .algebra.cohom import Cocycle2, GModule, carry_cocycle, q_minus, q_plus
from .algebra.finitestruct import FiniteGroup, FiniteRing, cyclic_group, ring_zn
from .errors import InputError

Family = Literal["framework", "A_G", "A_p", "A_pm", "B_p", "biproduct", "second"]
CocycleSpec = Union[str, List[List[int]]]

_CARRY = re.compile(r"^carry:(\d+)$")


class RingSpec(BaseModel):
    """A finite ring; only Z_n for now."""

    zn: int = Field(ge=2, description="The ring Z_n")

    def build(self) -> FiniteRing:
        return ring_zn(self.zn)


class GroupSpec(BaseModel):
    """A finite group, cyclic by order or given by a Cayley table."""

    cyclic: Optional[int] = Field(default=None, ge=1)
    table: Optional[List[List[int]]] = None
    name: str = "G"

    @model_validator(mode="after")
    def exactly_one(self) -> "GroupSpec":
        if (self.cyclic is None) == (self.table is None):
            raise ValueError("give exactly one of 'cyclic' and 'table'")
        return self

    def build(self) -> FiniteGroup:
        if self.cyclic is not None:
            return cyclic_group(self.cyclic)
        return FiniteGroup(self.table, name=self.name, check=True)


class Recipe(BaseModel):
    """One construction request."""

    family: Family

    # A_p, B_p and A_pm shorthands
    p: Optional[int] = Field(default=None, ge=2)
    m: int = Field(default=1, description="alpha = m*id for A_p")
    n: int = Field(default=0, description="q = q_n for A_p")
    a: Optional[int] = None
    b: Optional[int] = None
    sign: Optional[Literal["+", "-"]] = None

    # A_G data (also the base of biproduct and second)
    ring: Optional[RingSpec] = None
    group: Optional[GroupSpec] = None
    nu: Optional[List[int]] = None
    alpha: Optional[List[int]] = None
    beta: Optional[List[int]] = None
    q: Optional[CocycleSpec] = None

    # framework data; gamma and sigma as exponents of zeta_N
    C: Optional[int] = Field(default=None, ge=1, description="Order of the cyclic group C")
    P: Optional[int] = Field(default=None, ge=1, description="Order of the cyclic group P")
    action: Optional[List[List[int]]] = None
    z: Optional[List[List[int]]] = None
    gamma: Optional[List[List[List[int]]]] = None
    sigma: Optional[List[List[List[int]]]] = None

    conductor: Optional[int] = Field(default=None, ge=1)

    model_config = {"extra": "forbid"}

    @field_validator("q", mode="before")
    @classmethod
    def known_shorthand(cls, v):
        if isinstance(v, str) and v not in ("qplus", "qminus") and not _CARRY.match(v):
            raise ValueError(f"unknown cocycle shorthand {v!r}; use 'carry:n', 'qplus', 'qminus' or a table")
        return v

    @model_validator(mode="after")
    def required_fields(self) -> "Recipe":
        family = self.family
        if family == "A_p" and self.p is None:
            raise ValueError("A_p needs 'p'")
        if family == "A_pm" and self.sign is None:
            raise ValueError("A_pm needs 'sign'")
        if family == "B_p" and (self.p is None or self.a is None or self.b is None):
            raise ValueError("B_p needs 'p', 'a' and 'b'")
        if family == "A_G" or (family in ("biproduct", "second") and self.p is None):
            missing = [name for name in ("ring", "group") if getattr(self, name) is None]
            if missing:
                raise ValueError(f"{family} needs {', '.join(missing)} (or 'p' for the A_p shorthand)")
        if family == "framework":
            missing = [name for name in ("C", "P", "group", "action", "z", "gamma", "sigma", "conductor") if getattr(self, name) is None]
            if missing:
                raise ValueError(f"framework needs {', '.join(missing)}")
        return self

    def key(self) -> str:
        """Canonical JSON of the recipe, used as cache key."""
        return json.dumps(self.model_dump(exclude_none=True), sort_keys=True, separators=(",", ":"))

    def seed(self) -> int:
        """Sampling seed derived from the recipe."""
        return int(hashlib.sha256(self.key().encode()).hexdigest()[:8], 16)

    def cocycle(self, module: GModule, default: Optional[CocycleSpec] = None) -> Cocycle2:
        """Expand q (or the default) on the given module."""
        spec = self.q if self.q is not None else default
        if spec is None:
            spec = [[module.zero] * module.group.order for _ in module.group.elements]
        return expand_cocycle(spec, module)


def expand_cocycle(spec: CocycleSpec, module: GModule) -> Cocycle2:
    G = module.group
    if spec == "qplus":
        return Cocycle2(module, q_plus().table)
    if spec == "qminus":
        return Cocycle2(module, q_minus().table)
    if isinstance(spec, str):
        match = _CARRY.match(spec)
        if match is None:
            raise RecipeError(f"unknown cocycle shorthand {spec!r}")
        k = int(match.group(1))
        p, m = G.order, module.module.order
        if G.modulus is None:
            raise RecipeError("'carry:n' needs a cyclic group given by its order")
        return Cocycle2(module, carry_cocycle(p, m, k).table)
    if len(spec) != G.order or any(len(row) != G.order for row in spec):
        raise RecipeError(f"cocycle table must be {G.order} x {G.order}")
    return Cocycle2(module, tuple(tuple(row) for row in spec))


def parse_recipe(text: str) -> Recipe:
    """Parse a recipe from JSON text."""
    try:
        return Recipe.model_validate_json(text)
    except ValidationError as e:
        raise RecipeError(f"Invalid recipe: {e}") from e


class RecipeError(InputError):
    """Recipe does not match the schema."""
    pass

"""
Construction factory: turns a recipe into a built object.
"""

from typing import Any, Callable, Dict, List, Optional

from loguru import logger

from ..algebra.cohom import ring_module, trivial_module
from ..algebra.cyclonum import CycField, get_field
from ..algebra.finitestruct import UnitHom, cyclic_group, default_characters
from ..config.settings import Settings
from ..errors import InputError
from ..recipe import Recipe
from .ag import a_p, build_AG
from .apm import build_Apm
from .base import ConstructionData, YDHopfAlgebra
from .biproduct import build_biproduct
from .framework import FrameworkData, build_framework
from .second import second_construction


def _natural_conductor(recipe: Recipe) -> int:
    if recipe.family == "A_pm":
        return 4
    if recipe.family == "framework":
        return recipe.conductor or 1
    if recipe.p is not None:
        return recipe.p
    return recipe.ring.zn


def construction_data(recipe: Recipe, field: CycField) -> ConstructionData:
    """A_G data from the ring/group fields, or the A_p(m, n) shorthand when p is given."""
    if recipe.p is not None:
        return a_p(recipe.p, recipe.m, recipe.n, field)
    R = recipe.ring.build()
    G = recipe.group.build()
    nu = UnitHom(G, R, tuple(recipe.nu)) if recipe.nu is not None else UnitHom.trivial(G, R)
    chi, eta = default_characters(R.order, field)
    return ConstructionData(
        R=R,
        G=G,
        nu=nu,
        alpha=tuple(recipe.alpha or [0] * G.order),
        beta=tuple(recipe.beta or [0] * G.order),
        q=recipe.cocycle(ring_module(G, R, nu)),
        chi=chi,
        eta=eta,
        name=f"A_G({R.name},{G.name})",
    )


def _framework(recipe: Recipe, field: CycField) -> YDHopfAlgebra:
    """Framework data carry no closed forms to compare."""
    root = field.root
    fw = FrameworkData(
        C=cyclic_group(recipe.C),
        G=recipe.group.build(),
        P=cyclic_group(recipe.P),
        action=recipe.action,
        z=recipe.z,
        gamma=[[[root(k) for k in row] for row in block] for block in recipe.gamma],
        sigma=[[[root(k) for k in row] for row in block] for block in recipe.sigma],
        field=field,
        name="A",
    )
    return build_framework(fw, check=True)


def _ag(recipe: Recipe, field: CycField, compare: bool) -> YDHopfAlgebra:
    return build_AG(construction_data(recipe, field), compare=compare)


def _apm(recipe: Recipe, field: CycField, compare: bool) -> YDHopfAlgebra:
    return build_Apm(recipe.sign, field, compare=compare)


def bp_params(recipe: Recipe) -> Any:
    """BpParams of a B_p recipe; q defaults to the trivial class."""
    from ..classify.bp import BpParams

    module = trivial_module(cyclic_group(recipe.p), recipe.p)
    return BpParams(recipe.p, recipe.a % recipe.p, recipe.b % recipe.p, recipe.cocycle(module, default="carry:0"))


def _bp(recipe: Recipe, field: CycField, compare: bool) -> Any:
    from ..classify.bp import build_Bp

    return build_Bp(bp_params(recipe), field, compare=compare)


def _biproduct(recipe: Recipe, field: CycField, compare: bool) -> Any:
    return build_biproduct(_ag(recipe, field, compare), compare=compare)


def _second(recipe: Recipe, field: CycField, compare: bool) -> Any:
    return second_construction(_ag(recipe, field, compare), compare=compare)


class ConstructionFactory:
    """Factory for building the construction families from recipes."""

    _raw: Dict[str, Callable[[Recipe, CycField], Any]] = {"framework": _framework}
    _families: Dict[str, Callable[[Recipe, CycField, bool], Any]] = {
        "A_G": _ag,
        "A_p": _ag,
        "A_pm": _apm,
        "B_p": _bp,
        "biproduct": _biproduct,
        "second": _second,
    }

    @classmethod
    def create(cls, recipe: Recipe, settings: Optional[Settings] = None, compare: bool = True) -> Any:
        """Build the object a recipe describes; everything returned carries a .hopf."""
        if recipe.family not in cls._families and recipe.family not in cls._raw:
            raise InputError(f"Unknown family: {recipe.family}")
        field = cls.field_for(recipe, settings)
        logger.info(f"Building {recipe.family} over Q(zeta_{field.N})")
        if recipe.family in cls._raw:
            return cls._raw[recipe.family](recipe, field)
        return cls._families[recipe.family](recipe, field, compare)

    @classmethod
    def field_for(cls, recipe: Recipe, settings: Optional[Settings] = None) -> CycField:
        """Q(zeta_N) for the recipe; an override must be a multiple of the natural conductor."""
        natural = _natural_conductor(recipe)
        override = recipe.conductor
        if override is None and settings is not None:
            override = settings.arithmetic.conductor
        if override is None:
            return get_field(natural)
        if override % natural:
            raise InputError(f"Conductor {override} is not a multiple of the natural conductor {natural}")
        return get_field(override)

    @classmethod
    def list_families(cls) -> List[str]:
        """List all supported construction families."""
        return list(cls._raw) + list(cls._families)

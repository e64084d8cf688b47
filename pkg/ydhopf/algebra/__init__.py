"""Scalars, finite groups and rings, cohomology and exact linear algebra."""

from .cyclonum import CycElement, CycField, get_field
from .finitestruct import FiniteGroup, FiniteRing, cyclic_group, ring_zn

__all__ = ["CycElement", "CycField", "FiniteGroup", "FiniteRing", "cyclic_group", "get_field", "ring_zn"]

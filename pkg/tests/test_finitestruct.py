"""Tests for finite groups, rings, characters and homomorphisms."""

import pytest

from ydhopf.algebra.cohom import ring_module
from ydhopf.algebra.finitestruct import (
    FiniteGroup,
    GroupHom,
    NotACocycle,
    UnitHom,
    automorphisms_cyclic,
    cyclic_group,
    default_characters,
    direct_product,
    group_isomorphisms,
    ring_zn,
    semidirect_T,
    standard_characters,
    t_index,
    t_split,
)
from ydhopf.errors import InputError


class TestFiniteGroup:
    def test_cyclic_group(self):
        G = cyclic_group(6)
        assert G.order == 6
        assert G.identity == 0
        assert G.inv(2) == 4
        assert G.element_order(2) == 3
        assert G.power(1, -1) == 5
        assert G.is_abelian()

    def test_table_without_identity(self):
        with pytest.raises(InputError):
            FiniteGroup([[0, 2, 1], [1, 0, 2], [2, 1, 0]], name="minus")

    def test_non_square_table(self):
        with pytest.raises(InputError):
            FiniteGroup([[0, 1], [1]])

    def test_direct_product(self):
        V = direct_product(cyclic_group(2), cyclic_group(2))
        assert V.order == 4
        assert V.is_abelian()
        assert max(V.element_order(a) for a in V.elements) == 2
        assert V.check_associativity()

    def test_group_isomorphisms(self):
        Z3 = cyclic_group(3)
        assert len(group_isomorphisms(Z3, Z3)) == 2
        V = direct_product(cyclic_group(2), cyclic_group(2))
        assert group_isomorphisms(cyclic_group(4), V) == []
        assert len(group_isomorphisms(V, V)) == 6

    def test_automorphisms_cyclic(self):
        autos = automorphisms_cyclic(5)
        assert len(autos) == 4
        assert all(f.verify() and f.is_bijective() for f in autos)

    def test_compose_with_identity(self):
        G = cyclic_group(5)
        f = automorphisms_cyclic(5)[1]
        assert f.compose(GroupHom.identity(G)).values == f.values


class TestRings:
    def test_ring_zn(self):
        R = ring_zn(6)
        assert R.mul(2, 3) == 0
        assert R.unit_set == frozenset({1, 5})
        assert R.unit_inverse(5) == 5
        assert R.is_commutative()

    def test_unit_group(self):
        assert ring_zn(7).unit_group().order == 6

    def test_ring_module_scalars(self):
        G, R = cyclic_group(2), ring_zn(3)
        nu = UnitHom(G, R, (1, 2))
        assert nu.verify()
        M = ring_module(G, R, nu)
        assert M.act(1, 1) == 2
        assert M.verify()


class TestCharacters:
    def test_standard_characters(self, F3):
        chi, eta = standard_characters(3, F3)
        assert chi.verify() and eta.verify()
        assert chi(1) ** 2 == eta(1)
        assert eta(1) == F3.root(1)

    def test_even_defaults(self):
        from ydhopf.algebra.cyclonum import get_field

        F = get_field(2)
        chi, eta = default_characters(2, F)
        assert chi(1) == -1
        assert chi.values == eta.values


class TestSemidirectT:
    def test_order_and_indexing(self):
        G, R = cyclic_group(3), ring_zn(3)
        T = semidirect_T(G, R, UnitHom.trivial(G, R), (0, 1, 2))
        assert T.order == 27
        assert not T.is_abelian()
        assert t_split(R, t_index(R, 2, 1, 0)) == (2, 1, 0)

    def test_beta_must_be_a_cocycle(self):
        G, R = cyclic_group(3), ring_zn(3)
        with pytest.raises(NotACocycle):
            semidirect_T(G, R, UnitHom.trivial(G, R), (0, 1, 1))

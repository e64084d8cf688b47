"""Tests for degree 1 and 2 group cohomology."""

import pytest

from ydhopf.algebra.cohom import (
    Cocycle1,
    Cocycle2,
    GModule,
    SearchSpaceTooLarge,
    add_cocycles,
    carry_cocycle,
    coboundary,
    cohomologous2,
    cup_product,
    extension_group,
    h2_class,
    h2_representatives,
    pullback,
    q_minus,
    q_plus,
    ring_module,
    ring_scale,
    scale,
    trivial_module,
    verify_cocycle1,
    verify_cocycle2,
)
from ydhopf.algebra.finitestruct import UnitHom, automorphisms_cyclic, cyclic_group, ring_zn
from ydhopf.errors import InputError


class TestCarryCocycles:
    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_carry_cocycles_are_normalized_cocycles(self, n):
        q = carry_cocycle(3, 3, n)
        assert verify_cocycle2(q)
        assert q.is_symmetric()

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_class_of_carry_cocycle(self, n):
        assert h2_class(carry_cocycle(3, 3, n)) == n

    def test_representatives(self):
        assert len(h2_representatives(5, 5)) == 5
        assert len(h2_representatives(3, 4)) == 1

    def test_q_minus_shares_the_class_of_q_plus(self):
        zero, one = h2_representatives(2, 4)
        assert one.table == q_plus().table
        assert h2_class(zero) == 0
        assert h2_class(q_plus()) == h2_class(q_minus()) == 1
        assert cohomologous2(q_plus(), q_minus()) is not None

    def test_ring_scale_on_a_trivial_cyclic_module(self):
        q = carry_cocycle(3, 3, 1)
        assert ring_scale(q, 2)(2, 1) == 2
        assert h2_class(ring_scale(q, 2)) == 2

    def test_ring_scale_on_a_ring_module(self):
        G, R = cyclic_group(3), ring_zn(3)
        q = Cocycle2(ring_module(G, R, UnitHom.trivial(G, R)), carry_cocycle(3, 3, 1).table)
        assert ring_scale(q, 2)(2, 1) == 2
        assert h2_class(ring_scale(q, 2)) == 2

    def test_ring_scale_needs_a_ring_or_a_trivial_action(self):
        signs = GModule(cyclic_group(2), cyclic_group(3), [[0, 1, 2], [0, 2, 1]])
        with pytest.raises(InputError):
            ring_scale(Cocycle2(signs, ((0, 0), (0, 0))), 2)

    def test_sum_and_scale_add_classes(self):
        q1 = carry_cocycle(5, 5, 1)
        q3 = carry_cocycle(5, 5, 3)
        assert h2_class(add_cocycles(q1, q3)) == 4
        assert h2_class(scale(q3, 2)) == 1

    def test_pullback_along_automorphism(self):
        q = carry_cocycle(3, 3, 1)
        f = automorphisms_cyclic(3)[1]
        pulled = pullback(q, f)
        assert verify_cocycle2(pulled)
        # i -> 2i doubles the class
        assert h2_class(pulled) == 2


class TestCohomologous:
    def test_distinct_classes(self):
        assert cohomologous2(carry_cocycle(3, 3, 1), carry_cocycle(3, 3, 2)) is None

    def test_coboundary_is_trivial(self):
        q0 = carry_cocycle(3, 3, 0)
        d = coboundary(q0.module, [0, 1, 0])
        assert verify_cocycle2(d)
        w = cohomologous2(q0, d)
        assert w is not None
        assert w[0] == 0

    def test_brute_force_route(self):
        # Z_4 is not of prime order, so the search is by enumeration
        q = carry_cocycle(3, 4, 1)
        zero = carry_cocycle(3, 4, 0)
        assert cohomologous2(zero, q) is not None
        with pytest.raises(SearchSpaceTooLarge):
            cohomologous2(zero, q, search_bound=1)


class TestOneCocyclesAndCup:
    def test_identity_is_a_cocycle_on_trivial_module(self):
        M = trivial_module(cyclic_group(3), 3)
        assert verify_cocycle1(Cocycle1(M, (0, 1, 2)))
        assert not verify_cocycle1(Cocycle1(M, (0, 1, 1)))

    def test_cup_product(self):
        M = trivial_module(cyclic_group(3), 3)
        s = Cocycle1(M, (0, 1, 2))
        cup = cup_product(s, s)
        assert cup(2, 2) == 1
        assert verify_cocycle2(cup)


class TestExtensions:
    def test_split_and_nonsplit_extensions_of_z2(self):
        split = extension_group(carry_cocycle(2, 2, 0))
        nonsplit = extension_group(carry_cocycle(2, 2, 1))
        assert max(split.element_order(a) for a in split.elements) == 2
        assert max(nonsplit.element_order(a) for a in nonsplit.elements) == 4

    def test_q_plus_and_q_minus(self):
        assert q_plus()(1, 1) == 1
        assert q_minus()(1, 1) == 3
        E = extension_group(q_plus())
        assert E.order == 8
        assert E.element_order(4) == 8

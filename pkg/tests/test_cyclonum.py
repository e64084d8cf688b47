"""Tests for exact cyclotomic arithmetic."""

from fractions import Fraction

import pytest

from ydhopf.algebra.cyclonum import (
    DivisionByZero,
    EvenPrime,
    FieldMismatch,
    NotDivisible,
    cyc_arith,
    cyclotomic_coefficients,
    get_field,
    half,
)


class TestCyclotomicPolynomials:
    def test_small_conductors(self):
        assert cyclotomic_coefficients(1) == (-1, 1)
        assert cyclotomic_coefficients(3) == (1, 1, 1)
        assert cyclotomic_coefficients(4) == (1, 0, 1)
        assert cyclotomic_coefficients(6) == (1, -1, 1)

    def test_degree_is_euler_phi(self):
        assert get_field(9).degree == 6
        assert get_field(12).degree == 4


class TestCycElement:
    def test_root_relations(self, F3):
        z = F3.root(1)
        assert z**3 == 1
        assert 1 + z + z * z == 0
        assert F3.root(4) == z

    def test_inverse_of_root_and_general_element(self, F3):
        z = F3.root(1)
        assert z.inverse() == F3.root(2)
        x = z + 2
        assert x * x.inverse() == 1
        assert (x / x) == F3.one

    def test_negative_powers(self, F3):
        z = F3.root(1)
        assert z ** -1 == z * z
        assert (z + 2) ** -2 * (z + 2) ** 2 == 1

    def test_rational_coercion(self, F3):
        z = F3.root(1)
        assert z * Fraction(1, 2) + z * Fraction(1, 2) == z
        assert 3 - z == -(z - 3)
        assert F3.rational(Fraction(2, 4)) == Fraction(1, 2)

    def test_conjugate(self, F3):
        z = F3.root(1)
        assert z.conjugate() == z * z
        assert (z + Fraction(1, 2)).conjugate() == z * z + Fraction(1, 2)

    def test_dlog(self, F9):
        assert F9.root(7).dlog() == 7
        assert (F9.root(1) + 1).dlog() is None
        assert F9.is_root_of_unity(F9.root(5))

    def test_embedding_maps_roots_to_roots(self, F3, F9):
        assert F3.root(1).embed(9) == F9.root(3)
        assert F3.root_of_order(3, 2).embed(9) == F9.root_of_order(3, 2)

    def test_embedding_needs_a_multiple(self, F3):
        with pytest.raises(NotDivisible):
            F3.root(1).embed(4)

    def test_root_of_order_needs_divisibility(self, F3):
        with pytest.raises(NotDivisible):
            F3.root_of_order(5)

    def test_division_by_zero(self, F3):
        with pytest.raises(DivisionByZero):
            F3.root(1) / F3.zero
        with pytest.raises(ZeroDivisionError):
            F3.zero.inverse()

    def test_field_mismatch(self, F3):
        with pytest.raises(FieldMismatch):
            F3.root(1) + get_field(5).root(1)
        with pytest.raises(FieldMismatch):
            cyc_arith("mul", F3.root(1), get_field(5).root(1))

    def test_canonical_strings(self, F3):
        assert F3.rational(Fraction(1, 2)).to_strings() == ["1/2", "0/1"]
        assert F3.from_coefficients([0, 0, 1]) == F3.root(2)

    def test_hash_agrees_with_equality_for_rationals(self, F3):
        assert hash(F3.rational(2)) == hash(2)
        assert {F3.rational(Fraction(1, 3))} == {F3.one / 3}


class TestHalf:
    def test_half_mod_odd(self):
        assert half(1, 5) == 3
        assert (2 * half(3, 7)) % 7 == 3

    def test_half_mod_even(self):
        with pytest.raises(EvenPrime):
            half(1, 4)

"""Tests for the class-equation arithmetic of dimension pq."""

import pytest

from ydhopf.cliffrep import (
    NotApplicable,
    NotPrime,
    ScreenVerdict,
    pq_arithmetic,
    pq_refined,
    pq_screen,
    pq_screen_table,
)


class TestClassEquation:
    @pytest.mark.parametrize(
        "p,q,expected",
        [(3, 7, (2, 2)), (5, 11, (2, 4)), (2, 5, (2, 1)), (3, 13, (4, 2))],
    )
    def test_unique_solution(self, p, q, expected):
        result = pq_arithmetic(p, q)
        assert (result.n_p, result.n_q) == expected
        assert result.holds()

    def test_refined(self):
        assert pq_refined(3, 7) == (2, 2)
        assert pq_refined(5, 11) == (2, 4)

    def test_refined_needs_divisibility(self):
        with pytest.raises(NotApplicable):
            pq_refined(3, 5)

    @pytest.mark.parametrize("p,q", [(4, 7), (5, 5), (3, 9)])
    def test_primes_required(self, p, q):
        with pytest.raises(NotPrime):
            pq_arithmetic(p, q)


class TestScreen:
    def test_q5_residue_two(self):
        result = pq_screen(7, 5)
        assert result.n_p == 2
        assert result.inequality == "−58p ≥ 589"
        assert result.verdict is ScreenVerdict.FORCES_GROUPLIKE

    def test_conclusion(self):
        assert pq_screen(3, 7).conclusion == "or"
        assert pq_screen(11, 7).conclusion == "and"

    def test_even_prime(self):
        with pytest.raises(NotApplicable):
            pq_screen(2, 5)

    def test_table_q7(self):
        table = pq_screen_table(7, 100)
        assert table.exceptions == [5, 11, 17, 23, 31, 59]
        assert [row.residue for row in table.rows] == [1, 2, 3, 4, 5, 6]
        assert table.rows[5].always_forced

    def test_table_q5(self):
        table = pq_screen_table(5, 270)
        assert table.exceptions == [3, 13, 23, 43, 53, 73, 83, 103, 113, 163, 173, 193, 223, 233, 263]
        assert table.rows[1].inequality == "−58p ≥ 589"
        assert table.rows[1].always_forced

    def test_table_needs_odd_prime(self):
        with pytest.raises(NotPrime):
            pq_screen_table(2, 50)

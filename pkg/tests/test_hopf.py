"""Tests for structure-constant Hopf algebras and their verifiers."""

import pytest

from ydhopf.algebra.cyclonum import get_field
from ydhopf.algebra.finitestruct import cyclic_group
from ydhopf.config.settings import VerificationSettings
from ydhopf.errors import InputError
from ydhopf.hopf import (
    HopfData,
    LinearMap,
    SCAlgebra,
    center,
    dualize,
    find_integral,
    from_json,
    function_algebra,
    group_algebra,
    grouplikes,
    integral_verify,
    is_isomorphism,
    solve_antipode,
    tensor_hopf,
    to_json,
    verify_hopf,
)
from ydhopf.hopf.verify import verify_algebra


@pytest.fixture
def kz3(F3):
    return group_algebra(cyclic_group(3), F3)


@pytest.fixture
def fz3(F3):
    return function_algebra(cyclic_group(3), F3)


def nonzero(x):
    return {k: v for k, v in x.items() if not v.is_zero()}


class TestBasicHopfAlgebras:
    def test_group_algebra_axioms(self):
        report = verify_hopf(group_algebra(cyclic_group(4), get_field(4)))
        assert report.ok
        assert report.facts["dim"] == 4

    def test_function_algebra_axioms(self, fz3):
        assert verify_hopf(fz3).ok

    def test_tensor_product(self, kz3, fz3):
        H = tensor_hopf(kz3, fz3)
        assert H.dim == 9
        assert verify_hopf(H).ok

    def test_wrong_antipode_is_reported(self, kz3, F3):
        broken = HopfData(kz3.algebra, kz3.coalgebra, LinearMap.identity(3, F3), name="broken")
        report = verify_hopf(broken)
        assert not report.ok
        assert all(c.name.startswith("antipode.") for c in report.failures)

    def test_solved_antipode_matches(self, kz3):
        bare = HopfData(kz3.algebra, kz3.coalgebra, None)
        assert solve_antipode(bare) == kz3.antipode

    def test_dual_of_group_algebra_is_commutative(self, kz3):
        dual = dualize(kz3)
        assert dual.algebra.is_commutative()
        assert verify_hopf(dual).ok

    def test_identity_is_an_isomorphism(self, kz3, F3):
        assert is_isomorphism(LinearMap.identity(3, F3), kz3, kz3).ok


def associativity(A, settings=None):
    return next(c for c in verify_algebra(A, settings).checks if c.name == "associativity")


class TestAssociativityCoverage:
    def test_function_algebra_is_checked_on_its_support(self, fz3):
        check = associativity(fz3.algebra)
        assert check.ok
        assert check.exhaustive
        assert check.checked == 27
        assert check.detail == "15 triples on the support"

    def test_first_failing_triple(self, fz3):
        A = fz3.algebra
        broken = SCAlgebra(A.dim, A.field, {**A.mult, (0, 0): {1: A.field.one}}, A.unit)
        check = associativity(broken)
        assert not check.ok
        assert check.witness == (0, 0, 1)

    def test_sampling_needs_both_threshold_and_budget(self, F3):
        # 24 point functions meet the support in 24 * 47 = 1128 triples
        A = function_algebra(cyclic_group(24), F3).algebra
        sampled = associativity(A, VerificationSettings(exhaustive_threshold=8, triple_budget=1000, sample_size=100))
        assert sampled.ok
        assert not sampled.exhaustive
        assert sampled.checked == 100
        within_budget = associativity(A, VerificationSettings(exhaustive_threshold=8, triple_budget=2000))
        assert within_budget.exhaustive
        assert associativity(A).exhaustive


class TestIntegrals:
    def test_group_algebra_integrals(self, kz3):
        data = find_integral(kz3)
        assert nonzero(data.Lambda) == {0: 1, 1: 1, 2: 1}
        assert data.lam == [1, 0, 0]
        assert kz3.eps(data.Lambda) == 3
        assert integral_verify(kz3, data).ok

    def test_function_algebra_integrals(self, fz3):
        data = find_integral(fz3)
        assert nonzero(data.Lambda) == {0: 1}
        assert data.lam == [1, 1, 1]
        assert integral_verify(fz3, data).ok


class TestStructureQueries:
    def test_grouplikes_of_group_algebra(self, kz3):
        assert len(grouplikes(kz3)) == 3

    def test_center_of_commutative_algebra(self, kz3):
        assert len(center(kz3.algebra)) == 3


class TestSerialization:
    def test_dump_is_canonical(self, fz3):
        text = to_json(fz3)
        again = from_json(text)
        assert to_json(again) == text
        assert verify_hopf(again).ok

    def test_invalid_json(self):
        with pytest.raises(InputError):
            from_json("{not json")

    def test_missing_fields(self):
        with pytest.raises(InputError):
            from_json('{"dim": 2}')

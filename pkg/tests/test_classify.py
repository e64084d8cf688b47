"""Tests for isomorphism tests, structure recovery and classification counts."""

import pytest

from ydhopf.algebra.cohom import SearchSpaceTooLarge
from ydhopf.algebra.cyclonum import get_field
from ydhopf.classify import (
    BpParams,
    TrivialInput,
    ap_data,
    ap_invariants,
    classify_dim_p2,
    cohomologous_morphism,
    count_Bp_classes,
    decompose_structure,
    identity_morphism,
    iso_test_Ap,
    iso_test_Bp,
    iso_test_even,
)
from ydhopf.classify import bp, isotest
from ydhopf.constructions import EvenData, build_AG, construction_data
from ydhopf.errors import InputError


class TestApIsomorphisms:
    def test_invariants(self):
        # m = a/b and n scaled by 1/b
        assert ap_invariants(ap_data(3, 2, 2, 1)) == (1, 2)
        assert ap_invariants(ap_data(3, 1, 1, 2)) == (1, 2)
        assert ap_invariants(ap_data(5, 3, 1, 4)) == (3, 4)

    def test_isomorphic_pair_has_a_verified_witness(self):
        witness = iso_test_Ap(ap_data(3, 2, 2, 1), ap_data(3, 1, 1, 2))
        assert witness is not None
        assert witness.report.ok
        assert sorted(witness.to_dict()) == ["f", "k", "w"]

    def test_non_isomorphic_pair(self):
        assert iso_test_Ap(ap_data(3, 1, 1, 0), ap_data(3, 2, 1, 0)) is None
        assert iso_test_Ap(ap_data(3, 1, 1, 0), ap_data(3, 1, 1, 1)) is None

    def test_trivial_data_is_rejected(self):
        with pytest.raises(TrivialInput):
            ap_invariants(ap_data(3, 0, 1, 0))

    def test_identity_morphism_checks(self):
        data = ap_data(3, 1, 1, 1)
        identity_morphism(data).check(data, data)


class TestDimensionP2:
    def test_p3(self):
        result = classify_dim_p2(3)
        assert result.count == 6
        assert sum(len(members) for members in result.classes.values()) == 2 * 2 * 3

    def test_p3_cross_check(self):
        assert classify_dim_p2(3, cross_check=True).count == 6

    def test_p5(self):
        result = classify_dim_p2(5)
        assert result.count == 20
        assert sum(len(members) for members in result.classes.values()) == 4 * 4 * 5

    def test_p2(self):
        result = classify_dim_p2(2)
        assert result.representatives == ["A_+", "A_-"]

    def test_even_pair_is_not_isomorphic(self):
        assert iso_test_even(EvenData.pm("+"), EvenData.pm("-")) is None
        witness = iso_test_even(EvenData.pm("+"), EvenData.pm("+"))
        assert witness is not None
        assert witness.report.ok

    def test_even_composite(self):
        with pytest.raises(InputError):
            classify_dim_p2(4)


class TestBpClassification:
    @pytest.mark.parametrize("p,count", [(3, 4), (5, 6), (7, 8)])
    def test_counts(self, p, count):
        assert count_Bp_classes(p).count == count

    def test_orbit_lengths(self):
        result = count_Bp_classes(3)
        assert result.lengths == [4, 4, 2, 2]
        assert sum(result.lengths) == 2 * 2 * 3
        assert result.to_dict()["orbit_lengths"] == [4, 4, 2, 2]

    def test_cross_check(self):
        assert count_Bp_classes(3, cross_check=True).count == 4

    def test_even_p(self):
        with pytest.raises(InputError):
            count_Bp_classes(2)

    def test_explicit_isomorphism(self):
        # (r, t) = (1, 2) sends (a, b, n) to (2a, b/2, n)
        witness = iso_test_Bp(BpParams.carry(3, 1, 1, 0), BpParams.carry(3, 2, 2, 0))
        assert witness is not None
        assert witness.report.ok

    def test_different_orbits(self):
        assert iso_test_Bp(BpParams.carry(3, 1, 1, 0), BpParams.carry(3, 1, 2, 0)) is None


class TestDecompose:
    @pytest.mark.parametrize("m,n", [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)])
    def test_round_trip(self, engine, recipe, m, n):
        result = engine.decompose(recipe(family="A_p", p=3, m=m, n=n))
        assert result["p"] == 3
        assert result["report"]["ok"]
        assert result["round_trip"] is True
        assert result["G"]["order"] == 3
        alpha, beta = result["alpha"], result["beta"]
        assert any(beta)
        assert all((a - m * b) % 3 == 0 for a, b in zip(alpha, beta))

    @pytest.mark.parametrize("a,b,n", [(1, 1, 0), (2, 1, 1), (1, 2, 2), (2, 2, 1)])
    def test_recovered_data_has_the_same_invariants(self, F3, a, b, n):
        data = ap_data(3, a, b, n, F3)
        built = build_AG(data, compare=False)
        decomposition = decompose_structure(built.hopf, built.yd)
        assert decomposition.report.ok
        assert decomposition.quotient.order == 3
        assert ap_invariants(decomposition.data) == ap_invariants(data)
        assert iso_test_Ap(data, decomposition.data) is not None

    def test_a_5(self, engine, recipe):
        result = engine.decompose(recipe(family="A_p", p=5, m=3, n=2))
        assert result["report"]["ok"]
        assert result["round_trip"] is True

    @pytest.mark.parametrize("sign", ["+", "-"])
    def test_even_round_trip(self, engine, recipe, sign):
        result = engine.decompose(recipe(family="A_pm", sign=sign))
        assert result["p"] == 2
        assert result["report"]["ok"]
        assert result["round_trip"] is True

    def test_trivial_alpha_skips_the_round_trip(self, engine, recipe):
        result = engine.decompose(recipe(family="A_p", p=3, m=0, n=1))
        assert result["report"]["ok"]
        assert not any(result["alpha"])
        assert "round_trip" not in result

    def test_biproduct_is_not_decomposed(self, engine, recipe):
        with pytest.raises(InputError):
            engine.decompose(recipe(family="biproduct", p=3))


class TestEngineComparison:
    def test_b_p_recipes(self, engine, recipe):
        same, witness = engine.isomorphic(
            recipe(family="B_p", p=3, a=1, b=1), recipe(family="B_p", p=3, a=2, b=2)
        )
        assert same
        assert witness["r"] == 1 and witness["t"] == 2

    def test_mixed_families(self, engine, recipe):
        with pytest.raises(InputError):
            engine.isomorphic(recipe(family="A_p", p=3), recipe(family="B_p", p=3, a=1, b=1))


class TestSearchBound:
    @pytest.fixture
    def seen(self, monkeypatch):
        bounds = []

        def recording(module):
            real = module.cohomologous2

            def wrapper(q, q2, search_bound=10**6):
                bounds.append(search_bound)
                return real(q, q2, search_bound=search_bound)

            monkeypatch.setattr(module, "cohomologous2", wrapper)

        recording(isotest)
        recording(bp)
        return bounds

    def test_a_p_comparison_uses_the_configured_bound(self, engine, recipe, seen):
        engine.settings.verification.search_bound = 7
        same, _ = engine.isomorphic(recipe(family="A_p", p=3, m=1, n=1), recipe(family="A_p", p=3, m=1, n=1))
        assert same
        assert seen and set(seen) == {7}

    def test_b_p_classification_uses_the_configured_bound(self, engine, seen):
        engine.settings.verification.search_bound = 11
        assert engine.classify_bp(3, cross_check=True)["count"] == 4
        assert seen and set(seen) == {11}

    def test_p2_obstruction_uses_the_configured_bound(self, engine, seen):
        engine.settings.verification.search_bound = 5
        assert engine.classify_dim_p2(2)["count"] == 2
        assert seen == [5]

    def test_bound_reaches_the_brute_force_search(self, recipe):
        common = dict(family="A_G", ring={"zn": 4}, group={"cyclic": 2}, nu=[1, 1], alpha=[0, 0], beta=[0, 0])
        F = get_field(4)
        source = construction_data(recipe(**common, q="carry:1"), F)
        target = construction_data(recipe(**common, q="carry:3"), F)
        assert cohomologous_morphism(source, target) is not None
        with pytest.raises(SearchSpaceTooLarge):
            cohomologous_morphism(source, target, search_bound=1)

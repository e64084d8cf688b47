"""Tests for the construction families and the engine's verification suites."""

import pytest

from ydhopf.algebra.cyclonum import get_field
from ydhopf.classify import bplus_bminus_iso, verify_distinguished
from ydhopf.constructions import (
    ConstructionFactory,
    a_p,
    build_AG,
    build_Apm,
    build_biproduct,
    integrals_ag,
)
from ydhopf.errors import ConstructionError, InputError


def checks_with_prefix(report, prefix):
    selected = [c for c in report.checks if c.name.startswith(prefix)]
    assert selected, f"no checks named {prefix}*"
    return selected


def closed_form(report, name):
    matches = [c for c in report.checks if c.name == f"closed form {name}"]
    assert len(matches) == 1, f"closed form {name} not reported"
    return matches[0]


AG_Z3 = dict(
    family="A_G",
    ring={"zn": 3},
    group={"cyclic": 3},
    nu=[1, 1, 1],
    alpha=[0, 1, 2],
    beta=[0, 2, 1],
    q="carry:1",
)


AP_SWEEP = [(p, m, n) for p in (3, 5) for m in range(p) for n in range(p)]


class TestAG:
    @pytest.mark.parametrize("p,m,n", AP_SWEEP)
    def test_a_p_sweep(self, engine, recipe, p, m, n):
        report = engine.verify(recipe(family="A_p", p=p, m=m, n=n), "axioms")
        assert report.ok
        assert all(c.exhaustive for c in checks_with_prefix(report, "axioms: "))
        for name in ("A_G multiplication", "A_G antipode", "A_G inverse antipode"):
            assert closed_form(report, name).ok

    def test_a_p_axioms(self, engine, recipe):
        report = engine.verify(recipe(family="A_p", p=3), "axioms")
        assert all(c.ok for c in checks_with_prefix(report, "axioms: "))
        for name in ("A_G multiplication", "A_G action", "A_G coaction"):
            assert closed_form(report, name).ok

    def test_a_g_from_ring_and_group(self, engine, recipe):
        built = engine.build(recipe(**AG_Z3))
        assert built.dim == 9
        report = engine.verify(recipe(**AG_Z3), "axioms")
        assert all(c.ok for c in checks_with_prefix(report, "axioms: "))
        assert closed_form(report, "A_G multiplication").ok

    def test_integrals(self, F3):
        built = build_AG(a_p(3, 1, 1, F3))
        integrals, checks = integrals_ag(built)
        assert checks.ok
        assert built.hopf.eps(integrals.Lambda) == 3

    def test_integral_suite_facts(self, engine, recipe):
        report = engine.verify(recipe(family="A_p", p=3, m=2), "integrals")
        assert all(c.ok for c in checks_with_prefix(report, "integrals: "))
        assert "eps(Lambda)" in report.facts
        assert "lam(1)" in report.facts

    def test_adjoint_suite_builds_the_modified_dual(self, engine, recipe):
        report = engine.verify(recipe(family="A_p", p=3), "adjoints")
        assert all(c.ok for c in checks_with_prefix(report, "modified dual: "))

    def test_beta_must_be_a_cocycle(self, engine, recipe):
        bad = dict(AG_Z3, beta=[0, 1, 1])
        with pytest.raises(ConstructionError):
            engine.build(recipe(**bad))

    def test_unknown_suite(self, engine, recipe):
        with pytest.raises(InputError):
            engine.verify(recipe(family="A_p", p=3), "everything")

    def test_conductor_override_must_be_a_multiple(self, recipe):
        with pytest.raises(InputError):
            ConstructionFactory.field_for(recipe(family="A_p", p=3, conductor=4))
        assert ConstructionFactory.field_for(recipe(family="A_p", p=3, conductor=9)).N == 9


FRAMEWORK_TRIVIAL = dict(
    family="framework",
    C=2,
    P=2,
    group={"cyclic": 2},
    action=[[0, 1], [0, 1]],
    z=[[0, 0], [0, 0]],
    gamma=[[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
    sigma=[[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
    conductor=2,
)


class TestFramework:
    def test_trivial_data_build_a_tensor_product(self, engine, recipe):
        built = engine.build(recipe(**FRAMEWORK_TRIVIAL))
        assert built.dim == 4
        assert built.closed_forms == []
        report = engine.verify(recipe(**FRAMEWORK_TRIVIAL), "axioms")
        assert all(c.ok for c in checks_with_prefix(report, "axioms: "))


class TestEvenFamily:
    @pytest.mark.parametrize("sign", ["+", "-"])
    def test_a_plus_minus_axioms(self, engine, recipe, sign):
        report = engine.verify(recipe(family="A_pm", sign=sign), "axioms")
        assert all(c.ok for c in checks_with_prefix(report, "axioms: "))

    @pytest.mark.parametrize("sign", ["+", "-"])
    def test_a_plus_minus_closed_forms(self, engine, recipe, sign):
        report = engine.verify(recipe(family="A_pm", sign=sign), "axioms")
        for name in ("multiplication", "antipode", "action", "coaction"):
            assert closed_form(report, f"even family {name}").ok

    def test_closed_forms_only_when_compared(self):
        assert build_Apm("+", compare=False).closed_forms == []
        assert len(build_Apm("-").closed_forms) == 4

    def test_a_plus_minus_conductor(self, recipe):
        assert ConstructionFactory.field_for(recipe(family="A_pm", sign="+")).N == 4

    def test_b_plus_is_isomorphic_to_b_minus(self):
        result = bplus_bminus_iso(get_field(4))
        assert result.report.ok
        assert result.plus.dim == result.minus.dim == 8


class TestBiproduct:
    def test_biproduct_dimension_and_axioms(self, engine, recipe):
        r = recipe(family="biproduct", p=3)
        assert engine.build(r).dim == 27
        report = engine.verify(r, "axioms")
        assert all(c.ok for c in checks_with_prefix(report, "axioms: "))

    def test_biproduct_closed_forms(self, F3):
        bp = build_biproduct(build_AG(a_p(3, 2, 1, F3)))
        forms = {form.name: form for form in bp.closed_forms}
        assert forms["biproduct multiplication"].ok
        assert forms["biproduct comultiplication"].ok

    def test_extension_suite(self, engine, recipe):
        report = engine.verify(recipe(family="biproduct", p=3), "extensions")
        assert all(c.ok for c in checks_with_prefix(report, "extensions: "))


class TestBp:
    def test_distinguished_elements(self, engine, recipe):
        built = engine.build(recipe(family="B_p", p=3, a=1, b=1, q="carry:0"))
        assert built.dim == 27
        report = verify_distinguished(built)
        assert report.ok
        assert report.facts["grouplike_count"] == 9

    def test_b_p_needs_units(self, engine, recipe):
        with pytest.raises(InputError):
            engine.build(recipe(family="B_p", p=3, a=0, b=1))


SECOND_Z2 = dict(family="second", ring={"zn": 2}, group={"cyclic": 2}, alpha=[0, 1], beta=[0, 1])


class TestSecondConstruction:
    def test_dimension_and_axioms(self, engine, recipe):
        r = recipe(**SECOND_Z2)
        assert engine.build(r).dim == 32
        report = engine.verify(r, "axioms")
        assert all(c.ok for c in checks_with_prefix(report, "axioms: "))
        assert closed_form(report, "second construction multiplication").ok

    def test_integrals(self, engine, recipe):
        report = engine.verify(recipe(**SECOND_Z2), "integrals")
        assert all(c.ok for c in checks_with_prefix(report, "integrals: "))
        assert report.facts["eps(Lambda)"] == "8"
        assert report.facts["lam(1)"] == "4"

    def test_z3_axioms_and_antipode(self, engine, recipe):
        report = engine.verify(recipe(family="second", p=3), "axioms")
        axioms = checks_with_prefix(report, "axioms: ")
        assert all(c.ok for c in axioms)
        assert all(c.exhaustive for c in axioms)
        assert checks_with_prefix(report, "axioms: antipode.")

    @pytest.mark.slow
    def test_z3_integrals(self, engine, recipe):
        r = recipe(family="second", p=3)
        assert engine.build(r).dim == 243
        report = engine.verify(r, "integrals")
        assert all(c.ok for c in checks_with_prefix(report, "integrals: "))
        assert report.facts["eps(Lambda)"] == "27"
        assert report.facts["lam(1)"] == "9"

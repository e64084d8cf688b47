"""Tests for primitive idempotents, C-orbits and the simple modules of biproducts."""

import pytest

from ydhopf.algebra.finitestruct import cyclic_group
from ydhopf.cliffrep import SplittingFieldTooSmall, idempotent_checks, primitive_idempotents
from ydhopf.constructions import a_p, build_AG
from ydhopf.hopf import function_algebra


class TestIdempotents:
    def test_function_algebra_idempotents_are_point_functions(self, F3):
        A = function_algebra(cyclic_group(3), F3).algebra
        E = primitive_idempotents(A)
        assert len(E) == 3
        assert sorted(min(e) for e in E) == [0, 1, 2]
        assert idempotent_checks(A, E).ok

    def test_a_p_idempotents(self, F3):
        A = build_AG(a_p(3, 1, 0, F3), compare=False).hopf.algebra
        E = primitive_idempotents(A)
        assert len(E) == 9
        assert idempotent_checks(A, E).ok

    def test_splitting_needs_ninth_roots(self, F3):
        A = build_AG(a_p(3, 1, 1, F3), compare=False).hopf.algebra
        with pytest.raises(SplittingFieldTooSmall) as info:
            primitive_idempotents(A)
        assert info.value.suggested_conductor == 9

    def test_embedding_into_a_larger_field(self, F3):
        A = build_AG(a_p(3, 1, 1, F3), compare=False).hopf.algebra
        assert len(primitive_idempotents(A, conductor=9)) == 9


class TestCliffordAnalysis:
    def test_b3_simple_modules(self, engine, recipe):
        analysis = engine.clifford(recipe(family="B_p", p=3, a=1, b=1, q="carry:0"))
        assert analysis.ok
        assert len(analysis.data.E) == 9
        assert len(analysis.data.stable_orbits) == 3
        assert len(analysis.data.unstable_orbits) == 2
        assert sorted(analysis.dimensions) == [1] * 9 + [3, 3]
        assert sum(d * d for d in analysis.dimensions) == 27

    def test_gram_matrix_is_identity(self, engine, recipe):
        analysis = engine.clifford(recipe(family="A_p", p=3))
        n = len(analysis.modules)
        assert all(
            analysis.gram[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)
        )
        assert all(c.ok for c in analysis.report.checks if c.name.startswith("linkage: "))
        assert analysis.to_dict()["gram_is_identity"] is True

    def test_splitting_field_error_names_the_conductor(self, engine, recipe):
        with pytest.raises(SplittingFieldTooSmall) as info:
            engine.clifford(recipe(family="A_p", p=3, n=1))
        assert info.value.suggested_conductor == 9

    def test_retry_with_larger_conductor(self, engine, recipe):
        engine.settings.arithmetic.conductor = 9
        analysis = engine.clifford(recipe(family="A_p", p=3, m=2, n=0))
        assert analysis.ok
        assert set(analysis.dimensions) <= {1, 3}
        assert sum(d * d for d in analysis.dimensions) == 27

"""Tests for recipe parsing and cocycle expansion."""

import pytest

from ydhopf.algebra.cohom import h2_class, trivial_module
from ydhopf.algebra.finitestruct import cyclic_group
from ydhopf.recipe import RecipeError, expand_cocycle, parse_recipe


class TestParseRecipe:
    def test_a_p_defaults(self):
        recipe = parse_recipe('{"family": "A_p", "p": 5}')
        assert recipe.m == 1
        assert recipe.n == 0
        assert recipe.conductor is None

    def test_group_spec(self):
        recipe = parse_recipe(
            '{"family": "A_G", "ring": {"zn": 4}, "group": {"table": [[0, 1], [1, 0]]}}'
        )
        assert recipe.group.build().order == 2
        assert recipe.ring.build().order == 4

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            '{"family": "A_q", "p": 3}',
            '{"family": "A_p"}',
            '{"family": "B_p", "p": 3, "a": 1}',
            '{"family": "A_pm"}',
            '{"family": "A_G", "ring": {"zn": 3}}',
            '{"family": "A_p", "p": 3, "colour": "red"}',
            '{"family": "A_p", "p": 3, "q": "carry"}',
            '{"family": "A_G", "ring": {"zn": 3}, "group": {"cyclic": 3, "table": [[0]]}}',
        ],
    )
    def test_rejected(self, text):
        with pytest.raises(RecipeError, match="Invalid recipe"):
            parse_recipe(text)

    def test_biproduct_accepts_shorthand(self):
        assert parse_recipe('{"family": "biproduct", "p": 3}').p == 3

    def test_key_and_seed_are_stable(self):
        first = parse_recipe('{"family": "A_p", "p": 3, "n": 1}')
        second = parse_recipe('{"n": 1, "p": 3, "family": "A_p"}')
        assert first.key() == second.key()
        assert first.seed() == second.seed()
        assert first.seed() != parse_recipe('{"family": "A_p", "p": 3}').seed()


class TestCocycles:
    def test_carry_shorthand(self):
        module = trivial_module(cyclic_group(3), 3)
        assert h2_class(expand_cocycle("carry:2", module)) == 2

    def test_q_plus_shorthand(self):
        module = trivial_module(cyclic_group(2), 4)
        assert expand_cocycle("qplus", module)(1, 1) == 1
        assert expand_cocycle("qminus", module)(1, 1) == 3

    def test_table(self):
        module = trivial_module(cyclic_group(2), 2)
        assert expand_cocycle([[0, 0], [0, 1]], module)(1, 1) == 1

    def test_table_shape(self):
        module = trivial_module(cyclic_group(2), 2)
        with pytest.raises(RecipeError):
            expand_cocycle([[0, 0]], module)

    def test_default_is_zero(self):
        recipe = parse_recipe('{"family": "A_G", "ring": {"zn": 3}, "group": {"cyclic": 3}}')
        q = recipe.cocycle(trivial_module(cyclic_group(3), 3))
        assert all(v == 0 for row in q.table for v in row)

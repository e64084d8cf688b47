"""Tests for the build cache, union-find and verification reports."""

from ydhopf.utils.cache import BuildCache
from ydhopf.utils.report import CheckResult, VerificationReport
from ydhopf.utils.unionfind import UnionFind, find_orbits


class TestBuildCache:
    def test_get_or_build_memoizes(self):
        cache = BuildCache()
        calls = []

        def builder():
            calls.append(1)
            return "built"

        assert cache.get_or_build("k", builder) == "built"
        assert cache.get_or_build("k", builder) == "built"
        assert len(calls) == 1

        stats = cache.get_stats()
        assert stats["cache_hits"] == 1
        assert stats["cache_misses"] == 1
        assert stats["hit_rate"] == 0.5

    def test_eviction_drops_least_used(self):
        cache = BuildCache(max_size=2)
        cache.get_or_build("a", lambda: 1)
        cache.get_or_build("b", lambda: 2)
        cache.get_or_build("a", lambda: 1)
        cache.get_or_build("c", lambda: 3)
        assert cache.get_stats()["cache_size"] == 2
        assert cache.get_or_build("b", lambda: 20) == 20

    def test_invalidate_and_clear(self):
        cache = BuildCache()
        cache.get_or_build("a", lambda: 1)
        cache.invalidate("a")
        cache.invalidate("missing")
        assert cache.get_or_build("a", lambda: 2) == 2
        cache.clear_cache()
        assert cache.get_stats()["cache_size"] == 0

    def test_empty_stats(self):
        assert BuildCache().get_stats()["hit_rate"] == 0


class TestUnionFind:
    def test_union_and_find(self):
        uf = UnionFind(range(6))
        uf.union(0, 1)
        uf.union(2, 3)
        uf.union(1, 3)
        assert uf.find(0) == uf.find(2)
        assert uf.find(4) != uf.find(0)
        assert len(uf) == 3
        assert uf.size[uf.find(0)] == 4

    def test_orbits_of_a_rotation(self):
        orbits = find_orbits([2], list(range(6)), lambda g, x: (x + g) % 6)
        assert orbits == {0: [0, 2, 4], 1: [1, 3, 5]}

    def test_fixed_points_are_singletons(self):
        orbits = find_orbits([-1], [0, 1, 2, 3], lambda g, x: (g * x) % 4)
        assert orbits == {0: [0], 1: [1, 3], 2: [2]}


class TestReports:
    def test_check_result_coverage(self):
        check = CheckResult.passed("assoc", checked=10, total=40)
        assert check
        assert check.coverage == 0.25
        assert not check.exhaustive
        assert CheckResult.passed("unit", checked=5).exhaustive

    def test_failed_check_keeps_witness(self):
        check = CheckResult.failed("assoc", (1, 2, 3), checked=7, total=27)
        assert not check
        assert check.to_dict()["witness"] == ["1", "2", "3"]

    def test_merge_prefixes_names_and_facts(self):
        inner = VerificationReport("inner")
        inner.add(CheckResult.passed("unit", checked=1))
        inner.add(CheckResult.failed("assoc", (0, 0, 1)))
        inner.facts["dim"] = 4

        outer = VerificationReport("outer")
        outer.merge(inner, "algebra.")
        assert [c.name for c in outer.checks] == ["algebra.unit", "algebra.assoc"]
        assert outer.facts == {"algebra.dim": 4}
        assert not outer.ok
        assert [c.name for c in outer.failures] == ["algebra.assoc"]

    def test_to_dict_is_plain(self):
        report = VerificationReport("H")
        report.facts["orbits"] = {3, 1, 2}
        report.facts["pair"] = (1, "a")
        data = report.to_dict()
        assert data["ok"] is True
        assert data["facts"]["orbits"] == [1, 2, 3]
        assert data["facts"]["pair"] == [1, "a"]

import random

import numpy as np
import pytest

from erections import (
    SetFamily,
    erect_with,
    expand,
    free_erection,
    free_erection_via_pair,
    in_strict_filter,
    pair_family,
    random_erection,
    random_matroid,
    refine,
    truncation,
    validate_copoint_family,
    verify_erection_copoints,
    whitney,
)
from erections._bits import to_mask
from erections.core import build_from_copoints, seed_matroid
from erections.corpus import FREE_M2, FREE_M5, digits
from erections.erection import random_clutter
from erections.errors import InvalidClutter, RankOutOfRange

from oracles import free_bruteforce, refine_literal


def S(text):
    return to_mask(int(c) for c in text)


def fam(*tokens):
    return SetFamily(S(t) for t in tokens)


class TestExpand:
    def test_examples(self):
        assert expand(fam("12"), 3) == fam("123")
        assert expand(fam("1", "2"), 3) == fam("12", "13", "23")

    def test_m5_matches_dedup_oracle(self, named):
        lines = list(named["M5"].copoints)
        expected = {h | (1 << e) for h in lines for e in range(8) if not h >> e & 1}
        assert set(expand(lines, 8)) == expected


def test_strict_filter(named):
    assert in_strict_filter(named["M1"].copoints, S("2468"))
    assert not in_strict_filter(fam("12"), S("12"))
    assert in_strict_filter(named["M5"].copoints, S("145"))


class TestRefine:
    def test_examples(self):
        assert refine(fam("12", "23"), fam("2")) == fam("12", "23")
        assert refine(fam("12", "23"), fam("1")) == fam("123")

    def test_m1_collapses(self, named):
        cops = named["M1"].copoints
        assert refine(expand(cops, 8), cops) == SetFamily([named["M1"].ground])

    def test_empty(self):
        assert refine([], fam("1")) == SetFamily()

    def test_matches_random_merge_order(self, named):
        rng = random.Random(3)
        for m in named.values():
            cops = m.copoints
            exp = expand(cops, m.n)
            want = set(refine(exp, cops))
            for _ in range(5):
                assert refine_literal(list(exp), list(cops), rng) == want


class TestFree:
    def test_m2_golden(self, named):
        res = free_erection(named["M2"])
        assert not res.trivial
        assert res.new_copoints == digits(FREE_M2)
        assert res.erected.rank == 5

    def test_m5_golden(self, named):
        assert free_erection(named["M5"]).new_copoints == digits(FREE_M5)

    def test_m1_trivial_and_non_monotone(self, named):
        r1, r2 = free_erection(named["M1"]), free_erection(named["M2"])
        assert r1.trivial and r1.erected == r1.base and r1.count == 1
        assert r2.count == 20

    def test_m4_trivial(self, named):
        assert free_erection(named["M4"]).trivial

    def test_m6_free_erection_is_not_trivial(self, named):
        # the M6 copoint list admits 36 new copoints, each passing Crapo's conditions
        res = free_erection(named["M6"])
        assert not res.trivial and res.count == 36
        assert verify_erection_copoints(named["M6"], res.new_copoints)

    def test_paving(self, named):
        res = free_erection(named["M3"])
        assert res.count == 70
        assert all(bin(x).count("1") == 4 for x in res.new_copoints)

    def test_against_bruteforce(self, named, random_corpus):
        for m in list(named.values()) + random_corpus[:120]:
            assert set(free_erection(m).new_copoints) == free_bruteforce(m.n, list(m.copoints))


class TestPair:
    def test_u23(self):
        assert pair_family(fam("1", "2", "3"), SetFamily([0])) == fam("12", "13", "23")

    def test_m5_contains_union(self, named):
        m = named["M5"]
        assert S("245") in pair_family(m.copoints, m.colines)

    def test_agrees_with_expand(self, named):
        for m in named.values():
            assert free_erection_via_pair(m) == free_erection(m)

    def test_rank_one_rejected(self):
        with pytest.raises(RankOutOfRange):
            free_erection_via_pair(seed_matroid(3))


class TestErectWith:
    def test_empty_clutter_is_free(self, named):
        for m in named.values():
            assert erect_with(m, []) == free_erection(m)

    def test_ground_set_is_trivial(self, named):
        res = erect_with(named["M2"], [named["M2"].ground])
        assert res.trivial and res.count == 1

    def test_enlarged_free_copoint(self, named):
        m = named["M2"]
        # every free copoint of size 4 plus one element forces a full collapse
        for x in free_erection(m).new_copoints:
            if bin(x).count("1") != 4:
                continue
            for e in range(8):
                if not x >> e & 1:
                    res = erect_with(m, [x | 1 << e])
                    assert res.count < 20
                    assert verify_erection_copoints(m, res.new_copoints)

    def test_rejects_non_antichain(self, named):
        with pytest.raises(InvalidClutter):
            erect_with(named["M2"], [S("12345"), S("123456")])

    def test_rejects_outside_filter(self, named):
        # a copoint itself is not strictly above any copoint
        with pytest.raises(InvalidClutter):
            erect_with(named["M5"], [S("123")])


class TestRandom:
    def test_intensity_extremes(self, named):
        m = named["M2"]
        assert random_erection(m, 0, 0.0) == free_erection(m)
        assert random_erection(m, 0, 1.0).trivial

    def test_seed_42(self, named):
        res = random_erection(named["M2"], 42, 0.5)
        assert res.count <= 20
        assert verify_erection_copoints(named["M2"], res.new_copoints)
        assert random_erection(named["M2"], 42, 0.5) == res

    def test_clutter_is_antichain_in_filter(self, named):
        rng = np.random.default_rng(1)
        for m in named.values():
            for _ in range(20):
                c = random_clutter(m, rng, 0.6)
                assert c.is_antichain()
                assert all(in_strict_filter(m.copoints, a) for a in c)

    def test_intensity_range(self, named):
        with pytest.raises(ValueError):
            random_erection(named["M2"], 0, 1.5)

    def test_zero_intensity_builds_free_matroid(self):
        m = random_matroid(8, 0, 0.0)
        assert m.rank == 8
        assert m.copoints == SetFamily(m.ground & ~(1 << e) for e in range(8))

    def test_intermediate_matroids_are_valid(self):
        m = free_erection(seed_matroid(7)).erected
        seeds = np.random.SeedSequence(9)
        while True:
            assert validate_copoint_family(m.n, m.copoints)
            (child,) = seeds.spawn(1)
            step = erect_with(m, random_clutter(m, np.random.default_rng(child), 0.4))
            if step.trivial:
                break
            m = step.erected
        assert m == random_matroid(7, 9, 0.4)

    def test_deterministic(self):
        assert random_matroid(9, 123, 0.3) == random_matroid(9, 123, 0.3)


def test_result_invariants(named, random_corpus):
    for m in list(named.values()) + random_corpus[:200]:
        res = free_erection(m)
        if res.trivial:
            assert res.new_copoints == SetFamily([m.ground]) and res.erected == m
        else:
            assert res.erected.rank == m.rank + 1
            assert truncation(res.erected, m.rank - 1) == m
            assert whitney(res.erected)[: m.rank] == whitney(m)[:-1]


def test_erected_lattice_rebuilt_from_scratch(named):
    res = free_erection(named["M5"])
    rebuilt = build_from_copoints(8, res.new_copoints)
    assert rebuilt == res.erected

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from erections import (
    SetFamily,
    apply_permutation,
    bases,
    build_from_copoints,
    closure,
    free_erection,
    is_k_closed,
    rank_of_set,
    truncation,
    validate_copoint_family,
    verify_erection_copoints,
    whitney,
)
from erections._bits import from_int64, lex_key, to_int64, to_mask
from erections.core import inverse_permutation, seed_matroid
from erections.corpus import FREE_M5, digits
from erections.errors import EnumerationCapExceeded, InvalidCopoints, NotSimple, RankOutOfRange

from oracles import flats_bruteforce, hyperplane_axioms, mask_of


def S(text):
    return to_mask(int(c) for c in text)


def test_bits_roundtrip_including_top_bit():
    masks = [0, 1, S("258"), (1 << 64) - 1, 1 << 63, (1 << 63) | 5]
    assert from_int64(to_int64(masks)) == masks
    assert lex_key(S("18")) < lex_key(S("2")) < lex_key(S("23"))
    assert lex_key(S("12")) < lex_key(S("123"))


class TestBuild:
    def test_m1_rank_four(self, named):
        assert named["M1"].rank == 4
        assert len(named["M1"].copoints) == 41

    def test_smallest_uniform(self):
        m = build_from_copoints(3, SetFamily.from_sets([[1], [2], [3]]))
        assert m.rank == 2
        assert m.flats_by_rank[0] == SetFamily([0])
        assert m.flats_by_rank[1] == SetFamily.from_sets([[1], [2], [3]])
        assert m.flats_by_rank[2] == SetFamily([0b111])

    def test_m5_whitney(self, named):
        assert whitney(named["M5"]) == (1, 8, 20, 1)

    def test_invalid_family_raises(self):
        with pytest.raises(InvalidCopoints):
            build_from_copoints(3, SetFamily.from_sets([[1], [1, 2]]))
        with pytest.raises(NotSimple):
            build_from_copoints(3, SetFamily.from_sets([[1, 2], [2, 3]]))

    def test_matches_bruteforce_lattice(self, named, random_corpus):
        for m in list(named.values()) + random_corpus[:150]:
            height = flats_bruteforce(m.n, list(m.copoints))
            assert {f: m.flat_rank(f) for f in m.flats} == height


class TestValidate:
    def test_m5_valid(self):
        assert validate_copoint_family(8, digits("123 14 15 16 17 18 24 258 26 27 34 35 368 37 45 46 478 56 57 67".split()))

    def test_loop_rejected(self):
        check = validate_copoint_family(3, SetFamily.from_sets([[1, 2], [2, 3]]))
        assert not check
        assert check.reason == "not simple: loop" and check.witness == (2,)

    def test_antichain(self):
        check = validate_copoint_family(3, SetFamily.from_sets([[1], [1, 2]]))
        assert not check and check.reason == "not an antichain"

    def test_exchange_witness(self):
        # simple, but 12 and 13 meet in {1} and no member holds {1,4}
        check = validate_copoint_family(4, SetFamily.from_sets([[1, 2], [3, 4], [1, 3], [2, 4]]))
        assert not check and check.reason == "exchange axiom fails"

    def test_duplicate_warning(self):
        check = validate_copoint_family(3, [1, 1, 2, 4])
        assert check and check.warnings

    @settings(max_examples=300, deadline=None)
    @given(st.integers(2, 5).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.integers(0, (1 << n) - 2), min_size=1, max_size=8))
    ))
    def test_agrees_with_literal_axioms(self, case):
        n, fam = case
        fam = sorted(fam)
        expected = hyperplane_axioms(n, fam)
        if expected:
            height = flats_bruteforce(n, fam)
            singletons = {1 << i for i in range(n)}
            expected = min(height, key=height.get) == 0 and {
                f for f, r in height.items() if r == 1
            } == singletons
        assert bool(validate_copoint_family(n, fam)) == expected


class TestClosureRank:
    def test_examples(self, named):
        m5 = named["M5"]
        assert closure(m5, S("24")) == S("24")
        assert closure(m5, 0) == 0
        assert closure(m5, S("1234")) == m5.ground
        assert rank_of_set(m5, S("24")) == 2
        assert rank_of_set(m5, 0) == 0
        assert rank_of_set(m5, S("124")) == 3

    @settings(max_examples=200, deadline=None)
    @given(st.sampled_from(["M1", "M2", "M4", "M5", "M6"]), st.integers(0, 511), st.integers(0, 511))
    def test_closure_laws(self, named, name, a, b):
        m = named[name]
        a &= m.ground
        b = (a | b) & m.ground
        ca = closure(m, a)
        assert a & ~ca == 0
        assert ca & ~closure(m, b) == 0
        assert closure(m, ca) == ca
        assert m.is_flat(ca)


class TestKClosed:
    def test_examples(self, named):
        m5 = named["M5"]
        assert is_k_closed(m5, S("24578"), 2)
        assert all(is_k_closed(m5, m5.ground, k) for k in range(4))
        assert not is_k_closed(m5, S("23568"), 2)

    def test_matches_all_subsets_definition(self, named):
        m = named["M2"]
        rng = random.Random(5)
        for _ in range(200):
            a = rng.randrange(256)
            k = rng.randrange(m.rank + 1)
            elems = [e for e in range(1, 9) if a >> (e - 1) & 1]
            literal = all(
                closure(m, mask_of(sub)) & ~a == 0
                for j in range(k + 1)
                for sub in itertools.combinations(elems, j)
            )
            assert is_k_closed(m, a, k) == literal

    def test_k_range(self, named):
        with pytest.raises(RankOutOfRange):
            is_k_closed(named["M5"], 0, 4)


class TestTruncation:
    def test_recovers_base(self, named):
        res = free_erection(named["M2"])
        assert res.erected.rank == 5
        assert truncation(res.erected, 3) == named["M2"]

    def test_top_level_is_identity(self, named):
        for m in named.values():
            assert truncation(m, m.rank - 1) == m

    def test_boolean_truncation(self, named):
        t = truncation(named["M3"], 2)
        assert t.rank == 3
        assert t.copoints == SetFamily(to_mask(c) for c in itertools.combinations(range(1, 9), 2))

    def test_whitney_prefix(self, named, random_corpus):
        for m in list(named.values()) + random_corpus[:100]:
            w = whitney(m)
            for k in range(1, m.rank):
                assert whitney(truncation(m, k)) == w[: k + 1] + (1,)

    def test_range(self, named):
        with pytest.raises(RankOutOfRange):
            truncation(named["M5"], 3)
        with pytest.raises(RankOutOfRange):
            truncation(named["M5"], 0)


class TestWhitney:
    def test_examples(self, named):
        assert whitney(free_erection(named["M2"]).erected)[4] == 20
        assert whitney(named["M3"]) == (1, 8, 28, 56, 1)

    def test_ends(self, named, random_corpus):
        for m in list(named.values()) + random_corpus:
            w = whitney(m)
            assert w[0] == w[-1] == 1
            assert w[1] == m.n

    def test_end_clauses(self, named, random_corpus):
        for m in list(named.values()) + random_corpus:
            if m.rank < 2:
                continue
            w, r = whitney(m), m.rank
            assert w[1] ** 2 >= w[0] * w[2]
            assert w[r - 1] ** 2 >= w[r - 2] * w[r]


def test_cover_partition(named, random_corpus):
    """Each flat F of rank i < r and e outside F: exactly one rank-(i+1) flat holds F+e."""
    for m in list(named.values()) + random_corpus[:200]:
        for i in range(m.rank):
            for f in m.flats_by_rank[i]:
                for e in range(m.n):
                    if f >> e & 1:
                        continue
                    want = f | (1 << e)
                    assert sum(1 for g in m.flats_by_rank[i + 1] if want & ~g == 0) == 1
        for a, b in itertools.combinations(list(m.flats), 2):
            assert m.is_flat(a & b)


class TestBases:
    def test_examples(self, named):
        u23 = build_from_copoints(3, SetFamily.from_sets([[1], [2], [3]]))
        assert bases(u23) == SetFamily.from_sets([[1, 2], [1, 3], [2, 3]])
        m5 = bases(named["M5"])
        assert len(m5) == 56 - 4
        assert S("123") not in m5 and S("124") in m5
        assert len(bases(named["M3"])) == 70

    def test_cap(self, named):
        with pytest.raises(EnumerationCapExceeded):
            bases(named["M3"], cap=69)


class TestVerifyErection:
    def test_free_m2(self, named):
        assert verify_erection_copoints(named["M2"], free_erection(named["M2"]).new_copoints)

    def test_trivial(self, named):
        assert verify_erection_copoints(named["M5"], [named["M5"].ground])

    def test_missing_copoint(self, named):
        fam = digits(FREE_M5).without([S("24578")])
        check = verify_erection_copoints(named["M5"], fam)
        assert not check
        assert check.reason.startswith("(iii)")
        basis, holders = check.witness
        assert S(basis.replace(" ", "")) & ~S("24578") == 0 and holders == 0


class TestPermutation:
    def test_m4_relabel(self, named):
        m = apply_permutation(named["M4"], (8, 1, 2, 3, 4, 5, 6, 7))
        assert m.copoints == digits("1234567 18 28 38 48 58 68 78".split())

    def test_identity(self, named):
        for m in named.values():
            assert apply_permutation(m, tuple(range(1, m.n + 1))) == m

    def test_invariants(self, named):
        rng = random.Random(11)
        for m in named.values():
            for _ in range(5):
                perm = list(range(1, m.n + 1))
                rng.shuffle(perm)
                pm = apply_permutation(m, perm)
                assert whitney(pm) == whitney(m)
                assert validate_copoint_family(m.n, pm.copoints)
                assert apply_permutation(pm, inverse_permutation(perm)) == m

    def test_rejects_non_bijection(self, named):
        with pytest.raises(ValueError):
            apply_permutation(named["M5"], (1, 1, 2, 3, 4, 5, 6, 7))


def test_seed_matroid():
    m = seed_matroid(4)
    assert m.rank == 1 and m.copoints == SetFamily([0])

import random

import pytest

from latdual import (ContractError, ImplicationalBase, SizeLimitError, dex,
                     enumerate_minimal_covering_sets, ex, independent_width,
                     is_independent_implications, is_independent_set,
                     is_minimal_covering_set, spex)
from latdual.generators import gen_fig2, gen_random_base
from latdual.independence import minimal_covering_counts
from latdual.oracle import all_closed_sets

from conftest import S


def brute_minimal_covering(base, i):
    """Straight from the definition, using nothing but the closure."""
    out = []
    for t in range(1 << base.n):
        if i & ~base.closure(t):
            continue
        if all(i & ~base.closure(t & ~(1 << x)) for x in range(base.n) if t >> x & 1):
            out.append(t)
    return sorted(out)


class TestIndependentSet:
    def test_examples(self, fig1):
        assert is_independent_set(fig1, S(fig1, "13"))
        assert not is_independent_set(fig1, S(fig1, "34"))
        assert is_independent_set(fig1, 0)


class TestEx:
    def test_examples(self, fig1):
        assert ex(fig1, S(fig1, "123")) == S(fig1, "13")
        assert ex(fig1, S(fig1, "34")) == S(fig1, "4")
        empty = ImplicationalBase(("a", "b", "c"))
        assert ex(empty, 0b101) == 0b101

    def test_matches_restart_procedure(self):
        def restart(base, i):
            t = i
            while True:
                for x in range(base.n):
                    if t >> x & 1 and i & ~base.closure(t & ~(1 << x)) == 0:
                        t &= ~(1 << x)
                        break
                else:
                    return t

        for seed in range(100):
            base = gen_random_base(8, 6, 3, seed)
            for i in random.Random(seed).sample(range(256), 20):
                assert ex(base, i) == restart(base, i)

    @pytest.mark.parametrize("seed", range(60))
    def test_ex_in_spex_and_deterministic(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 12)
        base = gen_random_base(n, rng.randint(0, 8), 3, seed)
        for _ in range(10):
            i = rng.randrange(1 << n)
            e = ex(base, i)
            assert e == ex(base, i)
            assert e in spex(base, i)


class TestSpex:
    def test_examples(self, fig1):
        assert spex(fig1, S(fig1, "34")) == [S(fig1, "4")]
        assert spex(fig1, S(fig1, "123")) == [S(fig1, "13")]
        empty = ImplicationalBase(("a", "b"))
        assert spex(empty, 0b11) == [0b11]

    def test_guard(self, fig1):
        with pytest.raises(SizeLimitError):
            spex(fig1, S(fig1, "1234"), guard=3)

    @pytest.mark.parametrize("seed", range(40))
    def test_generating_set_minimal_iff_independent(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 7)
        base = gen_random_base(n, rng.randint(0, 7), 3, seed)
        i = rng.randrange(1 << n)
        members = set(spex(base, i))
        for t in range(1 << n):
            if t & ~i or i & ~base.closure(t):
                continue
            assert (t in members) == is_independent_set(base, t)


class TestMinimalCovering:
    def test_examples(self, fig1):
        assert is_minimal_covering_set(fig1, S(fig1, "4"), S(fig1, "34"))
        assert not is_minimal_covering_set(fig1, S(fig1, "34"), S(fig1, "34"))
        empty = ImplicationalBase(("a", "b"))
        assert is_minimal_covering_set(empty, 0b11, 0b11)

    def test_enumeration_examples(self, fig1):
        assert enumerate_minimal_covering_sets(fig1, S(fig1, "34")) == [S(fig1, "4")]
        empty = ImplicationalBase(("a", "b", "c"))
        assert enumerate_minimal_covering_sets(empty, 0b101) == [0b101]
        base, _ = gen_fig2(2)
        fam = enumerate_minimal_covering_sets(base, base.set_of("v1", "v2"))
        assert sorted(fam) == sorted(base.set_of(a, b) for a in ("u1", "v1") for b in ("u2", "v2"))

    @pytest.mark.parametrize("seed", range(30))
    def test_matches_definition_and_vectorised_counts(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 6)
        base = gen_random_base(n, rng.randint(0, 6), 3, seed)
        closed = all_closed_sets(base)
        counts = minimal_covering_counts(base, closed)
        for i, c in zip(closed, counts):
            fam = enumerate_minimal_covering_sets(base, i)
            assert sorted(fam) == brute_minimal_covering(base, i)
            assert c == len(fam)
            assert all(is_independent_set(base, t) for t in fam)

    def test_guard(self, fig1):
        with pytest.raises(SizeLimitError):
            enumerate_minimal_covering_sets(fig1, 0, guard=3)


class TestImplicationIndependence:
    def test_examples(self, fig1):
        assert not is_independent_implications(fig1, [0, 1])
        base, _ = gen_fig2(4)
        assert is_independent_implications(base, range(4))
        assert is_independent_implications(fig1, [])


class TestWidth:
    def test_examples(self, fig1):
        assert independent_width(fig1)[0] == 1
        assert independent_width(ImplicationalBase(("a",))) == (0, ())

    @pytest.mark.parametrize("n", range(1, 7))
    def test_fig2_width_is_n(self, n):
        base, _ = gen_fig2(n)
        assert independent_width(base) == (n, tuple(range(n)))
        assert independent_width(base, "greedy")[0] == n

    @pytest.mark.parametrize("seed", range(40))
    def test_exact_against_subset_scan(self, seed):
        from itertools import combinations

        rng = random.Random(seed)
        base = gen_random_base(rng.randint(2, 7), rng.randint(0, 7), 3, seed)
        m = len(base)
        best = max((len(c) for r in range(m + 1) for c in combinations(range(m), r)
                    if is_independent_implications(base, c)), default=0)
        k, witness = independent_width(base)
        assert k == best == len(witness)
        assert is_independent_implications(base, witness)
        g, gw = independent_width(base, "greedy")
        assert g <= k and is_independent_implications(base, gw)

    def test_guard(self):
        base = gen_random_base(10, 25, 2, 0)
        with pytest.raises(SizeLimitError):
            independent_width(base)
        assert independent_width(base, guard=25)[0] >= independent_width(base, "greedy")[0]


class TestDex:
    def test_examples(self, fig1):
        assert dex(fig1, S(fig1, "4"), S(fig1, "34")) == (1,)
        assert dex(fig1, S(fig1, "13"), S(fig1, "123")) == (0,)
        empty = ImplicationalBase(("a", "b"))
        assert dex(empty, 0b11, 0b11) == ()

    def test_precondition(self, fig1):
        with pytest.raises(ContractError):
            dex(fig1, S(fig1, "1"), S(fig1, "12"))
        with pytest.raises(ContractError):
            dex(fig1, S(fig1, "34"), S(fig1, "34"))

    def test_premises_inside_t_may_not_suffice(self):
        # deriving 4 from {0,2,3} needs 1 3 -> 4, whose premise is not in T
        base = ImplicationalBase.from_names(
            "012345", [("02", "1"), ("145", "0"), ("13", "4")])
        t, i = base.set_of("0", "2", "3"), base.set_of("0", "4")
        assert is_minimal_covering_set(base, t, i)
        with pytest.raises(ContractError):
            dex(base, t, i)

    def test_result_need_not_be_independent(self):
        base = ImplicationalBase.from_names("1234", [("34", "2"), ("4", "1")])
        t, i = base.set_of("3", "4"), base.set_of("1", "2")
        assert is_minimal_covering_set(base, t, i) and is_independent_set(base, t)
        d = dex(base, t, i)
        assert d == (0, 1)
        assert not is_independent_implications(base, d)

    @pytest.mark.parametrize("seed", range(40))
    def test_greedy_minimality(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 6)
        base = gen_random_base(n, rng.randint(0, 6), 3, seed)
        for i in all_closed_sets(base):
            for t in enumerate_minimal_covering_sets(base, i):
                try:
                    d = dex(base, t, i)
                except ContractError:
                    continue
                assert all(base.implications[j].premise & ~t == 0 for j in d)
                assert i & ~base.closure(t, only=d) == 0
                for j in d:
                    assert i & ~base.closure(t, only=[k for k in d if k != j])

import pytest

from latdual import SizeLimitError
from latdual.generators import gen_random_base
from latdual.oracle import (all_closed_sets, brute_check_dual, brute_dual, brute_transversals,
                            naive_closure)
from latdual.hypergraph import hypergraph_from_sets

from conftest import S


def test_closed_sets_fig1(fig1):
    expected = ["", "1", "2", "3", "12", "23", "34", "123", "234", "1234"]
    assert sorted(all_closed_sets(fig1)) == sorted(S(fig1, t) for t in expected)


@pytest.mark.parametrize("seed", range(30))
def test_closed_sets_are_fixpoints(seed):
    base = gen_random_base(6, 5, 2, seed)
    closed = set(all_closed_sets(base))
    assert closed == {s for s in range(64) if naive_closure(base, s) == s}


def test_brute_dual_fig1(fig1):
    assert brute_dual(fig1, [S(fig1, "1"), S(fig1, "23")]) == [S(fig1, "12"), S(fig1, "34")]


def test_brute_check_dual(fig1):
    bplus = [S(fig1, "1"), S(fig1, "23")]
    assert brute_check_dual(fig1, bplus, [S(fig1, "12"), S(fig1, "34")])
    v = brute_check_dual(fig1, bplus, [S(fig1, "12")])
    assert (v.witness, v.reason) == (S(fig1, "34"), "uncovered")
    v = brute_check_dual(fig1, bplus, [S(fig1, "1")])
    assert (v.witness, v.reason) == (S(fig1, "1"), "overlap")


def test_brute_transversals():
    h = hypergraph_from_sets(3, [[0, 1], [1, 2]])
    assert sorted(brute_transversals(h)) == [0b010, 0b101]
    expected = [t for t in range(8) if t & 0b011 and t & 0b110
                and not any(all(u & e for e in (0b011, 0b110))
                            for u in range(8) if u != t and u & ~t == 0)]
    assert sorted(brute_transversals(h)) == expected


def test_guard(fig1):
    with pytest.raises(SizeLimitError):
        all_closed_sets(fig1, guard=3)

import pytest

from latdual import AntichainError, ParseError
from latdual.formats import (format_set, parse_antichain, parse_base, parse_family,
                             parse_formula, parse_hypergraph, serialize_antichain,
                             serialize_base, serialize_formula, serialize_hypergraph)
from latdual.generators import gen_random_base, gen_random_formula
from latdual.hypergraph import hypergraph_from_sets

from conftest import S


class TestBase:
    def test_parse(self, fig1):
        assert fig1.names == ("1", "2", "3", "4")
        assert [(tuple(fig1.names_of(a)), fig1.names[b]) for a, b in fig1.implications] == [
            (("1", "3"), "2"), (("4",), "3")]

    def test_names_by_first_use(self):
        base = parse_base("imp b -> a\n# comment\nimp c a -> d  # tail\n")
        assert base.names == ("b", "a", "c", "d")

    def test_multiple_conclusions_split(self):
        base = parse_base("imp a -> b c\n")
        assert len(base.implications) == 2

    def test_empty_premise(self):
        base = parse_base("elements a b\nimp -> a\n")
        assert base.closure(0) == base.set_of("a")

    @pytest.mark.filterwarnings("ignore:.*duplicate implication")
    def test_round_trip(self, fig1):
        assert parse_base(serialize_base(fig1)) == fig1
        for seed in range(20):
            base = gen_random_base(7, 6, 3, seed)
            assert parse_base(serialize_base(base)) == base

    @pytest.mark.parametrize("text,line", [
        ("elements a\nimp a -> b\n", 2),
        ("imp a -> b\nelements a b\n", 2),
        ("imp a b\n", 1),
        ("imp a -> \n", 1),
        ("\nfoo a\n", 2),
        ("imp a -> b -> c\n", 1),
        ("elements a a\n", 1),
        ("imp a! -> b\n", 1),
    ])
    def test_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_base(text)
        assert info.value.line == line

    def test_warnings(self):
        with pytest.warns(UserWarning):
            parse_base("imp a -> a\n")
        with pytest.warns(UserWarning):
            parse_base("imp a -> b\nimp a -> b\n")


class TestFamilies:
    def test_antichain(self, fig1):
        ac = parse_antichain("set 1\nset 2 3\n", fig1)
        assert ac.members == (S(fig1, "1"), S(fig1, "23"))
        assert serialize_antichain(fig1, ac) == "set 1\nset 2 3\n"

    def test_empty_set_line(self, fig1):
        assert parse_family("set\n", fig1) == [0]
        assert format_set(fig1.names, 0) == "set"

    def test_unknown_element(self, fig1):
        with pytest.raises(ParseError) as info:
            parse_family("set 1\nset 9\n", fig1)
        assert info.value.line == 2

    def test_antichain_validated(self, fig1):
        with pytest.raises(AntichainError):
            parse_antichain("set 4\n", fig1)

    def test_hypergraph(self):
        h = parse_hypergraph("elements a b c\nset a b\nset c\n")
        assert h.n == 3 and h.edges == (0b011, 0b100)
        assert parse_hypergraph(serialize_hypergraph(h)) == h
        assert parse_hypergraph("set x y\n").names == ("x", "y")
        unnamed = hypergraph_from_sets(2, [[0], [1]])
        assert parse_hypergraph(serialize_hypergraph(unnamed)) == unnamed


class TestFormula:
    def test_parse(self):
        f = parse_formula("c demo\np oit 4 2\n1 2 3 0\n2 3 4\n")
        assert (f.n, f.clauses) == (4, ((0, 1, 2), (1, 2, 3)))

    def test_round_trip(self):
        for seed in range(20):
            f = gen_random_formula(6, 3, seed)
            assert parse_formula(serialize_formula(f)) == f

    @pytest.mark.parametrize("text", [
        "1 2 3\n",
        "p oit 3\n1 2 3\n",
        "p oit 3 1\n1 2 4\n",
        "p oit 3 1\n1 2\n",
        "p oit 3 2\n1 2 3\n",
        "p oit 3 1\n1 x 3\n",
    ])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_formula(text)

import pytest

from oracles import nerode_classes, py_accepts, py_regex
from synmon.automata import (AlphabetMismatch, Alt, Cat, RegexSyntaxError, Star, Sym, compile_regex,
                             contains_factor_dfa, dfa_equivalent, factor_language, intersect_nonempty,
                             minimize, parse_regex, reverse_dfa, with_alphabet, Dfa)
from synmon.words import Word, is_factor, parse_word, reverse, words_over

REGEXES = [
    "a+ b {a,b}*",
    "a+ t b b+ a {a,b}* | a+ t b+ a+ b {a,b}*",
    "a+ b b+ t a+",
    "a+ t a+",
    "({a,b}{a,b})*{a,b}",
    "(ab)* | b^3",
    "a* b*",
]


class TestParse:
    def test_plus_desugars(self):
        assert parse_regex("a+") == Cat((Sym("a"), Star(Sym("a"))))

    def test_union(self):
        assert isinstance(parse_regex("a+ t b b+ a {a,b}* | a+ t b+ a+ b {a,b}*"), Alt)

    @pytest.mark.parametrize("bad", ["a+(", "a)", "{a,}", "a^0", "*a"])
    def test_syntax_errors(self, bad):
        with pytest.raises(RegexSyntaxError):
            parse_regex(bad)


class TestCompile:
    @pytest.mark.parametrize("r", REGEXES)
    def test_agrees_with_python_re(self, r):
        d = compile_regex(r)
        pat = py_regex(r)
        for w in words_over(d.alphabet, 8):
            assert d.accepts(w) == py_accepts(pat, w), (r, w)

    @pytest.mark.parametrize("r", REGEXES)
    def test_minimal_size_matches_nerode_count(self, r):
        d = compile_regex(r)
        pat = py_regex(r)
        assert d.n_states == nerode_classes(lambda w: py_accepts(pat, w), d.alphabet, 6, 6)

    @pytest.mark.parametrize("r", REGEXES)
    def test_minimize_is_fixpoint(self, r):
        d = compile_regex(r)
        assert minimize(d) == d

    def test_a_plus_b_plus_has_four_states(self):
        d = compile_regex("a+ b+")
        assert d.n_states == 4 and len(d.sink_states()) == 1

    def test_empty_regex(self):
        d = compile_regex("()", alphabet="a")
        assert d.accepts(Word()) and not d.accepts(Word("a"))

    def test_odd_length(self):
        d = compile_regex("({a,b}{a,b})*{a,b}")
        assert all(d.accepts(w) == (len(w) % 2 == 1) for w in words_over("ab", 7))

    def test_json_round_trip(self):
        d = compile_regex("a+ b {a,b}*")
        assert Dfa.from_json(d.to_json()) == d


class TestAlgebra:
    def test_equivalent(self):
        assert dfa_equivalent(compile_regex("a+"), compile_regex("a a*"))
        assert not dfa_equivalent(compile_regex("a+ b+"), compile_regex("a* b*"))

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatch):
            dfa_equivalent(compile_regex("a+"), compile_regex("b+"))
        assert dfa_equivalent(with_alphabet(compile_regex("a"), "ab"), compile_regex("a", alphabet="ab"))

    def test_factor_language(self):
        f = factor_language(compile_regex("a+ t a+"))
        for text in ["ta", "at", "a", "t", "ata", "1", "a^3ta"]:
            assert f.accepts(parse_word(text))
        for text in ["tt", "tat"]:
            assert not f.accepts(parse_word(text))

    def test_factor_language_brute_force(self):
        d = compile_regex("a+ b b+ t a+")
        members = [w for w in words_over(d.alphabet, 9) if d.accepts(w)]
        f = factor_language(d)
        for u in words_over(d.alphabet, 4):
            assert f.accepts(u) == any(is_factor(u, m) for m in members)

    def test_factor_of_finite(self):
        f = factor_language(compile_regex("ab"))
        assert [w for w in words_over("ab", 3) if f.accepts(w)] == [Word(), Word("a"), Word("b"), Word("ab")]

    def test_factor_of_empty_language(self):
        d = compile_regex("a", alphabet="ab")
        empty = Dfa(d.alphabet, d.delta, d.start, frozenset())
        assert factor_language(empty).is_empty()

    def test_intersection(self):
        assert intersect_nonempty(compile_regex("a+ b+"), compile_regex("a* b a*")) == Word("ab")
        assert intersect_nonempty(compile_regex("a+", "ab"), compile_regex("b+", "ab")) is None
        got = intersect_nonempty(contains_factor_dfa("at", Word("a")), compile_regex("a+ t a+"))
        assert got == Word("ata")

    def test_reverse(self):
        d = compile_regex("a+ b {a,b}*")
        r = reverse_dfa(d)
        assert all(r.accepts(reverse(w)) == d.accepts(w) for w in words_over("ab", 7))

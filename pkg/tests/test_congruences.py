import pytest

from synmon.automata import compile_regex, dfa_equivalent
from synmon.congruences import (Cong, Meet, canonical, class_dfa, enumerate_class, equivalent, meet,
                                parse_congruence)
from synmon.words import Word, parse_word, words_over

T1G = meet(Cong.T1, Cong.GAMMA)
T1Z = meet(Cong.T1, Cong.ZETA)


def w(text):
    return parse_word(text)


class TestNames:
    def test_parse(self):
        assert parse_congruence("beta") is Cong.BETA
        assert parse_congruence("t1^gamma") == Meet((Cong.T1, Cong.GAMMA))
        assert str(parse_congruence("t1 ^ zeta")) == "t1^zeta"

    def test_meet_flattens(self):
        assert meet(T1G, Cong.GAMMA, Cong.ALPHA) == Meet((Cong.T1, Cong.GAMMA, Cong.ALPHA))
        assert meet(Cong.BETA) is Cong.BETA

    def test_unknown(self):
        with pytest.raises(ValueError):
            parse_congruence("delta")


class TestCanonical:
    def test_beta_example(self):
        a, b = canonical(Cong.BETA, w("x^2y^3xtyx^2")), canonical(Cong.BETA, w("xyty^3xy"))
        assert a == b == ("beta", ("t",), (("x", "y"), ("y", "x")))

    def test_t1(self):
        assert canonical(Cong.T1, w("a^3b^2a")) == ("t1", ("a", "b", "a"))

    def test_gamma(self):
        assert canonical(Cong.GAMMA, w("atb^2a")) == ("gamma", ("t",), ("a", "b"))

    @pytest.mark.parametrize("c,u,v,expected", [
        (Cong.BETA, "a^2b^2", "b^2a^2", False),
        (Cong.SIMQ, "atb^2a", "atab^2", True),
        (T1G, "ata", "a^2ta^2", True),
        (Cong.ZETA, "abab", "ababa", True),
        (Cong.ZETA, "atb^2a", "atbab", False),
        (Cong.ALPHA, "ab", "abba", True),
        (Cong.BETA_DUAL, "ab^2ta", "abata", False),
        (Cong.BETA_DUAL, "ab^2ta", "abab ta", True),
    ])
    def test_equivalent(self, c, u, v, expected):
        assert equivalent(c, w(u), w(v)) is expected


class TestEnumerate:
    def test_t1(self):
        assert enumerate_class(Cong.T1, w("ab"), 3) == {w("ab"), w("aab"), w("abb")}

    def test_t1_gamma(self):
        d = compile_regex("a+ b b+ t a+")
        expected = {x for x in words_over("abt", 6) if d.accepts(x)}
        assert enumerate_class(T1G, w("ab^2ta"), 6) == expected

    def test_beta_length_five(self):
        got = {x for x in enumerate_class(Cong.BETA, w("atb^2a"), 5) if len(x) == 5}
        assert got == {w("atb^2a"), w("atbab")}


class TestClassDfa:
    @pytest.mark.parametrize("c,rep,regex", [
        (Cong.BETA, "atb^2a", "a+ t b b+ a {a,b}* | a+ t b+ a+ b {a,b}*"),
        (T1G, "ab^2ta", "a+ b b+ t a+"),
        (T1G, "ata", "a+ t a+"),
        (Cong.ALPHA, "ab", "a+ b {a,b}*"),
        (Cong.T1, "ab", "a+ b+"),
        (T1Z, "atb^2a", "a t b b+ a+"),
        (T1Z, "atbasb", "a t b a+ s b+"),
    ])
    def test_matches_regex(self, c, rep, regex):
        assert dfa_equivalent(class_dfa(c, w(rep)), compile_regex(regex))

    @pytest.mark.parametrize("c,rep", [
        (Cong.T1, "ab^2a"), (Cong.GAMMA, "atb^2"), (Cong.ALPHA, "bab"), (Cong.ZETA, "atba"),
        (Cong.BETA, "atab^2"), (Cong.BETA_DUAL, "ab^2ta"), (Cong.SIMQ, "atab^2"),
        (T1G, "atb^2a"), (T1Z, "abta"), (meet(Cong.ALPHA, Cong.GAMMA), "aba"),
    ])
    def test_agrees_with_enumeration(self, c, rep):
        rep = w(rep)
        bound = min(2 * len(rep) + 2, 9)
        d = class_dfa(c, rep)
        members = enumerate_class(c, rep, bound)
        for x in words_over(sorted(set(rep)), bound):
            assert d.accepts(x) == (x in members), x

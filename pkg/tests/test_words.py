import pytest

from synmon.words import (Word, WordSyntaxError, apply_substitution, block_decompose, classify_word,
                          format_word, ini2, is_factor, parse_word, reverse, word_stats, words_over)


def w(text):
    return parse_word(text)


class TestParse:
    def test_exponents_expand(self):
        assert w("atb^2a") == Word("atbba")

    def test_multichar_letters(self):
        assert w("b t2 a t1 a^2 b^2") == Word(["b", "t2", "a", "t1", "a", "a", "b", "b"])

    def test_zero_exponent_rejected(self):
        with pytest.raises(WordSyntaxError) as exc:
            w("a^0")
        assert exc.value.position == 2

    @pytest.mark.parametrize("bad", ["A", "a^", "a^b", "a-b", "3a"])
    def test_bad_text(self, bad):
        with pytest.raises(WordSyntaxError):
            w(bad)

    def test_empty_word(self):
        assert w("1") == Word() == w("")
        assert str(Word()) == "1"

    def test_format_uses_exponents(self):
        assert format_word(w("aabbb")) == "a^2b^3"
        assert str(w("b t2 a t1 a^2 b^2")) == "b t2 a t1 a^2 b^2"

    def test_concatenation_stays_a_word(self):
        assert isinstance(w("ab") + w("c"), Word)
        assert isinstance(w("abc")[1:], Word)


class TestStructure:
    def test_stats(self):
        s = word_stats(w("atb^2a"))
        assert s.content == {"a", "t", "b"}
        assert s.simple == {"t"} and s.multiple == {"a", "b"}

    def test_stats_empty(self):
        s = word_stats(Word())
        assert not s.content and not s.simple and not s.multiple

    def test_stats_mixed(self):
        s = word_stats(w("x^2y^3xtyx^2"))
        assert s.simple == {"t"} and s.multiple == {"x", "y"}

    def test_blocks_block_simple_word(self):
        d = block_decompose(w("x^2 t1 x^3 t2 y^5 t3 z^2 t4 t5 y"))
        assert d.skeleton == Word(["t1", "t2", "t3", "t4", "t5"])
        assert [str(b) for b in d.blocks] == ["x^2", "x^3", "y^5", "z^2", "1", "y"]

    def test_blocks_no_simple_letters(self):
        d = block_decompose(w("a^2b^2"))
        assert d.skeleton == Word() and d.blocks == (w("a^2b^2"),)

    def test_blocks_small(self):
        d = block_decompose(w("atb^2a"))
        assert d.skeleton == Word("t") and d.blocks == (w("a"), w("b^2a"))

    @pytest.mark.parametrize("text,expected", [
        ("x^2 t1 x^3 t2 y^5 t3 z^2 t4 t5 y", (True, True)),
        ("x^2 t1 y t2 x^2 y z^3 t3 z t4 y p^3 t5 x p", (False, True)),
        ("xytxy", (False, False)),
    ])
    def test_classify(self, text, expected):
        assert classify_word(w(text)) == expected

    @pytest.mark.parametrize("text,expected", [("abab", "abab"), ("atb^2a", "atbba"), ("a^3b", "aab")])
    def test_ini2(self, text, expected):
        assert ini2(w(text)) == Word(expected)

    @pytest.mark.parametrize("text,expected", [("atb^2a", "ab^2ta"), ("1", "1"), ("a^2b^2", "b^2a^2")])
    def test_reverse(self, text, expected):
        assert reverse(w(text)) == w(expected)

    @pytest.mark.parametrize("u,v,expected", [("a^2b", "a^2b^2", True), ("ab", "ba", False),
                                              ("ta", "atb^2a", False), ("1", "ab", True)])
    def test_factor(self, u, v, expected):
        assert is_factor(w(u), w(v)) is expected


class TestSubstitution:
    def test_square(self):
        assert apply_substitution(w("xtx"), {"x": "a^2", "t": "b"}) == w("a^2ba^2")

    def test_identity_map(self):
        assert apply_substitution(w("xy"), {"x": "x", "y": "y"}) == w("xy")

    def test_expand(self):
        assert apply_substitution(w("xtx"), {"x": "ab", "t": "t"}) == w("abtab")

    def test_missing_letter(self):
        with pytest.raises(KeyError):
            apply_substitution(w("xy"), {"x": "a"})


def test_words_over_shortlex():
    got = [str(x) for x in words_over("ab", 2)]
    assert got == ["1", "a", "b", "a^2", "ab", "ba", "b^2"]
    assert len(list(words_over("abc", 3, min_len=3))) == 27

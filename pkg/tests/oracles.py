"""Brute-force reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import re

from synmon.monoid import eval_word
from synmon.words import Word, words_over


def py_regex(text: str) -> re.Pattern:
    """Translate the single-character-letter dialect into a Python regex."""
    out = re.sub(r"\{([a-z,]+)\}", lambda m: "(?:" + m.group(1).replace(",", "|") + ")", text)
    out = re.sub(r"\^(\d+)", r"{\1}", out)
    out = out.replace(" ", "").replace("()", "")
    return re.compile(out)


def py_accepts(pattern: re.Pattern, w) -> bool:
    return pattern.fullmatch("".join(w)) is not None


def myhill_classes(member, alphabet, word_len: int, ctx_len: int) -> int:
    """Number of syntactic classes seen among words up to ``word_len``."""
    contexts = list(words_over(alphabet, ctx_len))
    sigs = set()
    for w in words_over(alphabet, word_len):
        sigs.add(frozenset((p, s) for p in contexts for s in contexts if member(p + w + s)))
    return len(sigs)


def nerode_classes(member, alphabet, word_len: int, suffix_len: int) -> int:
    """Number of right-congruence classes (minimal DFA size) seen up to ``word_len``."""
    suffixes = list(words_over(alphabet, suffix_len))
    return len({frozenset(s for s in suffixes if member(w + s)) for w in words_over(alphabet, word_len)})


def naive_satisfies(m, left, right) -> bool:
    letters = sorted(set(left) | set(right))
    for values in itertools.product(range(m.size), repeat=len(letters)):
        a = dict(zip(letters, values))
        if eval_word(m, a, left) != eval_word(m, a, right):
            return False
    return True


def hom_exists(m, n, surjective: bool = True) -> bool:
    """Exhaustive search over all maps sending identity to identity."""
    others = [x for x in range(m.size) if x != m.identity]
    for images in itertools.product(range(n.size), repeat=len(others)):
        f = dict(zip(others, images))
        f[m.identity] = n.identity
        if surjective and len(set(f.values())) != n.size:
            continue
        if all(f[int(m.table[x, y])] == int(n.table[f[x], f[y]]) for x in range(m.size) for y in range(m.size)):
            return True
    return False


def factor_classes(cong_key, member_words, alphabet, max_len: int) -> int:
    """Distinct classes of factors of the given words (brute-force M_tau without zero)."""
    seen = set()
    for w in member_words:
        for i in range(len(w) + 1):
            for j in range(i, len(w) + 1):
                seen.add(cong_key(Word(w[i:j])))
    return len(seen)

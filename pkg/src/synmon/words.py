"""Words over a flat letter namespace.

Letters are short identifiers matching ``[a-z][0-9]*`` (``a``, ``t1``, ``y12``).
A word is an immutable tuple of letters; the text form writes runs of
length two or more with an exponent, e.g. ``a t b^2 a`` prints as ``atb^2a``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

LETTER_RE = re.compile(r"[a-z][0-9]*")
_TOKEN_RE = re.compile(r"\s*(?:([a-z][0-9]*)(?:\s*\^\s*([0-9]+))?)")


class WordSyntaxError(ValueError):
    """Malformed word text; ``position`` is the offending character index."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class Word(tuple):
    """Immutable sequence of letters; concatenation via ``+``."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[str] = ()):
        return super().__new__(cls, letters)

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __radd__(self, other):
        return Word(tuple(other) + tuple(self))

    def __getitem__(self, item):
        res = tuple.__getitem__(self, item)
        return Word(res) if isinstance(item, slice) else res

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


EMPTY = Word()


def is_letter(name: str) -> bool:
    return LETTER_RE.fullmatch(name) is not None


def parse_word(text: str) -> Word:
    """Parse ``"b t2 a t1 a^2 b^2"`` style text into a :class:`Word`.

    ``1`` (or blank text) denotes the empty word.
    """
    stripped = text.strip()
    if stripped in ("", "1"):
        return EMPTY
    letters: list[str] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.group(1) is None:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        letter, exp = m.group(1), m.group(2)
        if exp is None:
            # a dangling caret is an error, not part of the next token
            end = m.end()
            probe = end
            while probe < n and text[probe].isspace():
                probe += 1
            if probe < n and text[probe] == "^":
                raise WordSyntaxError("exponent must be a positive integer", text, probe)
            letters.append(letter)
        else:
            k = int(exp)
            if k < 1:
                raise WordSyntaxError("exponent must be >= 1", text, m.start(2))
            letters.extend([letter] * k)
        pos = m.end()
    return Word(letters)


def as_word(w: Word | str | Iterable[str]) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return parse_word(w)
    return Word(w)


def runs(w: Iterable[str]) -> Iterator[tuple[str, int]]:
    """Yield (letter, run length) pairs."""
    prev, count = None, 0
    for x in w:
        if x == prev:
            count += 1
        else:
            if prev is not None:
                yield prev, count
            prev, count = x, 1
    if prev is not None:
        yield prev, count


def format_word(w: Iterable[str]) -> str:
    parts = []
    for letter, k in runs(w):
        parts.append(letter if k == 1 else f"{letter}^{k}")
    if not parts:
        return "1"
    # multi-character letters need separators to stay unambiguous
    if all(len(x) == 1 for x, _ in runs(w)):
        return "".join(parts)
    return " ".join(parts)


def content(w: Iterable[str]) -> tuple[str, ...]:
    """Distinct letters in order of first occurrence."""
    return tuple(dict.fromkeys(w))


def letter_counts(w: Iterable[str]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for x in w:
        counts[x] = counts.get(x, 0) + 1
    return counts


@dataclass(frozen=True)
class WordStats:
    content: frozenset[str]
    simple: frozenset[str]
    multiple: frozenset[str]


def word_stats(w: Word) -> WordStats:
    counts = letter_counts(w)
    simple = frozenset(x for x, k in counts.items() if k == 1)
    multiple = frozenset(x for x, k in counts.items() if k > 1)
    return WordStats(frozenset(counts), simple, multiple)


@dataclass(frozen=True)
class BlockDecomposition:
    skeleton: Word
    blocks: tuple[Word, ...]

    def reassemble(self) -> Word:
        out = list(self.blocks[0])
        for t, block in zip(self.skeleton, self.blocks[1:]):
            out.append(t)
            out.extend(block)
        return Word(out)


def block_decompose(w: Word) -> BlockDecomposition:
    """Split ``w`` at its simple letters: ``a0 t1 a1 ... tm am``."""
    counts = letter_counts(w)
    skeleton: list[str] = []
    blocks: list[Word] = []
    current: list[str] = []
    for x in w:
        if counts[x] == 1:
            skeleton.append(x)
            blocks.append(Word(current))
            current = []
        else:
            current.append(x)
    blocks.append(Word(current))
    return BlockDecomposition(Word(skeleton), tuple(blocks))


def is_xy_limited(w: Word) -> bool:
    """At most one block involves both x and y, for every pair of multiple letters."""
    seen: set[tuple[str, str]] = set()
    for block in block_decompose(w).blocks:
        letters = sorted(set(block))
        for i, x in enumerate(letters):
            for y in letters[i + 1:]:
                if (x, y) in seen:
                    return False
                seen.add((x, y))
    return True


def classify_word(w: Word) -> tuple[bool, bool]:
    """Return ``(block_simple, xy_limited)``."""
    decomposition = block_decompose(w)
    block_simple = all(len(set(b)) <= 1 for b in decomposition.blocks)
    return block_simple, is_xy_limited(w)


def ini2(w: Word) -> Word:
    """Keep the first two occurrences of every letter."""
    counts: dict[str, int] = {}
    out = []
    for x in w:
        k = counts.get(x, 0)
        if k < 2:
            out.append(x)
        counts[x] = k + 1
    return Word(out)


def collapse_runs(w: Word) -> Word:
    return Word(x for x, _ in runs(w))


def first_occurrences(w: Iterable[str]) -> Word:
    return Word(content(w))


def reverse(w: Word) -> Word:
    return Word(reversed(w))


def is_factor(u: Word, w: Word) -> bool:
    """True iff ``u`` occurs contiguously in ``w``."""
    n, m = len(u), len(w)
    if n == 0:
        return True
    return any(tuple.__getitem__(w, slice(i, i + n)) == tuple(u) for i in range(m - n + 1))


def apply_substitution(w: Word, theta: Mapping[str, Word | str]) -> Word:
    out: list[str] = []
    for x in w:
        if x not in theta:
            raise KeyError(f"substitution has no image for letter {x!r}")
        out.extend(as_word(theta[x]))
    return Word(out)


def words_over(alphabet: Iterable[str], max_len: int, min_len: int = 0) -> Iterator[Word]:
    """All words over ``alphabet`` in shortlex order, lengths ``min_len..max_len``."""
    letters = tuple(alphabet)
    layer: list[tuple[str, ...]] = [()]
    for length in range(max_len + 1):
        if length >= min_len:
            for w in layer:
                yield Word(w)
        if length < max_len:
            layer = [w + (x,) for w in layer for x in letters]

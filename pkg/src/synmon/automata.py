"""Restricted regular expressions and complete deterministic automata.

The regex dialect covers the class descriptions used for congruence classes:
letters ``[a-z][0-9]*``, juxtaposition, ``|``, postfix ``*``/``+``/``^k``,
parentheses and letter classes ``{a,b}`` (shorthand for ``(a|b)``).
Whitespace is ignored. ``()`` or ``1`` is the empty word.

Every :class:`Dfa` is complete. :func:`minimize` returns a canonically numbered
minimal automaton, so two minimal automata for the same language over the same
alphabet compare equal.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Optional

from .words import Word, as_word

__all__ = [
    "RegexSyntaxError", "Regex", "Sym", "Eps", "Cat", "Alt", "Star",
    "parse_regex", "Dfa", "build_dfa", "compile_regex", "minimize",
    "dfa_equivalent", "factor_language", "intersect_nonempty", "reverse_dfa",
    "product_dfa", "contains_factor_dfa", "with_alphabet", "AlphabetMismatch",
]


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.position = position


class AlphabetMismatch(ValueError):
    pass


# --- regex AST ---------------------------------------------------------------

class Regex:
    def letters(self) -> frozenset[str]:
        raise NotImplementedError


@dataclass(frozen=True)
class Sym(Regex):
    letter: str

    def letters(self):
        return frozenset([self.letter])


@dataclass(frozen=True)
class Eps(Regex):
    def letters(self):
        return frozenset()


@dataclass(frozen=True)
class Cat(Regex):
    parts: tuple[Regex, ...]

    def letters(self):
        return frozenset().union(*(p.letters() for p in self.parts))


@dataclass(frozen=True)
class Alt(Regex):
    options: tuple[Regex, ...]

    def letters(self):
        return frozenset().union(*(p.letters() for p in self.options))


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex

    def letters(self):
        return self.inner.letters()


_LETTER = re.compile(r"[a-z][0-9]*")
_INT = re.compile(r"[0-9]+")


class _RegexParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise RegexSyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def letter(self) -> str:
        self.skip()
        m = _LETTER.match(self.text, self.pos)
        if m is None:
            self.error("expected a letter")
        self.pos = m.end()
        return m.group()

    def parse(self) -> Regex:
        node = self.union()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return node

    def union(self) -> Regex:
        options = [self.concat()]
        while self.peek() == "|":
            self.pos += 1
            options.append(self.concat())
        return options[0] if len(options) == 1 else Alt(tuple(options))

    def concat(self) -> Regex:
        parts = []
        while self.peek() and self.peek() not in "|)":
            parts.append(self.postfix())
        if not parts:
            return Eps()
        return parts[0] if len(parts) == 1 else Cat(tuple(parts))

    def postfix(self) -> Regex:
        node = self.atom()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                node = Star(node)
            elif ch == "+":
                self.pos += 1
                node = Cat((node, Star(node)))
            elif ch == "^":
                self.pos += 1
                self.skip()
                m = _INT.match(self.text, self.pos)
                if m is None or int(m.group()) < 1:
                    self.error("exponent must be a positive integer")
                self.pos = m.end()
                node = Cat((node,) * int(m.group()))
            else:
                return node

    def atom(self) -> Regex:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.union()
            self.expect(")")
            return node
        if ch == "{":
            self.pos += 1
            options = [Sym(self.letter())]
            while self.peek() == ",":
                self.pos += 1
                options.append(Sym(self.letter()))
            self.expect("}")
            return options[0] if len(options) == 1 else Alt(tuple(options))
        if ch == "1":
            self.pos += 1
            return Eps()
        if not ch:
            self.error("unexpected end of expression")
        return Sym(self.letter())


def parse_regex(text: str) -> Regex:
    return _RegexParser(text).parse()


# --- NFA (Thompson) ------------------------------------------------------------

class _Nfa:
    def __init__(self):
        self.eps: list[list[int]] = []
        self.moves: list[list[tuple[str, int]]] = []

    def new_state(self) -> int:
        self.eps.append([])
        self.moves.append([])
        return len(self.eps) - 1

    def build(self, r: Regex) -> tuple[int, int]:
        if isinstance(r, Sym):
            s, f = self.new_state(), self.new_state()
            self.moves[s].append((r.letter, f))
            return s, f
        if isinstance(r, Eps):
            s, f = self.new_state(), self.new_state()
            self.eps[s].append(f)
            return s, f
        if isinstance(r, Cat):
            s, f = self.build(r.parts[0])
            for part in r.parts[1:]:
                s2, f2 = self.build(part)
                self.eps[f].append(s2)
                f = f2
            return s, f
        if isinstance(r, Alt):
            s, f = self.new_state(), self.new_state()
            for option in r.options:
                s2, f2 = self.build(option)
                self.eps[s].append(s2)
                self.eps[f2].append(f)
            return s, f
        if isinstance(r, Star):
            s, f = self.new_state(), self.new_state()
            s2, f2 = self.build(r.inner)
            self.eps[s].extend([s2, f])
            self.eps[f2].extend([s2, f])
            return s, f
        raise TypeError(f"not a regex node: {r!r}")

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        stack = list(states)
        seen = set(stack)
        while stack:
            q = stack.pop()
            for r in self.eps[q]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return frozenset(seen)


# --- DFA -----------------------------------------------------------------------

@dataclass(frozen=True)
class Dfa:
    """Complete DFA; ``delta[q][i]`` is the target of state ``q`` on ``alphabet[i]``."""

    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    start: int
    accepting: frozenset[int]

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def letter_index(self, letter: str) -> int:
        return self.alphabet.index(letter)

    def run(self, state: int, word: Iterable[str]) -> Optional[int]:
        """Follow ``word`` from ``state``; ``None`` if it leaves the alphabet."""
        index = {x: i for i, x in enumerate(self.alphabet)}
        for x in word:
            i = index.get(x)
            if i is None:
                return None
            state = self.delta[state][i]
        return state

    def accepts(self, word) -> bool:
        q = self.run(self.start, as_word(word) if isinstance(word, str) else word)
        return q is not None and q in self.accepting

    def is_empty(self) -> bool:
        return not (self.reachable() & self.accepting)

    def reachable(self) -> set[int]:
        seen = {self.start}
        stack = [self.start]
        while stack:
            q = stack.pop()
            for r in self.delta[q]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return seen

    def coreachable(self) -> set[int]:
        preds: list[set[int]] = [set() for _ in self.delta]
        for q, row in enumerate(self.delta):
            for r in row:
                preds[r].add(q)
        seen = set(self.accepting)
        stack = list(seen)
        while stack:
            q = stack.pop()
            for p in preds[q]:
                if p not in seen:
                    seen.add(p)
                    stack.append(p)
        return seen

    def sink_states(self) -> list[int]:
        """Non-accepting states with only self-loops."""
        return [q for q, row in enumerate(self.delta)
                if q not in self.accepting and all(r == q for r in row)]

    def to_json(self) -> str:
        return json.dumps({
            "alphabet": list(self.alphabet),
            "states": list(range(self.n_states)),
            "start": self.start,
            "accepting": sorted(self.accepting),
            "transitions": {str(q): {x: row[i] for i, x in enumerate(self.alphabet)}
                            for q, row in enumerate(self.delta)},
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Dfa":
        data = json.loads(text)
        alphabet = tuple(data["alphabet"])
        states = data["states"]
        delta = tuple(tuple(data["transitions"][str(q)][x] for x in alphabet) for q in states)
        return cls(alphabet, delta, data["start"], frozenset(data["accepting"]))


def build_dfa(alphabet: Iterable[str], start: Hashable,
              step: Callable[[Hashable, str], Optional[Hashable]],
              accept: Callable[[Hashable], bool]) -> Dfa:
    """Explore a DFA whose states are hashable keys.

    ``step`` returns ``None`` for the dead state; a sink is added when needed.
    """
    alphabet = tuple(alphabet)
    index = {start: 0}
    keys = [start]
    rows: list[list[int]] = []
    sink = None
    i = 0
    while i < len(keys):
        key = keys[i]
        row = []
        for x in alphabet:
            nxt = None if key is sink else step(key, x)
            if nxt is None:
                if sink is None:
                    sink = object()
                    index[sink] = len(keys)
                    keys.append(sink)
                nxt = sink
            elif nxt not in index:
                index[nxt] = len(keys)
                keys.append(nxt)
            row.append(index[nxt])
        rows.append(row)
        i += 1
    accepting = frozenset(q for q, k in enumerate(keys) if k is not sink and accept(k))
    return Dfa(alphabet, tuple(map(tuple, rows)), 0, accepting)


def _subset_construction(alphabet: tuple[str, ...], starts: Iterable[int],
                         moves: Callable[[int, str], Iterable[int]],
                         closure: Callable[[Iterable[int]], frozenset[int]],
                         final: Callable[[int], bool]) -> Dfa:
    def step(key, x):
        return closure(r for q in key for r in moves(q, x))

    return build_dfa(alphabet, closure(starts), step, lambda key: any(final(q) for q in key))


def minimize(d: Dfa) -> Dfa:
    """Hopcroft partition refinement, then canonical BFS renumbering."""
    reach = sorted(d.reachable())
    k = len(d.alphabet)
    inverse: list[dict[int, list[int]]] = [dict() for _ in range(k)]
    for q in reach:
        for i in range(k):
            inverse[i].setdefault(d.delta[q][i], []).append(q)

    acc = frozenset(q for q in reach if q in d.accepting)
    rej = frozenset(reach) - acc
    partition = [b for b in (acc, rej) if b]
    block_of = {}
    for bi, block in enumerate(partition):
        for q in block:
            block_of[q] = bi
    worklist = deque(bi for bi in range(len(partition)))
    in_work = set(worklist)
    while worklist:
        splitter_idx = worklist.popleft()
        in_work.discard(splitter_idx)
        splitter = set(partition[splitter_idx])
        for i in range(k):
            pre = set()
            for q in splitter:
                pre.update(inverse[i].get(q, ()))
            touched: dict[int, set[int]] = {}
            for p in pre:
                touched.setdefault(block_of[p], set()).add(p)
            for bi, inside in touched.items():
                block = partition[bi]
                if len(inside) == len(block):
                    continue
                outside = block - inside
                partition[bi] = frozenset(inside)
                partition.append(frozenset(outside))
                new_idx = len(partition) - 1
                for q in outside:
                    block_of[q] = new_idx
                if bi in in_work:
                    worklist.append(new_idx)
                    in_work.add(new_idx)
                else:
                    smaller = bi if len(inside) <= len(outside) else new_idx
                    worklist.append(smaller)
                    in_work.add(smaller)

    rep = {bi: min(block) for bi, block in enumerate(partition)}

    def step(bi, x):
        return block_of[d.delta[rep[bi]][d.alphabet.index(x)]]

    start = block_of[d.start]
    return build_dfa(d.alphabet, start, step, lambda bi: rep[bi] in d.accepting)


def compile_regex(r: Regex | str, alphabet: Iterable[str] | None = None) -> Dfa:
    """Minimal complete DFA for ``r`` (Thompson, subsets, Hopcroft)."""
    if isinstance(r, str):
        r = parse_regex(r)
    letters = tuple(sorted(r.letters())) if alphabet is None else tuple(alphabet)
    missing = r.letters() - set(letters)
    if missing:
        raise AlphabetMismatch(f"regex letters {sorted(missing)} not in alphabet")
    nfa = _Nfa()
    s, f = nfa.build(r)

    def moves(q, x):
        return [t for y, t in nfa.moves[q] if y == x]

    d = _subset_construction(letters, [s], moves, nfa.closure, lambda q: q == f)
    return minimize(d)


def _check_alphabets(d1: Dfa, d2: Dfa):
    if tuple(d1.alphabet) != tuple(d2.alphabet):
        raise AlphabetMismatch(f"alphabets differ: {d1.alphabet} vs {d2.alphabet}")


def with_alphabet(d: Dfa, alphabet: Iterable[str]) -> Dfa:
    """Same language over a larger (reordered) alphabet; new letters go to a sink."""
    alphabet = tuple(alphabet)
    if not set(d.alphabet) <= set(alphabet):
        raise AlphabetMismatch("target alphabet must contain the automaton's alphabet")

    def step(q, x):
        if q is None or x not in d.alphabet:
            return None
        return d.delta[q][d.alphabet.index(x)]

    return minimize(build_dfa(alphabet, d.start, step, lambda q: q in d.accepting))


def dfa_equivalent(d1: Dfa, d2: Dfa) -> bool:
    _check_alphabets(d1, d2)
    return minimize(d1) == minimize(d2)


def product_dfa(d1: Dfa, d2: Dfa, op: Callable[[bool, bool], bool] = lambda a, b: a and b) -> Dfa:
    _check_alphabets(d1, d2)

    def step(key, x):
        i = d1.alphabet.index(x)
        return d1.delta[key[0]][i], d2.delta[key[1]][i]

    return build_dfa(d1.alphabet, (d1.start, d2.start), step,
                     lambda key: op(key[0] in d1.accepting, key[1] in d2.accepting))


def reverse_dfa(d: Dfa) -> Dfa:
    """Minimal DFA of the reversed language."""
    preds: list[dict[str, list[int]]] = [dict() for _ in d.delta]
    for q, row in enumerate(d.delta):
        for i, r in enumerate(row):
            preds[r].setdefault(d.alphabet[i], []).append(q)
    out = _subset_construction(d.alphabet, d.accepting,
                               lambda q, x: preds[q].get(x, ()),
                               frozenset, lambda q: q == d.start)
    return minimize(out)


def factor_language(d: Dfa) -> Dfa:
    """DFA for ``{u : p u s in L(d) for some p, s}``."""
    useful = d.reachable() & d.coreachable()

    def moves(q, x):
        r = d.delta[q][d.alphabet.index(x)]
        return (r,) if r in useful else ()

    out = _subset_construction(d.alphabet, useful, moves, frozenset, lambda q: True)
    if not useful:
        out = build_dfa(d.alphabet, 0, lambda k, x: None, lambda k: False)
    return minimize(out)


def intersect_nonempty(d1: Dfa, d2: Dfa) -> Optional[Word]:
    """Shortest word in both languages (alphabetical tie-break), or ``None``."""
    _check_alphabets(d1, d2)
    start = (d1.start, d2.start)
    parent: dict[tuple[int, int], tuple[tuple[int, int], str] | None] = {start: None}
    queue = deque([start])
    letters = sorted(range(len(d1.alphabet)), key=lambda i: d1.alphabet[i])
    while queue:
        key = queue.popleft()
        if key[0] in d1.accepting and key[1] in d2.accepting:
            out = []
            while parent[key] is not None:
                key, x = parent[key]
                out.append(x)
            return Word(reversed(out))
        for i in letters:
            nxt = (d1.delta[key[0]][i], d2.delta[key[1]][i])
            if nxt not in parent:
                parent[nxt] = (key, d1.alphabet[i])
                queue.append(nxt)
    return None


def contains_factor_dfa(alphabet: Iterable[str], v: Word) -> Dfa:
    """DFA for words over ``alphabet`` containing ``v`` as a factor (KMP automaton)."""
    alphabet = tuple(alphabet)
    v = tuple(v)
    n = len(v)

    def step(matched, x):
        if matched == n:
            return n
        cand = v[:matched] + (x,)
        while cand and cand != v[:len(cand)]:
            cand = cand[1:]
        return len(cand)

    return minimize(build_dfa(alphabet, 0, step, lambda m: m == n))

"""Canonical forms for the word congruences and automata for their classes.

Supported congruences:

``T1``         generated by ``x = x^2`` (collapse runs)
``GAMMA``      same simple letters and same multiple letters
``ALPHA``      same sequence of first occurrences
``ZETA``       same ``ini2`` (first two occurrences of every letter)
``BETA``       same simple letters in the same order, and corresponding blocks
               with the same first-occurrence sequence
``BETA_DUAL``  ``BETA`` applied to reversed words
``SIMQ``       as ``BETA`` but blocks only need the same letter set
``Meet(...)``  intersection of the above

Two words are congruent iff their canonical forms are equal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Hashable, Iterable, Union

from .automata import Dfa, build_dfa, minimize, product_dfa, reverse_dfa
from .words import (Word, as_word, block_decompose, collapse_runs, first_occurrences,
                    ini2, reverse, word_stats, words_over)


class Cong(enum.Enum):
    T1 = "t1"
    GAMMA = "gamma"
    ALPHA = "alpha"
    ZETA = "zeta"
    BETA = "beta"
    BETA_DUAL = "beta-dual"
    SIMQ = "simq"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Meet:
    parts: tuple[Cong, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("Meet needs at least one congruence")

    def __str__(self):
        return "^".join(str(p) for p in self.parts)


CongruenceId = Union[Cong, Meet]


def meet(*congruences: CongruenceId) -> CongruenceId:
    """Flattened, duplicate-free meet; a single component is returned as is."""
    parts: list[Cong] = []
    for c in congruences:
        for p in (c.parts if isinstance(c, Meet) else (c,)):
            if p not in parts:
                parts.append(p)
    return parts[0] if len(parts) == 1 else Meet(tuple(parts))


def parse_congruence(text: str) -> CongruenceId:
    """``"beta"``, ``"t1^gamma"``, ``"beta-dual"`` ..."""
    names = {c.value: c for c in Cong}
    names.update({"betadual": Cong.BETA_DUAL, "q": Cong.SIMQ, "tau1": Cong.T1})
    parts = []
    for name in text.strip().lower().split("^"):
        name = name.strip()
        if name not in names:
            raise ValueError(f"unknown congruence {name!r}; expected one of {sorted(c.value for c in Cong)}")
        parts.append(names[name])
    return meet(*parts)


def _sorted(letters: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(letters))


def _beta_form(w: Word):
    d = block_decompose(w)
    return (tuple(d.skeleton), tuple(tuple(first_occurrences(b)) for b in d.blocks))


def canonical(c: CongruenceId, w) -> Hashable:
    w = as_word(w)
    if isinstance(c, Meet):
        return ("meet",) + tuple(canonical(p, w) for p in c.parts)
    if c is Cong.T1:
        return ("t1", tuple(collapse_runs(w)))
    if c is Cong.GAMMA:
        s = word_stats(w)
        return ("gamma", _sorted(s.simple), _sorted(s.multiple))
    if c is Cong.ALPHA:
        return ("alpha", tuple(first_occurrences(w)))
    if c is Cong.ZETA:
        return ("zeta", tuple(ini2(w)))
    if c is Cong.BETA:
        return ("beta",) + _beta_form(w)
    if c is Cong.BETA_DUAL:
        return ("beta-dual",) + _beta_form(reverse(w))
    if c is Cong.SIMQ:
        d = block_decompose(w)
        return ("simq", tuple(d.skeleton), tuple(_sorted(set(b)) for b in d.blocks))
    raise ValueError(f"unsupported congruence {c!r}")


def equivalent(c: CongruenceId, u, v) -> bool:
    return canonical(c, u) == canonical(c, v)


def class_alphabet(rep) -> tuple[str, ...]:
    return _sorted(set(as_word(rep)))


def enumerate_class(c: CongruenceId, rep, max_len: int) -> set[Word]:
    """Brute force: words over ``content(rep)`` of length <= ``max_len`` congruent to ``rep``."""
    rep = as_word(rep)
    target = canonical(c, rep)
    return {w for w in words_over(class_alphabet(rep), max_len) if canonical(c, w) == target}


# --- class automata --------------------------------------------------------------
# Each profile automaton tracks a bounded summary of the prefix read so far and
# dies on the first letter that cannot lead back into the target class.

def _t1_dfa(rep: Word, alphabet) -> Dfa:
    target = tuple(collapse_runs(rep))

    def step(k, x):
        if k and target[k - 1] == x:
            return k
        if k < len(target) and target[k] == x:
            return k + 1
        return None

    return build_dfa(alphabet, 0, step, lambda k: k == len(target))


def _gamma_dfa(rep: Word, alphabet) -> Dfa:
    stats = word_stats(rep)
    letters = list(alphabet)

    def step(counts, x):
        i = letters.index(x)
        if x in stats.simple and counts[i] >= 1:
            return None
        return counts[:i] + (min(counts[i] + 1, 2),) + counts[i + 1:]

    def accept(counts):
        return all(k == (1 if x in stats.simple else 2) for x, k in zip(letters, counts))

    return build_dfa(alphabet, (0,) * len(letters), step, accept)


def _alpha_dfa(rep: Word, alphabet) -> Dfa:
    target = tuple(first_occurrences(rep))

    def step(k, x):
        if x in target[:k]:
            return k
        if k < len(target) and target[k] == x:
            return k + 1
        return None

    return build_dfa(alphabet, 0, step, lambda k: k == len(target))


def _zeta_dfa(rep: Word, alphabet) -> Dfa:
    target = tuple(ini2(rep))

    def step(k, x):
        if target[:k].count(x) >= 2:
            return k
        if k < len(target) and target[k] == x:
            return k + 1
        return None

    return build_dfa(alphabet, 0, step, lambda k: k == len(target))


def _block_dfa(rep: Word, alphabet, ordered: bool) -> Dfa:
    skeleton, blocks = _beta_form(rep)
    multiple = [x for x in alphabet if x not in skeleton]

    def bump(counts, x):
        i = multiple.index(x)
        return counts[:i] + (min(counts[i] + 1, 2),) + counts[i + 1:]

    def block_done(i, seen):
        return len(seen) == len(blocks[i]) if not ordered else seen == len(blocks[i])

    def step(state, x):
        i, seen, counts = state
        if x in skeleton:
            if i < len(skeleton) and skeleton[i] == x and block_done(i, seen):
                return (i + 1, 0 if ordered else frozenset(), counts)
            return None
        target = blocks[i]
        if ordered:
            if x in target[:seen]:
                return (i, seen, bump(counts, x))
            if seen < len(target) and target[seen] == x:
                return (i, seen + 1, bump(counts, x))
            return None
        if x not in target:
            return None
        return (i, seen | {x}, bump(counts, x))

    def accept(state):
        i, seen, counts = state
        return i == len(skeleton) and block_done(i, seen) and all(k == 2 for k in counts)

    start = (0, 0 if ordered else frozenset(), (0,) * len(multiple))
    return build_dfa(alphabet, start, step, accept)


def class_dfa(c: CongruenceId, rep) -> Dfa:
    """Minimal complete DFA over ``sorted(content(rep))`` accepting ``[rep]_c``."""
    rep = as_word(rep)
    alphabet = class_alphabet(rep)
    if isinstance(c, Meet):
        dfas = [class_dfa(p, rep) for p in c.parts]
        out = dfas[0]
        for d in dfas[1:]:
            out = product_dfa(out, d)
        return minimize(out)
    if c is Cong.T1:
        d = _t1_dfa(rep, alphabet)
    elif c is Cong.GAMMA:
        d = _gamma_dfa(rep, alphabet)
    elif c is Cong.ALPHA:
        d = _alpha_dfa(rep, alphabet)
    elif c is Cong.ZETA:
        d = _zeta_dfa(rep, alphabet)
    elif c is Cong.BETA:
        d = _block_dfa(rep, alphabet, ordered=True)
    elif c is Cong.SIMQ:
        d = _block_dfa(rep, alphabet, ordered=False)
    elif c is Cong.BETA_DUAL:
        return reverse_dfa(class_dfa(Cong.BETA, reverse(rep)))
    else:
        raise ValueError(f"no class automaton for congruence {c!r}")
    return minimize(d)

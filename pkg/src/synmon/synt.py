"""Syntactic monoids as transition monoids of minimal complete automata.

Languages are subsets of the free monoid over an unbounded alphabet. A regex
over ``{a, b}`` therefore also has contexts containing other letters; with
``open_alphabet=True`` (the default) one extra "foreign" letter is simulated.
It sends every state to the sink, which contributes a zero whenever the
language does not already force one. Pass ``open_alphabet=False`` when the
language is meant over exactly the automaton's alphabet (e.g. parity of length).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

import numpy as np

from .automata import Dfa, build_dfa, compile_regex, minimize
from .congruences import CongruenceId, class_dfa
from .monoid import FiniteMonoid, find_zero
from .words import Word, as_word, format_word


def _letter_maps(d: Dfa, open_alphabet: bool):
    delta = [list(row) for row in d.delta]
    maps = {x: tuple(delta[q][i] for q in range(len(delta))) for i, x in enumerate(d.alphabet)}
    foreign = None
    if open_alphabet:
        sinks = d.sink_states()
        if sinks:
            sink = sinks[0]
            n = len(delta)
        else:
            sink = len(delta)
            n = sink + 1
            maps = {x: m + (sink,) for x, m in maps.items()}
        foreign = (sink,) * n
    return maps, foreign


def transition_monoid(d: Dfa, open_alphabet: bool = True) -> FiniteMonoid:
    """Transition monoid of ``d`` as given (no minimization)."""
    maps, foreign = _letter_maps(d, open_alphabet)
    n_states = len(next(iter(maps.values()))) if maps else (len(foreign) if foreign else d.n_states)
    identity = tuple(range(n_states))
    letters = sorted(maps)
    witness: dict[tuple, Word] = {identity: Word()}
    queue = deque([identity])
    while queue:
        f = queue.popleft()
        for x in letters:
            g = maps[x]
            h = tuple(g[q] for q in f)
            if h not in witness:
                witness[h] = witness[f] + (x,)
                queue.append(h)
    if foreign is not None and foreign not in witness:
        witness[foreign] = None

    elements = list(witness)
    table = np.zeros((len(elements), len(elements)), dtype=np.int32)
    pos = {f: i for i, f in enumerate(elements)}
    for i, f in enumerate(elements):
        for j, g in enumerate(elements):
            table[i, j] = pos[tuple(g[q] for q in f)]
    zero = find_zero(table)

    def sort_key(i):
        w = witness[elements[i]]
        if i == 0:
            return (0, 0, ())
        if i == zero:
            return (2, 0, ())
        return (1, len(w), tuple(w))

    order = sorted(range(len(elements)), key=sort_key)
    rank = np.empty(len(order), dtype=np.int32)
    rank[order] = np.arange(len(order))
    table = rank[table[np.ix_(order, order)]]
    labels = []
    for i in order:
        if i == 0:
            labels.append("1")
        elif i == zero:
            labels.append("0")
        else:
            labels.append(format_word(witness[elements[i]]))
    generators = {x: int(rank[pos[maps[x]]]) for x in letters}
    return FiniteMonoid(tuple(labels), table, 0, None if zero is None else int(rank[zero]), generators)


def syntactic_monoid(d: Dfa, open_alphabet: bool = True, name: str = "") -> FiniteMonoid:
    m = transition_monoid(minimize(d), open_alphabet)
    return FiniteMonoid(m.labels, m.table, m.identity, m.zero, m.generators, name=name)


def syntactic_of_regex(text: str, open_alphabet: bool = True) -> FiniteMonoid:
    return syntactic_monoid(compile_regex(text), open_alphabet, name=f"Msynt({text})")


def syntactic_of_class(c: CongruenceId, rep, open_alphabet: bool = True) -> FiniteMonoid:
    rep = as_word(rep)
    return syntactic_monoid(class_dfa(c, rep), open_alphabet, name=f"Msynt([{rep}]_{c})")


def word_dfa(w) -> Dfa:
    """Minimal DFA for the singleton language ``{w}``."""
    w = as_word(w)

    def step(k, x):
        return k + 1 if k < len(w) and w[k] == x else None

    return minimize(build_dfa(sorted(set(w)), 0, step, lambda k: k == len(w)))


def syntactic_of_word(w, open_alphabet: bool = True) -> FiniteMonoid:
    w = as_word(w)
    return syntactic_monoid(word_dfa(w), open_alphabet, name=f"Msynt({{{w}}})")


def element_of(m: FiniteMonoid, word: Iterable[str]) -> int:
    """Element of a syntactic monoid represented by ``word`` (via its generators)."""
    value = m.identity
    for x in word:
        value = int(m.table[value, m.generators[x]])
    return value

"""Rees quotients ``M_tau(W)`` of ``A*/tau`` and relatively free monoids.

``W`` is a union of ``tau``-classes. Elements of ``M_tau(W)`` are the classes
of factors of words in ``W``; everything else collapses to a zero. The ambient
alphabet is unbounded, so words using a letter outside the construction's
alphabet are never factors and a zero is always present unless
``open_alphabet=False``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .automata import factor_language
from .congruences import CongruenceId, canonical, class_dfa
from .monoid import FiniteMonoid, Hom, morphism_search
from .synt import syntactic_of_class
from .words import Word, as_word, format_word, is_xy_limited, words_over

DEFAULT_CAP = 10_000


class CapExceeded(RuntimeError):
    """The quotient has more than ``cap`` elements (probably infinite)."""


@dataclass(frozen=True)
class SingleClass:
    cong: CongruenceId
    rep: Word

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.rep)))


@dataclass(frozen=True)
class FullStar:
    cong: CongruenceId
    alphabet: tuple[str, ...]


@dataclass(frozen=True)
class PredicateUnion:
    cong: CongruenceId
    alphabet: tuple[str, ...]
    predicate: str = "xy-limited"


WSpec = Union[SingleClass, FullStar, PredicateUnion]

PREDICATES: dict[str, Callable[[Word], bool]] = {"xy-limited": is_xy_limited}


def _predicate_factor_test(alphabet, predicate) -> Callable[[Word], bool]:
    # bounded context search; listing every letter of v in front of v already
    # works for xy-limited, so contexts up to |alphabet| letters suffice there
    contexts = list(words_over(sorted(alphabet), len(alphabet)))

    def test(v: Word) -> bool:
        if predicate(v):
            return True
        return any(predicate(p + v + s) for p in contexts for s in contexts)

    return test


def factor_test(spec: WSpec) -> Callable[[Word], bool]:
    """Decide whether a word is a factor of some word of ``W``."""
    if isinstance(spec, SingleClass):
        fl = factor_language(class_dfa(spec.cong, spec.rep))
        return fl.accepts
    if isinstance(spec, FullStar):
        return lambda v: True
    if isinstance(spec, PredicateUnion):
        if spec.predicate not in PREDICATES:
            raise ValueError(f"unsupported predicate {spec.predicate!r}")
        return _predicate_factor_test(spec.alphabet, PREDICATES[spec.predicate])
    raise TypeError(f"not a W specification: {spec!r}")


def _quotient(cong: CongruenceId, alphabet, is_factor: Callable[[Word], bool],
              with_zero: bool, cap: int, name: str) -> FiniteMonoid:
    alphabet = tuple(sorted(alphabet))
    reps: list[Word] = [Word()]
    index = {canonical(cong, Word()): 0}
    queue = deque([0])
    # right multiplication by letters reaches every factor class, since every
    # prefix of a factor is a factor
    while queue:
        i = queue.popleft()
        for x in alphabet:
            w = reps[i] + (x,)
            if not is_factor(w):
                continue
            key = canonical(cong, w)
            if key not in index:
                if len(reps) >= cap:
                    raise CapExceeded(f"more than {cap} classes of {cong}; the quotient is probably infinite")
                index[key] = len(reps)
                reps.append(w)
                queue.append(len(reps) - 1)

    n = len(reps)
    zero = n if with_zero else None
    size = n + (1 if with_zero else 0)
    table = np.zeros((size, size), dtype=np.int32)
    for i, u in enumerate(reps):
        for j, v in enumerate(reps):
            w = u + v
            if is_factor(w):
                table[i, j] = index[canonical(cong, w)]
            elif zero is None:
                raise ValueError(f"product {w} left the factor set but no zero was requested")
            else:
                table[i, j] = zero
    if with_zero:
        table[zero, :] = zero
        table[:, zero] = zero
    labels = ["1"] + [format_word(w) for w in reps[1:]] + (["0"] if with_zero else [])
    generators = {}
    for x in alphabet:
        key = canonical(cong, Word((x,)))
        generators[x] = index[key] if (is_factor(Word((x,))) and key in index) else zero
    generators = {x: g for x, g in generators.items() if g is not None}
    return FiniteMonoid(tuple(labels), table, 0, zero, generators, name=name)


def m_tau(spec: WSpec, cap: int = DEFAULT_CAP, open_alphabet: bool = True) -> FiniteMonoid:
    """Rees quotient of ``A*/tau`` over the ideal of classes with no factor of ``W``."""
    test = factor_test(spec)
    if isinstance(spec, SingleClass):
        name = f"M_{spec.cong}([{spec.rep}])"
        if open_alphabet:
            with_zero = True
        else:
            fl = factor_language(class_dfa(spec.cong, spec.rep))
            with_zero = len(fl.accepting) < fl.n_states
    elif isinstance(spec, FullStar):
        name = f"M_{spec.cong}({{{''.join(spec.alphabet)}}}*)"
        with_zero = open_alphabet
    else:
        name = f"M_{spec.cong}({spec.predicate} over {''.join(spec.alphabet)})"
        with_zero = open_alphabet
    return _quotient(spec.cong, spec.alphabet, test, with_zero, cap, name)


def relatively_free(cong: CongruenceId, alphabet, cap: int = DEFAULT_CAP) -> FiniteMonoid:
    """All ``cong``-classes over a finite alphabet; no zero is adjoined."""
    return _quotient(cong, alphabet, lambda v: True, False, cap,
                     f"F_{cong}({''.join(sorted(alphabet))})")


@dataclass
class OntoReport:
    source: FiniteMonoid
    target: FiniteMonoid
    hom: Optional[Hom]

    @property
    def sizes(self) -> tuple[int, int]:
        return self.source.size, self.target.size

    @property
    def found(self) -> bool:
        return self.hom is not None

    @property
    def is_isomorphism(self) -> bool:
        return self.hom is not None and self.hom.is_bijective()

    def summary(self) -> str:
        s, t = self.sizes
        if self.hom is None:
            return f"|M_tau| = {s}, |M_synt| = {t}: no surjective homomorphism found"
        kind = "isomorphism" if self.is_isomorphism else "surjection"
        return f"|M_tau| = {s} -> |M_synt| = {t}: {kind} found"


def onto_synt_check(cong: CongruenceId, rep, cap: int = DEFAULT_CAP) -> OntoReport:
    """Look for a surjection ``M_tau([rep]) -> M_synt([rep])``."""
    rep = as_word(rep)
    source = m_tau(SingleClass(cong, rep), cap)
    target = syntactic_of_class(cong, rep)
    return OntoReport(source, target, morphism_search(source, target, "onto"))

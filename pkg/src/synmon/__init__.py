"""Word congruences, syntactic monoids, Rees quotients and an identity engine."""

__version__ = "0.1.0"

from .words import Word, parse_word, format_word, block_decompose, ini2, words_over
from .automata import Dfa, compile_regex, dfa_equivalent, minimize
from .congruences import Cong, Meet, meet, canonical, equivalent, class_dfa, enumerate_class, parse_congruence
from .monoid import FiniteMonoid, ProductMonoid, fixture, direct_product, opposite, validate, morphism_search
from .synt import syntactic_monoid, syntactic_of_class, syntactic_of_regex, syntactic_of_word
from .mtau import SingleClass, FullStar, PredicateUnion, m_tau, relatively_free, onto_synt_check
from .identities import (Identity, Verdict, parse_identity, satisfies, sigma_pair, long_pair,
                         tau_term_check, stability_check, equational_separation, nfb_premises)

__all__ = [
    "Word", "parse_word", "format_word", "block_decompose", "ini2", "words_over",
    "Dfa", "compile_regex", "dfa_equivalent", "minimize",
    "Cong", "Meet", "meet", "canonical", "equivalent", "class_dfa", "enumerate_class", "parse_congruence",
    "FiniteMonoid", "ProductMonoid", "fixture", "direct_product", "opposite", "validate", "morphism_search",
    "syntactic_monoid", "syntactic_of_class", "syntactic_of_regex", "syntactic_of_word",
    "SingleClass", "FullStar", "PredicateUnion", "m_tau", "relatively_free", "onto_synt_check",
    "Identity", "Verdict", "parse_identity", "satisfies", "sigma_pair", "long_pair",
    "tau_term_check", "stability_check", "equational_separation", "nfb_premises",
]

import pytest

from oracles import factor_classes
from synmon.automata import contains_factor_dfa, intersect_nonempty
from synmon.congruences import Cong, canonical, class_dfa, enumerate_class, meet
from synmon.identities import equational_separation
from synmon.monoid import fixture, is_isomorphic, validate
from synmon.mtau import (CapExceeded, FullStar, PredicateUnion, SingleClass, m_tau, onto_synt_check,
                         relatively_free)
from synmon.synt import syntactic_of_class
from synmon.words import parse_word, words_over

T1G = meet(Cong.T1, Cong.GAMMA)


@pytest.mark.parametrize("cong,rep,size", [(Cong.T1, "ab", 5), (T1G, "ata", 10), (Cong.BETA, "atb^2a", None),
                                           (T1G, "ab^2ta", None), (Cong.ALPHA, "ab", None)])
def test_single_class_matches_brute_force(cong, rep, size):
    rep = parse_word(rep)
    m = m_tau(SingleClass(cong, rep))
    members = enumerate_class(cong, rep, len(rep) + 4)
    expected = factor_classes(lambda w: canonical(cong, w), members, sorted(set(rep)), len(rep) + 4) + 1
    assert m.size == expected
    if size is not None:
        assert m.size == size


def test_t1_ab_labels_and_a0():
    m = m_tau(SingleClass(Cong.T1, parse_word("ab")))
    assert m.labels == ("1", "a", "b", "ab", "0")
    assert is_isomorphic(m, fixture("A01"))


@pytest.mark.parametrize("spec", [SingleClass(T1G, parse_word("ata")), SingleClass(Cong.BETA, parse_word("atab^2")),
                                  FullStar(Cong.ALPHA, ("a", "b")), SingleClass(Cong.ZETA, parse_word("atba"))])
def test_quotient_is_a_monoid_with_absorbing_zero(spec):
    m = m_tau(spec)
    assert validate(m).ok
    z = m.zero
    assert z is not None
    assert all(m.mul(z, x) == z == m.mul(x, z) for x in range(m.size))


def test_nonzero_elements_are_factors():
    rep = parse_word("atb^2a")
    m = m_tau(SingleClass(Cong.BETA, rep))
    d = class_dfa(Cong.BETA, rep)
    for label in m.labels:
        if label == "0":
            continue
        v = parse_word(label)
        assert intersect_nonempty(contains_factor_dfa(d.alphabet, v), d) is not None


def test_full_star_alpha():
    m = m_tau(FullStar(Cong.ALPHA, ("a", "b")))
    assert m.labels == ("1", "a", "b", "ab", "ba", "0")


def test_closed_alphabet_full_star_has_no_zero():
    assert m_tau(FullStar(Cong.ALPHA, ("a", "b")), open_alphabet=False).zero is None


def test_relatively_free():
    assert relatively_free(Cong.ALPHA, "ab").size == 5
    assert relatively_free(Cong.GAMMA, "a").size == 3
    with pytest.raises(CapExceeded):
        relatively_free(Cong.T1, "ab", cap=200)


def test_predicate_union_counts_beta_classes():
    m = m_tau(PredicateUnion(Cong.BETA, ("a", "b", "t")))
    assert validate(m).ok
    counts = [len({canonical(Cong.BETA, w) for w in words_over("abt", n)}) for n in (7, 8)]
    assert counts[0] == counts[1] == m.size - 1


def test_unsupported_predicate():
    with pytest.raises(ValueError):
        m_tau(PredicateUnion(Cong.BETA, ("a",), "prime"))


class TestOnto:
    def test_t1_gamma_ata(self):
        r = onto_synt_check(T1G, "ata")
        assert r.found and r.sizes == (10, 7)
        assert r.hom.is_homomorphism() and r.hom.is_surjective()

    def test_t1_ab_is_iso(self):
        r = onto_synt_check(Cong.T1, "ab")
        assert r.is_isomorphism and r.sizes == (5, 5)

    @pytest.mark.parametrize("cong,rep", [(T1G, "ata"), (Cong.T1, "ab"), (Cong.BETA, "atab")])
    def test_identities_pass_to_the_image(self, cong, rep):
        source = m_tau(SingleClass(cong, parse_word(rep)))
        target = syntactic_of_class(cong, parse_word(rep))
        assert equational_separation(source, target, 3, 6, both_directions=False) is None

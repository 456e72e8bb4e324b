"""Batch reproduction of the headline numbers as a pass/fail matrix.

Each check returns ``(passed, detail)``. :func:`run_all` times every check and
never lets one failure stop the rest.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .automata import compile_regex, dfa_equivalent
from .congruences import Cong, canonical, class_dfa, enumerate_class, equivalent, meet
from .identities import (E1_BASIS, FAILS, HOLDS, BOUNDED, Identity, equational_separation,
                         long_pair, nfb_premises, satisfies, sigma_pair, stability_check)
from .monoid import (FiniteMonoid, direct_product, fixture, is_isomorphic, morphism_search,
                     opposite, validate)
from .mtau import FullStar, m_tau, onto_synt_check, relatively_free
from .synt import syntactic_of_class, syntactic_of_regex, syntactic_of_word
from .words import parse_word, words_over

T1G = meet(Cong.T1, Cong.GAMMA)
T1Z = meet(Cong.T1, Cong.ZETA)

FIXTURE_SIZES = {"A1": 7, "E1": 6, "A01": 5, "B01": 5, "Q1": 6, "L21": 3}


def table_rows() -> dict[str, object]:
    """Generator monoids of the known limit varieties, keyed by row."""
    return {
        "1": direct_product(syntactic_of_word("abtbsa"), syntactic_of_word("atbsba")),
        "2": syntactic_of_word("atbasb"),
        "3": syntactic_of_class(T1Z, "atbasb"),
        "4": syntactic_of_class(T1Z, "atb^2a"),
        "4'": syntactic_of_class(T1Z, "atbsba"),
        "5": direct_product(syntactic_of_class(T1G, "atb^2a"), syntactic_of_class(T1G, "ab^2ta")),
        "6": direct_product(syntactic_of_class(T1G, "atb^2a"), syntactic_of_class(Cong.BETA_DUAL, "ab^2ta")),
        "7": direct_product(syntactic_of_class(Cong.BETA, "atb^2a"),
                            syntactic_of_class(Cong.BETA_DUAL, "ab^2ta"),
                            syntactic_of_class(Cong.T1, "ab")),
        "8": syntactic_of_class(Cong.ZETA, "atbsba"),
        "9": syntactic_of_class(Cong.ZETA, "atb^2a"),
    }


def g2() -> FiniteMonoid:
    return syntactic_of_class(Cong.BETA, "atab^2")


def nfb_monoid():
    return direct_product(syntactic_of_regex("a+ b b+ t a+"), g2())


class Context:
    """Bounds and fixture lookup shared by the checks (lets tests inject faults)."""

    def __init__(self, quick: bool = False, overrides: Optional[dict[str, FiniteMonoid]] = None):
        self.quick = quick
        self.overrides = overrides or {}

    def fixture(self, name: str) -> FiniteMonoid:
        return self.overrides.get(name) or fixture(name)

    @property
    def len_max(self) -> int:
        return 5 if self.quick else 7

    @property
    def sep_len(self) -> int:
        return 6 if self.quick else 8


# --- the criteria -----------------------------------------------------------------

def c1_fixture_sizes(ctx: Context):
    got = {k: ctx.fixture(k).size for k in FIXTURE_SIZES}
    ok = got == FIXTURE_SIZES and all(validate(ctx.fixture(k)).ok for k in FIXTURE_SIZES)
    return ok, " ".join(f"{k}={v}" for k, v in got.items())


def c2_alpha_example(ctx: Context):
    synt = syntactic_of_regex("a+ b {a,b}*")
    star = m_tau(FullStar(Cong.ALPHA, ("a", "b")))
    free = relatively_free(Cong.ALPHA, "ab")
    hom = morphism_search(star, synt, "onto")
    ok = synt.size == 5 and star.size == 6 and hom is not None
    return ok, (f"|Msynt(a+b{{a,b}}*)|={synt.size} |M_alpha({{a,b}}*)|={star.size} "
                f"(zero-free quotient {free.size}) onto={'yes' if hom else 'no'}")


def c3_parity(ctx: Context):
    m = syntactic_of_regex("{a,b} ({a,b} {a,b})*", open_alphabet=False)
    others = [x for x in range(m.size) if x != m.identity]
    ok = m.size == 2 and all(m.mul(x, x) == m.identity for x in others)
    return ok, f"|M|={m.size}, x*x=1 for x != 1: {ok}"


def c4_e1_identities(ctx: Context):
    e1 = ctx.fixture("E1")
    basis = [satisfies(e1, i).status for i in E1_BASIS]
    sig = [satisfies(e1, sigma_pair(n)).status for n in range(3)]
    lng = [satisfies(e1, long_pair(n)).status for n in range(1, 4)]
    ok = basis == [HOLDS] * 3 and sig == [FAILS] * 3 and lng == [HOLDS] * 3
    return ok, f"basis {basis}; sigma_0..2 {sig}; long_1..3 {lng}"


def c5_beta_pairs(ctx: Context):
    longs = [equivalent(Cong.BETA, p.left, p.right) for p in map(long_pair, range(1, 6))]
    sigmas = [equivalent(Cong.BETA, p.left, p.right) for p in map(sigma_pair, range(6))]
    ok = all(longs) and not any(sigmas)
    return ok, f"U_n beta V_n: {longs}; u_n beta v_n: {sigmas}"


def c6_class_dfas(ctx: Context):
    cases = [
        (Cong.BETA, "atb^2a", "a+ t b b+ a {a,b}* | a+ t b+ a+ b {a,b}*"),
        (T1G, "ab^2ta", "a+ b b+ t a+"),
        (T1G, "ata", "a+ t a+"),
    ]
    results = [dfa_equivalent(class_dfa(c, parse_word(w)), compile_regex(r)) for c, w, r in cases]
    return all(results), f"{results}"


def c7_g2(ctx: Context):
    m = g2()
    s2 = satisfies(m, sigma_pair(2)).status
    s1 = satisfies(m, sigma_pair(1)).status
    st = stability_check(m, Cong.BETA, parse_word("atb^2a"), ctx.len_max)
    ok = s2 == HOLDS and s1 == FAILS and st.status == BOUNDED
    return ok, f"|G2|={m.size} sigma_2 {s2}; sigma_1 {s1}; stable {st.status}"


def c8_onto(ctx: Context):
    r1 = onto_synt_check(T1G, "ata")
    r2 = onto_synt_check(Cong.T1, "ab")
    star = m_tau(FullStar(Cong.ALPHA, ("a", "b")))
    synt = syntactic_of_regex("a+ b {a,b}*")
    hom3 = morphism_search(star, synt, "onto")
    ok1 = r1.found and r1.sizes == (10, 5)
    ok2 = r2.is_isomorphism and r2.sizes == (5, 5) and is_isomorphic(r2.target, ctx.fixture("A01"))
    ok3 = hom3 is not None and (star.size, synt.size) == (6, 5)
    detail = (f"t1^gamma ata {r1.sizes[0]}->{r1.sizes[1]} (expected 10->5); "
              f"t1 ab {r2.sizes[0]}->{r2.sizes[1]} iso={r2.is_isomorphism}; "
              f"alpha star {star.size}->{synt.size} onto={hom3 is not None}")
    return ok1 and ok2 and ok3, detail


def c9_nfb(ctx: Context):
    m = nfb_monoid()
    direct = nfb_premises(m, 3, ctx.len_max)
    dual = nfb_premises(opposite(m), 3, ctx.len_max, dual=True)
    ok = direct.all_pass and dual.all_pass
    return ok, f"|M|={m.size} premises {direct.all_pass}, dual premises {dual.all_pass}"


def c10_table_rows(ctx: Context):
    rows = table_rows()
    valid = {k: validate(m).ok for k, m in rows.items()}
    found = []
    for a, b in (("2", "4"), ("4", "6"), ("2", "6")):
        sep = equational_separation(rows[a], rows[b], 4, ctx.sep_len)
        found.append((a, b, sep))
    ok = all(valid.values()) and all(s is not None for _, _, s in found)
    seps = "; ".join(f"{a}|{b}: {s.identity if s else 'none'}" for a, b, s in found)
    sizes = " ".join(f"{k}:{m.size}" for k, m in rows.items())
    return ok, f"sizes {sizes}; {seps}"


def _congruence_laws(max_len: int) -> bool:
    congs = list(Cong) + [T1G, T1Z]
    words = list(words_over("ab", max_len))
    for c in congs:
        keys = {w: canonical(c, w) for w in words}
        for u, v in itertools.combinations(words[:40], 2):
            if keys[u] == keys[v]:
                for x in ("a", "b", "c"):
                    if canonical(c, u + (x,)) != canonical(c, v + (x,)):
                        return False
                    if canonical(c, (x,) + u) != canonical(c, (x,) + v):
                        return False
    return True


def _dfa_agreement(reps) -> bool:
    for c, rep in reps:
        rep = parse_word(rep)
        d = class_dfa(c, rep)
        bound = 2 * len(rep) + 2
        members = enumerate_class(c, rep, bound)
        for w in words_over(sorted(set(rep)), bound):
            if d.accepts(w) != (w in members):
                return False
    return True


def _two_classes(max_len: int) -> bool:
    w, w2 = parse_word("atab^2"), parse_word("atbab^2")
    simq = enumerate_class(Cong.SIMQ, w, max_len)
    return simq == enumerate_class(Cong.BETA, w, max_len) | enumerate_class(Cong.BETA, w2, max_len)


def _hom_preservation() -> bool:
    pairs = [(m_tau(FullStar(Cong.ALPHA, ("a", "b"))), syntactic_of_regex("a+ b {a,b}*")),
             (fixture("A1"), fixture("A01"))]
    sample = [*E1_BASIS, sigma_pair(0), long_pair(2), Identity(parse_word("x^2"), parse_word("x^3")),
              Identity(parse_word("xy"), parse_word("yx"))]
    for m, n in pairs:
        if morphism_search(m, n, "onto") is None:
            continue
        for i in sample:
            if satisfies(m, i).status == HOLDS and satisfies(n, i).status != HOLDS:
                return False
    return True


def _beta_soundness(max_len: int) -> bool:
    e1 = fixture("E1")
    from .identities import Fingerprinter
    for k in range(1, 4):
        letters = "xyz"[:k]
        table = Fingerprinter(e1, letters).all_words(max_len)
        groups: dict = {}
        for w, d in table.items():
            groups.setdefault(canonical(Cong.BETA, w), set()).add(d)
        if any(len(ds) > 1 for ds in groups.values()):
            return False
    return True


DFA_REPS = [(T1G, "ata"), (Cong.ALPHA, "ab"), (Cong.GAMMA, "ab^2"), (Cong.BETA, "atb^2a"),
            (T1Z, "atb^2a"), (Cong.SIMQ, "atab"), (Cong.BETA_DUAL, "ab^2ta"), (Cong.ZETA, "atba")]


def c11_properties(ctx: Context):
    quick = ctx.quick
    checks = {
        "congruence laws": _congruence_laws(4 if quick else 5),
        "dfa agreement": _dfa_agreement(DFA_REPS[:3] if quick else DFA_REPS),
        "dual law": all(satisfies(opposite(fixture(n)), i).status
                        == satisfies(fixture(n), i.reversed()).status
                        for n in ("A1", "E1", "Q1") for i in (*E1_BASIS, sigma_pair(1))),
        "product law": all((satisfies(direct_product(fixture("A1"), fixture(n)), i).status == HOLDS)
                           == (satisfies(fixture("A1"), i).ok and satisfies(fixture(n), i).ok)
                           for n in ("E1", "L21") for i in (*E1_BASIS, long_pair(2))),
        "hom preservation": _hom_preservation(),
        "two classes": _two_classes(6 if quick else 8),
        "beta soundness": _beta_soundness(5 if quick else 6),
    }
    failed = [k for k, v in checks.items() if not v]
    return not failed, "all green" if not failed else f"failed: {failed}"


CRITERIA: list[tuple[int, str, Callable[[Context], tuple[bool, str]]]] = [
    (1, "fixture sizes", c1_fixture_sizes),
    (2, "alpha example", c2_alpha_example),
    (3, "parity monoid", c3_parity),
    (4, "E1 identities", c4_e1_identities),
    (5, "beta on identity pairs", c5_beta_pairs),
    (6, "class automata", c6_class_dfas),
    (7, "G2 checks", c7_g2),
    (8, "onto checks", c8_onto),
    (9, "NFB premises", c9_nfb),
    (10, "limit-variety generators", c10_table_rows),
    (11, "property checks", c11_properties),
]


@dataclass
class Row:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:>2} {self.title:<26} {self.seconds:7.2f}s  {self.detail}"


def run_all(quick: bool = False, overrides: Optional[dict[str, FiniteMonoid]] = None,
            only: Optional[set[int]] = None) -> list[Row]:
    ctx = Context(quick, overrides)
    rows = []
    for number, title, check in CRITERIA:
        if only and number not in only:
            continue
        t = time.perf_counter()
        try:
            passed, detail = check(ctx)
        except Exception as exc:  # a crashing check is a failing row
            passed, detail = False, f"error: {type(exc).__name__}: {exc}"
        rows.append(Row(number, title, passed, detail, time.perf_counter() - t))
    return rows


def corrupted(m: FiniteMonoid) -> FiniteMonoid:
    """Copy of ``m`` with one product changed (for fault injection)."""
    table = np.array(m.table)
    x = m.size - 1
    table[x, x] = (table[x, x] + 1) % m.size
    return FiniteMonoid(m.labels, table, m.identity, m.zero, m.generators, name=m.name)

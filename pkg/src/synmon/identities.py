"""Identities on finite monoids.

Satisfaction is decided by brute force over all assignments of monoid elements
to letters. Evaluations are vectorised with numpy: a word is turned into the
array of its values under every assignment (its *fingerprint*), so ``u ~ v``
holds iff the two fingerprints are equal. Direct products are always handled
factor by factor.

Bounded checks (tau-terms, stability, separation) never claim more than they
verify: their positive verdict is ``holds-up-to-bound``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

from .congruences import Cong, CongruenceId, canonical, enumerate_class, equivalent, meet
from .monoid import AnyMonoid, FiniteMonoid
from .words import Word, as_word, parse_word, reverse, words_over

MAX_LETTERS = 10
CHUNK = 1 << 20

HOLDS = "holds"
FAILS = "fails"
BOUNDED = "holds-up-to-bound"


@dataclass(frozen=True)
class Identity:
    left: Word
    right: Word

    def __post_init__(self):
        object.__setattr__(self, "left", as_word(self.left))
        object.__setattr__(self, "right", as_word(self.right))
        if bool(self.left) != bool(self.right):
            raise ValueError("an identity needs both sides empty or both non-empty")

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.left) | set(self.right)))

    def reversed(self) -> "Identity":
        return Identity(reverse(self.left), reverse(self.right))

    def __str__(self):
        return f"{self.left} ~ {self.right}"


def parse_identity(text: str) -> Identity:
    for sep in ("~", "≈", "="):
        if sep in text:
            left, right = text.split(sep, 1)
            return Identity(parse_word(left), parse_word(right))
    raise ValueError(f"identity {text!r} needs a '~' separator")


@dataclass
class Verdict:
    status: str
    witness: Optional[dict] = None
    bound: Optional[int] = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAILS

    def to_dict(self) -> dict:
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.bound is not None:
            out["bound"] = self.bound
        if self.note:
            out["note"] = self.note
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self):
        text = self.status
        if self.bound is not None:
            text += f" (bound {self.bound})"
        if self.witness:
            text += " " + json.dumps(self.witness, sort_keys=True)
        return text


# --- identity families ------------------------------------------------------------

def sigma_pair(n: int) -> Identity:
    """``u_n ~ v_n``: seeds ``a^2b^2``/``b^2a^2``, prefixed alternately by ``a t_k`` and ``b t_k``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    u = parse_word("a^2 b^2")
    v = parse_word("b^2 a^2")
    for k in range(n):
        head = Word(("a" if k % 2 == 0 else "b", f"t{k + 1}"))
        u, v = head + u, head + v
    return Identity(u, v)


def long_pair(n: int) -> Identity:
    """``x y1^2 ... yn^2 x ~ x y1^2 x y2^2 ... x yn^2 x``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ys = [f"y{i}" for i in range(1, n + 1)]
    left = ["x"]
    right = ["x"]
    for i, y in enumerate(ys):
        left += [y, y]
        if i:
            right.append("x")
        right += [y, y]
    left.append("x")
    right.append("x")
    return Identity(Word(left), Word(right))


E1_BASIS = (
    Identity(parse_word("xtx"), parse_word("xtx^2")),
    Identity(parse_word("xtx"), parse_word("x^2tx")),
    Identity(parse_word("xy^2x"), parse_word("x^2y^2")),
)


# --- evaluation -------------------------------------------------------------------

def _dtype(size: int):
    return np.uint8 if size <= 255 else (np.uint16 if size <= 65535 else np.int32)


class Evaluator:
    """Vectorised evaluation of words over a fixed letter list on one monoid."""

    def __init__(self, m: FiniteMonoid, letters: Iterable[str]):
        self.m = m
        self.letters = tuple(letters)
        if len(self.letters) > MAX_LETTERS:
            raise ValueError(f"identity uses {len(self.letters)} letters; the budget is {MAX_LETTERS}")
        self.size = m.size
        self.count = self.size ** len(self.letters)
        dt = _dtype(self.size)
        self.dtype = dt
        self.flat = (m.table.astype(np.int64)).ravel()
        self.pos = {x: i for i, x in enumerate(self.letters)}

    def chunks(self) -> Iterator[tuple[int, dict[str, np.ndarray]]]:
        k = len(self.letters)
        for start in range(0, max(self.count, 1), CHUNK):
            idx = np.arange(start, min(start + CHUNK, self.count), dtype=np.int64)
            cols = {}
            rem = idx
            for i in range(k - 1, -1, -1):
                cols[self.letters[i]] = rem % self.size
                rem = rem // self.size
            yield start, cols

    def evaluate(self, w: Word, cols: dict[str, np.ndarray], n: int) -> np.ndarray:
        if self.m.identity is None:
            # semigroup: no value for the empty word
            if not w:
                raise ValueError("the empty word has no value in a semigroup")
            value = np.broadcast_to(cols[w[0]], (n,)).astype(np.int64)
            rest = w[1:]
        else:
            value = np.full(n, self.m.identity, dtype=np.int64)
            rest = w
        for x in rest:
            value = self.flat[value * self.size + cols[x]]
        return value

    def assignment(self, index: int) -> dict[str, str]:
        out = {}
        for x in reversed(self.letters):
            out[x] = self.m.labels[index % self.size]
            index //= self.size
        return dict(reversed(list(out.items())))


def _components(m: AnyMonoid) -> tuple[FiniteMonoid, ...]:
    return m.factors


def _product_label(parts, k: int, label: str) -> str:
    labels = [p.labels[p.identity] for p in parts]
    labels[k] = label
    return "(" + ",".join(labels) + ")"


def satisfies(m: AnyMonoid, identity: Identity | str) -> Verdict:
    """Exhaustive check of ``m |= u ~ v`` (componentwise on products)."""
    if isinstance(identity, str):
        identity = parse_identity(identity)
    letters = identity.letters
    parts = _components(m)
    for k, part in enumerate(parts):
        ev = Evaluator(part, letters)
        for start, cols in ev.chunks():
            n = len(next(iter(cols.values()))) if cols else 1
            a = ev.evaluate(identity.left, cols, n)
            b = ev.evaluate(identity.right, cols, n)
            diff = np.nonzero(a != b)[0]
            if len(diff):
                i = int(diff[0])
                local = ev.assignment(start + i)
                witness = {"assignment": local,
                           "left": part.labels[int(a[i])], "right": part.labels[int(b[i])]}
                if len(parts) > 1:
                    # lift to the product: identity in every other component
                    witness["assignment"] = {x: _product_label(parts, k, v) for x, v in local.items()}
                    witness["component"] = k
                    witness["component_assignment"] = local
                return Verdict(FAILS, witness)
    return Verdict(HOLDS)


class Fingerprinter:
    """Digest of a word's value table, per component, over a fixed letter list."""

    def __init__(self, m: AnyMonoid, letters: Iterable[str]):
        self.letters = tuple(letters)
        self.evaluators = [Evaluator(p, self.letters) for p in _components(m)]
        if any(ev.m.identity is None for ev in self.evaluators):
            raise ValueError("fingerprints need a monoid (the empty word must have a value)")
        for ev in self.evaluators:
            if ev.count > CHUNK * 4:
                raise ValueError(f"{ev.count} assignments per word exceeds the fingerprint budget")
        self._cols = [next(ev.chunks())[1] for ev in self.evaluators]
        self._identity = [np.full(ev.count, ev.m.identity, dtype=np.int64) for ev in self.evaluators]

    def _digest(self, vectors) -> bytes:
        h = hashlib.blake2b(digest_size=16)
        for ev, vec in zip(self.evaluators, vectors):
            h.update(vec.astype(ev.dtype).tobytes())
        return h.digest()

    def all_words(self, max_len: int, alphabet: Iterable[str] | None = None) -> dict[Word, bytes]:
        """Fingerprints of every word over ``alphabet`` up to ``max_len`` (depth-first)."""
        alphabet = tuple(self.letters if alphabet is None else alphabet)
        out: dict[Word, bytes] = {}

        def visit(word: tuple, vectors):
            out[Word(word)] = self._digest(vectors)
            if len(word) == max_len:
                return
            for x in alphabet:
                nxt = [ev.flat[vec * ev.size + cols[x]] for ev, vec, cols in zip(self.evaluators, vectors, self._cols)]
                visit(word + (x,), nxt)

        visit((), self._identity)
        return out

    def layer(self, words: Iterable[Word]) -> dict[Word, bytes]:
        out = {}
        for w in words:
            vectors = [ev.evaluate(w, cols, ev.count) for ev, cols in zip(self.evaluators, self._cols)]
            out[w] = self._digest(vectors)
        return out


# --- bounded checks ------------------------------------------------------------------

def _shortlex(w: Word):
    return (len(w), tuple(w))


def tau_term_check(m: AnyMonoid, w, c: CongruenceId, max_len: int) -> Verdict:
    """Is ``w`` a ``c``-term for ``m``, among words over ``content(w)`` up to ``max_len``?"""
    w = as_word(w)
    letters = tuple(sorted(set(w)))
    fp = Fingerprinter(m, letters)
    table = fp.all_words(max_len)
    target = fp.layer([w])[w]
    note = f"candidates restricted to words over {{{','.join(letters)}}}"
    for v in sorted(table, key=_shortlex):
        if v and table[v] == target and not equivalent(c, w, v):
            verdict = satisfies(m, Identity(w, v))
            if verdict.status == HOLDS:
                return Verdict(FAILS, {"u": str(w), "v": str(v)}, max_len, note)
    return Verdict(BOUNDED, None, max_len, note)


def stability_check(m: AnyMonoid, c: CongruenceId, rep, max_len: int) -> Verdict:
    """Is ``[rep]_c`` stable for ``m``, checked on words up to ``max_len``?"""
    rep = as_word(rep)
    letters = tuple(sorted(set(rep)))
    members = enumerate_class(c, rep, max_len)
    fp = Fingerprinter(m, letters)
    table = fp.all_words(max_len)
    target = canonical(c, rep)
    member_digests = {table[u] for u in members}
    note = f"class [{rep}]_{c}; {len(members)} members up to length {max_len}"
    for v in sorted(table, key=_shortlex):
        digest = table[v]
        if v and digest in member_digests and canonical(c, v) != target:
            u = min((u for u in members if table[u] == digest), key=_shortlex)
            if satisfies(m, Identity(u, v)).status == HOLDS:
                return Verdict(FAILS, {"u": str(u), "v": str(v)}, max_len, note)
    return Verdict(BOUNDED, None, max_len, note)


SEPARATION_LETTERS = ("x", "y", "z", "t", "s", "r", "p", "q", "w", "v")


@dataclass
class Separation:
    identity: Identity
    satisfied_by: str  # "first" or "second"

    def __str__(self):
        return f"{self.identity} (holds in the {self.satisfied_by} monoid only)"


def equational_separation(m: AnyMonoid, n: AnyMonoid, max_letters: int, max_len: int,
                          both_directions: bool = True) -> Optional[Separation]:
    """Shortest identity (by letters, then length, then shortlex) separating ``m`` from ``n``.

    The identity holds in one monoid and fails in the other. With
    ``both_directions=False`` only identities of ``m`` failing in ``n`` count.
    """
    if max_letters > len(SEPARATION_LETTERS):
        raise ValueError(f"at most {len(SEPARATION_LETTERS)} letters supported")
    for k in range(1, max_letters + 1):
        letters = SEPARATION_LETTERS[:k]
        fm, fn = Fingerprinter(m, letters), Fingerprinter(n, letters)
        seen_m: dict[bytes, list[tuple[Word, bytes]]] = {}
        seen_n: dict[bytes, list[tuple[Word, bytes]]] = {}
        for length in range(max_len + 1):
            words = list(words_over(letters, length, min_len=length))
            dm, dn = fm.layer(words), fn.layer(words)
            for v in words:
                # only identities that genuinely use all k letters are new at this k
                for (own, other, seen, label) in ((dm[v], dn[v], seen_m, "first"),
                                                  (dn[v], dm[v], seen_n, "second")):
                    if label == "second" and not both_directions:
                        continue
                    for u, u_other in seen.get(own, ()):
                        if u_other != other and len(set(u) | set(v)) == k:
                            ident = Identity(u, v)
                            a = m if label == "first" else n
                            b = n if label == "first" else m
                            if satisfies(a, ident).status == HOLDS and satisfies(b, ident).status == FAILS:
                                return Separation(ident, label)
                seen_m.setdefault(dm[v], []).append((v, dn[v]))
                seen_n.setdefault(dn[v], []).append((v, dm[v]))
    return None


# --- NFB premises --------------------------------------------------------------------

@dataclass
class PremiseReport:
    long_identities: dict[int, Verdict] = field(default_factory=dict)
    tau1_gamma_stable: Optional[Verdict] = None
    beta_stable: Optional[Verdict] = None
    dual: bool = False

    @property
    def all_pass(self) -> bool:
        checks = list(self.long_identities.values()) + [self.tau1_gamma_stable, self.beta_stable]
        return all(v is not None and v.ok for v in checks)

    def conclusion(self) -> str:
        if self.all_pass:
            return "premises verified at bound (not a proof of non-finite basability)"
        return "premises not verified"

    def lines(self) -> list[str]:
        tag = " (dual)" if self.dual else ""
        out = [f"(a){tag} long identity n={n}: {v}" for n, v in self.long_identities.items()]
        out.append(f"(b){tag} tau1^gamma class stable: {self.tau1_gamma_stable}")
        out.append(f"(c){tag} beta class stable: {self.beta_stable}")
        out.append(self.conclusion())
        return out

    def to_dict(self) -> dict:
        return {
            "dual": self.dual,
            "long_identities": {str(n): v.to_dict() for n, v in self.long_identities.items()},
            "tau1_gamma_stable": self.tau1_gamma_stable.to_dict(),
            "beta_stable": self.beta_stable.to_dict(),
            "conclusion": self.conclusion(),
        }


def nfb_premises(m: AnyMonoid, n_max: int, len_max: int, dual: bool = False) -> PremiseReport:
    """Check the three premises: long identities, and stability of two classes.

    ``dual=True`` checks the mirrored premises (reversed identities, the
    reversed ``t1^gamma`` class, and the ``beta-dual`` class of ``ab^2ta``).
    """
    report = PremiseReport(dual=dual)
    for k in range(1, n_max + 1):
        ident = long_pair(k)
        report.long_identities[k] = satisfies(m, ident.reversed() if dual else ident)
    t1g = meet(Cong.T1, Cong.GAMMA)
    if dual:
        report.tau1_gamma_stable = stability_check(m, t1g, parse_word("atb^2a"), len_max)
        report.beta_stable = stability_check(m, Cong.BETA_DUAL, parse_word("ab^2ta"), len_max)
    else:
        report.tau1_gamma_stable = stability_check(m, t1g, parse_word("ab^2ta"), len_max)
        report.beta_stable = stability_check(m, Cong.BETA, parse_word("atb^2a"), len_max)
    return report

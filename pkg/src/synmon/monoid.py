"""Finite monoids (and semigroups) given by multiplication tables.

A :class:`FiniteMonoid` stores element labels, an integer Cayley table and the
indices of the identity and (optionally) the zero. Direct products are kept as
:class:`ProductMonoid` objects so that equational checks can run per factor;
their full table is only built on request.
"""

from __future__ import annotations

import functools
import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .words import Word, as_word, format_word, parse_word

ZERO = "0"


class MonoidError(ValueError):
    pass


class PresentationError(MonoidError):
    pass


def _frozen(table) -> np.ndarray:
    arr = np.array(table, dtype=np.int32)
    arr.setflags(write=False)
    return arr


def find_identity(table: np.ndarray) -> Optional[int]:
    n = len(table)
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            return e
    return None


def find_zero(table: np.ndarray) -> Optional[int]:
    n = len(table)
    for z in range(n):
        if np.all(table[z] == z) and np.all(table[:, z] == z):
            return z
    return None


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    labels: tuple[str, ...]
    table: np.ndarray
    identity: Optional[int]
    zero: Optional[int] = None
    generators: Optional[Mapping[str, int]] = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "table", _frozen(self.table))
        object.__setattr__(self, "labels", tuple(self.labels))
        n = len(self.labels)
        if self.table.shape != (n, n):
            raise MonoidError(f"table shape {self.table.shape} does not match {n} labels")
        if len(set(self.labels)) != n:
            raise MonoidError("element labels must be distinct")

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if not isinstance(other, FiniteMonoid):
            return NotImplemented
        return (self.labels == other.labels and self.identity == other.identity
                and self.zero == other.zero and np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.labels, self.identity, self.zero, self.table.tobytes()))

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<FiniteMonoid{tag} |M|={self.size} zero={self.zero is not None}>"

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    @property
    def factors(self) -> tuple["FiniteMonoid", ...]:
        return (self,)

    def materialize(self) -> "FiniteMonoid":
        return self

    def generating_set(self) -> list[int]:
        """Declared generators, extended greedily until they generate everything."""
        gens = list(dict.fromkeys((self.generators or {}).values()))
        closure = self._closure(gens)
        for x in range(self.size):
            if x not in closure:
                gens.append(x)
                closure = self._closure(gens)
        return gens

    def _closure(self, gens: Sequence[int]) -> set[int]:
        start = [self.identity] if self.identity is not None else list(gens)
        seen = set(start)
        stack = list(start)
        while stack:
            x = stack.pop()
            for g in gens:
                y = int(self.table[x, g])
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    # JSON table format ------------------------------------------------------
    def to_json(self) -> str:
        data = {
            "elements": list(self.labels),
            "identity": None if self.identity is None else self.labels[self.identity],
            "zero": None if self.zero is None else self.labels[self.zero],
            "table": [[self.labels[int(v)] for v in row] for row in self.table],
        }
        return json.dumps(data, separators=(", ", ": ")) + "\n"

    @classmethod
    def from_json(cls, text: str, name: str = "") -> "FiniteMonoid":
        data = json.loads(text)
        labels = tuple(data["elements"])
        pos = {x: i for i, x in enumerate(labels)}
        table = [[pos[v] for v in row] for row in data["table"]]
        identity = None if data.get("identity") is None else pos[data["identity"]]
        zero = None if data.get("zero") is None else pos[data["zero"]]
        return cls(labels, table, identity, zero, name=name)


@dataclass(frozen=True, eq=False)
class ProductMonoid:
    """Direct product kept in factored form; elements are index tuples."""

    parts: tuple[FiniteMonoid, ...]
    name: str = ""

    @property
    def factors(self) -> tuple[FiniteMonoid, ...]:
        return self.parts

    @property
    def size(self) -> int:
        return int(np.prod([m.size for m in self.parts]))

    def __len__(self):
        return self.size

    @property
    def identity(self):
        return tuple(m.identity for m in self.parts)

    def __repr__(self):
        sizes = " x ".join(str(m.size) for m in self.parts)
        return f"<ProductMonoid {self.name} {sizes}>"

    @functools.cached_property
    def _materialized(self) -> FiniteMonoid:
        shapes = [m.size for m in self.parts]
        elements = list(itertools.product(*(range(s) for s in shapes)))
        flat = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        table = np.zeros((n, n), dtype=np.int32)
        # componentwise products through broadcasting over flat indices
        coords = np.array(elements, dtype=np.int64).reshape(n, len(shapes))
        strides = np.array([int(np.prod(shapes[i + 1:])) for i in range(len(shapes))], dtype=np.int64)
        for i in range(n):
            acc = np.zeros(n, dtype=np.int64)
            for k, m in enumerate(self.parts):
                acc += m.table[coords[i, k], coords[:, k]].astype(np.int64) * strides[k]
            table[i] = acc
        labels = tuple("(" + ",".join(m.labels[c] for m, c in zip(self.parts, e)) + ")" for e in elements)
        identity = flat[self.identity] if None not in self.identity else None
        zeros = tuple(m.zero for m in self.parts)
        zero = flat[zeros] if None not in zeros else None
        return FiniteMonoid(labels, table, identity, zero, None, name=self.name)

    def materialize(self) -> FiniteMonoid:
        return self._materialized


AnyMonoid = Union[FiniteMonoid, ProductMonoid]


# --- validation -----------------------------------------------------------------

@dataclass
class ValidationReport:
    ok: bool
    size: int
    non_associative: list[tuple[int, int, int]] = field(default_factory=list)
    identity_failures: list[int] = field(default_factory=list)
    zero_failures: list[int] = field(default_factory=list)
    note: str = ""

    def __bool__(self):
        return self.ok


def validate(m: AnyMonoid, max_witnesses: int = 20) -> ValidationReport:
    """Check associativity, the identity law and zero absorption.

    Products are validated factor by factor.
    """
    if isinstance(m, ProductMonoid):
        reports = [validate(f, max_witnesses) for f in m.parts]
        ok = all(r.ok for r in reports)
        note = "componentwise: " + ", ".join("ok" if r.ok else "FAILED" for r in reports)
        return ValidationReport(ok, m.size, note=note)

    t = m.table.astype(np.int64)
    n = m.size
    bad: list[tuple[int, int, int]] = []
    for x in range(n):
        # (x*y)*z vs x*(y*z) for all y, z
        left = t[t[x]]            # rows indexed by x*y
        right = t[x][t]           # x * (y*z)
        ys, zs = np.nonzero(left != right)
        for y, z in zip(ys[:max_witnesses - len(bad)], zs):
            bad.append((x, int(y), int(z)))
        if len(bad) >= max_witnesses:
            break
    id_fail: list[int] = []
    if m.identity is not None:
        e = m.identity
        id_fail = [x for x in range(n) if t[e, x] != x or t[x, e] != x]
    zero_fail: list[int] = []
    if m.zero is not None:
        z = m.zero
        zero_fail = [x for x in range(n) if t[z, x] != z or t[x, z] != z]
    ok = not bad and not id_fail and not zero_fail
    return ValidationReport(ok, n, bad, id_fail, zero_fail)


# --- presentations -----------------------------------------------------------------

def parse_presentation(text: str) -> list[tuple[Word, Word]]:
    """``"a^2=ab=0, ba=a"`` -> list of relations; ``0`` stands for the zero."""
    relations = []
    for chunk in re.split(r"[,;]", text):
        if not chunk.strip():
            continue
        sides = [s.strip() for s in chunk.split("=")]
        if len(sides) < 2:
            raise PresentationError(f"relation {chunk.strip()!r} has no '='")
        words = [Word((ZERO,)) if s == ZERO else parse_word(s) for s in sides]
        for w in words[1:]:
            relations.append((words[0], w))
    return relations


def _shortlex_key(order: Mapping[str, int]):
    return lambda w: (len(w), [order[x] for x in w])


def _reduce(word: tuple, rules: list[tuple[tuple, tuple]]) -> tuple:
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules:
            k = len(lhs)
            for i in range(len(word) - k + 1):
                if word[i:i + k] == lhs:
                    word = word[:i] + rhs + word[i + k:]
                    changed = True
                    break
            if changed:
                break
    return word


def knuth_bendix(gens: Sequence[str], relations: Iterable[tuple[Word, Word]],
                 max_rules: int = 200, max_rounds: int = 50) -> list[tuple[tuple, tuple]]:
    """Complete a shortlex rewriting system; ``0`` is an absorbing letter."""
    order = {ZERO: -1}
    order.update({g: i for i, g in enumerate(gens)})
    key = _shortlex_key(order)
    rels = [(tuple(u), tuple(v)) for u, v in relations]
    if any(ZERO in u + v for u, v in rels):
        rels += [((g, ZERO), (ZERO,)) for g in gens] + [((ZERO, g), (ZERO,)) for g in gens]
        rels.append(((ZERO, ZERO), (ZERO,)))

    def orient(u, v):
        return (u, v) if key(u) > key(v) else (v, u)

    rules: list[tuple[tuple, tuple]] = []
    for u, v in rels:
        if u != v:
            rule = orient(u, v)
            if rule not in rules:
                rules.append(rule)

    for _ in range(max_rounds):
        new = []
        for (l1, r1), (l2, r2) in itertools.product(rules, repeat=2):
            # suffix of l1 overlapping prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    new.append((r1 + l2[k:], l1[:-k] + r2))
            # l2 inside l1
            if len(l2) < len(l1):
                for i in range(len(l1) - len(l2) + 1):
                    if l1[i:i + len(l2)] == l2:
                        new.append((r1, l1[:i] + r2 + l1[i + len(l2):]))
        added = False
        for u, v in new:
            u, v = _reduce(u, rules), _reduce(v, rules)
            if u != v:
                rules.append(orient(u, v))
                added = True
                if len(rules) > max_rules:
                    raise PresentationError("rewriting system did not become confluent within the rule cap")
        # interreduce
        changed = True
        while changed:
            changed = False
            for i, (lhs, rhs) in enumerate(rules):
                others = rules[:i] + rules[i + 1:]
                l2 = _reduce(lhs, others)
                r2 = _reduce(rhs, rules)
                if l2 != lhs:
                    del rules[i]
                    if l2 != r2:
                        rules.append(orient(l2, _reduce(r2, others)))
                    changed = True
                    break
                if r2 != rhs:
                    rules[i] = (lhs, r2)
                    changed = True
                    break
        if not added:
            return sorted(rules, key=lambda r: (key(r[0]), key(r[1])))
    raise PresentationError(f"rewriting system not confluent after {max_rounds} rounds")


def from_presentation(gens: Sequence[str], relations: Iterable[tuple[Word, Word]] | str,
                      cap: int = 4, name: str = "") -> FiniteMonoid:
    """Semigroup ``<gens | relations>`` as a table (no identity is adjoined).

    Normal forms are shortlex-least words; the search over normal forms stops at
    length ``cap`` and raises if longer irreducible words still exist.
    """
    if isinstance(relations, str):
        relations = parse_presentation(relations)
    gens = list(gens)
    relations = list(relations)
    for u, v in relations:
        for x in u + v:
            if x != ZERO and x not in gens:
                raise PresentationError(f"letter {x!r} is not a generator")
    rules = knuth_bendix(gens, relations)
    has_zero = any(ZERO in u + v for u, v in relations)

    normal: list[tuple] = []
    layer = [(g,) for g in gens if _reduce((g,), rules) == (g,)]
    length = 1
    while layer:
        if length > cap:
            raise PresentationError(f"not closed at cap {cap}: irreducible word {format_word(layer[0])}")
        normal.extend(layer)
        layer = [w + (g,) for w in layer for g in gens if _reduce(w + (g,), rules) == w + (g,)]
        length += 1
    if has_zero:
        normal.append((ZERO,))
    pos = {w: i for i, w in enumerate(normal)}
    n = len(normal)
    table = np.zeros((n, n), dtype=np.int32)
    for i, u in enumerate(normal):
        for j, v in enumerate(normal):
            nf = _reduce(u + v, rules)
            if nf not in pos:
                raise PresentationError(f"product {format_word(u + v)} reduces to {nf}, outside the element set")
            table[i, j] = pos[nf]
    labels = tuple(ZERO if w == (ZERO,) else format_word(w) for w in normal)
    generators = {g: pos[_reduce((g,), rules)] for g in gens}
    m = FiniteMonoid(labels, table, find_identity(table), pos.get((ZERO,)), generators, name=name)
    report = validate(m)
    if not report.ok:
        raise PresentationError(f"presentation table is not associative: {report.non_associative[:3]}")
    return m


# --- constructions --------------------------------------------------------------

def adjoin_identity(s: FiniteMonoid, label: str = "1") -> FiniteMonoid:
    """``S^1``: a fresh identity placed first."""
    n = s.size
    table = np.zeros((n + 1, n + 1), dtype=np.int32)
    table[0, :] = np.arange(n + 1)
    table[:, 0] = np.arange(n + 1)
    table[1:, 1:] = s.table + 1
    gens = {g: i + 1 for g, i in (s.generators or {}).items()}
    zero = None if s.zero is None else s.zero + 1
    name = f"{s.name}1" if s.name else ""
    return FiniteMonoid((label,) + s.labels, table, 0, zero, gens or None, name=name)


def direct_product(*monoids: AnyMonoid, name: str = "") -> ProductMonoid:
    parts: list[FiniteMonoid] = []
    for m in monoids:
        parts.extend(m.factors)
    if not name:
        name = " x ".join(p.name or f"M{p.size}" for p in parts)
    return ProductMonoid(tuple(parts), name)


def opposite(m: AnyMonoid) -> AnyMonoid:
    if isinstance(m, ProductMonoid):
        return ProductMonoid(tuple(opposite(p) for p in m.parts), f"op({m.name})")
    name = m.name[3:-1] if m.name.startswith("op(") else (f"op({m.name})" if m.name else "")
    return FiniteMonoid(m.labels, m.table.T.copy(), m.identity, m.zero, m.generators, name=name)


def _resolve(m: FiniteMonoid, value) -> int:
    return m.index(value) if isinstance(value, str) else int(value)


def eval_word(m: AnyMonoid, assignment: Mapping[str, object], w) -> object:
    """Evaluate ``w`` under ``assignment`` (letter -> element index or label)."""
    w = as_word(w)
    if isinstance(m, ProductMonoid):
        comps = []
        for k, part in enumerate(m.parts):
            sub = {x: (v[k] if isinstance(v, tuple) else v) for x, v in assignment.items()}
            comps.append(eval_word(part, sub, w))
        return tuple(comps)
    if m.identity is None and not w:
        raise MonoidError("empty word has no value in a semigroup without identity")
    value = m.identity
    for x in w:
        if x not in assignment:
            raise KeyError(f"letter {x!r} is not assigned")
        y = _resolve(m, assignment[x])
        value = y if value is None else int(m.table[value, y])
    return value


# --- homomorphisms --------------------------------------------------------------

@dataclass(frozen=True)
class Hom:
    source: FiniteMonoid
    target: FiniteMonoid
    mapping: tuple[int, ...]

    def is_homomorphism(self) -> bool:
        s, t, f = self.source, self.target, np.array(self.mapping)
        if s.identity is not None and t.identity is not None and f[s.identity] != t.identity:
            return False
        return bool(np.array_equal(f[s.table], t.table[f[:, None], f[None, :]]))

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    def is_bijective(self) -> bool:
        return self.is_surjective() and self.source.size == self.target.size

    def describe(self) -> dict[str, str]:
        return {self.source.labels[i]: self.target.labels[j] for i, j in enumerate(self.mapping)}


def _extend(m: FiniteMonoid, n: FiniteMonoid, gens: Sequence[int], images: Sequence[int]) -> Optional[dict[int, int]]:
    """Propagate generator images over the submonoid they generate; None on conflict."""
    phi: dict[int, int] = {}
    if m.identity is not None:
        phi[m.identity] = n.identity
        stack = [m.identity]
    else:
        stack = []
    for g, img in zip(gens, images):
        if g in phi and phi[g] != img:
            return None
        if g not in phi:
            phi[g] = img
            stack.append(g)
    while stack:
        x = stack.pop()
        for g, img in zip(gens, images):
            y = int(m.table[x, g])
            v = int(n.table[phi[x], img])
            if y in phi:
                if phi[y] != v:
                    return None
            else:
                phi[y] = v
                stack.append(y)
    return phi


def morphism_search(m: AnyMonoid, n: AnyMonoid, kind: str = "onto") -> Optional[Hom]:
    """First homomorphism ``m -> n`` (surjective or bijective) in search order."""
    if kind not in ("onto", "iso"):
        raise ValueError("kind must be 'onto' or 'iso'")
    m, n = m.materialize(), n.materialize()
    if kind == "iso" and m.size != n.size:
        return None
    if m.size < n.size:
        return None
    if (m.identity is None) != (n.identity is None):
        return None
    gens = m.generating_set()

    def search(k: int, images: list[int]) -> Optional[Hom]:
        phi = _extend(m, n, gens[:k], images)
        if phi is None:
            return None
        if kind == "iso" and len(set(phi.values())) < len(phi):
            return None
        if k == len(gens):
            hom = Hom(m, n, tuple(phi[x] for x in range(m.size)))
            ok = hom.is_bijective() if kind == "iso" else hom.is_surjective()
            return hom if ok else None
        for img in range(n.size):
            found = search(k + 1, images + [img])
            if found is not None:
                return found
        return None

    return search(0, [])


def is_isomorphic(m: AnyMonoid, n: AnyMonoid) -> bool:
    return morphism_search(m, n, "iso") is not None


# --- fixtures --------------------------------------------------------------------

PRESENTATIONS: dict[str, tuple[str, str]] = {
    "A": ("abc", "a^2=a, b^2=b, ab=ca=0, ac=cb=c"),
    "E": ("abc", "a^2=ab=0, ba=ca=a, b^2=bc=b, c^2=cb=c"),
    "A0": ("ab", "a^2=a, b^2=b, ab=0"),
    "B0": ("efc", "e^2=e, f^2=f, ef=fe=0, ec=cf=c"),
    "Q": ("ebc", "e^2=e, eb=b, ce=c, ec=be=cb=0"),
    "L2": ("ab", "a^2=ab=a, b^2=ba=b"),
}


@functools.lru_cache(maxsize=None)
def fixture(name: str) -> FiniteMonoid:
    """Named semigroups ``A, E, A0, B0, Q, L2`` and their monoids ``A1, E1, ...``."""
    if name in PRESENTATIONS:
        gens, rels = PRESENTATIONS[name]
        return from_presentation(list(gens), rels, name=name)
    if name.endswith("1") and name[:-1] in PRESENTATIONS:
        return adjoin_identity(fixture(name[:-1]))
    if name == "trivial":
        return FiniteMonoid(("1",), [[0]], 0, None, name="trivial")
    known = sorted(PRESENTATIONS) + sorted(k + "1" for k in PRESENTATIONS) + ["trivial"]
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(known)}")


def trivial_monoid() -> FiniteMonoid:
    return fixture("trivial")

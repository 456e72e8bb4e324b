"""Command-line front end.

Exit status: 0 on success (or an identity/check that holds), 1 when a check
fails with a witness, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .automata import RegexSyntaxError, compile_regex, dfa_equivalent
from .congruences import canonical, class_dfa, enumerate_class, equivalent, parse_congruence
from .identities import (E1_BASIS, FAILS, Verdict, equational_separation, long_pair,
                         nfb_premises, parse_identity, satisfies, sigma_pair, stability_check,
                         tau_term_check)
from .monoid import (AnyMonoid, FiniteMonoid, MonoidError, direct_product, fixture, from_presentation,
                     opposite, validate)
from .mtau import CapExceeded, FullStar, PredicateUnion, SingleClass, m_tau, onto_synt_check, relatively_free
from .synt import syntactic_of_class, syntactic_of_regex, syntactic_of_word
from .words import (WordSyntaxError, block_decompose, classify_word, format_word, ini2, parse_word,
                    word_stats)


class UsageError(Exception):
    pass


# --- argument helpers -------------------------------------------------------------

def _alphabet(text: str) -> tuple[str, ...]:
    text = text.strip()
    if "," in text:
        return tuple(sorted(x.strip() for x in text.split(",") if x.strip()))
    return tuple(sorted(set(parse_word(text))))


def load_monoid(spec: str) -> AnyMonoid:
    """``fixture:E1``, ``regex:<r>``, ``class:<cong>:<rep>``, ``word:<w>``, ``json:<path>``,
    ``mtau:<cong>:<rep>``, ``op:<spec>``, or ``<spec>&<spec>`` for products."""
    if "&" in spec:
        return direct_product(*(load_monoid(s.strip()) for s in spec.split("&")))
    kind, _, rest = spec.partition(":")
    if kind == "fixture":
        return fixture(rest)
    if kind == "regex":
        return syntactic_of_regex(rest)
    if kind == "class":
        cong, _, rep = rest.partition(":")
        return syntactic_of_class(parse_congruence(cong), parse_word(rep))
    if kind == "word":
        return syntactic_of_word(parse_word(rest))
    if kind == "mtau":
        cong, _, rep = rest.partition(":")
        return m_tau(SingleClass(parse_congruence(cong), parse_word(rep)))
    if kind == "json":
        return FiniteMonoid.from_json(Path(rest).read_text(), name=Path(rest).stem)
    if kind == "op":
        return opposite(load_monoid(rest))
    raise UsageError(f"cannot read monoid spec {spec!r}")


def render_table(m: FiniteMonoid) -> str:
    labels = list(m.labels)
    width = max(len(x) for x in labels)
    head = " " * width + " | " + " ".join(x.rjust(width) for x in labels)
    lines = [head, "-" * len(head)]
    for i, x in enumerate(labels):
        lines.append(x.rjust(width) + " | " + " ".join(labels[int(v)].rjust(width) for v in m.table[i]))
    return "\n".join(lines)


def emit_monoid(m: AnyMonoid, args, out) -> int:
    if getattr(args, "json", False):
        out.write(m.materialize().to_json())
        return 0
    name = f" ({m.name})" if m.name else ""
    out.write(f"{m.size} elements{name}\n")
    if len(m.factors) > 1:
        out.write("factors: " + ", ".join(f"{p.name or '?'} [{p.size}]" for p in m.factors) + "\n")
    if not getattr(args, "no_table", False) and m.size <= 60:
        out.write(render_table(m.materialize()) + "\n")
    return 0


def emit_verdict(v: Verdict, args, out, title: str = "") -> int:
    if getattr(args, "json", False):
        out.write(v.to_json() + "\n")
    else:
        out.write((f"{title}: " if title else "") + str(v) + "\n")
    return 1 if v.status == FAILS else 0


# --- subcommand handlers ----------------------------------------------------------

def cmd_word(args, out) -> int:
    w = parse_word(args.word)
    if args.action == "stats":
        s = word_stats(w)
        data = {"word": str(w), "length": len(w), "content": sorted(set(w)),
                "simple": sorted(s.simple), "multiple": sorted(s.multiple)}
    elif args.action == "blocks":
        d = block_decompose(w)
        data = {"skeleton": list(d.skeleton), "blocks": [format_word(b) for b in d.blocks]}
    elif args.action == "classify":
        simple, limited = classify_word(w)
        data = {"block_simple": simple, "xy_limited": limited}
    else:
        data = {"ini2": format_word(ini2(w))}
    out.write(json.dumps(data) + "\n")
    return 0


def cmd_cong(args, out) -> int:
    c = parse_congruence(args.cong)
    if args.action == "eq":
        same = equivalent(c, parse_word(args.u), parse_word(args.v))
        out.write(("equivalent" if same else "not equivalent") + "\n")
        return 0 if same else 1
    w = parse_word(args.u)
    if args.action == "canon":
        out.write(repr(canonical(c, w)) + "\n")
    elif args.action == "enumerate":
        words = sorted(enumerate_class(c, w, args.max_len), key=lambda x: (len(x), tuple(x)))
        out.write(f"{len(words)} words\n")
        for x in words:
            out.write(format_word(x) + "\n")
    else:
        out.write(class_dfa(c, w).to_json() + "\n")
    return 0


def cmd_regex(args, out) -> int:
    if args.action == "compile":
        d = compile_regex(args.regex)
        out.write(d.to_json() + "\n" if args.json else f"{d.n_states} states over {''.join(d.alphabet)}\n")
        return 0
    same = dfa_equivalent(compile_regex(args.regex), compile_regex(args.other))
    out.write(("equivalent" if same else "not equivalent") + "\n")
    return 0 if same else 1


def cmd_monoid(args, out) -> int:
    if args.action == "fixture":
        m = fixture(args.spec)
    elif args.action == "present":
        m = from_presentation(list(_alphabet(args.gens)), args.relations, cap=args.cap)
    elif args.action == "product":
        m = direct_product(*(load_monoid(s) for s in args.specs))
    elif args.action == "dual":
        m = opposite(load_monoid(args.spec))
    else:
        m = load_monoid(args.spec)
        report = validate(m)
        out.write(f"{'valid' if report.ok else 'INVALID'}: {m.size} elements {report.note}\n")
        if report.non_associative:
            out.write(f"non-associative triples: {report.non_associative}\n")
        return 0 if report.ok else 1
    return emit_monoid(m, args, out)


def cmd_synt(args, out) -> int:
    open_alphabet = not args.closed
    if args.action == "regex":
        m = syntactic_of_regex(args.target, open_alphabet)
    elif args.action == "class":
        m = syntactic_of_class(parse_congruence(args.cong), parse_word(args.target), open_alphabet)
    else:
        m = syntactic_of_word(parse_word(args.target), open_alphabet)
    return emit_monoid(m, args, out)


def cmd_mtau(args, out) -> int:
    if args.action == "class":
        m = m_tau(SingleClass(parse_congruence(args.cong), parse_word(args.rep)), args.cap)
    elif args.action == "star":
        cong, alphabet = parse_congruence(args.cong), _alphabet(args.alphabet)
        spec = PredicateUnion(cong, alphabet, args.predicate) if args.predicate else FullStar(cong, alphabet)
        m = m_tau(spec, args.cap)
    elif args.action == "free":
        m = relatively_free(parse_congruence(args.cong), _alphabet(args.alphabet), args.cap)
    else:
        report = onto_synt_check(parse_congruence(args.cong), parse_word(args.rep), args.cap)
        out.write(report.summary() + "\n")
        if report.hom is not None and not args.json:
            for k, v in report.hom.describe().items():
                out.write(f"  {k} -> {v}\n")
        return 0 if report.found else 1
    return emit_monoid(m, args, out)


def cmd_check(args, out) -> int:
    m = load_monoid(args.monoid) if getattr(args, "monoid", None) else None
    if args.action == "id":
        return emit_verdict(satisfies(m, parse_identity(args.identity)), args, out, args.identity)
    if args.action == "basis":
        idents = [parse_identity(t) for t in args.identity] if args.identity else list(E1_BASIS)
        code = 0
        for ident in idents:
            code = max(code, emit_verdict(satisfies(m, ident), args, out, str(ident)))
        return code
    if args.action in ("sigma", "long"):
        ident = sigma_pair(args.n) if args.action == "sigma" else long_pair(args.n)
        return emit_verdict(satisfies(m, ident), args, out, str(ident))
    if args.action == "tau-term":
        v = tau_term_check(m, parse_word(args.word), parse_congruence(args.cong), args.max_len)
        return emit_verdict(v, args, out, f"{args.word} as {args.cong}-term")
    if args.action == "stable":
        v = stability_check(m, parse_congruence(args.cong), parse_word(args.rep), args.max_len)
        return emit_verdict(v, args, out, f"[{args.rep}]_{args.cong} stable")
    if args.action == "separate":
        other = load_monoid(args.other)
        sep = equational_separation(m, other, args.max_letters, args.max_len)
        if args.json:
            out.write(json.dumps(None if sep is None else
                                 {"identity": str(sep.identity), "satisfied_by": sep.satisfied_by}) + "\n")
        else:
            out.write((str(sep) if sep else "no separating identity within bounds") + "\n")
        return 0
    report = nfb_premises(m, args.n_max, args.len_max, dual=args.dual)
    if args.json:
        out.write(json.dumps(report.to_dict()) + "\n")
    else:
        out.write("\n".join(report.lines()) + "\n")
    return 0 if report.all_pass else 1


def cmd_repro(args, out) -> int:
    from .repro import corrupted, run_all
    overrides = {name: corrupted(fixture(name)) for name in args.corrupt}
    only = set(args.only) if args.only else None
    rows = run_all(quick=args.quick, overrides=overrides, only=only)
    for row in rows:
        out.write(row.line() + "\n")
        out.flush()
    passed = sum(r.passed for r in rows)
    out.write(f"{passed}/{len(rows)} criteria pass, {sum(r.seconds for r in rows):.1f}s total\n")
    return 0 if passed == len(rows) else 1


# --- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="synmon", description="Word congruences, syntactic monoids and identities.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("word", help="word statistics and structure")
    w.add_argument("action", choices=["stats", "blocks", "classify", "ini2"])
    w.add_argument("word")

    c = sub.add_parser("cong", help="congruence classes")
    c.add_argument("action", choices=["eq", "canon", "enumerate", "dfa"])
    c.add_argument("--cong", required=True)
    c.add_argument("u")
    c.add_argument("v", nargs="?")
    c.add_argument("--max-len", type=int, default=6)

    r = sub.add_parser("regex", help="regex compilation and equivalence")
    r.add_argument("action", choices=["compile", "eq"])
    r.add_argument("regex")
    r.add_argument("other", nargs="?")
    r.add_argument("--json", action="store_true")

    def monoid_output(q):
        q.add_argument("--json", action="store_true", help="print the JSON table format")
        q.add_argument("--no-table", action="store_true")

    m = sub.add_parser("monoid", help="fixtures, presentations, products, duals")
    m.add_argument("action", choices=["fixture", "present", "product", "dual", "validate"])
    m.add_argument("spec", nargs="?")
    m.add_argument("specs", nargs="*")
    m.add_argument("--gens")
    m.add_argument("--relations")
    m.add_argument("--cap", type=int, default=4)
    monoid_output(m)

    s = sub.add_parser("synt", help="syntactic monoids")
    s.add_argument("action", choices=["regex", "class", "word"])
    s.add_argument("target")
    s.add_argument("--cong")
    s.add_argument("--closed", action="store_true", help="no foreign letter; language over its own alphabet")
    monoid_output(s)

    t = sub.add_parser("mtau", help="Rees quotients of congruence quotients")
    t.add_argument("action", choices=["class", "star", "free", "onto-check"])
    t.add_argument("rep", nargs="?")
    t.add_argument("--cong", required=True)
    t.add_argument("--alphabet")
    t.add_argument("--predicate", help="restrict star to words satisfying a predicate, e.g. xy-limited")
    t.add_argument("--cap", type=int, default=10_000)
    monoid_output(t)

    k = sub.add_parser("check", help="identities and bounded checks")
    k.add_argument("action", choices=["id", "basis", "sigma", "long", "tau-term", "stable", "separate", "nfb"])
    k.add_argument("--monoid", required=True, help="e.g. fixture:E1, class:beta:atab^2, regex:'a+ t a+'")
    k.add_argument("--identity", nargs="*")
    k.add_argument("--n", type=int, default=1)
    k.add_argument("--word")
    k.add_argument("--rep")
    k.add_argument("--cong")
    k.add_argument("--other")
    k.add_argument("--max-len", type=int, default=7)
    k.add_argument("--max-letters", type=int, default=4)
    k.add_argument("--n-max", type=int, default=3)
    k.add_argument("--len-max", type=int, default=7)
    k.add_argument("--dual", action="store_true")
    k.add_argument("--json", action="store_true")

    rp = sub.add_parser("repro", help="run the reproduction matrix")
    rp.add_argument("target", choices=["paper"])
    rp.add_argument("--quick", action="store_true")
    rp.add_argument("--only", type=int, nargs="*")
    rp.add_argument("--corrupt", nargs="*", default=[], help="fixtures to corrupt (fault injection)")
    return p


REQUIRED = {
    ("cong", "eq"): ["v"],
    ("regex", "eq"): ["other"],
    ("monoid", "fixture"): ["spec"],
    ("monoid", "dual"): ["spec"],
    ("monoid", "validate"): ["spec"],
    ("monoid", "present"): ["gens", "relations"],
    ("synt", "class"): ["cong"],
    ("mtau", "class"): ["rep"],
    ("mtau", "onto-check"): ["rep"],
    ("mtau", "star"): ["alphabet"],
    ("mtau", "free"): ["alphabet"],
    ("check", "id"): ["identity"],
    ("check", "tau-term"): ["word", "cong"],
    ("check", "stable"): ["rep", "cong"],
    ("check", "separate"): ["other"],
}

HANDLERS = {"word": cmd_word, "cong": cmd_cong, "regex": cmd_regex, "monoid": cmd_monoid,
            "synt": cmd_synt, "mtau": cmd_mtau, "check": cmd_check, "repro": cmd_repro}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    if args.command == "monoid" and args.action == "product" and args.spec:
        args.specs = [args.spec] + list(args.specs)
    if args.command == "check" and args.action == "id" and args.identity:
        args.identity = " ".join(args.identity)
    missing = [f for f in REQUIRED.get((args.command, getattr(args, "action", "")), [])
               if not getattr(args, f, None)]
    if missing:
        print(f"synmon {args.command} {args.action}: missing {', '.join(missing)}", file=sys.stderr)
        return 2
    try:
        return HANDLERS[args.command](args, out)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, WordSyntaxError, RegexSyntaxError, KeyError, ValueError, MonoidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

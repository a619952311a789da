"""Command line front end.

Exit codes: 0 success, 2 input error, 3 a search cap was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import enumeration, orientations, roots, words
from .field import context_for
from .system import CoxeterSystem, Word, format_word, named_system, \
    parse_graph_file, parse_word
from .words import CapExceeded

FC_LONG_RANK = 7  # FC tables above this rank only with --long


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coxwords",
        description="Exact reduced-word combinatorics in Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_system(sp):
        sp.add_argument("--system", help="named family, e.g. A3, I2(7), affE6")
        sp.add_argument("--graph-file", help="graph file (rank/bond lines)")

    def add_word(sp):
        sp.add_argument("--word", help="generator labels, e.g. '2 1 3 2'")
        sp.add_argument("--word-file", help="file containing one word")

    def add_caps(sp):
        sp.add_argument("--cap-class", type=int, default=words.DEFAULT_CLASS_CAP)
        sp.add_argument("--cap-closure", type=int,
                        default=words.DEFAULT_CLOSURE_CAP)
        sp.add_argument("--cap-group", type=int,
                        default=orientations.DEFAULT_GROUP_CAP)

    sp = sub.add_parser("check", help="full report for one word")
    add_system(sp), add_word(sp), add_caps(sp)
    sp.add_argument("--k", type=int, default=6,
                    help="bound for the fallback power check")

    sp = sub.add_parser("reduce", help="reduced form and length of a word")
    add_system(sp), add_word(sp)

    sp = sub.add_parser("power", help="lengths of powers of a word")
    add_system(sp), add_word(sp)
    sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("enumerate", help="count FC or CFC elements")
    add_system(sp)
    sp.add_argument("--kind", choices=["fc", "cfc"], required=True)
    sp.add_argument("--max-length", type=int, default=None)
    sp.add_argument("--list", action="store_true", dest="list_elements")

    sp = sub.add_parser("table", help="FC/CFC counts by family and rank")
    sp.add_argument("--families", default="A,B,D,E,F,H")
    sp.add_argument("--max-rank", type=int, default=7)
    sp.add_argument("--kind", choices=["fc", "cfc", "both"], default="both")
    sp.add_argument("--long", action="store_true",
                    help="allow FC rows above rank 7 (minutes of runtime)")
    sp.add_argument("--format", choices=["text", "csv"], default="text")

    sp = sub.add_parser("orientations", help="acyclic orientations of the graph")
    add_system(sp)

    sp = sub.add_parser("tutte", help="Tutte polynomial of the graph")
    add_system(sp)
    sp.add_argument("--x", default=None)
    sp.add_argument("--y", default=None)

    sp = sub.add_parser("kappa", help="number of source-to-sink classes")
    add_system(sp)

    sp = sub.add_parser("conjugacy",
                        help="conjugacy classes of Coxeter elements")
    add_system(sp), add_caps(sp)
    return p


def _load_system(args) -> CoxeterSystem:
    if getattr(args, "system", None) and getattr(args, "graph_file", None):
        raise ValueError("give exactly one of --system and --graph-file")
    if getattr(args, "system", None):
        return named_system(args.system)
    if getattr(args, "graph_file", None):
        with open(args.graph_file) as fh:
            return parse_graph_file(fh.read())
    raise ValueError("a system is required (--system or --graph-file)")


def _load_word(system: CoxeterSystem, args) -> Word:
    if getattr(args, "word", None) and getattr(args, "word_file", None):
        raise ValueError("give exactly one of --word and --word-file")
    if getattr(args, "word", None):
        return parse_word(system, args.word)
    if getattr(args, "word_file", None):
        with open(args.word_file) as fh:
            text = " ".join(line for line in fh
                            if not line.strip().startswith("#"))
        return parse_word(system, text)
    raise ValueError("a word is required (--word or --word-file)")


def _yesno(b: bool) -> str:
    return "yes" if b else "no"


def _cmd_check(args, out) -> int:
    system = _load_system(args)
    word = _load_word(system, args)
    ctx = context_for(system)
    reduced = roots.is_reduced(system, ctx, word)
    print(f"word: {format_word(system, word)}", file=out)
    print(f"reduced: {_yesno(reduced)}", file=out)
    w = word if reduced else roots.reduce_word(system, ctx, word)
    if not reduced:
        print(f"reduced-form: {format_word(system, w)}", file=out)
    print(f"length: {len(w)}", file=out)
    supp = sorted(words.support(w))
    print(f"support: {' '.join(system.labels[i] for i in supp)}", file=out)
    fc = words.is_fc(system, w)
    print(f"fully-commutative: {_yesno(fc)}", file=out)
    cyc = words.is_cyclically_reduced(system, ctx, w,
                                      closure_cap=args.cap_closure)
    print(f"cyclically-reduced: {_yesno(cyc)}", file=out)
    cfc = words.is_cfc(system, w)
    print(f"cyclically-fully-commutative: {_yesno(cfc)}", file=out)
    print(f"torsion-free: {_yesno(words.is_torsion_free(system, w))}", file=out)
    if cfc:
        bands = words.detect_bands(system, w)
        if bands:
            for b in bands:
                size = "large" if b.is_large else "small"
                print(f"band: {system.labels[b.s]} {system.labels[b.t]} "
                      f"{b.direction} strength {b.strength} ({size})", file=out)
        else:
            print("bands: none", file=out)
    else:
        print("bands: n/a (not CFC)", file=out)
    verdict = words.decide_logarithmic(system, ctx, w, bound=args.k,
                                       closure_cap=args.cap_closure)
    print(f"logarithmic: {verdict.describe()}", file=out)
    return 0


def _cmd_reduce(args, out) -> int:
    system = _load_system(args)
    word = _load_word(system, args)
    ctx = context_for(system)
    w = roots.reduce_word(system, ctx, word)
    print(f"reduced: {format_word(system, w)}", file=out)
    print(f"length: {len(w)}", file=out)
    return 0


def _cmd_power(args, out) -> int:
    system = _load_system(args)
    word = _load_word(system, args)
    ctx = context_for(system)
    base = roots.length(system, ctx, word)
    flagged = None
    for k in range(1, args.k + 1):
        lk = roots.power_length(system, ctx, word, k)
        note = ""
        if lk < k * base and flagged is None:
            flagged = k
            note = "  <- not logarithmic"
        print(f"k={k} length={lk} k*l(w)={k * base}{note}", file=out)
    return 0


def _cmd_enumerate(args, out) -> int:
    system = _load_system(args)
    fn = enumeration.enumerate_fc if args.kind == "fc" else enumeration.enumerate_cfc
    res = fn(system, max_length=args.max_length, collect=args.list_elements)
    print(f"system: {res.system_name}", file=out)
    print(f"kind: {res.kind}", file=out)
    print(f"count: {res.count}", file=out)
    print(f"exhaustive: {_yesno(res.exhaustive)}", file=out)
    if res.elements is not None:
        for w in sorted(res.elements, key=lambda u: (len(u), u)):
            print(format_word(system, w) if w else "(identity)", file=out)
    return 0


def _cmd_table(args, out) -> int:
    fams = [f.strip() for f in args.families.split(",") if f.strip()]
    kinds = ["fc", "cfc"] if args.kind == "both" else [args.kind]
    rows = []
    for fam in fams:
        if fam not in enumeration._FAMILY_MIN_RANK:
            raise ValueError(f"unknown family {fam!r} (expected A,B,D,E,F,H)")
        lo = enumeration._FAMILY_MIN_RANK[fam]
        for n in range(lo, args.max_rank + 1):
            system = None
            for kind in kinds:
                if kind == "fc" and n > FC_LONG_RANK and not args.long:
                    continue
                if system is None:
                    from .system import named_family
                    system = named_family(fam, n)
                fn = (enumeration.enumerate_fc if kind == "fc"
                      else enumeration.enumerate_cfc)
                rows.append((fam, n, kind, fn(system).count))
    rows.sort()
    if args.format == "csv":
        print("family,rank,kind,count", file=out)
        for fam, n, kind, c in rows:
            print(f"{fam},{n},{kind},{c}", file=out)
    else:
        print(f"{'family':<8}{'rank':<6}{'kind':<6}{'count':>10}", file=out)
        for fam, n, kind, c in rows:
            print(f"{fam:<8}{n:<6}{kind:<6}{c:>10}", file=out)
    return 0


def _cmd_orientations(args, out) -> int:
    system = _load_system(args)
    graph = orientations.system_graph(system)
    all_os = orientations.acyclic_orientations(graph)
    print(f"count: {len(all_os)}", file=out)
    for o in all_os:
        arcs = " ".join(f"{system.labels[t]}->{system.labels[h]}"
                        for t, h in o.arcs)
        print(arcs if arcs else "(no edges)", file=out)
    return 0


def _parse_rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def _cmd_tutte(args, out) -> int:
    system = _load_system(args)
    graph = orientations.system_graph(system)
    poly = orientations.tutte_polynomial(graph)
    terms = []
    for (i, j), c in sorted(poly.items(), reverse=True):
        xs = f"x^{i}" if i > 1 else ("x" if i == 1 else "")
        ys = f"y^{j}" if j > 1 else ("y" if j == 1 else "")
        coeff = "" if c == 1 and (xs or ys) else str(c)
        terms.append(coeff + xs + ys or "1")
    print("T =", " + ".join(terms) if terms else "0", file=out)
    if args.x is not None and args.y is not None:
        x, y = _parse_rat(args.x), _parse_rat(args.y)
        print(f"T({x},{y}) = {orientations.tutte(graph, x, y)}", file=out)
    print(f"acyclic-orientations T(2,0) = {orientations.tutte(graph, 2, 0)}",
          file=out)
    print(f"kappa-classes T(1,0) = {orientations.tutte(graph, 1, 0)}", file=out)
    return 0


def _cmd_kappa(args, out) -> int:
    system = _load_system(args)
    graph = orientations.system_graph(system)
    print(f"kappa-classes: {orientations.kappa_classes(graph)}", file=out)
    return 0


def _cmd_conjugacy(args, out) -> int:
    system = _load_system(args)
    classes = orientations.conjugacy_classes_of_coxeter_elements(
        system, cap=args.cap_group)
    total = sum(len(c) for c in classes)
    print(f"coxeter-elements: {total}", file=out)
    print(f"classes: {len(classes)}", file=out)
    for i, cls in enumerate(classes, 1):
        reps = "; ".join(format_word(system, w) for w in cls)
        print(f"class {i} (size {len(cls)}): {reps}", file=out)
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "reduce": _cmd_reduce,
    "power": _cmd_power,
    "enumerate": _cmd_enumerate,
    "table": _cmd_table,
    "orientations": _cmd_orientations,
    "tutte": _cmd_tutte,
    "kappa": _cmd_kappa,
    "conjugacy": _cmd_conjugacy,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end."""
from __future__ import annotations

import argparse
import os
import sys

from . import congruences as cg
from .core import MagmaError, format_magma, isomorphic, read_magma
from .enumeration import ModelQuery, count_models, enumerate_models, write_jsonl, write_text_stream
from .laws import ClassLabel, LawId, check_identity
from .report import analyze, congruence_lattice_dot, format_text, hclass_dot

CLASS_TOKENS = {"all": None, **{lab.value: lab for lab in ClassLabel}}


def load(path):
    try:
        return read_magma(path)
    except MagmaError as exc:
        raise MagmaError(f"{path}: {exc}") from exc


def parse_pairs(text: str) -> list:
    """``"a,b;c,d"`` with whitespace ignored."""
    text = "".join(text.split())
    pairs = []
    for chunk in filter(None, text.split(";")):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad pair {chunk!r}, expected 'a,b'")
        pairs.append((int(parts[0]), int(parts[1])))
    return pairs


def cmd_check(args) -> int:
    m = load(args.file)
    res = check_identity(m, LawId(args.law))
    if res.holds:
        print(f"{args.law}: holds")
    else:
        print(f"{args.law}: fails at {res.counterexample}")
    return 0


def cmd_analyze(args) -> int:
    m = load(args.file)
    report = analyze(m, name=os.path.basename(args.file))
    sys.stdout.write(report.to_json() if args.json else format_text(report))
    if args.dot:
        with open(f"{args.dot}_hclasses.dot", "w", encoding="utf-8") as fh:
            fh.write(hclass_dot(m))
        if m.order <= cg.ALL_CONGRUENCES_MAX_ORDER:
            with open(f"{args.dot}_congruences.dot", "w", encoding="utf-8") as fh:
                fh.write(congruence_lattice_dot(m))
    return 0


def cmd_congruences(args) -> int:
    m = load(args.file)
    congs = cg.all_congruences(m)
    print(f"{len(congs)} congruences")
    for rho in congs:
        f = cg.classify_congruence(m, rho)
        flags = [name for name, on in (("semilattice", f.semilattice),
                                       ("idempotent-separating", f.idempotent_separating),
                                       ("ag-group", f.ag_group)) if on]
        print(f"{rho} {' '.join(flags)}".rstrip())
    return 0


def cmd_quotient(args) -> int:
    m = load(args.file)
    rho = cg.congruence_closure(m, parse_pairs(args.pairs))
    q = cg.quotient(m, rho)
    print(f"# congruence {rho}")
    print("# projection " + " ".join(map(str, q.projection)))
    sys.stdout.write(format_magma(q.magma))
    return 0


def cmd_enumerate(args) -> int:
    q = ModelQuery(args.order, CLASS_TOKENS[args.cls], args.up_to_iso, args.limit)
    if args.count_only:
        print(count_models(q))
        return 0
    models = enumerate_models(q)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        count = 0
        for count, m in enumerate(models, 1):
            with open(os.path.join(args.out, f"model_{count:05d}.cayley"), "w", encoding="utf-8") as fh:
                fh.write(format_magma(m))
        print(f"wrote {count} models to {args.out}", file=sys.stderr)
    elif args.format == "jsonl":
        write_jsonl(models, sys.stdout)
    else:
        write_text_stream(models, sys.stdout)
    return 0


def cmd_iso(args) -> int:
    perm = isomorphic(load(args.file_a), load(args.file_b))
    print("not isomorphic" if perm is None else "isomorphic: " + " ".join(map(str, perm)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agmagma", description="Finite AG-groupoid analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide one identity")
    p.add_argument("file")
    p.add_argument("--law", required=True, choices=[law.value for law in LawId])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("analyze", help="full report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="PREFIX")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("congruences", help="list every congruence")
    p.add_argument("file")
    p.set_defaults(func=cmd_congruences)

    p = sub.add_parser("quotient", help="quotient by the congruence generated by pairs")
    p.add_argument("file")
    p.add_argument("--pairs", required=True, help='e.g. "0,1; 2,3"')
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("enumerate", help="generate all tables of a class")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--class", dest="cls", default="all", choices=list(CLASS_TOKENS))
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--out", metavar="DIR")
    p.add_argument("--format", choices=["text", "jsonl"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("iso", help="find an isomorphism")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MagmaError, OSError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

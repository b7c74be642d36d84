"""
Command line interface: ``operadpbw <subcommand> ...``.

Exit codes: 0 success (PBW / diagonal), 1 negative verdict or operational
error, 2 unreadable or invalid presentation.
"""

import argparse
import re
import sys
import warnings

from .corpus import builtin_text
from .field import parse_field
from .free import OperadError, pointed_shuffles
from .parser import ParseError, dump, format_element, parse, parse_element

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


class InputError(Exception):
    pass


def read_source(where):
    """Text of ``builtin:<name>``, ``-`` (stdin) or a file path."""
    if where.startswith("builtin:"):
        try:
            return builtin_text(where[len("builtin:"):]), where
        except (KeyError, ValueError) as e:
            raise InputError(str(e).strip('"'))
    if where == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        with open(where, encoding="utf-8") as fh:
            return fh.read(), where
    except OSError as e:
        raise InputError("cannot read %s: %s" % (where, e.strerror))


def load(where, field=None):
    text, source = read_source(where)
    if field is not None:
        parse_field(field)
        if re.search(r"(?m)^\s*field\s", text):
            text = re.sub(r"(?m)^(\s*)field\s+\S+", r"\1field " + field, text)
        else:
            text = re.sub(r"(?m)^(\s*operad\s.*)$", r"\1\nfield " + field, text, count=1)
    return parse(text, source=source)


def cmd_check(args, out):
    from .pbw import check_pbw
    p = load(args.file, args.field)
    rep = check_pbw(p, args.max_weight, args.max_arity)
    out.write((rep.to_json_lines() if args.json else rep.to_text()) + "\n")
    if not args.json and rep.split is not None:
        mod = p.module
        out.write("quadratic basis part: %s\n"
                  % ", ".join(mod.format_monomial(m) for m in rep.split.quadratic_basis()))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_dual(args, out):
    from .dual import dual_presentation
    p = load(args.file, args.field)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        q = dual_presentation(p, args.mode)
    for w in caught:
        sys.stderr.write("warning: %s\n" % w.message)
    text = dump(q)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_dims(args, out):
    import json
    p = load(args.file, args.field)
    W = args.max_weight or max(args.max_arity - 1, 1)
    rows = []
    for s in range(1, W + 1):
        for r in range(1, args.max_arity + 1):
            if p.columns(s, r)[0]:
                rows.append((s, r, len(p.columns(s, r)[0]), p.dim(s, r)))
    if args.json:
        for s, r, n, d in rows:
            out.write(json.dumps({"operad": p.name, "s": s, "r": r, "monomials": n, "dim": d}) + "\n")
    else:
        out.write("operad %s: dim P_(s)(r)\n" % p.name)
        out.write("%3s %3s %10s %8s\n" % ("s", "r", "monomials", "dim"))
        for s, r, n, d in rows:
            out.write("%3d %3d %10d %8d\n" % (s, r, n, d))
    return EXIT_OK


def cmd_bar(args, out):
    from .bar import homology
    p = load(args.file, args.field)
    rep = homology(p, args.max_weight, args.max_arity, cap=args.cap)
    out.write((rep.to_json_lines() if args.json else rep.to_text()) + "\n")
    return EXIT_OK if rep.diagonal and rep.square_ok else EXIT_FAIL


def cmd_nf(args, out):
    import json
    p = load(args.file, args.field)
    try:
        x = parse_element(args.expr, p.module)
    except ParseError as e:
        raise ParseError("--expr: " + e.message, e.line, e.col, "<expr>")
    rs = p.split()
    y = rs.normal_form(x)
    if args.json:
        out.write(json.dumps({"input": format_element(x, p.module, p.order),
                              "normal_form": format_element(y, p.module, p.order)}) + "\n")
    else:
        out.write(format_element(y, p.module, p.order) + "\n")
    return EXIT_OK


def cmd_shuffles(args, out):
    import json
    if not 1 <= args.i <= args.m:
        raise InputError("I must satisfy 1 <= I <= M")
    ws = pointed_shuffles(args.m, args.n, args.i)
    if args.json:
        for w in ws:
            out.write(json.dumps(list(w)) + "\n")
    else:
        for w in ws:
            out.write(" ".join(map(str, w)) + "\n")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="operadpbw",
                                 description="PBW bases, Koszul duals and bar homology of quadratic operads.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, file=True):
        if file:
            sp.add_argument("file", help="presentation file, '-' for stdin, or builtin:<name>")
            sp.add_argument("--field", help="override the field (Q or F<p>)")
        sp.add_argument("--json", action="store_true", help="line-delimited JSON output")

    sp = sub.add_parser("check", help="PBW certificate up to bounds")
    common(sp)
    sp.add_argument("--max-weight", type=int, default=4)
    sp.add_argument("--max-arity", type=int, default=6)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("dual", help="print the Koszul dual presentation")
    common(sp)
    sp.add_argument("--mode", choices=("kdual", "shriek"), default="shriek")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("dims", help="dimensions of P_(s)(r)")
    common(sp)
    sp.add_argument("--max-arity", type=int, required=True)
    sp.add_argument("--max-weight", type=int)
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("bar", help="bar complex homology")
    common(sp)
    sp.add_argument("--max-weight", type=int, required=True)
    sp.add_argument("--max-arity", type=int, required=True)
    sp.add_argument("--cap", type=int, default=20000, help="largest chain group computed per cell")
    sp.set_defaults(func=cmd_bar)

    sp = sub.add_parser("nf", help="normal form of an element")
    common(sp)
    sp.add_argument("--expr", required=True)
    sp.set_defaults(func=cmd_nf)

    sp = sub.add_parser("shuffles", help="list pointed shuffles of a composition")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("i", type=int)
    common(sp, file=False)
    sp.set_defaults(func=cmd_shuffles)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except (ParseError, InputError) as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_PARSE
    except (OperadError, ValueError) as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``weightgen mult | table | gf | verify``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import genfunc_a2, genfunc_c2, verify
from .lie_rank2 import METHODS, mult_table, root_system, weyl_dim, weyl_orbit
from .recurrences import epsilon_domain_classify

SCHEMA_VERSION = 1
CSV_COLUMNS = ("m", "n", "x", "y", "mult", "orbit_size")


class UsageError(Exception):
    pass


def default_order() -> int:
    raw = os.environ.get("WEIGHTGEN_DEFAULT_ORDER")
    if raw is None:
        return 12
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"WEIGHTGEN_DEFAULT_ORDER must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("WEIGHTGEN_DEFAULT_ORDER must be nonnegative")
    return value


def table_document(algebra: str, p: int, q: int, overlay: str | None = None) -> dict:
    """Dominant-weight table of R(p, q) as a JSON-ready dict."""
    rs = root_system(algebra)
    if overlay == "epsilon" and rs.algebra != "C2":
        raise UsageError("the epsilon overlay is only defined for C2")
    table = mult_table(rs, (p, q), "freudenthal")
    entries = []
    for w, mult in table.entries.items():
        row = {"m": w.m, "n": w.n,
               "x": w.m if rs.algebra == "C2" else None,
               "y": w.m + 2 * w.n if rs.algebra == "C2" else None,
               "mult": mult, "orbit_size": len(weyl_orbit(rs, w))}
        if overlay == "epsilon":
            row["domain"] = epsilon_domain_classify(p, q, w.m, w.n)
        entries.append(row)
    entries.sort(key=lambda e: (-(e["m"] + 2 * e["n"]), e["m"]))
    return {"schema": SCHEMA_VERSION, "algebra": rs.algebra, "p": p, "q": q,
            "dimension": weyl_dim(rs, (p, q)), "entries": entries}


def document_to_csv(doc: dict) -> str:
    columns = list(CSV_COLUMNS)
    if doc["entries"] and "domain" in doc["entries"][0]:
        columns.append("domain")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for e in doc["entries"]:
        writer.writerow({k: ("" if e[k] is None else e[k]) for k in columns})
    return buf.getvalue()


def document_to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def format_series_grid(series) -> str:
    n = series.order
    lines = ["p\\q " + " ".join(f"{q:>5}" for q in range(n + 1))]
    for p in range(n + 1):
        cells = [f"{series.coeff(p, q):>5}" for q in range(n + 1 - p)]
        lines.append(f"{p:>3} " + " ".join(cells))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands

def cmd_mult(args, out) -> int:
    rs = root_system(args.algebra)
    methods = list(METHODS) if args.method == "all" else [args.method]
    if rs.algebra != "C2":
        blocked = [m for m in methods if m in ("genfunc", "counting")]
        if args.method == "all":
            methods = [m for m in methods if m not in blocked]
        elif blocked:
            raise UsageError(f"method {args.method!r} is only available for C2")
    w = (args.m, args.n)
    values = {meth: mult_table(rs, (args.p, args.q), meth)[w] for meth in methods}
    if args.method == "all":
        for meth, v in values.items():
            print(f"{meth:<12} {v}", file=out)
        if len(set(values.values())) != 1:
            print("methods disagree", file=sys.stderr)
            return 1
    else:
        print(values[args.method], file=out)
    return 0


def cmd_table(args, out) -> int:
    doc = table_document(args.algebra, args.p, args.q, args.overlay)
    text = document_to_csv(doc) if args.format == "csv" else document_to_json(doc)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {args.output}: {exc}", file=sys.stderr)
            return 1
    else:
        out.write(text)
    return 0


def cmd_gf(args, out) -> int:
    order = args.order if args.order is not None else default_order()
    if args.algebra.upper() == "A2":
        if (args.m, args.n) != (0, 0):
            raise UsageError("only the zero-weight generating function is available for A2")
        r = genfunc_a2.zero_weight_gf_a2()
    elif args.algebra.upper() == "C2":
        low = genfunc_c2.appendix_table()
        r = low.get((args.m, args.n)) or genfunc_c2.a_simplified(args.m, args.n)
    else:
        raise UsageError(f"unknown algebra {args.algebra!r}")
    print(f"A_{{{args.m},{args.n}}}(t1,t2) = {r}", file=out)
    print(f"series to total degree {order} (rows p, columns q):", file=out)
    print(format_series_grid(r.series(order)), file=out)
    return 0


def cmd_verify(args, out) -> int:
    appendix = verify.load_appendix(args.appendix) if args.appendix else None
    report = verify.run_all(args.max_p, args.max_q, args.max_m, args.max_n, appendix)
    for line in report.lines():
        print(line, file=out)
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------

def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def _algebra(text: str) -> str:
    if text.upper() not in ("C2", "A2"):
        raise argparse.ArgumentTypeError(f"unknown algebra {text!r}; expected C2 or A2")
    return text.upper()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weightgen",
                                     description="Weight multiplicities of C2 and A2.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", help="multiplicity of one weight")
    p.add_argument("algebra", type=_algebra)
    for name in ("p", "q", "m", "n"):
        p.add_argument(name, type=_nonneg)
    p.add_argument("--method", choices=METHODS + ("all",), default="freudenthal")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("table", help="dominant-weight table of one representation")
    p.add_argument("algebra", type=_algebra)
    p.add_argument("p", type=_nonneg)
    p.add_argument("q", type=_nonneg)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--overlay", choices=("epsilon",), default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gf", help="generating function of one weight")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--order", type=_nonneg, default=None)
    p.add_argument("--algebra", type=_algebra, default="C2")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="run the cross-validation harness")
    p.add_argument("--max-p", type=_nonneg, default=10)
    p.add_argument("--max-q", type=_nonneg, default=10)
    p.add_argument("--max-m", type=_nonneg, default=None)
    p.add_argument("--max-n", type=_nonneg, default=None)
    p.add_argument("--appendix", default=None,
                   help="JSON file replacing the built-in low-lying generating functions")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"weightgen: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

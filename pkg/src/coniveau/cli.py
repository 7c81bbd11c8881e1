"""Command-line front end.

Exit status: 0 on success, 1 when any verification check fails, 2 on bad
input (unknown flag, malformed expression, invalid model description).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .catalog import catalog_names, load_model
from .errors import ConiveauError
from .filtrations import gamma_filtration, graded_piece, top_filtration
from .lambda_ring import augmentation, lambda_op
from .lattice import lattice_member, lattice_sum
from .operations import adams_op, gamma_op
from .verify import SUITES, Bounds, run_suite

__all__ = ["main", "run", "render_report", "build_parser"]

CSV_COLUMNS = ["checkId", "model", "params", "status", "witness", "millis"]


def render_report(reports, fmt="json"):
    """Serialize reports; field order is fixed for every format."""
    dicts = [r.to_dict() if hasattr(r, "to_dict") else r for r in reports]
    if fmt == "json":
        return json.dumps(dicts, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for d in dicts:
            witness = d["witness"]["expr"] if d["witness"] else ""
            writer.writerow([d["checkId"], d["model"], json.dumps(d["params"], sort_keys=True),
                             d["status"], witness, d["millis"]])
        return buf.getvalue().rstrip("\n")
    if fmt == "text":
        lines = []
        for d in dicts:
            params = " ".join(f"{k}={v}" for k, v in d["params"].items())
            lines.append(f"{d['status'].upper():12} {d['checkId']:22} {d['model']:10} {params} ({d['millis']} ms)")
            if d["witness"]:
                w = d["witness"]
                lines.append(f"    witness: {w['expr']} not in {w['level']} ({w['claim']})")
        return "\n".join(lines)
    raise ConiveauError(f"unknown format {fmt!r}")


def _add_model(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--model", help="builtin model such as P3, P2xP1 or pt")
    group.add_argument("--model-file", help="JSON model description")


def build_parser():
    parser = argparse.ArgumentParser(prog="coniveau", description="λ-ring operations and filtrations on K₀ models")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="evaluate an operation on an expression")
    _add_model(p)
    p.add_argument("--expr", required=True)
    p.add_argument("--op", choices=["nf", "lambda", "gamma", "psi", "eps"], default="nf")
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("filtration", help="print the lattice bases of a filtration")
    _add_model(p)
    p.add_argument("--kind", choices=["gamma", "top"], required=True)
    p.add_argument("--max-q", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("member", help="test membership in a filtration level")
    _add_model(p)
    p.add_argument("--level", required=True, help="kind:q such as top:2, or a sum such as gamma:1+top:2")
    p.add_argument("--expr", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("gr", help="graded pieces Fil^q / Fil^(q+1)")
    _add_model(p)
    p.add_argument("--kind", choices=["gamma", "top"], required=True)
    p.add_argument("--max-q", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="run verification checks")
    _add_model(p)
    p.add_argument("--suite", default="all", help=f"all or a comma list of: {', '.join(SUITES)}")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-q", type=int)
    p.add_argument("--truncation", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")

    p = sub.add_parser("catalog", help="list builtin models")
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _load(args):
    if args.model is not None:
        return load_model(args.model)
    try:
        with open(args.model_file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConiveauError(f"cannot read {args.model_file!r}: {exc.strerror}") from None
    return load_model(text)


def _filtration(scheme, kind, max_q=None):
    if kind == "gamma":
        return gamma_filtration(scheme, max_q=max_q)
    if kind == "top":
        return top_filtration(scheme, max_q=max_q)
    raise ConiveauError(f"unknown filtration kind {kind!r}; use gamma or top")


def _emit(out, fmt, payload, text):
    out.write((json.dumps(payload, indent=2) if fmt == "json" else text) + "\n")


def _cmd_eval(args, out):
    scheme = _load(args)
    x = scheme.parse(args.expr)
    if args.op in ("lambda", "gamma", "psi"):
        if args.n is None:
            raise ConiveauError(f"--op {args.op} needs --n")
        model = scheme.model.with_order(max(scheme.model.order, args.n))
        fn = {"lambda": lambda_op, "gamma": gamma_op, "psi": adams_op}[args.op]
        result = str(fn(x, args.n, model))
    elif args.op == "eps":
        result = str(augmentation(x, scheme.model))
    else:
        result = str(x)
    _emit(out, args.format, {"model": scheme.name, "op": args.op, "n": args.n, "expr": args.expr, "result": result},
          result)
    return 0


def _cmd_filtration(args, out):
    scheme = _load(args)
    fil = _filtration(scheme, args.kind, args.max_q)
    levels = []
    lines = []
    for q in range(0, fil.top + 1):
        basis = [str(b) for b in fil.level(q).basis_elements()]
        levels.append({"q": q, "rank": len(basis), "basis": basis})
        lines.append(f"Fil^{q}_{args.kind}: rank {len(basis)}: " + (", ".join(basis) or "0"))
    _emit(out, args.format, {"model": scheme.name, "kind": args.kind, "levels": levels}, "\n".join(lines))
    return 0


def _parse_level(text):
    """``kind:q`` or a sum such as ``gamma:1+top:2``."""
    out = []
    for part in text.split("+"):
        kind, sep, q = part.strip().partition(":")
        if not sep or kind not in ("gamma", "top"):
            raise ConiveauError(f"level {part!r} must look like gamma:q or top:q")
        try:
            out.append((kind, int(q)))
        except ValueError:
            raise ConiveauError(f"level index {q!r} is not an integer") from None
    return out


def _cmd_member(args, out):
    scheme = _load(args)
    parts = _parse_level(args.level)
    x = scheme.parse(args.expr)
    lattice = None
    for kind, q in parts:
        lat = _filtration(scheme, kind, max(q, scheme.dimension)).level(q).lattice
        lattice = lat if lattice is None else lattice_sum(lattice, lat)
    member = lattice_member(lattice, scheme.ring.coords(x))
    _emit(out, args.format, {"model": scheme.name, "level": args.level, "expr": str(x), "member": member},
          "true" if member else "false")
    return 0


def _cmd_gr(args, out):
    scheme = _load(args)
    fil = _filtration(scheme, args.kind, args.max_q)
    pieces = []
    lines = []
    for q in range(0, fil.top + 1):
        piece = graded_piece(fil, q)
        pieces.append({"q": q, "freeRank": piece.group.free_rank, "torsion": list(piece.group.torsion),
                       "rationalRank": piece.rational_rank})
        lines.append(f"Gr^{q}_{args.kind} = {piece.group}")
    _emit(out, args.format, {"model": scheme.name, "kind": args.kind, "pieces": pieces}, "\n".join(lines))
    return 0


def _cmd_verify(args, out):
    scheme = _load(args)
    bounds = Bounds(max_n=args.max_n, max_q=args.max_q, truncation=args.truncation, seed=args.seed)
    reports = run_suite(scheme, args.suite, bounds)
    out.write(render_report(reports, args.format) + "\n")
    return 1 if any(r.status == "fail" for r in reports) else 0


def _cmd_catalog(args, out):
    names = catalog_names()
    _emit(out, args.format, names, "\n".join(names))
    return 0


COMMANDS = {
    "eval": _cmd_eval,
    "filtration": _cmd_filtration,
    "member": _cmd_member,
    "gr": _cmd_gr,
    "verify": _cmd_verify,
    "catalog": _cmd_catalog,
}


def run(argv=None, out=None, err=None):
    """Execute one command line and return its exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[args.verb](args, out)
    except (ConiveauError, ValueError) as exc:
        err.write(f"coniveau: error: {exc}\n")
        return 2


def main(argv=None):
    sys.exit(run(argv))

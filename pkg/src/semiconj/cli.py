"""``sg``: command-line front end.

Every command prints one JSON document on stdout.  Exit codes: 0 success
(for ``conj``: conjugate), 1 negative answer (``conj``: not conjugate,
``oracle-verify``: disagreement), 2 error, reported as ``{"code", "message"}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .arith import FieldSpec
from .conjugacy import conjugacy_partition, linear_conjugate
from .core import index_period
from .errors import FormatError, SemigroupError
from .families import build_family
from .formats import dump_semigroup, read_semigroup, render_element
from .green import green_classes, maximal_subgroup_orders
from .oracle import oracle_verify


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise FormatError(message)


def _field(text: str) -> FieldSpec:
    return FieldSpec.parse(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sg", description="Linear conjugacy in finite semigroups.")
    parser.add_argument("--version", action="version", version=f"sg {__version__}")
    parser.add_argument("--cap", type=int, default=None,
                        help="closure element cap (default: $SG_CLOSURE_CAP or 10000)")
    parser.add_argument("--pretty", action="store_true",
                        help="indent output and add 1-based renderings of elements")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="Green's structure summary")
    p.add_argument("file")

    p = sub.add_parser("conj", help="decide linear conjugacy of two elements")
    p.add_argument("file")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--field", type=str, default="C")
    p.add_argument("--paper-bound", action="store_true",
                   help="check s^k J t^k for k = 1..|S| instead of the index/period bound")

    p = sub.add_parser("classes", help="partition into linear conjugacy classes")
    p.add_argument("file")
    p.add_argument("--field", type=str, default="C")

    p = sub.add_parser("gen", help="emit a built-in family as semigroup JSON")
    p.add_argument("family", choices=["tn", "in", "mat", "group"])
    p.add_argument("args", nargs="+")

    p = sub.add_parser("oracle-verify", help="compare the decider with matrix similarity")
    p.add_argument("file")
    p.add_argument("--field", type=str, default="C")
    return parser


def _check_id(S, s, name):
    if not 0 <= s < S.size:
        raise FormatError(f"--{name} {s} is not an element id in [0, {S.size})")


def _info(S, pretty):
    gc = green_classes(S)
    idem = set(S.idempotents)
    subgroup_orders = maximal_subgroup_orders(S)
    classes = []
    for label, members in sorted(gc.members("J").items()):
        idems = [e for e in members if e in idem]
        below = [int(d) for d in range(gc.j_leq.shape[0]) if d != label and gc.j_leq[d, label]]
        classes.append({
            "label": label,
            "size": len(members),
            "representative": members[0],
            "r_classes": len({gc.r_class[s] for s in members}),
            "l_classes": len({gc.l_class[s] for s in members}),
            "h_classes": len({gc.h_class[s] for s in members}),
            "idempotents": len(idems),
            "regular": bool(idems),
            "maximal_subgroup_order": subgroup_orders[idems[0]] if idems else None,
            "below": below,
        })
    out = {
        "size": S.size,
        "kind": S.provenance.kind if S.provenance else "table",
        "idempotents": len(idem),
        "j_classes": classes,
        "num_r_classes": len(gc.members("R")),
        "num_l_classes": len(gc.members("L")),
        "num_h_classes": len(gc.members("H")),
    }
    if pretty:
        out["elements"] = [{"id": s, "element": render_element(S, s),
                            "index_period": list(index_period(S, s))} for s in range(S.size)]
    return out


def _gen(family, args, cap):
    if family == "group":
        if len(args) != 1:
            raise FormatError("usage: sg gen group <name>")
        return dump_semigroup(build_family("group", args[0], cap=cap), name=args[0].lower())
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise FormatError(f"bad arguments for gen {family}: {args}") from None
    if family == "mat":
        if len(nums) != 2:
            raise FormatError("usage: sg gen mat <n> <q>")
        return dump_semigroup(build_family("mat", *nums, cap=cap), name=f"M{nums[0]}(F{nums[1]})")
    if len(nums) != 1:
        raise FormatError(f"usage: sg gen {family} <n>")
    label = {"tn": "T", "in": "I"}[family]
    return dump_semigroup(build_family(family, nums[0], cap=cap), name=f"{label}{nums[0]}")


def run(argv=None) -> tuple[int, dict]:
    """Execute a command; returns (exit code, JSON-serializable result)."""
    try:
        args = build_parser().parse_args(argv)
        if args.command == "gen":
            return 0, _gen(args.family, args.args, args.cap)
        S = read_semigroup(args.file, cap=args.cap)
        if args.command == "info":
            return 0, _info(S, args.pretty)
        fld = _field(args.field)
        if args.command == "conj":
            _check_id(S, args.s, "s")
            _check_id(S, args.t, "t")
            verdict = linear_conjugate(S, args.s, args.t, fld, paper_bound=args.paper_bound)
            out = verdict.to_json()
            if args.pretty:
                out["s"] = render_element(S, args.s)
                out["t"] = render_element(S, args.t)
            return (0 if verdict.result else 1), out
        if args.command == "classes":
            classes = conjugacy_partition(S, fld)
            out = {"field": str(fld), "count": len(classes), "classes": classes}
            if args.pretty:
                out["rendered"] = [[render_element(S, s) for s in c] for c in classes]
            return 0, out
        report = oracle_verify(S, fld)
        return (0 if report["agree"] else 1), report
    except SemigroupError as exc:
        return 2, {"code": exc.code, "message": str(exc)}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, out = run(argv)
    indent = 2 if "--pretty" in argv else None
    print(json.dumps(out, indent=indent, sort_keys=False))
    return code


if __name__ == "__main__":
    sys.exit(main())

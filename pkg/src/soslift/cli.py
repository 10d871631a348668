"""Command-line entry point.

Exit codes: 0 on success and when every verification check passes, 1 when a
verification check fails, 2 on usage errors (including malformed permutation
or fraction tokens).  Output is deterministic: sets print one permutation
per line, trees and reports print a single JSON document.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .farey import (
    farey_intervals,
    farey_sequence,
    format_fraction,
    fraction_to_json,
    parse_fraction,
)
from .lifting import FORCE_THRESHOLD, MAX_LIFT_DEGREE, generate_up_to, lift_fibers, project
from .perm_core import PermClass, Permutation, inverse
from .perm_sets import (
    LABELS,
    METHODS,
    enumerate_class,
    enumerate_sos_recurrence,
    report_passed,
    verify_theorems,
)
from .sos import tau_from_alpha, verify_invariants
from .trees import build_farey_tree, build_gen_tree, check_isomorphism, export_tree

DEFAULT_SEED = 1729


def _print_class(cls: PermClass, fmt: str) -> None:
    for perm in cls:
        if fmt == "json":
            print(json.dumps(perm.to_json()))
        else:
            print(perm.one_line())


def _print_report(records: list[dict], fmt: str) -> int:
    if fmt == "json":
        print(json.dumps({"passed": report_passed(records), "checks": records}, indent=2))
    else:
        for r in records:
            status = "PASS" if r["passed"] else "FAIL"
            detail = f"  [{r['detail']}]" if r["detail"] else ""
            print(f"{status} m={r['m']}: {r['check']}{detail}")
    return 0 if report_passed(records) else 1


def _cmd_enumerate(args) -> int:
    cls = enumerate_class(args.set, args.m, args.method)
    _print_class(cls, args.format)
    return 0


def _cmd_lift(args) -> int:
    target = args.to_m if args.to_m is not None else args.from_m + 1
    if target < 1:
        raise ValueError(f"target degree must be positive, got {target}")
    if target > MAX_LIFT_DEGREE:
        raise ValueError(f"lifting beyond degree {MAX_LIFT_DEGREE} is not supported")
    if target > FORCE_THRESHOLD and not args.force:
        raise ValueError(
            f"lifting to degree {target} > {FORCE_THRESHOLD} needs --force"
        )
    if args.to_m is not None:
        # keep only the previous level; the full level list would cost
        # roughly target^4 / 13 bytes
        level = np.array([[1]], dtype=np.uint8)
        for _ in range(1, target):
            level, _, _ = lift_fibers(level)
        out = PermClass.from_array("V", target, level)
    else:
        if args.input:
            with open(args.input) as fh:
                members = [Permutation.from_json(json.loads(line)) for line in fh if line.strip()]
            vprev = PermClass("V", args.from_m, members)
            if len(vprev) == 0:
                raise ValueError(f"no permutations read from {args.input}")
        else:
            vprev = generate_up_to(args.from_m, force=args.force)[-1]
        children, _, _ = lift_fibers(vprev.as_array())
        out = PermClass.from_array("V", args.from_m + 1, children)
    _print_class(out, args.format)
    return 0


def _cmd_project(args) -> int:
    theta = Permutation.parse(args.perm)
    print(project(theta).one_line())
    return 0


def _cmd_tau(args) -> int:
    alpha = parse_fraction(args.alpha)
    print(tau_from_alpha(args.m, alpha).one_line())
    return 0


def _cmd_farey(args) -> int:
    terms = farey_sequence(args.m)
    intervals = farey_intervals(args.m)
    if args.format == "json":
        doc = {
            "m": args.m,
            "terms": [fraction_to_json(t) for t in terms],
            "intervals": [
                {"lo": fraction_to_json(iv.lo), "hi": fraction_to_json(iv.hi), "index": iv.index}
                for iv in intervals
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(" ".join(format_fraction(t) for t in terms))
        for iv in intervals:
            print(str(iv))
    return 0


def _cmd_tree(args) -> int:
    docs = []
    if args.kind in ("gen", "both"):
        docs.append(export_tree(build_gen_tree(args.depth), args.format, args.with_y_levels))
    if args.kind in ("farey", "both"):
        docs.append(export_tree(build_farey_tree(args.depth), args.format))
    if args.format == "json" and args.kind == "both":
        print(json.dumps({"gen": json.loads(docs[0]), "farey": json.loads(docs[1])}, indent=2))
    else:
        print("\n".join(docs))
    return 0


def _cmd_verify(args) -> int:
    records = verify_theorems(args.m_max)
    records += verify_invariants(args.m_max, samples=args.samples, seed=args.seed)
    return _print_report(records, args.format)


def _cmd_verify_tree(args) -> int:
    return _print_report(check_isomorphism(args.depth), args.format)


def _cmd_sosrec(args) -> int:
    found = enumerate_sos_recurrence(args.m)
    v_inverses = PermClass("inv(V)", args.m, (inverse(p) for p in enumerate_class("V", args.m)))
    doc = {
        "m": args.m,
        "recurrence_count": len(found),
        "sos_count": len(v_inverses),
        "recurrence_contains_sos": set(v_inverses.members) <= set(found.members),
        "sets_equal": found == v_inverses,
        "recurrence_only": [p.one_line() for p in found if p not in set(v_inverses.members)],
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"m={doc['m']}: recurrence solutions {doc['recurrence_count']}, "
              f"Sos permutations {doc['sos_count']}, equal: {doc['sets_equal']}")
        for line in doc["recurrence_only"]:
            print(f"recurrence-only: {line}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soslift",
        description="Enumerate, lift, and cross-verify the inverses of Sos permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate a permutation class")
    p.add_argument("--set", required=True, choices=LABELS)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="brute")
    p.add_argument("--format", choices=("oneline", "json"), default="oneline")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("lift", help="lift the class V by one degree or recurse from degree 1")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--from-m", type=int, help="lift V of this degree one step")
    group.add_argument("--to-m", type=int, help="run the recursion up to this degree")
    p.add_argument("--input", help="JSON-lines file holding V of degree --from-m")
    p.add_argument("--force", action="store_true", help="allow degrees above 500")
    p.add_argument("--format", choices=("oneline", "json"), default="oneline")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("project", help="map a class-V permutation to its degree-(m-1) parent")
    p.add_argument("--perm", required=True)
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("tau", help="print tau for a rational angle")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", required=True, help='fraction "p/q"')
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("farey", help="print the order-m Farey sequence and intervals")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_farey)

    p = sub.add_parser("tree", help="export the generation and/or interval tree")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--kind", choices=("gen", "farey", "both"), default="gen")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--with-y-levels", action="store_true",
                   help="interleave the lifted fixed-point rows (generation tree only)")
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("verify", help="run the theorem suite and formula invariants")
    p.add_argument("--m-max", type=int, default=8)
    p.add_argument("--samples", type=int, default=200, help="random rationals per degree")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("verify-tree", help="check the tree isomorphism level by level")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify_tree)

    p = sub.add_parser("sosrec", help="explore the recurrence predicate exhaustively")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_sosrec)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

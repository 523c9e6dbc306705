"""Command-line front end.

Exit status: 0 on success, 2 when the input is rejected (parse or
validation error, unsupported field), 3 when a computed result fails one of
its own consistency checks.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from .complex import hh0, hh1_report
from .dualext import DualExtension, dualext_report
from .errors import QHHError, VerificationError
from .field import Field
from .fundgroup import extended_tree, pi1_report, theta
from .lie import lie_presentation
from .complex import hh1
from .parser import load
from .proptest import DEFAULT_SEED, SUITES, default_seed, run_suite
from .quiver import SubalgebraPair
from .radzero import cross_check, radical_square_zero_pairs, radzero_report
from .relative import relative_hh1

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3


def _ambient(obj):
    return obj.ambient if isinstance(obj, SubalgebraPair) else obj


def _pair(obj, command: str) -> SubalgebraPair:
    if not isinstance(obj, SubalgebraPair):
        raise _InputError(f"'{command}' needs an input with a subalgebra section")
    return obj


class _InputError(QHHError):
    pass


# -- commands --------------------------------------------------------------------

def cmd_basis(args) -> dict:
    alg = _ambient(load(args.file, args.field))
    return {"algebra": alg.name, "field": alg.field.describe(), "dim": alg.dim,
            "relations": [str(r) for r in alg.relations],
            "basis": [str(p) for p in alg.basis]}


def cmd_hh1(args) -> dict:
    alg = _ambient(load(args.file, args.field))
    out = hh1_report(alg)
    out["dim_hh0"] = hh0(alg)["dim"]
    out["field"] = alg.field.describe()
    return out


def cmd_hh1rel(args) -> dict:
    pair = _pair(load(args.file, args.field), "hh1rel")
    return relative_hh1(pair).report()


def cmd_lie(args) -> dict:
    obj = load(args.file, args.field)
    alg = _ambient(obj)
    out = {"absolute": lie_presentation(hh1(alg), alg).analysis()}
    if isinstance(obj, SubalgebraPair):
        out["relative"] = relative_hh1(obj).lie.analysis()
    return out


def cmd_radzero(args) -> dict:
    if args.exhaustive:
        total, bad = 0, []
        for pair in radical_square_zero_pairs(args.max_vertices, args.max_arrows, args.field):
            total += 1
            res = cross_check(pair)
            if res["crosscheck"] != "ok":
                bad.append({"pair": str(pair), "result": res})
        out = {"max_vertices": args.max_vertices, "max_arrows": args.max_arrows,
               "pairs": total, "mismatches": bad}
        if bad:
            raise _Verify(out)
        return out
    out = radzero_report(_pair(load(args.file, args.field), "radzero"))
    if out["crosscheck"] != "ok":
        raise _Verify(out)
    return out


def cmd_dualext(args) -> dict:
    B = _ambient(load(args.file_b, args.field))
    A = _ambient(load(args.file_a, args.field))
    out = dualext_report(DualExtension(B, A))
    ex = out["exact_sequence"]
    if not (ex["corrected_identity"] and ex["J_is_ideal"]):
        raise _Verify(out)
    return out


def cmd_pi1(args) -> dict:
    pair = _pair(load(args.file, args.field), "pi1")
    out = pi1_report(pair, args.order, args.basepoint)
    if not out["pullback_checks"]["ok"]:
        raise _Verify(out)
    return out


def cmd_theta(args) -> dict:
    pair = _pair(load(args.file, args.field), "theta")
    data = extended_tree(pair, args.order)
    v = theta(args.generator, pair, data)
    return {"generator": args.generator, "generators": data.generators, "image": v.to_json()}


def cmd_proptest(args) -> dict:
    field = args.field if args.field_given else None
    out = run_suite(args.suite, args.cases, args.seed, field)
    if out["failed"]:
        raise _Verify(out)
    return out


class _Verify(Exception):
    """Carries a report whose own checks failed."""

    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


# -- output ----------------------------------------------------------------------

def to_json(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_text(report, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(report, dict):
        for k in sorted(report):
            v = report[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(to_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(report, list):
        for v in report:
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.append(to_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(report))
    return "\n".join(lines) + ("\n" if indent == 0 else "")


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v == [] or v == {}:
        return "(none)"
    return str(v)


# -- parser ----------------------------------------------------------------------

def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except QHHError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=None,
                        help="q (rationals, default) or fp:P for the prime field with P elements")
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--output", "-o", help="write the report to this file")

    p = argparse.ArgumentParser(prog="qhh", description=(
        "First Hochschild cohomology of monomial algebras, relative to monomial subalgebras."))
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, files=("file",)):
        s = sub.add_parser(name, parents=[common], help=help_text)
        for f in files:
            s.add_argument(f)
        s.set_defaults(func=fn)
        return s

    add("basis", cmd_basis, "path basis of the algebra")
    add("hh1", cmd_hh1, "HH^0 and HH^1 of the algebra")
    add("hh1rel", cmd_hh1rel, "HH^1 relative to the subalgebra")
    add("lie", cmd_lie, "Lie structure of HH^1 (and of the relative HH^1 for pairs)")
    s = add("radzero", cmd_radzero, "closed form for radical-square-zero pairs", ())
    s.add_argument("file", nargs="?")
    s.add_argument("--exhaustive", action="store_true",
                   help="cross-check every pair up to isomorphism within the bounds")
    s.add_argument("--max-vertices", type=int, default=4)
    s.add_argument("--max-arrows", type=int, default=5)
    add("dualext", cmd_dualext, "dual extension of B and A (give A, not its opposite)",
        ("file_b", "file_a"))
    for name, fn, h in (("pi1", cmd_pi1, "contracted fundamental group and the theta map"),
                        ("theta", cmd_theta, "theta image of one contracted generator")):
        s = add(name, fn, h)
        s.add_argument("--order", choices=("bfs", "dfs"), default="bfs",
                       help="traversal used for the spanning forest")
        if name == "pi1":
            s.add_argument("--basepoint", type=int, default=None)
        else:
            s.add_argument("--generator", required=True)
    s = add("proptest", cmd_proptest, "run a seeded property suite", ())
    s.add_argument("suite", choices=sorted(SUITES))
    s.add_argument("--seed", type=int, default=None,
                   help=f"default: $QHH_SEED, else {DEFAULT_SEED}")
    s.add_argument("--cases", type=int, default=100)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    args.field_given = args.field is not None
    if args.field is None:
        args.field = Field()
    if getattr(args, "seed", None) is None and args.command == "proptest":
        args.seed = default_seed()
    if args.command == "radzero" and not args.exhaustive and not args.file:
        print("error: radzero needs a file unless --exhaustive is given", file=sys.stderr)
        return EXIT_INPUT
    status = EXIT_OK
    try:
        report = args.func(args)
    except _Verify as v:
        report, status = v.report, EXIT_VERIFY
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (QHHError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    text = to_json(report) if args.json else to_text(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

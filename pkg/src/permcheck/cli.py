"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 resource cap exceeded, 3 a checked
statement was violated (or a verify-paper check failed).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bitset
from .catalog import build, parse_generators, parse_group_name
from .classify import FLAGS, classify
from .config import Limits
from .errors import CapExceeded, InputError, PermcheckError
from .lattice import all_subgroups, generated_subgroup
from .permutability import perm4, permutes, product_set
from .survey import rows_to_csv, run_survey
from .verify import verify_paper

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_VIOLATION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_global(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--max-order-cap", type=int, default=d(None),
                   help="largest group order closure may build (default 2000, env PERMCHECK_CAP)")
    p.add_argument("--lattice-cap", type=int, default=d(None),
                   help="largest group order whose lattice is enumerated (default 360)")
    p.add_argument("--format", default=d(None), help="json, csv, text (lattice: json, dot)")
    p.add_argument("--jobs", type=int, default=d(None), help="worker processes (default: cores)")
    p.add_argument("--seed", type=int, default=d(None), help="reserved; all algorithms are deterministic")
    p.add_argument("--timings", action="store_true", default=d(False),
                   help="include per-flag elapsed_ms in reports (breaks byte-identical output)")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="permcheck", description=__doc__.splitlines()[0])
    _add_global(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify one group")
    p.add_argument("--group", required=True, help="S3, A5, D12, C7, Q8, C2xC2, file:path")

    p = sub.add_parser("check", help="pairwise perm4 / permutes verdict for <H> and <K>")
    p.add_argument("--group", required=True)
    p.add_argument("--h", action="append", required=True, metavar="ELEMENTS",
                   help="generator(s) of H; repeat or separate with ';'")
    p.add_argument("--k", action="append", required=True, metavar="ELEMENTS")

    p = sub.add_parser("lattice", help="export the subgroup lattice as JSON or DOT")
    p.add_argument("--group", required=True)

    p = sub.add_parser("survey", help="classify and audit the small-group corpus")
    p.add_argument("--max-order", type=int, required=True)

    sub.add_parser("verify-paper", help="reproduce the worked examples and property sweeps")

    for name, sp in sub.choices.items():
        _add_global(sp, suppress=True)
    return parser


def _limits(args) -> Limits:
    return Limits.from_env().with_overrides(max_order=args.max_order_cap, lattice_cap=args.lattice_cap)


def _fmt(args, default: str, allowed: tuple[str, ...]) -> str:
    f = args.format or default
    if f not in allowed:
        raise InputError(f"--format must be one of {', '.join(allowed)} for {args.command}")
    return f


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_classify(args, out) -> int:
    fmt = _fmt(args, "json", ("json", "csv", "text"))
    limits = _limits(args)
    spec = parse_group_name(args.group)
    report = classify(build(spec, limits), spec.name, limits)
    d = report.to_dict(timings=args.timings)
    if fmt == "json":
        out.write(_dump(d) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        for row in rows_to_csv([d]):
            w.writerow(row)
    else:
        out.write(f"{d['group']}: order {d['order']}, {d['num_subgroups']} subgroups\n")
        for f in FLAGS:
            out.write(f"  {f:<14}{str(d['flags'][f]).lower()}\n")
        for w in d["witnesses"]:
            out.write(f"  {w['claim']} fails: {w['note']}; chain {w['chain']}\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    limits = _limits(args)
    spec = parse_group_name(args.group)
    g = build(spec, limits)
    h = generated_subgroup(g, bitset.from_indices(parse_generators(g, args.h)))
    k = generated_subgroup(g, bitset.from_indices(parse_generators(g, args.k)))
    v = perm4(g, h, k)
    d = {"group": spec.name, "H": h.one_based(), "K": k.one_based(), "perm4": v.holds,
         "join_order": v.join.size, "product_order": v.product.size,
         "permutes": permutes(g, h, k), "hk_order": product_set(h, k).size}
    out.write(_dump(d) + "\n")
    return EXIT_OK


def cmd_lattice(args, out) -> int:
    fmt = _fmt(args, "json", ("json", "dot"))
    limits = _limits(args)
    spec = parse_group_name(args.group)
    lat = all_subgroups(build(spec, limits), limits)
    out.write(lat.to_dot(spec.name) if fmt == "dot" else _dump(lat.to_json_obj()) + "\n")
    return EXIT_OK


def cmd_survey(args, out) -> int:
    fmt = _fmt(args, "json", ("json", "csv", "text"))
    if args.max_order < 1:
        raise InputError("--max-order must be >= 1")
    res = run_survey(args.max_order, args.jobs, _limits(args), timings=args.timings)
    if fmt == "json":
        out.write(_dump(res.to_dict()) + "\n")
    else:
        table = rows_to_csv(res.rows)
        if fmt == "csv":
            w = csv.writer(out, lineterminator="\n")
            for row in table:
                w.writerow(row)
        else:
            widths = [max(len(r[i]) for r in table) for i in range(len(table[0]))]
            for row in table:
                out.write("  ".join(c.ljust(wd) for c, wd in zip(row, widths)).rstrip() + "\n")
        total = sum(res.checked.values())
        out.write(f"# audit: {total} instances checked, {len(res.violations)} violations\n")
        for v in res.violations:
            out.write(f"# VIOLATION {json.dumps(v)}\n")
    return EXIT_OK if res.ok else EXIT_VIOLATION


def cmd_verify_paper(args, out) -> int:
    fmt = _fmt(args, "text", ("json", "text"))
    res = verify_paper(jobs=args.jobs, limits=_limits(args))
    if fmt == "json":
        out.write(_dump(res.to_dict()) + "\n")
    else:
        for c in res.checks:
            mark = "PASS" if c.passed else "FAIL"
            out.write(f"{mark}  {c.id:<40} expected={c.expected} actual={c.actual}\n")
        s = res.summary
        out.write(f"{s['passed']}/{s['total']} checks passed\n")
    return EXIT_OK if res.ok else EXIT_VIOLATION


COMMANDS = {"classify": cmd_classify, "check": cmd_check, "lattice": cmd_lattice,
            "survey": cmd_survey, "verify-paper": cmd_verify_paper}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except CapExceeded as exc:
        print(f"permcheck: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PermcheckError, OSError, ValueError) as exc:
        print(f"permcheck: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run_to_string(argv) -> tuple[int, str]:
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: reduce expressions, run suites, move presentations."""

from __future__ import annotations

import argparse
import sys

from . import presfile
from .errors import QsgError
from .parser import parse
from .presentations import PRESENTATIONS, presentation, resolver_for
from .printer import element_str
from .suites import SUITE_NAMES, run_suite

# what each built-in system presents, for the listing
_PRESENTATION_TAGS = {
    "glq": "Eq. (1)",
    "glq_localized": "Eq. (1), localized at a, d",
    "glh": "Eq. (4)",
    "gamma": "Eqs. (15)-(16)",
    "oneforms": "Eqs. (39)/(41)/(42)",
    "weyl": "Eqs. (52)-(53)",
    "derivatives": "Eq. (53)",
}


def cmd_reduce(args) -> int:
    rs = presentation(args.presentation)
    elem = parse(args.expr, resolver_for(rs))
    print(element_str(rs.normalize(elem)))
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, jobs=args.jobs)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.render())
    return 0 if report.ok else 1


def cmd_presentations(args) -> int:
    if args.action == "list":
        for name in PRESENTATIONS:
            rs = presentation(name)
            tag = _PRESENTATION_TAGS.get(name, "")
            print(f"{name:14s} {len(rs.table):3d} generators "
                  f"{len(rs.rules):4d} rules   {tag}")
        return 0
    if args.name is None:
        print(f"qsg: presentations {args.action} needs a "
              f"{'name' if args.action == 'export' else 'file'}",
              file=sys.stderr)
        return 2
    if args.action == "export":
        sys.stdout.write(presfile.dumps(presentation(args.name)))
        return 0
    with open(args.name, encoding="utf-8") as fh:
        rs = presfile.loads(fh.read())
    localized = f", localized at {', '.join(rs.localized)}" if rs.localized else ""
    print(f"loaded {rs.name}: {len(rs.table)} generators, "
          f"{len(rs.rules)} rules{localized}")
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="qsg",
        description="Exact rewriting engine and verification suites for an "
                    "h-deformed quantum supergroup and its differential calculus.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="print the canonical normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--presentation", required=True, choices=tuple(PRESENTATIONS),
                   help="rule system to reduce against")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("verify", help="run one verification suite (or all)")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1,
                   help="run the sub-suites of 'all' in this many processes")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("presentations", help="list, export, or load rule systems")
    p.add_argument("action", nargs="?", default="list",
                   choices=("list", "export", "load"))
    p.add_argument("name", nargs="?",
                   help="presentation name (export) or file path (load)")
    p.set_defaults(fn=cmd_presentations)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (QsgError, OSError) as exc:
        print(f"qsg: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

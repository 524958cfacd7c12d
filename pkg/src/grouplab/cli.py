"""Command-line interface: ``grouplab check|predicate|structure|scan``.

Exit codes: 0 no violation, 2 a VIOLATION report was produced, 1 usage or
I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import core
from .catalog import CatalogError, load_catalog, load_group
from .classes import is_p_nilpotent, is_p_solvable, is_p_supersolvable
from .core import GroupError, is_normal, is_subnormal, subgroup_generated
from .embeddings import PREDICATES
from .groupfile import GroupFileError
from .perm import Permutation, PermutationError
from .reports import describe_group, format_reports
from .scan import scan
from .structure import (
    chief_series,
    derived_series,
    frattini,
    o_p,
    o_p_prime,
    o_upper_p,
    prime_divisors,
    sylow_conjugates,
    sylow_subgroup,
    upper_central_series,
)
from .theorems import CHECK_IDS, Setting, evaluate


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ids(text: str) -> list[str]:
    if text.lower() == "all":
        return list(CHECK_IDS)
    ids = [t.strip().upper() for t in text.split(",") if t.strip()]
    for t in ids:
        if t not in CHECK_IDS:
            raise UsageError(f"unknown theorem id {t!r}")
    return ids


def _primes(text: str | None, order: int | None = None):
    if text is None or text.lower() == "all":
        return None if order is None else prime_divisors(order)
    try:
        ps = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad prime list {text!r}") from None
    from .structure import is_prime

    for p in ps:
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
    return ps


def _group(spec: str, budget: int | None):
    if budget is not None:
        core.DEFAULT_ELEMENT_BUDGET = budget
    return load_group(spec)


def _write(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_check(args, out) -> int:
    G = _group(args.group, args.budget)
    ids = _ids(args.theorem)
    reports = []
    for p in _primes(args.p, G.order):
        s = Setting(G, p, args.subgroup_budget)
        reports.extend(evaluate(t, G, p, setting=s) for t in ids)
    text = format_reports(reports)
    out.write(text)
    _write(text, args.report)
    return 2 if any(r.verdict == "VIOLATION" for r in reports) else 0


def cmd_predicate(args, out) -> int:
    G = _group(args.group, args.budget)
    gens = [Permutation.parse(g, G.degree) for g in args.subgroup.split(",") if g.strip()]
    H = subgroup_generated(G, gens)
    name = args.name
    if name in ("normal", "subnormal"):
        holds = is_normal(H, G) if name == "normal" else is_subnormal(H, G)
        out.write(f"predicate: {name}\nsubgroup: {describe_group(H)}\nholds: {str(holds).lower()}\n")
        return 0
    if name not in PREDICATES:
        raise UsageError(f"unknown predicate {name!r}")
    fn = PREDICATES[name]
    v = fn(H, G, args.subgroup_budget) if name == "c-supplemented" else fn(H, G)
    w = v.witness
    if isinstance(w, tuple):
        witness = f"q={w[0]} Sylow {describe_group(w[1])}"
    elif isinstance(w, core.Group):
        witness = describe_group(w)
    elif w is None:
        witness = "-"
    else:
        witness = str(w)
    out.write(f"predicate: {name}\nsubgroup: {describe_group(H)}\ngroup: {describe_group(G)}\n"
              f"holds: {str(v.holds).lower()}\nwitness: {witness}\ndetail: {v.detail}\n")
    return 0


def cmd_structure(args, out) -> int:
    G = _group(args.group, args.budget)
    primes = prime_divisors(G.order)
    lines = [f"group: {G.name or args.group}", f"order: {G.order}"]
    show = args.show
    if show == "sylow":
        for p in primes:
            P = sylow_subgroup(G, p)
            lines.append(f"sylow.{p}: {describe_group(P)} conjugates {len(sylow_conjugates(G, p))}")
    elif show == "frattini":
        lines.append(f"frattini: {describe_group(frattini(G, args.subgroup_budget))}")
    elif show == "chief":
        cs = chief_series(G)
        lines.append(f"chief.factors: {cs.factor_orders()}")
        for i, T in enumerate(cs.terms):
            lines.append(f"chief.{i}: {describe_group(T)}")
    elif show == "series":
        lines.append(f"derived: {[T.order for T in derived_series(G).terms]}")
        lines.append(f"upper_central: {[T.order for T in upper_central_series(G).terms]}")
    elif show == "ops":
        for p in primes:
            lines.append(f"O_{p}: {describe_group(o_p(G, p))}")
            lines.append(f"O_{p}': {describe_group(o_p_prime(G, p))}")
            lines.append(f"O^{p}: {describe_group(o_upper_p(G, p))}")
            lines.append(f"classes.{p}: p-solvable={str(is_p_solvable(G, p).holds).lower()} "
                         f"p-supersolvable={str(is_p_supersolvable(G, p).holds).lower()} "
                         f"p-nilpotent={str(is_p_nilpotent(G, p).holds).lower()}")
    out.write("\n".join(lines) + "\n")
    return 0


def cmd_scan(args, out) -> int:
    if args.budget is not None:
        core.DEFAULT_ELEMENT_BUDGET = args.budget
    entries = load_catalog(args.catalog)
    ids = _ids(args.theorems)
    result = scan(entries, ids, _primes(args.p), jobs=args.jobs, budget=args.subgroup_budget)
    _write(format_reports(result.reports, result.errors), args.report)
    summary = result.summary
    out.write(f"groups: {len(entries)}\nreports: {len(result.reports)}\nerrors: {len(result.errors)}\n")
    for k, v in summary.items():
        out.write(f"{k}: {v}\n")
    if result.violations:
        return 2
    return 1 if result.errors else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grouplab", description="Finite permutation groups and embedding criteria.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p):
        p.add_argument("--budget", type=int, default=None, help="element budget for group generation")
        p.add_argument("--subgroup-budget", type=int, default=None,
                       help="largest group order for full subgroup enumeration")

    p = sub.add_parser("check", help="evaluate criteria on one group")
    p.add_argument("--group", required=True, help="group file path or builtin:<name>")
    p.add_argument("--theorem", default="all")
    p.add_argument("--p", default="all")
    p.add_argument("--report")
    common(p)

    p = sub.add_parser("predicate", help="evaluate an embedding predicate")
    p.add_argument("name")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True, help='comma-separated generators, e.g. "(1 2),(3 4)"')
    common(p)

    p = sub.add_parser("structure", help="show structural data")
    p.add_argument("--group", required=True)
    p.add_argument("--show", required=True, choices=["sylow", "frattini", "chief", "series", "ops"])
    common(p)

    p = sub.add_parser("scan", help="scan a catalog directory")
    p.add_argument("--catalog", required=True)
    p.add_argument("--theorems", default="all")
    p.add_argument("--p", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report")
    common(p)
    return parser


COMMANDS = {"check": cmd_check, "predicate": cmd_predicate, "structure": cmd_structure, "scan": cmd_scan}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 1
    except (OSError, CatalogError, GroupFileError, PermutationError, GroupError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

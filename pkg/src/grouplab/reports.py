"""Plain-text report records: ``key: value`` lines, records separated by blank lines."""

from __future__ import annotations

from dataclasses import replace

from .core import Group, _small_generating_set
from .structure import SeriesRecord
from .theorems import Check, TheoremReport


def describe_group(H: Group) -> str:
    els = H.universe.elements
    gens = ", ".join(els[i].cycle_string() for i in _small_generating_set(H)) or "()"
    return f"order {H.order} <{gens}>"


def render_witness(w) -> str:
    if w is None:
        return "-"
    if isinstance(w, Group):
        return describe_group(w)
    if isinstance(w, SeriesRecord):
        return f"{w.kind} series factor orders {w.factor_orders()}"
    if isinstance(w, tuple):
        if len(w) == 2 and all(isinstance(x, Group) for x in w):
            lo, hi = w
            if lo <= hi:
                return f"chief factor of order {hi.order // lo.order} ({lo.order} -> {hi.order})"
        return "; ".join(render_witness(x) for x in w)
    if isinstance(w, list):
        return "[" + ", ".join(render_witness(x) for x in w) + "]"
    return str(w)


def rendered(report: TheoremReport) -> TheoremReport:
    """Copy of ``report`` whose witnesses are strings (picklable, group-independent)."""
    def fix(c: Check) -> Check:
        return Check(c.description, c.status, c.witness if isinstance(c.witness, str) else render_witness(c.witness))

    return replace(report, hypotheses=[fix(h) for h in report.hypotheses], conclusion=fix(report.conclusion))


def report_record(report: TheoremReport, timings: bool = False) -> list[tuple[str, str]]:
    r = rendered(report)
    rows = [("group", r.group), ("order", str(r.order)), ("prime", str(r.prime)), ("theorem", r.theorem)]
    for i, h in enumerate(r.hypotheses, start=1):
        rows.append((f"hypothesis.{i}", f"{h.status} | {h.description} | {h.witness}"))
    rows.append(("conclusion", f"{r.conclusion.status} | {r.conclusion.description} | {r.conclusion.witness}"))
    rows.append(("verdict", r.verdict))
    if timings:
        rows.append(("wall_time", f"{r.wall_time:.3f}"))
    return rows


def format_records(records: list[list[tuple[str, str]]]) -> str:
    blocks = ["\n".join(f"{k}: {v}" for k, v in rec) for rec in records]
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def format_reports(reports: list[TheoremReport], errors: list[tuple[str, str]] = (), timings: bool = False) -> str:
    records = [report_record(r, timings) for r in reports]
    records += [[("group", name), ("error", msg)] for name, msg in errors]
    return format_records(records)


def parse_records(text: str) -> list[dict[str, str]]:
    out = []
    for block in text.strip().split("\n\n"):
        if not block.strip():
            continue
        rec = {}
        for line in block.splitlines():
            key, _, value = line.partition(": ")
            rec[key] = value
        out.append(rec)
    return out

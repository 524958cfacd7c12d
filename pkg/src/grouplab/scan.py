"""Catalog scans: every (group, prime, criterion) triple, optionally across processes."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .catalog import CatalogEntry
from .core import Group
from .reports import rendered
from .structure import prime_divisors
from .theorems import CHECK_IDS, Setting, TheoremReport, evaluate

VERDICTS = ("confirmed", "vacuous", "VIOLATION", "undecided")


@dataclass
class ScanResult:
    reports: list[TheoremReport] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(r.verdict for r in self.reports)
        return {v: counts.get(v, 0) for v in VERDICTS}

    @property
    def violations(self) -> list[TheoremReport]:
        return [r for r in self.reports if r.verdict == "VIOLATION"]


@lru_cache(maxsize=8)
def _build(entry: CatalogEntry) -> Group:
    return entry.build()


def _run_item(entry, prime: int, theorem_ids: tuple[str, ...], budget):
    G = entry if isinstance(entry, Group) else _build(entry)
    s = Setting(G, prime, budget)
    return [rendered(evaluate(tid, G, prime, setting=s)) for tid in theorem_ids]


def _entry_name(entry) -> str:
    return entry.name or "group" if isinstance(entry, Group) else entry.name


def scan(catalog, theorem_ids=None, primes=None, jobs: int = 1, budget: int | None = None) -> ScanResult:
    """Evaluate each criterion for every catalog group and each prime.

    ``primes=None`` means every prime divisor of each group's order. Groups
    that fail to build are recorded in ``errors`` and the scan continues.
    Reports come back sorted by (group, prime, criterion).
    """
    ids = tuple(CHECK_IDS if theorem_ids is None else [str(getattr(t, "value", t)).upper() for t in theorem_ids])
    unknown = [t for t in ids if t not in CHECK_IDS]
    if unknown:
        raise ValueError(f"unknown theorem id {unknown[0]!r}")
    result = ScanResult()
    items = []
    for entry in catalog:
        try:
            G = entry if isinstance(entry, Group) else _build(entry)
        except Exception as exc:  # recorded per entry, scan continues
            result.errors.append((_entry_name(entry), f"{type(exc).__name__}: {exc}"))
            continue
        ps = prime_divisors(G.order) if primes is None else list(primes)
        items.extend((entry, p) for p in ps)
    if not ids or not items:
        return result

    def collect(entry, outcome):
        if isinstance(outcome, Exception):
            result.errors.append((_entry_name(entry), f"{type(outcome).__name__}: {outcome}"))
        else:
            result.reports.extend(outcome)

    if jobs <= 1 or any(isinstance(e, Group) for e, _ in items):
        for entry, p in items:
            try:
                collect(entry, _run_item(entry, p, ids, budget))
            except Exception as exc:
                collect(entry, exc)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [(entry, pool.submit(_run_item, entry, p, ids, budget)) for entry, p in items]
            for entry, fut in futures:
                try:
                    collect(entry, fut.result())
                except Exception as exc:
                    collect(entry, exc)
    result.reports.sort(key=TheoremReport.sort_key)
    result.errors = sorted(set(result.errors))
    return result

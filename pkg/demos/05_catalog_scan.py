"""
Scanning a catalog for counterexamples
======================================

Every criterion is evaluated on every group for every prime divisor. A
``VIOLATION`` would mean all hypotheses hold while the conclusion fails.
"""

import sys
import time
from pathlib import Path

from grouplab.catalog import builtin_catalog, load_catalog
from grouplab.scan import scan

here = Path(__file__).resolve().parent.parent / "fixtures"
entries = load_catalog(here) if here.is_dir() else builtin_catalog()
if "--quick" in sys.argv:
    entries = [e for e in entries if (e.expected_order or 0) <= 48]

start = time.perf_counter()
result = scan(entries)
print(f"{len(entries)} groups, {len(result.reports)} reports in {time.perf_counter() - start:.1f}s")
print(result.summary)

by_theorem = {}
for r in result.reports:
    by_theorem.setdefault(r.theorem, {}).setdefault(r.verdict, 0)
    by_theorem[r.theorem][r.verdict] += 1
for tid, counts in by_theorem.items():
    print(f"  {tid:18s} {counts}")

"""Group-class predicates: solvable, nilpotent, supersolvable and their p-local versions.

Every predicate returns a :class:`ClassVerdict` whose witness certifies the
answer: the chief series (or an offending chief factor) for the
chief-factor classes, the normal p-complement for p-nilpotence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .core import Group
from .structure import (
    _require_prime,
    chief_series,
    derived_series,
    is_p_power,
    is_prime,
    o_p_prime,
    p_part,
    upper_central_series,
)


@dataclass
class ClassVerdict:
    predicate: str
    subject: str
    prime: int | None
    holds: bool
    witness: Any = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _label(G: Group) -> str:
    return G.name or f"order {G.order}"


def _chief_factors(G: Group):
    series = chief_series(G)
    return series, list(zip(series.terms, series.terms[1:]))


def is_solvable(G: Group) -> ClassVerdict:
    series = derived_series(G)
    holds = series.terms[-1].order == 1
    detail = "derived series reaches 1" if holds else f"derived series stops at order {series.terms[-1].order}"
    return ClassVerdict("solvable", _label(G), None, holds, series, detail)


def is_p_solvable(G: Group, p: int) -> ClassVerdict:
    _require_prime(p)
    series, factors = _chief_factors(G)
    for lo, hi in factors:
        k = hi.order // lo.order
        if k % p == 0 and not is_p_power(k, p):
            return ClassVerdict("p-solvable", _label(G), p, False, (lo, hi),
                                f"chief factor of order {k} is neither a {p}-group nor a {p}'-group")
    return ClassVerdict("p-solvable", _label(G), p, True, series, "all chief factors are p- or p'-groups")


def is_p_nilpotent(G: Group, p: int) -> ClassVerdict:
    _require_prime(p)
    K = o_p_prime(G, p)
    target = G.order // p_part(G.order, p)
    holds = K.order == target
    detail = f"O_p'(G) has order {K.order}, p'-part is {target}"
    return ClassVerdict("p-nilpotent", _label(G), p, holds, K, detail)


def is_p_supersolvable(G: Group, p: int) -> ClassVerdict:
    _require_prime(p)
    series, factors = _chief_factors(G)
    for lo, hi in factors:
        k = hi.order // lo.order
        if k % p == 0 and k != p:
            return ClassVerdict("p-supersolvable", _label(G), p, False, (lo, hi),
                                f"chief factor of order {k} is divisible by {p} but not of order {p}")
    return ClassVerdict("p-supersolvable", _label(G), p, True, series,
                        "every p-divisible chief factor has order p")


def is_nilpotent(G: Group) -> ClassVerdict:
    series = upper_central_series(G)
    holds = series.terms[-1].mask == G.mask
    return ClassVerdict("nilpotent", _label(G), None, holds, series,
                        "upper central series reaches G" if holds else
                        f"upper central series stops at order {series.terms[-1].order}")


def is_supersolvable(G: Group) -> ClassVerdict:
    series, factors = _chief_factors(G)
    for lo, hi in factors:
        k = hi.order // lo.order
        if not is_prime(k):
            return ClassVerdict("supersolvable", _label(G), None, False, (lo, hi),
                                f"chief factor of order {k}")
    return ClassVerdict("supersolvable", _label(G), None, True, series, "all chief factors have prime order")


def recheck(verdict: ClassVerdict, G: Group) -> bool:
    """Re-validate a verdict's witness from scratch; True when it certifies ``holds``."""
    from .core import is_normal

    name, p, w = verdict.predicate, verdict.prime, verdict.witness
    if name == "p-nilpotent":
        ok = w <= G and is_normal(w, G) and w.order % p != 0
        return ok and (w.order == G.order // p_part(G.order, p)) == verdict.holds
    if isinstance(w, tuple):  # offending chief factor
        lo, hi = w
        k = hi.order // lo.order
        if not (is_normal(lo, G) and is_normal(hi, G) and lo < hi) or verdict.holds:
            return False
        if name == "p-solvable":
            return k % p == 0 and not is_p_power(k, p)
        if name == "p-supersolvable":
            return k % p == 0 and k != p
        if name == "supersolvable":
            return not is_prime(k)
        return False
    terms = w.terms
    if name in ("solvable", "nilpotent"):
        end = terms[-1]
        return verdict.holds == (end.order == 1 if name == "solvable" else end.mask == G.mask)
    ks = [terms[i + 1].order // terms[i].order for i in range(len(terms) - 1)]
    if name == "p-solvable":
        return verdict.holds and all(k % p or is_p_power(k, p) for k in ks)
    if name == "p-supersolvable":
        return verdict.holds and all(k % p or k == p for k in ks)
    if name == "supersolvable":
        return verdict.holds and all(is_prime(k) for k in ks)
    return False

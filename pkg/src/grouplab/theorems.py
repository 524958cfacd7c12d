"""Hypothesis search and conclusion checks for p-nilpotence / p-supersolvability criteria.

Each criterion is a list of hypotheses about a finite group G, a prime p
and a Sylow p-subgroup P, plus a conclusion (G is p-nilpotent or G is
p-supersolvable). :func:`evaluate` decides every hypothesis, records a
witness for each, and classifies the outcome:

* ``confirmed``  every hypothesis holds and so does the conclusion;
* ``vacuous``    some hypothesis fails;
* ``VIOLATION``  every hypothesis holds but the conclusion fails;
* ``undecided``  a hypothesis needed a subgroup enumeration beyond budget.

Hypotheses run cheapest-first; once one fails the rest are ``skipped``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Callable

from .classes import is_p_nilpotent, is_p_solvable, is_p_supersolvable, is_solvable
from .core import (
    EnumerationTooLarge,
    Group,
    GroupTooLarge,
    all_subgroups,
    is_normal,
    maximal_subgroups,
    normal_closure,
    normalizer,
)
from .embeddings import (
    is_c_supplemented,
    is_pronormal,
    is_s_permutable,
    is_s_semipermutable,
    is_weakly_h_subgroup,
)
from .structure import (
    _require_prime,
    all_normal_subgroups,
    derived_subgroup,
    frattini,
    is_p_power,
    nilpotency_class,
    o_upper_p,
    prime_divisors,
    quotient,
    supersolvable_hypercentre,
    sylow_conjugates,
    sylow_subgroup,
)


class TheoremId(str, Enum):
    MAIN = "MAIN"
    XU_LI = "XU_LI"
    SPECIAL_NILP = "SPECIAL_NILP"
    ABELIAN_OBS = "ABELIAN_OBS"
    LIU_YU = "LIU_YU"
    LIU_YU_SPERM = "LIU_YU_SPERM"
    LIU_YU_PSUP = "LIU_YU_PSUP"
    CHEN = "CHEN"
    CHEN_CSUP = "CHEN_CSUP"
    CHEN_CSUP_PSUP = "CHEN_CSUP_PSUP"


class LemmaId(str, Enum):
    QUOTIENT_IMAGE = "QUOTIENT_IMAGE"          # HN/N stays s-semipermutable in G/N
    NORMALIZED_BY_OP = "NORMALIZED_BY_OP"      # H & N normalized by O^p(G)
    RESTRICTION = "RESTRICTION"                # s-semipermutable in every K >= H
    CLOSURE_SOLVABLE = "CLOSURE_SOLVABLE"      # H^G solvable
    SPERM_ORDER_D = "SPERM_ORDER_D"            # order-|D| subgroups s-permutable => p-supersolvable
    CSUPP_HYPERCENTRE = "CSUPP_HYPERCENTRE"    # c-supplemented => P <= Z_U(G)
    CSUPP_PNILP = "CSUPP_PNILP"                # c-supplemented, p smallest => p-nilpotent


CHECK_IDS = [t.value for t in TheoremId] + [l.value for l in LemmaId]


@dataclass
class Check:
    description: str
    status: str  # "true", "false", "skipped" or "undecided"
    witness: Any = None

    @property
    def holds(self) -> bool:
        return self.status == "true"


@dataclass
class TheoremReport:
    group: str
    order: int
    prime: int
    theorem: str
    hypotheses: list[Check]
    conclusion: Check
    verdict: str
    wall_time: float = field(default=0.0, compare=False)

    def sort_key(self):
        return (self.group, self.prime, CHECK_IDS.index(self.theorem))


def _verdict(hyps: list[Check], concl: Check) -> str:
    if any(h.status == "undecided" for h in hyps) or concl.status == "undecided":
        return "undecided"
    if any(h.status == "false" for h in hyps):
        return "vacuous"
    return "confirmed" if concl.holds else "VIOLATION"


# ---------------------------------------------------------------- per-(G, p) setting


class Setting:
    """Lazily computed objects shared by every criterion for one (G, p)."""

    def __init__(self, G: Group, p: int, budget: int | None = None):
        _require_prime(p)
        self.G, self.p, self.budget = G, p, budget

    @cached_property
    def P(self):
        return sylow_subgroup(self.G, self.p)

    @cached_property
    def N(self):
        return normalizer(self.G, self.P)

    @cached_property
    def P_derived(self):
        return derived_subgroup(self.P)

    @cached_property
    def P_frattini(self):
        return frattini(self.P, self.budget)

    @cached_property
    def P_subgroups(self):
        return all_subgroups(self.P, self.budget)

    def p_subgroups_of_order(self, m: int):
        return [H for H in self.P_subgroups if H.order == m]

    def nonabelian_2group(self, X=None) -> bool:
        X = self.P if X is None else X
        return self.p == 2 and not X.is_abelian()

    def cyclic_of_order_4(self, X):
        orders = self.G.universe.orders
        return [C for C in all_subgroups(X, self.budget) if C.order == 4 and (orders[C.idx] == 4).any()]


def find_witness_main(G: Group, p: int, budget: int | None = None, setting: Setting | None = None):
    """First H (ascending) with P' <= H <= Phi(P) and H s-semipermutable in G, else None."""
    s = setting or Setting(G, p, budget)
    lo, hi = s.P_derived, s.P_frattini
    if not lo <= hi:
        return None
    for H in s.P_subgroups:
        if lo <= H <= hi and is_s_semipermutable(H, G):
            return H
    return None


def find_witness_xu_li(G: Group, p: int, budget: int | None = None, setting: Setting | None = None):
    """First H normal in P with H <= Phi(P), P/H of class at most p - 1, s-semipermutable in G."""
    s = setting or Setting(G, p, budget)
    P, hi = s.P, s.P_frattini
    for H in all_normal_subgroups(P):
        if not H <= hi:
            continue
        cls = nilpotency_class(quotient(P, H).group)
        if cls is None or cls > p - 1:
            continue
        if is_s_semipermutable(H, G):
            return H
    return None


def order_d_condition(s: Setting, X, ambient, predicate: Callable, min_order: int,
                      with_p_multiple: bool, proviso_order: int):
    """Search |D| ascending over p-powers in [min_order, |X|) for which every subgroup of X
    of order |D| (and p|D| when requested) satisfies ``predicate(H, ambient)``.

    When X is a nonabelian 2-group and |D| = ``proviso_order`` the cyclic
    subgroups of order 4 must satisfy the predicate too. Returns the first
    working |D| or None.
    """
    p = s.p
    subs = all_subgroups(X, s.budget)
    d = 1
    while d < X.order:
        if d >= min_order:
            wanted = {d, p * d} if with_p_multiple else {d}
            cands = [H for H in subs if H.order in wanted]
            if s.nonabelian_2group(X) and d == proviso_order:
                cands += s.cyclic_of_order_4(X)
            if all(predicate(H, ambient) for H in cands):
                return d
        d *= p
    return None


# ---------------------------------------------------------------- hypotheses


def _hyp_p_divides(s):
    return s.G.order % s.p == 0, s.G.order


def _hyp_gcd(s):
    g = math.gcd(s.G.order, s.p - 1)
    return g == 1, g


def _hyp_smallest_prime(s):
    primes = prime_divisors(s.G.order)
    return bool(primes) and primes[0] == s.p, primes[0] if primes else None


def _hyp_p_solvable(s):
    v = is_p_solvable(s.G, s.p)
    return v.holds, v.detail


def _hyp_p_abelian(s):
    return s.P.is_abelian(), s.P


def _hyp_derived_normal(s):
    return is_normal(s.P_derived, s.G), s.P_derived


def _hyp_n_psup(s):
    v = is_p_supersolvable(s.N, s.p)
    return v.holds, s.N


def _hyp_n_pnilp(s):
    v = is_p_nilpotent(s.N, s.p)
    return v.holds, s.N


def _hyp_main_h(s):
    H = find_witness_main(s.G, s.p, setting=s)
    return H is not None, H


def _hyp_xu_li_h(s):
    H = find_witness_xu_li(s.G, s.p, setting=s)
    return H is not None, H


def _d_hyp(pred, min_order, with_p_multiple, proviso_order):
    def hyp(s):
        d = order_d_condition(s, s.P, s.N, pred, min_order, with_p_multiple, proviso_order)
        return d is not None, d
    return hyp


def _hyp_chen_maximals(s):
    for M in maximal_subgroups(s.P, s.budget):
        if not is_weakly_h_subgroup(M, s.N):
            return False, M
    return True, None


HYPOTHESES: dict[str, tuple[str, Callable]] = {
    "p_divides": ("p divides |G|", _hyp_p_divides),
    "gcd": ("gcd(|G|, p - 1) = 1", _hyp_gcd),
    "smallest_prime": ("p is the smallest prime dividing |G|", _hyp_smallest_prime),
    "p_abelian": ("P is abelian", _hyp_p_abelian),
    "derived_normal": ("P' is normal in G", _hyp_derived_normal),
    "n_psup": ("N_G(P) is p-supersolvable", _hyp_n_psup),
    "n_pnilp": ("N_G(P) is p-nilpotent", _hyp_n_pnilp),
    "p_solvable": ("G is p-solvable", _hyp_p_solvable),
    "main_h": ("some H with P' <= H <= Phi(P) is s-semipermutable in G", _hyp_main_h),
    "xu_li_h": ("some H normal in P with H <= Phi(P) and P/H = Z_{p-1}(P/H) is s-semipermutable in G",
                _hyp_xu_li_h),
    "d_pronormal": ("some D with 1 < |D| < |P|: every subgroup of P of order |D| is pronormal in N_G(P)",
                    _d_hyp(lambda H, A: is_pronormal(H, A).holds, 2, False, 2)),
    "d_sperm": ("some D with 1 < |D| < |P|: every subgroup of P of order |D| is s-permutable in N_G(P)",
                _d_hyp(lambda H, A: is_s_permutable(H, A).holds, 2, False, 2)),
    "d_csupp": ("some D with 1 <= |D| < |P|: every subgroup of P of order |D| or p|D| "
                "is c-supplemented in N_G(P)", None),
    "chen_maximals": ("every maximal subgroup of P is a weakly H-subgroup of N_G(P)", _hyp_chen_maximals),
}


def _hyp_d_csupp(s):
    d = order_d_condition(s, s.P, s.N, lambda H, A: is_c_supplemented(H, A, s.budget).holds,
                          1, True, 1)
    return d is not None, d


HYPOTHESES["d_csupp"] = (HYPOTHESES["d_csupp"][0], _hyp_d_csupp)


def _concl_pnilp(s):
    v = is_p_nilpotent(s.G, s.p)
    return v.holds, v.witness


def _concl_psup(s):
    v = is_p_supersolvable(s.G, s.p)
    return v.holds, v.witness


CONCLUSIONS = {
    "pnilp": ("G is p-nilpotent", _concl_pnilp),
    "psup": ("G is p-supersolvable", _concl_psup),
}

# hypotheses listed cheapest first
THEOREMS: dict[TheoremId, tuple[list[str], str]] = {
    TheoremId.MAIN: (["n_psup", "p_solvable", "main_h"], "psup"),
    TheoremId.XU_LI: (["p_divides", "n_pnilp", "xu_li_h"], "pnilp"),
    TheoremId.SPECIAL_NILP: (["n_pnilp", "main_h"], "pnilp"),
    TheoremId.ABELIAN_OBS: (["p_abelian", "n_psup", "p_solvable"], "psup"),
    TheoremId.LIU_YU: (["p_divides", "gcd", "derived_normal", "d_pronormal"], "pnilp"),
    TheoremId.LIU_YU_SPERM: (["p_divides", "gcd", "xu_li_h", "d_sperm"], "pnilp"),
    TheoremId.LIU_YU_PSUP: (["p_solvable", "main_h", "d_sperm"], "psup"),
    TheoremId.CHEN: (["smallest_prime", "derived_normal", "chen_maximals"], "pnilp"),
    TheoremId.CHEN_CSUP: (["smallest_prime", "xu_li_h", "d_csupp"], "pnilp"),
    TheoremId.CHEN_CSUP_PSUP: (["p_solvable", "main_h", "d_csupp"], "psup"),
}


def _run_checks(s: Setting, items) -> list[Check]:
    out = []
    stop = False
    for desc, fn in items:
        if stop:
            out.append(Check(desc, "skipped"))
            continue
        try:
            holds, witness = fn(s)
        except (EnumerationTooLarge, GroupTooLarge) as exc:
            out.append(Check(desc, "undecided", str(exc)))
            stop = True
            continue
        out.append(Check(desc, "true" if holds else "false", witness))
        stop = not holds
    return out


def _conclude(s: Setting, desc: str, fn) -> Check:
    try:
        holds, witness = fn(s)
    except (EnumerationTooLarge, GroupTooLarge) as exc:
        return Check(desc, "undecided", str(exc))
    return Check(desc, "true" if holds else "false", witness)


def _label(G: Group) -> str:
    return G.name or f"order{G.order}"


def evaluate(theorem, G: Group, p: int, budget: int | None = None, setting: Setting | None = None) -> TheoremReport:
    """Decide every hypothesis of ``theorem`` for (G, p) and check the conclusion."""
    start = time.perf_counter()
    tid = theorem if isinstance(theorem, (TheoremId, LemmaId)) else _parse_id(theorem)
    s = setting or Setting(G, p, budget)
    if isinstance(tid, LemmaId):
        report = _evaluate_lemma(tid, s)
    else:
        hyp_keys, concl_key = THEOREMS[tid]
        hyps = _run_checks(s, [HYPOTHESES[k] for k in hyp_keys])
        concl = _conclude(s, *CONCLUSIONS[concl_key])
        report = TheoremReport(_label(G), G.order, p, tid.value, hyps, concl, _verdict(hyps, concl))
    report.wall_time = time.perf_counter() - start
    return report


def _parse_id(name: str):
    name = str(name).upper()
    if name in TheoremId.__members__:
        return TheoremId[name]
    if name in LemmaId.__members__:
        return LemmaId[name]
    raise ValueError(f"unknown theorem id {name!r}")


# ---------------------------------------------------------------- lemmas


def p_subgroups(G: Group, p: int, budget: int | None = None):
    """Every p-subgroup of G: the union of the subgroup lattices of the Sylow p-subgroups."""
    found = {}
    for P in sylow_conjugates(G, p):
        for H in all_subgroups(P, budget):
            found.setdefault(H.mask, H)
    return sorted(found.values(), key=Group.sort_key)


def _semipermutable_p_subgroups(s: Setting):
    if not hasattr(s, "_ssp"):
        s._ssp = [H for H in p_subgroups(s.G, s.p, s.budget) if is_s_semipermutable(H, s.G)]
    return s._ssp


def _lemma_quotient_image(s, H):
    for N in all_normal_subgroups(s.G):
        Q = quotient(s.G, N)
        if not is_s_semipermutable(Q.project(H), Q.group):
            return False, N
    return True, None


def _lemma_normalized_by_op(s, H):
    Op = o_upper_p(s.G, s.p)
    for N in all_normal_subgroups(s.G):
        if not is_p_power(N.order, s.p):
            continue
        if not Op <= normalizer(s.G, H & N):
            return False, N
    return True, None


def _lemma_restriction(s, H):
    for K in all_subgroups(s.G, s.budget):
        if H <= K and not is_s_semipermutable(H, K):
            return False, K
    return True, None


def _lemma_closure_solvable(s, H):
    C = normal_closure(s.G, H)
    return is_solvable(C).holds, C


_PER_H = {
    LemmaId.QUOTIENT_IMAGE: ("HN/N is s-semipermutable in G/N for every normal N", _lemma_quotient_image),
    LemmaId.NORMALIZED_BY_OP: ("H & N is normalized by O^p(G) for every normal p-subgroup N",
                               _lemma_normalized_by_op),
    LemmaId.RESTRICTION: ("H is s-semipermutable in every K with H <= K <= G", _lemma_restriction),
    LemmaId.CLOSURE_SOLVABLE: ("H^G is solvable", _lemma_closure_solvable),
}


def _evaluate_lemma(lid: LemmaId, s: Setting) -> TheoremReport:
    G, p = s.G, s.p
    if lid in _PER_H:
        desc, fn = _PER_H[lid]
        hyp_desc = "some p-subgroup H is s-semipermutable in G"

        def hyp(_s):
            hs = _semipermutable_p_subgroups(_s)
            return bool(hs), len(hs)

        hyps = _run_checks(s, [(hyp_desc, hyp)])

        def concl(_s):
            if not hyps[0].holds:
                return True, 0
            for H in _semipermutable_p_subgroups(_s):
                ok, w = fn(_s, H)
                if not ok:
                    return False, (H, w)
            return True, len(_semipermutable_p_subgroups(_s))

        conclusion = _conclude(s, f"for every such H: {desc}", concl)
        return TheoremReport(_label(G), G.order, p, lid.value, hyps, conclusion, _verdict(hyps, conclusion))

    if lid is LemmaId.SPERM_ORDER_D:
        items = [
            HYPOTHESES["p_divides"],
            ("some D with 1 < |D| < |P|: every subgroup of P of order |D| is s-permutable in G",
             lambda _s: _d_in_g(_s, lambda H, A: is_s_permutable(H, A).holds, 2, False, 2)),
        ]
        hyps = _run_checks(s, items)
        conclusion = _conclude(s, *CONCLUSIONS["psup"])
        return TheoremReport(_label(G), G.order, p, lid.value, hyps, conclusion, _verdict(hyps, conclusion))

    if lid is LemmaId.CSUPP_PNILP:
        items = [
            HYPOTHESES["smallest_prime"],
            ("some D with 1 <= |D| < |P|: every subgroup of P of order |D| or p|D| is c-supplemented in G",
             lambda _s: _d_in_g(_s, lambda H, A: is_c_supplemented(H, A, _s.budget).holds, 1, True, 1)),
        ]
        hyps = _run_checks(s, items)
        conclusion = _conclude(s, *CONCLUSIONS["pnilp"])
        return TheoremReport(_label(G), G.order, p, lid.value, hyps, conclusion, _verdict(hyps, conclusion))

    if lid is LemmaId.CSUPP_HYPERCENTRE:
        # quantified over every nontrivial normal p-subgroup X of G
        def hyp(_s):
            good = [X for X in _qualifying_normal_p_subgroups(_s)]
            return bool(good), [X.order for X in good]

        hyps = _run_checks(s, [(
            "some nontrivial normal p-subgroup X has a D with 1 <= |D| < |X| such that every "
            "subgroup of X of order |D| or p|D| is c-supplemented in G", hyp)])

        def concl(_s):
            if not hyps[0].holds:
                return True, None
            Z = supersolvable_hypercentre(_s.G)
            for X in _qualifying_normal_p_subgroups(_s):
                if not X <= Z:
                    return False, X
            return True, Z

        conclusion = _conclude(s, "every such X is contained in Z_U(G)", concl)
        return TheoremReport(_label(G), G.order, p, lid.value, hyps, conclusion, _verdict(hyps, conclusion))
    raise ValueError(lid)


def _d_in_g(s: Setting, pred, min_order, with_p_multiple, proviso_order):
    d = order_d_condition(s, s.P, s.G, pred, min_order, with_p_multiple, proviso_order)
    return d is not None, d


def _qualifying_normal_p_subgroups(s: Setting):
    if not hasattr(s, "_csupp_normals"):
        out = []
        for X in all_normal_subgroups(s.G):
            if X.order == 1 or not is_p_power(X.order, s.p):
                continue
            d = order_d_condition(s, X, s.G, lambda H, A: is_c_supplemented(H, A, s.budget).holds,
                                  1, True, 1)
            if d is not None:
                out.append(X)
        s._csupp_normals = out
    return s._csupp_normals


def lemma_suite(G: Group, p: int, budget: int | None = None) -> list[TheoremReport]:
    s = Setting(G, p, budget)
    return [evaluate(lid, G, p, setting=s) for lid in LemmaId]

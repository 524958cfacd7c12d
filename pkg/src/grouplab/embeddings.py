"""Subgroup-embedding predicates.

Each predicate returns an :class:`EmbeddingVerdict`. Witnesses are chosen
deterministically (ascending subgroup order, then canonical element set)
and can be re-validated with :func:`recheck`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .core import (
    Group,
    Subgroup,
    _check_sub,
    _conjugate_masks,
    all_subgroups,
    core,
    join,
    normalizer,
    permutes,
)
from .structure import all_normal_subgroups, prime_divisors, sylow_conjugates


@dataclass
class EmbeddingVerdict:
    predicate: str
    subgroup: Group
    group: Group
    holds: bool
    witness: Any = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _sylow_scan(H: Group, G: Group, primes, name: str) -> EmbeddingVerdict:
    for q in primes:
        for Q in sylow_conjugates(G, q):
            if not permutes(H, Q):
                return EmbeddingVerdict(name, H, G, False, (q, Q),
                                        f"does not permute with the Sylow {q}-subgroup {Q.describe()}")
    return EmbeddingVerdict(name, H, G, True, None, "permutes with every Sylow subgroup checked")


def is_s_permutable(H: Group, G: Group) -> EmbeddingVerdict:
    _check_sub(G, H)
    return _sylow_scan(H, G, prime_divisors(G.order), "s-permutable")


def is_s_semipermutable(H: Group, G: Group) -> EmbeddingVerdict:
    """Permutes with every Sylow q-subgroup of G for each prime q not dividing |H|."""
    _check_sub(G, H)
    primes = [q for q in prime_divisors(G.order) if H.order % q]
    return _sylow_scan(H, G, primes, "s-semipermutable")


def is_pronormal(H: Group, G: Group) -> EmbeddingVerdict:
    """H and H^g are conjugate in <H, H^g> for every g in G."""
    _check_sub(G, H)
    for mask, g in sorted(_conjugate_masks(G, H).items(), key=lambda kv: kv[1]):
        if mask == H.mask:
            continue
        Hg = Subgroup(G, mask)
        L = join(G, H, Hg)
        if mask not in _conjugate_masks(L, H):
            return EmbeddingVerdict("pronormal", H, G, False, G.universe.elements[g],
                                    "H and H^g are not conjugate in <H, H^g>")
    return EmbeddingVerdict("pronormal", H, G, True, None, "every conjugate is conjugate inside the join")


def is_c_supplemented(H: Group, G: Group, budget: int | None = None) -> EmbeddingVerdict:
    """Some K <= G has G = HK and H & K inside the core of H."""
    _check_sub(G, H)
    H_G = core(G, H)
    for K in all_subgroups(G, budget):
        if (H.order * K.order) % G.order:
            continue
        meet = H.mask & K.mask
        if H.order * K.order // meet.bit_count() != G.order:
            continue
        if meet & ~H_G.mask == 0:
            return EmbeddingVerdict("c-supplemented", H, G, True, K, f"supplement of order {K.order}")
    return EmbeddingVerdict("c-supplemented", H, G, False, None, "no supplement K with H & K <= H_G")


def is_h_subgroup(H: Group, G: Group) -> EmbeddingVerdict:
    """N_G(H) & H^g <= H for every g in G."""
    _check_sub(G, H)
    N = normalizer(G, H)
    for mask, g in sorted(_conjugate_masks(G, H).items(), key=lambda kv: kv[1]):
        if N.mask & mask & ~H.mask:
            return EmbeddingVerdict("H-subgroup", H, G, False, G.universe.elements[g],
                                    "N_G(H) & H^g is not contained in H")
    return EmbeddingVerdict("H-subgroup", H, G, True, None, "definitional check over all conjugates")


def is_weakly_h_subgroup(H: Group, G: Group) -> EmbeddingVerdict:
    """Some normal K has G = HK and H & K an H-subgroup of G."""
    _check_sub(G, H)
    for K in all_normal_subgroups(G):
        meet = H.mask & K.mask
        if H.order * K.order // meet.bit_count() != G.order:
            continue
        if is_h_subgroup(Subgroup(G, meet), G):
            return EmbeddingVerdict("weakly H-subgroup", H, G, True, K, f"normal supplement of order {K.order}")
    return EmbeddingVerdict("weakly H-subgroup", H, G, False, None, "no normal K works")


PREDICATES = {
    "s-permutable": is_s_permutable,
    "s-semipermutable": is_s_semipermutable,
    "pronormal": is_pronormal,
    "c-supplemented": is_c_supplemented,
    "H-subgroup": is_h_subgroup,
    "weakly-H-subgroup": is_weakly_h_subgroup,
}


def recheck(v: EmbeddingVerdict) -> bool:
    """Recompute the verdict's witness condition directly."""
    from .core import conjugate_subgroup, is_normal

    H, G, w = v.subgroup, v.group, v.witness
    name = v.predicate
    if name in ("s-permutable", "s-semipermutable"):
        if v.holds:
            return True if w is None else False
        q, Q = w
        return Q.order % q == 0 and not permutes(H, Q)
    if name in ("pronormal", "H-subgroup"):
        if v.holds:
            return w is None
        Hg = conjugate_subgroup(H, w, G)
        if name == "H-subgroup":
            return not ((normalizer(G, H) & Hg) <= H)
        L = join(G, H, Hg)
        return not any(conjugate_subgroup(H, x, L) == Hg for x in L.elements)
    if name == "c-supplemented":
        if not v.holds:
            return w is None
        meet = H & w
        return H.order * w.order // meet.order == G.order and meet <= core(G, H)
    if name == "weakly H-subgroup":
        if not v.holds:
            return w is None
        meet = H & w
        return is_normal(w, G) and H.order * w.order // meet.order == G.order and is_h_subgroup(meet, G).holds
    return False

"""Sylow subgroups, quotients, characteristic subgroups and series."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    Group,
    GroupError,
    Subgroup,
    Universe,
    _check_sub,
    _from_bool,
    _mask_from_bool,
    conjugacy_class_reps,
    conjugates,
    join,
    maximal_subgroups,
    normal_closure,
    normalizer,
    product_set,
    subgroup_generated,
)
from .perm import Permutation


class NotPrime(GroupError, ValueError):
    pass


class NotNormal(GroupError, ValueError):
    pass


# ---------------------------------------------------------------- arithmetic


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


def _require_prime(p: int):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


# ---------------------------------------------------------------- Sylow


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """Grow a p-subgroup one p-element at a time inside successive normalizers."""
    _require_prime(p)
    key = ("sylow", p)
    if key not in G._cache:
        target = p_part(G.order, p)
        orders = G.universe.orders
        Q = G.trivial_subgroup()
        while Q.order < target:
            N = normalizer(G, Q)
            cand = N.idx[(orders[N.idx] > 1) & (p_part_array(orders[N.idx], p) == orders[N.idx])
                         & ~Q.bool[N.idx]]
            if cand.size == 0:
                raise GroupError(f"no p-element in N_G(Q) \\ Q (|Q| = {Q.order})")
            Q = join(G, Q, subgroup_generated(G, [int(cand[0])]))
        G._cache[key] = Q
    return G._cache[key]


def p_part_array(values: np.ndarray, p: int) -> np.ndarray:
    out = np.ones_like(values)
    v = values.copy()
    while True:
        hit = v % p == 0
        if not hit.any():
            return out
        out[hit] *= p
        v[hit] //= p


def sylow_conjugates(G: Group, p: int) -> list[Subgroup]:
    return conjugates(G, sylow_subgroup(G, p))


# ---------------------------------------------------------------- quotients


@dataclass(eq=False)
class QuotientGroup:
    """G/N realised as the right-translation action on the cosets of N."""

    source: Group
    kernel: Group
    group: Group
    projection: np.ndarray = field(repr=False)  # source universe index -> quotient universe index

    def image(self, g) -> Permutation:
        i = self.source.index_of(g)
        return self.group.universe.elements[int(self.projection[i])]

    def project(self, H: Group) -> Subgroup:
        """The image HN/N as a subgroup of the quotient."""
        _check_sub(self.source, H)
        flags = np.zeros(self.group.universe.n, dtype=bool)
        flags[self.projection[H.idx]] = True
        gens = sorted({int(self.projection[g]) for g in H.gen_idx} - {0})
        return _from_bool(self.group, flags, gens)

    def preimage(self, K: Group) -> Subgroup:
        _check_sub(self.group, K)
        hit = K.bool[self.projection[self.source.idx]]
        flags = np.zeros(self.source.universe.n, dtype=bool)
        flags[self.source.idx[hit]] = True
        return _from_bool(self.source, flags)

    def check_homomorphism(self) -> bool:
        """Spot-check on generator pairs and confirm the kernel is exactly N."""
        t_src = self.source.universe.table
        t_q = self.group.universe.table
        proj = self.projection
        gens = self.source.gen_idx
        for a in gens:
            for b in gens:
                if proj[t_src[a, b]] != t_q[proj[a], proj[b]]:
                    return False
        kernel = self.source.idx[proj[self.source.idx] == 0]
        return _mask_from_bool(np.isin(np.arange(self.source.universe.n), kernel)) == self.kernel.mask


def quotient(G: Group, N: Group) -> QuotientGroup:
    from .core import is_normal

    _check_sub(G, N)
    if not is_normal(N, G):
        raise NotNormal("quotient requires a normal subgroup")
    key = ("quotient", N.mask)
    if key in G._cache:
        return G._cache[key]
    U = G.universe
    t = U.table
    reps_of = t[np.ix_(N.idx, G.idx)].min(axis=0).astype(np.int64)  # smallest element of each coset Ng
    reps, labels = np.unique(reps_of, return_inverse=True)
    m = reps.size
    coset = np.full(U.n, -1, dtype=np.int64)
    coset[G.idx] = labels
    perms = {}
    images = coset[t[np.ix_(reps, G.idx)]]  # images[c, j]: coset of reps[c] * G.idx[j]
    for j, g in enumerate(G.idx):
        c = coset[g]
        if c not in perms:
            perms[c] = Permutation(images[:, j])
    QU = Universe(list(perms.values()))
    projection = np.full(U.n, -1, dtype=np.int64)
    per_coset = np.array([QU.index[perms[c]] for c in range(m)], dtype=np.int64)
    projection[G.idx] = per_coset[coset[G.idx]]
    gens = sorted({int(projection[g]) for g in G.gen_idx} - {0})
    Q = Group(QU, (1 << QU.n) - 1, gens, name=None)
    result = QuotientGroup(G, N, Q, projection)
    G._cache[key] = result
    return result


# ---------------------------------------------------------------- series


@dataclass
class SeriesRecord:
    kind: str  # "derived", "upper-central" or "chief"
    terms: list[Subgroup]

    def factor_orders(self) -> list[int]:
        a = self.terms
        if self.kind == "derived":
            return [a[i].order // a[i + 1].order for i in range(len(a) - 1)]
        return [a[i + 1].order // a[i].order for i in range(len(a) - 1)]

    def __len__(self):
        return len(self.terms)


def _commutator_idx(U: Universe, x, y):
    t, inv = U.table, U.inv
    return t[t[t[inv[x], inv[y]], x], y]


def derived_subgroup(G: Group) -> Subgroup:
    if "derived" not in G._cache:
        U = G.universe
        g = np.asarray(G.gen_idx, dtype=np.int64)
        comms = np.unique(_commutator_idx(U, g[:, None], g[None, :]))
        comms = comms[comms != 0]
        seed = _from_bool(G, U.close(np.zeros(U.n, bool), comms), comms.tolist())
        G._cache["derived"] = normal_closure(G, seed)
    return G._cache["derived"]


def derived_series(G: Group) -> SeriesRecord:
    terms = [G.whole()]
    while True:
        nxt = derived_subgroup(terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesRecord("derived", terms)


def upper_central_series(G: Group) -> SeriesRecord:
    if "ucs" not in G._cache:
        U = G.universe
        gens = np.asarray(G.gen_idx, dtype=np.int64)
        terms = [G.trivial_subgroup()]
        while True:
            Z = terms[-1]
            if gens.size:
                comm = _commutator_idx(U, G.idx[:, None], gens[None, :])
                ok = Z.bool[comm].all(axis=1)
            else:
                ok = np.ones(G.order, dtype=bool)
            flags = np.zeros(U.n, dtype=bool)
            flags[G.idx[ok]] = True
            nxt = _from_bool(G, flags)
            if nxt == Z:
                break
            terms.append(nxt)
        G._cache["ucs"] = SeriesRecord("upper-central", terms)
    return G._cache["ucs"]


def nilpotency_class(G: Group) -> int | None:
    terms = upper_central_series(G).terms
    if terms[-1].mask != G.mask:
        return None
    return len(terms) - 1


def frattini(G: Group, budget: int | None = None) -> Subgroup:
    if "frattini" not in G._cache:
        maxes = maximal_subgroups(G, budget)
        mask = G.mask
        for M in maxes:
            mask &= M.mask
        G._cache["frattini"] = Subgroup(G, mask, G._gens if mask == G.mask else None)
    return G._cache["frattini"]


# ---------------------------------------------------------------- O_p, O_p', O^p and normal subgroups


def _element_normal_closures(G: Group) -> list[Subgroup]:
    if "elt_ncl" not in G._cache:
        seen = {}
        for x in conjugacy_class_reps(G):
            if x == 0:
                continue
            N = normal_closure(G, subgroup_generated(G, [x]))
            seen.setdefault(N.mask, N)
        G._cache["elt_ncl"] = sorted(seen.values(), key=Group.sort_key)
    return G._cache["elt_ncl"]


def _normal_product(G: Group, A: Group, B: Group) -> Subgroup:
    if B <= A:
        return Subgroup(G, A.mask, A._gens)
    if A <= B:
        return Subgroup(G, B.mask, B._gens)
    gens = sorted(set(A.gen_idx) | set(B.gen_idx))
    return Subgroup(G, product_set(A, B).mask, gens)


def _join_of(G: Group, subs) -> Subgroup:
    acc = G.trivial_subgroup()
    for N in subs:
        acc = _normal_product(G, acc, N)
    return acc


def o_p(G: Group, p: int) -> Subgroup:
    """Largest normal p-subgroup: join of the element normal closures that are p-groups."""
    _require_prime(p)
    return _join_of(G, [N for N in _element_normal_closures(G) if is_p_power(N.order, p)])


def o_p_prime(G: Group, p: int) -> Subgroup:
    """Largest normal subgroup of order coprime to p."""
    _require_prime(p)
    return _join_of(G, [N for N in _element_normal_closures(G) if N.order % p])


def o_upper_p(G: Group, p: int) -> Subgroup:
    """Smallest normal subgroup with p-group quotient: generated by the p'-elements."""
    _require_prime(p)
    orders = G.universe.orders[G.idx]
    pprime = G.idx[(orders % p != 0) & (orders > 1)]
    result = subgroup_generated(G, pprime.tolist())
    P = sylow_subgroup(G, p)
    if len(product_set(P, result)) != G.order:
        raise AssertionError("G != P O^p(G)")
    return result


def all_normal_subgroups(G: Group) -> list[Subgroup]:
    if "normal" not in G._cache:
        found = {G.trivial_subgroup().mask: G.trivial_subgroup()}
        for N in _element_normal_closures(G):
            found.setdefault(N.mask, N)
        frontier = list(found.values())
        while frontier:
            fresh = []
            base = list(found.values())
            for A in frontier:
                for B in base:
                    if A.mask & ~B.mask == 0 or B.mask & ~A.mask == 0:
                        continue
                    J = _normal_product(G, A, B)
                    if J.mask not in found:
                        found[J.mask] = J
                        fresh.append(J)
            frontier = fresh
        G._cache["normal"] = sorted(found.values(), key=Group.sort_key)
    return G._cache["normal"]


def minimal_normal_subgroups(G: Group) -> list[Subgroup]:
    cands = _element_normal_closures(G)
    return [N for N in cands if not any(M.order < N.order and M.mask & ~N.mask == 0 for M in cands)]


def chief_series(G: Group, reverse: bool = False) -> SeriesRecord:
    """Ascending chief series 1 = N_0 < ... < N_r = G.

    Each step takes a minimal member among the normal subgroups of G
    strictly above the current term; ``reverse`` picks the last candidate in
    canonical order instead of the first.
    """
    key = ("chief", reverse)
    if key not in G._cache:
        normals = all_normal_subgroups(G)
        terms = [G.trivial_subgroup()]
        while terms[-1].mask != G.mask:
            cur = terms[-1]
            above = [N for N in normals if N.order > cur.order and cur.mask & ~N.mask == 0]
            minimal = [N for N in above
                       if not any(M.order < N.order and M.mask & ~N.mask == 0 for M in above)]
            terms.append(minimal[-1] if reverse else minimal[0])
        G._cache[key] = SeriesRecord("chief", terms)
    return G._cache[key]


def supersolvable_hypercentre(G: Group) -> Subgroup:
    """Iteratively adjoin every prime-order minimal normal subgroup of G/Z."""
    if "z_u" not in G._cache:
        normals = all_normal_subgroups(G)
        Z = G.trivial_subgroup()
        while True:
            above = [N for N in normals if N.order > Z.order and Z.mask & ~N.mask == 0]
            prime_steps = [N for N in above
                           if is_prime(N.order // Z.order)
                           and not any(M.order < N.order and M.mask & ~N.mask == 0 for M in above)]
            nxt = _join_of(G, [Z] + prime_steps)
            if nxt == Z:
                break
            Z = nxt
        G._cache["z_u"] = Z
    return G._cache["z_u"]


def is_p_group(G: Group, p: int) -> bool:
    return is_p_power(G.order, p)

"""Finite permutation groups materialized as element sets over a Cayley table.

Every group built by :func:`generate_group` owns a :class:`Universe`: its
elements sorted lexicographically by image tuple, plus (lazily) a
multiplication table on element indices. Subgroups share the universe of
the group they were cut from and are represented by an integer bitmask over
its element indices, so containment, intersection and hashing are integer
operations.
"""

from __future__ import annotations

import os
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .perm import Permutation, PermutationError

DEFAULT_ELEMENT_BUDGET = int(os.environ.get("GROUPLAB_BUDGET", 200_000))
DEFAULT_SUBGROUP_BUDGET = 2_000
# Cayley tables are n x n; larger groups can be generated but not analysed.
TABLE_LIMIT = 5_040


class GroupError(Exception):
    pass


class GroupTooLarge(GroupError):
    pass


class EnumerationTooLarge(GroupError):
    pass


class MismatchedParents(GroupError, ValueError):
    pass


class NotInGroup(GroupError, ValueError):
    pass


# ---------------------------------------------------------------- bitmasks


def _mask_from_bool(flags: np.ndarray) -> int:
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def _bool_from_mask(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def _mask_from_idx(idx, n: int) -> int:
    flags = np.zeros(n, dtype=bool)
    flags[np.asarray(idx, dtype=np.int64)] = True
    return _mask_from_bool(flags)


# ---------------------------------------------------------------- universe


class Universe:
    """Sorted element list of a finite permutation group and its Cayley table."""

    def __init__(self, elements: Sequence[Permutation]):
        self.elements = tuple(sorted(elements))
        self.n = len(self.elements)
        self.degree = self.elements[0].degree
        self.index = {p: i for i, p in enumerate(self.elements)}
        if not self.elements[0].is_identity():
            raise GroupError("element set does not contain the identity")

    def __repr__(self):
        return f"<Universe order={self.n} degree={self.degree}>"

    @cached_property
    def images(self) -> np.ndarray:
        return np.array([p.images for p in self.elements], dtype=np.int64).reshape(self.n, self.degree)

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        n, arr = self.n, self.images
        if n > TABLE_LIMIT:
            raise GroupTooLarge(f"group too large: order {n} exceeds table limit {TABLE_LIMIT}")
        weights = np.random.default_rng(12345).integers(1, 2**62, size=self.degree, dtype=np.int64)
        weights = weights.astype(np.uint64)
        keys = (arr.astype(np.uint64) * weights).sum(axis=1)
        order = np.argsort(keys, kind="stable")
        sorted_keys = keys[order]
        if np.any(sorted_keys[1:] == sorted_keys[:-1]):
            raise GroupError("hash collision while building Cayley table")
        dtype = np.int16 if n < 2**15 else np.int32
        table = np.empty((n, n), dtype=dtype)
        chunk = max(1, 2_000_000 // max(1, n * self.degree))
        for start in range(0, n, chunk):
            rows = arr[start:start + chunk]
            # (x * y)(k) = y(x(k)), so products[r, j, :] = arr[j, rows[r, :]]
            products = arr[:, rows].transpose(1, 0, 2)
            flat = products.reshape(-1, self.degree)
            pos = np.searchsorted(sorted_keys, (flat.astype(np.uint64) * weights).sum(axis=1))
            pos = np.minimum(pos, n - 1)
            found = order[pos]
            if not np.array_equal(arr[found], flat):
                raise GroupError("element set is not closed under multiplication")
            table[start:start + rows.shape[0]] = found.reshape(rows.shape[0], n)
        return table

    @cached_property
    def inv(self) -> np.ndarray:
        inv = np.empty(self.n, dtype=np.int64)
        rows, cols = np.nonzero(self.table == 0)
        inv[rows] = cols
        return inv

    @cached_property
    def conj(self) -> np.ndarray:
        """``conj[g, x]`` is the index of ``g^-1 x g``."""
        t = self.table
        left = t[self.inv].astype(np.int64)
        return t[left, np.arange(self.n)[:, None]]

    @cached_property
    def orders(self) -> np.ndarray:
        t = self.table
        orders = np.zeros(self.n, dtype=np.int64)
        cur = np.arange(self.n)
        k = 1
        while True:
            done = (cur == 0) & (orders == 0)
            orders[done] = k
            if orders.all():
                return orders
            cur = t[cur, np.arange(self.n)].astype(np.int64)
            k += 1

    def close(self, start: np.ndarray, gens: np.ndarray) -> np.ndarray:
        """Boolean membership of the subgroup generated by a closed start set and ``gens``."""
        members = start.copy()
        members[0] = True
        gens = np.asarray(gens, dtype=np.int64)
        if gens.size == 0:
            return members
        t = self.table
        frontier = np.flatnonzero(members)
        while frontier.size:
            prods = t[np.ix_(frontier, gens)].ravel()
            new = np.unique(prods[~members[prods]])
            members[new] = True
            frontier = new
        return members


# ---------------------------------------------------------------- groups


class Group:
    """A finite permutation group: a closed subset of a universe.

    ``elements`` are sorted lexicographically; equality and hashing use the
    element set only, so two handles for the same subgroup compare equal.
    """

    parent: Group | None = None

    def __init__(self, universe: Universe, mask: int, generators: Sequence[int] | None = None,
                 name: str | None = None):
        self.universe = universe
        self.mask = mask
        self.order = mask.bit_count()
        self._gens = None if generators is None else tuple(int(g) for g in generators)
        self.name = name
        self._cache: dict = {}

    # -- element access
    @cached_property
    def bool(self) -> np.ndarray:
        return _bool_from_mask(self.mask, self.universe.n)

    @cached_property
    def idx(self) -> np.ndarray:
        return np.flatnonzero(self.bool)

    @property
    def elements(self) -> tuple[Permutation, ...]:
        els = self.universe.elements
        return tuple(els[i] for i in self.idx)

    @property
    def degree(self) -> int:
        return self.universe.degree

    @property
    def gen_idx(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = _small_generating_set(self)
        return self._gens

    @property
    def generators(self) -> list[Permutation]:
        els = self.universe.elements
        return [els[i] for i in self.gen_idx]

    @property
    def identity(self) -> Permutation:
        return self.universe.elements[0]

    def index_of(self, g) -> int:
        if isinstance(g, (int, np.integer)):
            i = int(g)
        else:
            try:
                i = self.universe.index[g]
            except KeyError:
                raise NotInGroup(f"{g} is not an element of the group") from None
        if not (self.mask >> i) & 1:
            raise NotInGroup(f"{self.universe.elements[i]} is not an element of the group")
        return i

    def __contains__(self, g) -> bool:
        if isinstance(g, Group):
            return g <= self
        i = g if isinstance(g, (int, np.integer)) else self.universe.index.get(g)
        return i is not None and bool((self.mask >> int(i)) & 1)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    # -- comparisons
    def _same_universe(self, other: Group):
        if other.universe is not self.universe:
            raise MismatchedParents("groups do not share an ambient group")

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and other.universe is self.universe and other.mask == self.mask

    def __hash__(self) -> int:
        return hash((id(self.universe), self.mask))

    def __le__(self, other: Group) -> bool:
        self._same_universe(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: Group) -> bool:
        return self <= other and self.mask != other.mask

    def __and__(self, other: Group) -> Subgroup:
        self._same_universe(other)
        return Subgroup(self, self.mask & other.mask)

    def sort_key(self) -> tuple:
        """Ascending order, then canonical (lexicographic) element set."""
        return (self.order, tuple(self.idx.tolist()))

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        g = np.asarray(self.gen_idx, dtype=np.int64)
        t = self.universe.table
        return bool(np.array_equal(t[np.ix_(g, g)], t[np.ix_(g, g)].T))

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, 1, ())

    def whole(self) -> Subgroup:
        return Subgroup(self, self.mask, self._gens)

    def subgroup(self, perms: Iterable) -> Subgroup:
        return subgroup_generated(self, perms)

    def describe(self) -> str:
        gens = ", ".join(p.cycle_string() for p in self.generators) or "()"
        return f"<{gens}>"

    def __repr__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"<{type(self).__name__} {label}order={self.order} gens=[{self.describe()[1:-1]}]>"


class Subgroup(Group):
    """A group cut from ``parent`` (sharing its universe)."""

    def __init__(self, parent: Group, mask: int, generators: Sequence[int] | None = None,
                 name: str | None = None):
        super().__init__(parent.universe, mask, generators, name)
        self.parent = parent


class ElementSet:
    """A subset of a group's elements with no closure requirement (e.g. ``HK``)."""

    def __init__(self, universe: Universe, mask: int):
        self.universe = universe
        self.mask = mask

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other) -> bool:
        return isinstance(other, ElementSet) and other.universe is self.universe and other.mask == self.mask

    def __hash__(self):
        return hash((id(self.universe), self.mask))

    @property
    def elements(self) -> tuple[Permutation, ...]:
        els = self.universe.elements
        return tuple(els[i] for i in np.flatnonzero(_bool_from_mask(self.mask, self.universe.n)))

    def __repr__(self):
        return f"<ElementSet size={len(self)}>"


def _from_bool(parent: Group, flags: np.ndarray, gens=None) -> Subgroup:
    return Subgroup(parent, _mask_from_bool(flags), gens)


def _small_generating_set(G: Group) -> tuple[int, ...]:
    U = G.universe
    if G.order == 1:
        return ()
    if G.order > TABLE_LIMIT:
        raise GroupTooLarge(f"group too large: order {G.order}")
    orders = U.orders[G.idx]
    candidates = G.idx[np.argsort(-orders, kind="stable")]
    members = np.zeros(U.n, dtype=bool)
    members[0] = True
    gens: list[int] = []
    for x in candidates:
        if members[x]:
            continue
        gens.append(int(x))
        members = U.close(members, np.asarray(gens))
        if members.sum() == G.order:
            break
    return tuple(gens)


def _check_sub(G: Group, H: Group):
    G._same_universe(H)
    if H.mask & ~G.mask:
        raise MismatchedParents("subgroup is not contained in the group")


# ---------------------------------------------------------------- construction


def generate_group(generators: Iterable[Permutation], degree: int | None = None,
                   max_elements: int | None = None, name: str | None = None) -> Group:
    """Close ``generators`` under composition by breadth-first search."""
    gens = list(generators)
    if degree is None:
        if not gens:
            raise PermutationError("degree required for an empty generating set")
        degree = max(g.degree for g in gens if isinstance(g, Permutation))
    for g in gens:
        if not isinstance(g, Permutation):
            raise PermutationError(f"not a permutation: {g!r}")
        if g.degree > degree:
            raise PermutationError(f"generator {g} has degree {g.degree}, expected {degree}")
    # points above a generator's own degree are fixed
    gens = [g if g.degree == degree else g.extend(degree) for g in gens]
    budget = DEFAULT_ELEMENT_BUDGET if max_elements is None else max_elements
    ident = tuple(range(degree))
    gen_imgs = [g.images for g in gens if not g.is_identity()]
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gen_imgs:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                if len(seen) > budget:
                    raise GroupTooLarge(f"group too large: more than {budget} elements")
                queue.append(y)
    U = Universe([Permutation(s) for s in seen])
    gen_idx = sorted({U.index[g] for g in gens if not g.is_identity()})
    return Group(U, (1 << U.n) - 1, gen_idx, name=name)


def group_from_elements(elements: Iterable[Permutation], name: str | None = None) -> Group:
    """Wrap an element set already known to be closed (verified via the Cayley table)."""
    U = Universe(list(elements))
    G = Group(U, (1 << U.n) - 1, name=name)
    if U.n <= TABLE_LIMIT:
        U.table  # raises if not closed
    return G


def subgroup_generated(parent: Group, elements: Iterable) -> Subgroup:
    idx = sorted({parent.index_of(e) for e in elements} - {0})
    U = parent.universe
    flags = U.close(np.zeros(U.n, dtype=bool), np.asarray(idx, dtype=np.int64))
    return _from_bool(parent, flags, idx)


def cyclic_subgroup(parent: Group, g) -> Subgroup:
    return subgroup_generated(parent, [g])


def join(G: Group, H: Group, K: Group) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``H`` and ``K``."""
    _check_sub(G, H)
    _check_sub(G, K)
    if K <= H:
        return Subgroup(G, H.mask, H._gens)
    if H <= K:
        return Subgroup(G, K.mask, K._gens)
    gens = sorted(set(H.gen_idx) | set(K.gen_idx))
    flags = G.universe.close(H.bool, np.asarray(gens, dtype=np.int64))
    return _from_bool(G, flags, gens)


# ---------------------------------------------------------------- products, conjugation


def product_set(H: Group, K: Group) -> ElementSet:
    H._same_universe(K)
    U = H.universe
    prods = U.table[np.ix_(H.idx, K.idx)].ravel()
    flags = np.zeros(U.n, dtype=bool)
    flags[prods] = True
    return ElementSet(U, _mask_from_bool(flags))


def permutes(H: Group, K: Group) -> bool:
    """``HK == KH`` as sets; cross-checked against ``|HK| == |<H, K>|``."""
    hk = product_set(H, K)
    kh = product_set(K, H)
    result = hk.mask == kh.mask
    U = H.universe
    gens = sorted(set(H.gen_idx) | set(K.gen_idx))
    generated = int(U.close(H.bool, np.asarray(gens, dtype=np.int64)).sum())
    if result != (len(hk) == generated):
        raise AssertionError("HK = KH disagrees with |HK| = |<H, K>|")
    return result


def conjugate_subgroup(H: Group, g, parent: Group | None = None) -> Subgroup:
    """``H^g = g^-1 H g``; ``g`` must lie in ``parent`` (default: H's parent)."""
    ambient = parent if parent is not None else (H.parent or H)
    if parent is not None:
        _check_sub(parent, H)
    gi = ambient.index_of(g)
    U = H.universe
    flags = np.zeros(U.n, dtype=bool)
    flags[U.conj[gi, H.idx]] = True
    gens = [int(U.conj[gi, x]) for x in H.gen_idx]
    return _from_bool(ambient, flags, gens)


def _conjugate_masks(G: Group, H: Group) -> dict[int, int]:
    """Distinct conjugates of H under G, mapped to the first conjugating element index."""
    U = G.universe
    imgs = U.conj[np.ix_(G.idx, H.idx)]
    n = U.n
    flags = np.zeros((G.order, n), dtype=bool)
    np.put_along_axis(flags, imgs.astype(np.int64), True, axis=1)
    packed = np.packbits(flags, axis=1, bitorder="little")
    out: dict[int, int] = {}
    for row, g in zip(packed, G.idx):
        m = int.from_bytes(row.tobytes(), "little")
        if m not in out:
            out[m] = int(g)
    return out


def conjugates(G: Group, H: Group) -> list[Subgroup]:
    """The conjugacy class of H in G, in canonical order."""
    _check_sub(G, H)
    key = ("conjugates", H.mask)
    if key not in G._cache:
        U = G.universe
        subs = []
        for m, g in _conjugate_masks(G, H).items():
            subs.append(Subgroup(G, m, [int(U.conj[g, x]) for x in H.gen_idx]))
        G._cache[key] = sorted(subs, key=Group.sort_key)
    return G._cache[key]


def normalizer(G: Group, H: Group) -> Subgroup:
    _check_sub(G, H)
    key = ("normalizer", H.mask)
    if key not in G._cache:
        U = G.universe
        ok = H.bool[U.conj[np.ix_(G.idx, H.gen_idx)]].all(axis=1) if H.order > 1 else np.ones(G.order, bool)
        flags = np.zeros(U.n, dtype=bool)
        flags[G.idx[ok]] = True
        G._cache[key] = _from_bool(G, flags)
    return G._cache[key]


def centralizer(G: Group, S) -> Subgroup:
    """Elements of G commuting with every element of S (a group, ElementSet or iterable)."""
    U = G.universe
    if isinstance(S, Group):
        G._same_universe(S)
        s = np.asarray(S.gen_idx, dtype=np.int64)
    elif isinstance(S, ElementSet):
        s = np.flatnonzero(_bool_from_mask(S.mask, U.n))
    else:
        s = np.asarray([U.index[x] if isinstance(x, Permutation) else int(x) for x in S], dtype=np.int64)
    t = U.table
    if s.size:
        ok = (t[np.ix_(G.idx, s)] == t[np.ix_(s, G.idx)].T).all(axis=1)
    else:
        ok = np.ones(G.order, dtype=bool)
    flags = np.zeros(U.n, dtype=bool)
    flags[G.idx[ok]] = True
    return _from_bool(G, flags)


def center(G: Group) -> Subgroup:
    if "center" not in G._cache:
        G._cache["center"] = centralizer(G, G)
    return G._cache["center"]


def normal_closure(G: Group, H: Group) -> Subgroup:
    """Smallest normal subgroup of G containing H."""
    _check_sub(G, H)
    U = G.universe
    members = H.bool.copy()
    gens = list(H.gen_idx)
    ggens = np.asarray(G.gen_idx, dtype=np.int64)
    while True:
        if not gens or ggens.size == 0:
            break
        images = np.unique(U.conj[np.ix_(ggens, np.asarray(gens))])
        new = images[~members[images]]
        if new.size == 0:
            break
        gens = sorted(set(gens) | set(new.tolist()))
        members = U.close(members, np.asarray(gens))
    return _from_bool(G, members, gens)


def core(G: Group, H: Group) -> Subgroup:
    """Largest normal subgroup of G contained in H."""
    _check_sub(G, H)
    U = G.universe
    ok = H.bool[U.conj[np.ix_(G.idx, H.idx)]].all(axis=0)
    flags = np.zeros(U.n, dtype=bool)
    flags[H.idx[ok]] = True
    return _from_bool(G, flags)


def is_normal(H: Group, G: Group) -> bool:
    _check_sub(G, H)
    if H.order == 1 or H.mask == G.mask:
        return True
    U = G.universe
    return bool(H.bool[U.conj[np.ix_(G.gen_idx, H.gen_idx)]].all())


def is_subnormal(H: Group, G: Group) -> bool:
    """Walk the chain G >= H^G >= H^(H^G) >= ... and test whether it reaches H."""
    _check_sub(G, H)
    current = G
    while True:
        nxt = normal_closure(current, H)
        if nxt == current:
            return current == H
        current = nxt


# ---------------------------------------------------------------- subgroup lattice


def cyclic_subgroups(G: Group) -> list[Subgroup]:
    if "cyclic" not in G._cache:
        U = G.universe
        t = U.table
        seen = np.zeros(U.n, dtype=bool)
        out = []
        orders = U.orders
        for x in G.idx:
            if seen[x]:
                continue
            powers = [0]
            y = int(x)
            while y != 0:
                powers.append(y)
                y = int(t[y, x])
            flags = np.zeros(U.n, dtype=bool)
            flags[powers] = True
            pw = np.asarray(powers)
            seen[pw[orders[pw] == orders[x]]] = True
            out.append(Subgroup(G, _mask_from_bool(flags), [int(x)] if x else []))
        G._cache["cyclic"] = sorted(out, key=Group.sort_key)
    return G._cache["cyclic"]


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while n % p:
        p += 1
    while n % p == 0:
        n //= p
    return n == 1


def all_subgroups(G: Group, budget: int | None = None) -> list[Subgroup]:
    """Every subgroup of G, ascending by order then canonical element set.

    Seeds with the cyclic subgroups and extends each known subgroup by a
    cyclic subgroup of prime-power order until nothing new appears. Every
    subgroup is generated by its prime-power-order elements, so this reaches
    the whole lattice.
    """
    limit = DEFAULT_SUBGROUP_BUDGET if budget is None else budget
    if G.order > limit:
        raise EnumerationTooLarge(f"enumeration too large: order {G.order} exceeds subgroup budget {limit}")
    if "subgroups" not in G._cache:
        cyclic = cyclic_subgroups(G)
        known = {H.mask: H for H in cyclic}
        extenders = [C for C in cyclic if _is_prime_power(C.order)]
        queue = deque(cyclic)
        while queue:
            H = queue.popleft()
            for C in extenders:
                if C.mask & ~H.mask == 0:
                    continue
                J = join(G, H, C)
                if J.mask not in known:
                    known[J.mask] = J
                    queue.append(J)
        G._cache["subgroups"] = sorted(known.values(), key=Group.sort_key)
    return G._cache["subgroups"]


def subgroups_of_order(G: Group, m: int, budget: int | None = None) -> list[Subgroup]:
    if m < 1 or G.order % m:
        return []
    if m == 1:
        return [G.trivial_subgroup()]
    return [H for H in all_subgroups(G, budget) if H.order == m]


def maximal_subgroups(G: Group, budget: int | None = None) -> list[Subgroup]:
    if "maximal" not in G._cache:
        proper = [H for H in all_subgroups(G, budget) if H.mask != G.mask]
        out = []
        for H in proper:
            if not any(K.order > H.order and H.mask & ~K.mask == 0 for K in proper):
                out.append(H)
        G._cache["maximal"] = out
    return G._cache["maximal"]


def conjugacy_class_reps(G: Group) -> list[int]:
    """Smallest element index in each conjugacy class of G."""
    if "class_reps" not in G._cache:
        U = G.universe
        seen = np.zeros(U.n, dtype=bool)
        reps = []
        for x in G.idx:
            if seen[x]:
                continue
            reps.append(int(x))
            seen[U.conj[G.idx, x]] = True
        G._cache["class_reps"] = reps
    return G._cache["class_reps"]

"""Built-in groups, the order-216 fixture and catalog directories."""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .core import Group, generate_group
from .groupfile import GroupFileError, load_group_file, parse_group_file, write_group_file
from .perm import Permutation
from .structure import is_prime


class CatalogError(ValueError):
    pass


class FixtureError(CatalogError):
    pass


def _cycle(points, degree) -> Permutation:
    return Permutation.from_cycles([list(points)], degree) if len(points) > 1 else Permutation.identity(degree)


def cyclic(n: int) -> Group:
    return generate_group([_cycle(range(1, n + 1), n)], n, name=f"cyclic{n}")


def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order; order 4 is the Klein four-group on 4 points."""
    if order < 2 or order % 2:
        raise CatalogError(f"dihedral order must be even and positive, got {order}")
    n = order // 2
    if n == 1:
        return generate_group([Permutation.parse("(1 2)", 2)], 2, name="dihedral2")
    if n == 2:
        gens = [Permutation.parse("(1 2)(3 4)", 4), Permutation.parse("(1 3)(2 4)", 4)]
        return generate_group(gens, 4, name="dihedral4")
    rot = _cycle(range(1, n + 1), n)
    refl = Permutation.from_cycles([(i, n + 2 - i) for i in range(2, (n + 1) // 2 + 1) if i != n + 2 - i], n)
    return generate_group([rot, refl], n, name=f"dihedral{order}")


def symmetric(n: int) -> Group:
    if not 1 <= n <= 6:
        raise CatalogError("symmetric groups are built for degree 1..6")
    gens = [_cycle(range(1, n + 1), n), _cycle((1, 2), n)] if n > 1 else []
    return generate_group(gens, n, name=f"symmetric{n}")


def alternating(n: int) -> Group:
    if not 1 <= n <= 6:
        raise CatalogError("alternating groups are built for degree 1..6")
    gens = [_cycle((1, 2, k), n) for k in range(3, n + 1)]
    return generate_group(gens, n, name=f"alternating{n}")


_QUAT = {  # unit products: (a, b) -> (sign, unit) over units 1, i, j, k
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion8() -> Group:
    """Q8 in its regular representation on 8 points."""
    units = [(s, u) for u in "1ijk" for s in (1, -1)]
    pos = {e: i for i, e in enumerate(units)}

    def right_mult(y):
        images = []
        for s, u in units:
            t, w = _QUAT[(u, y[1])]
            images.append(pos[(s * y[0] * t, w)])
        return Permutation(images)

    return generate_group([right_mult((1, "i")), right_mult((1, "j"))], 8, name="quaternion8")


def direct_product(A: Group, B: Group) -> Group:
    """A x B acting on disjoint point sets (A's points first)."""
    d = A.degree + B.degree
    gens = [g.extend(d) for g in A.generators] + [g.extend(d, A.degree) for g in B.generators]
    name = f"{A.name or 'A'}*{B.name or 'B'}"
    return generate_group(gens, d, name=name)


def elementary_abelian(p: int, k: int) -> Group:
    if not is_prime(p) or k < 1:
        raise CatalogError(f"elementary_abelian needs a prime and k >= 1, got {p}^{k}")
    d = p * k
    gens = [_cycle(range(i * p + 1, (i + 1) * p + 1), d) for i in range(k)]
    return generate_group(gens, d, name=f"elementary_abelian{p}^{k}")


FIXTURE_NAME = "smallgroup216_153"


def fixture_216_153(check: bool = True) -> Group:
    """The shipped order-216 fixture, with its load-time property checks."""
    text = resources.files("grouplab.data").joinpath("smallgroup_216_153.grp").read_text()
    G = parse_group_file(text).build()
    G.name = FIXTURE_NAME
    if check:
        problems = fixture_problems(G)
        if problems:
            raise FixtureError("fixture does not match the expected SmallGroup(216,153) properties: "
                               + "; ".join(problems))
    return G


def fixture_problems(G: Group) -> list[str]:
    from .classes import is_p_supersolvable, is_solvable
    from .core import normalizer
    from .structure import nilpotency_class, sylow_subgroup

    problems = []
    if G.order != 216:
        return [f"order {G.order} != 216"]
    if not is_solvable(G):
        problems.append("not solvable")
    P = sylow_subgroup(G, 3)
    if P.order != 27 or nilpotency_class(P) != 2:
        problems.append(f"Sylow 3-subgroup of order {P.order}, class {nilpotency_class(P)}")
    if not is_p_supersolvable(normalizer(G, P), 3):
        problems.append("N_G(P) is not 3-supersolvable")
    if is_p_supersolvable(G, 3):
        problems.append("G is 3-supersolvable")
    return problems


# ---------------------------------------------------------------- names

_SIMPLE = re.compile(r"^(cyclic|dihedral|symmetric|alternating)(\d+)$")
_ELEM = re.compile(r"^elementary_abelian(\d+)\^(\d+)$")


def builtin(name: str, *params) -> Group:
    """Construct a named group.

    ``builtin("symmetric", 4)`` and ``builtin("symmetric4")`` are equivalent;
    ``builtin("direct_product", "symmetric3", "cyclic3")`` or
    ``builtin("symmetric3*cyclic3")`` build products on disjoint points.
    """
    if params:
        if name == "direct_product":
            A, B = (p if isinstance(p, Group) else builtin(p) for p in params)
            return direct_product(A, B)
        if name == "elementary_abelian":
            return elementary_abelian(*map(int, params))
        name = name + "".join(str(p) for p in params)
    name = name.strip()
    if "*" in name:
        parts = [builtin(part) for part in name.split("*")]
        G = parts[0]
        for H in parts[1:]:
            G = direct_product(G, H)
        G.name = name
        return G
    if name == "quaternion8":
        return quaternion8()
    if name == FIXTURE_NAME:
        return fixture_216_153()
    m = _SIMPLE.match(name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        return {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric,
                "alternating": alternating}[kind](n)
    m = _ELEM.match(name)
    if m:
        return elementary_abelian(int(m.group(1)), int(m.group(2)))
    raise CatalogError(f"unknown builtin group {name!r}")


def load_group(spec: str) -> Group:
    """Resolve ``builtin:<name>`` or a group file path."""
    if spec.startswith("builtin:"):
        return builtin(spec[len("builtin:"):])
    return load_group_file(spec)


# ---------------------------------------------------------------- catalogs


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    source: str  # "builtin:<name>" or a file path
    expected_order: int | None = None

    def build(self) -> Group:
        G = load_group(self.source)
        if self.expected_order is not None and G.order != self.expected_order:
            raise CatalogError(f"{self.name}: order {G.order}, expected {self.expected_order}")
        G.name = self.name
        return G


BUILTIN_CATALOG: list[tuple[str, int]] = [
    ("cyclic1", 1), ("cyclic2", 2), ("cyclic3", 3), ("cyclic4", 4), ("cyclic5", 5), ("cyclic6", 6),
    ("cyclic7", 7), ("cyclic8", 8), ("cyclic9", 9), ("cyclic10", 10), ("cyclic12", 12), ("cyclic15", 15),
    ("cyclic16", 16),
    ("dihedral6", 6), ("dihedral8", 8), ("dihedral10", 10), ("dihedral12", 12), ("dihedral14", 14),
    ("dihedral16", 16), ("dihedral18", 18), ("dihedral20", 20), ("dihedral24", 24),
    ("symmetric3", 6), ("symmetric4", 24), ("symmetric5", 120),
    ("alternating4", 12), ("alternating5", 60),
    ("quaternion8", 8),
    ("elementary_abelian2^2", 4), ("elementary_abelian2^3", 8), ("elementary_abelian2^4", 16),
    ("elementary_abelian3^2", 9), ("elementary_abelian3^3", 27), ("elementary_abelian5^2", 25),
    ("symmetric3*cyclic3", 18), ("symmetric3*cyclic2", 12), ("symmetric3*symmetric3", 36),
    ("alternating4*cyclic2", 24), ("alternating4*cyclic3", 36), ("quaternion8*cyclic3", 24),
    ("dihedral8*cyclic3", 24), ("quaternion8*cyclic2", 16), ("dihedral8*cyclic2", 16),
    ("symmetric4*cyclic2", 48), ("symmetric4*cyclic3", 72), ("dihedral8*symmetric3", 48),
    ("quaternion8*symmetric3", 48), ("alternating4*symmetric3", 72), ("dihedral10*cyclic3", 30),
    ("alternating5*cyclic2", 120), ("symmetric4*symmetric3", 144), ("alternating4*alternating4", 144),
    ("symmetric3*symmetric3*symmetric3", 216), ("dihedral8*cyclic3*cyclic3", 72),
]


def builtin_catalog(include_fixture: bool = True) -> list[CatalogEntry]:
    entries = [CatalogEntry(name, f"builtin:{name}", order) for name, order in BUILTIN_CATALOG]
    if include_fixture:
        entries.append(CatalogEntry(FIXTURE_NAME, f"builtin:{FIXTURE_NAME}", 216))
    return entries


_EXPECTED = re.compile(r"^#\s*expected-order\s+(\d+)\s*$", re.M)


def load_catalog(directory) -> list[CatalogEntry]:
    """Every ``*.grp`` file in a directory, sorted by file name."""
    d = Path(directory)
    if not d.is_dir():
        raise CatalogError(f"catalog directory {directory} not found")
    entries = []
    for path in sorted(d.glob("*.grp")):
        text = path.read_text()
        try:
            name = parse_group_file(text).name
        except GroupFileError:
            name = path.stem  # the scan records the parse error for this entry
        m = _EXPECTED.search(text)
        entries.append(CatalogEntry(name, str(path), int(m.group(1)) if m else None))
    return entries


def write_catalog(entries: list[CatalogEntry], directory) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, entry in enumerate(entries):
        G = entry.build()
        path = d / f"{i:03d}_{entry.name.replace('*', '_x_').replace('^', '_')}.grp"
        path.write_text(write_group_file(G, entry.name, [f"expected-order {G.order}"]))
        paths.append(path)
    return paths

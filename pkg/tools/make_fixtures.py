"""Regenerate the fixtures/ catalog directory.

Writes every built-in catalog group plus a handful of affine and
semidirect-product groups that are not direct products of built-ins.
"""

import itertools
import sys
from pathlib import Path

from grouplab.catalog import builtin_catalog, write_catalog
from grouplab.core import generate_group
from grouplab.groupfile import write_group_file
from grouplab.perm import Permutation

OUT = Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")


def affine_plane(maps, q=3):
    """Translations of F_q^2 plus the given maps, with point (x, y) labelled 1 + x + q*y."""
    pts = [(i % q, i // q) for i in range(q * q)]
    maps = [lambda x, y: (x + 1, y), lambda x, y: (x, y + 1)] + list(maps)
    return [Permutation([a % q + q * (b % q) for a, b in (f(x, y) for x, y in pts)]) for f in maps]


def affine_line(q, mult):
    return [Permutation([(x + 1) % q for x in range(q)]), Permutation([(mult * x) % q for x in range(q)])]


def linear_on_nonzero(mats, q=3):
    vecs = [v for v in itertools.product(range(q), repeat=2) if v != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}
    out = []
    for a, b, c, d in mats:
        out.append(Permutation([pos[((a * x + b * y) % q, (c * x + d * y) % q)] for x, y in vecs]))
    return out


EXTRA = {
    "sl2_3": (linear_on_nonzero([(1, 1, 0, 1), (0, 2, 1, 0)]), 24),
    "gl2_3": (linear_on_nonzero([(1, 1, 0, 1), (0, 2, 1, 0), (2, 0, 0, 1)]), 48),
    "frobenius20": (affine_line(5, 2), 20),
    "frobenius21": (affine_line(7, 2), 21),
    "agl1_7": (affine_line(7, 3), 42),
    "dicyclic12": ([Permutation.parse("(1 2 3)", 7), Permutation.parse("(1 2)(4 5 6 7)", 7)], 12),
    "heisenberg27": (affine_plane([lambda x, y: (x + y, y)]), 27),
    "c3sq_q8": (affine_plane([lambda x, y: (-y, x), lambda x, y: (x + y, x - y)]), 72),
    "c3sq_c4": (affine_plane([lambda x, y: (-y, x)]), 36),
    "c3sq_c2": (affine_plane([lambda x, y: (-x, -y)]), 18),
}


def main():
    OUT.mkdir(exist_ok=True)
    for old in OUT.glob("*.grp"):
        old.unlink()
    entries = builtin_catalog()
    write_catalog(entries, OUT)
    for i, (name, (gens, order)) in enumerate(sorted(EXTRA.items()), start=len(entries)):
        G = generate_group(gens, name=name)
        assert G.order == order, (name, G.order)
        (OUT / f"{i:03d}_{name}.grp").write_text(write_group_file(G, name, [f"expected-order {order}"]))


if __name__ == "__main__":
    main()

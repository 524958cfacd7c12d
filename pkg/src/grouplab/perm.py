"""Permutations on the points 1..n, stored as 0-based image tuples.

Products act on the right: ``(p * q)(i) = q(p(i))``, so conjugation is
``x ** g == g.inverse() * x * g``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence


class PermutationError(ValueError):
    pass


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise PermutationError(f"not a bijection on 0..{len(images) - 1}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from 1-based cycles; points not mentioned are fixed."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = [int(x) for x in cycle]
            for pt in cycle:
                if pt < 1 or pt > degree:
                    raise PermutationError(f"point {pt} out of range 1..{degree}")
                if pt in seen:
                    raise PermutationError(f"repeated point in cycle: {pt}")
                seen.add(pt)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b - 1
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> Permutation:
        """Parse cycle notation such as ``(1 2 3)(4 5)``; ``()`` is the identity.

        Points inside a cycle are separated by whitespace or commas. Without
        an explicit degree the largest mentioned point is used.
        """
        text = text.strip()
        cycles = []
        pos = 0
        for m in _CYCLE_RE.finditer(text):
            if text[pos:m.start()].strip():
                raise PermutationError(f"unexpected text {text[pos:m.start()]!r} in {text!r}")
            body = m.group(1).replace(",", " ").split()
            try:
                cycles.append([int(tok) for tok in body])
            except ValueError:
                raise PermutationError(f"non-integer point in cycle {m.group(0)!r}") from None
            pos = m.end()
        if text[pos:].strip() or (not cycles and text):
            raise PermutationError(f"malformed cycle notation {text!r}")
        if degree is None:
            degree = max((pt for c in cycles for pt in c), default=0)
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise PermutationError("degree mismatch")
        img = other.images
        return Permutation(tuple(img[i] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, other):
        if isinstance(other, Permutation):
            return other.inverse() * self * other
        n = int(other)
        base = self if n >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(n)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles()), 1)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.images[i]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def extend(self, degree: int, shift: int = 0) -> Permutation:
        """Act on ``degree`` points, moving this permutation's support up by ``shift``."""
        if shift + self.degree > degree:
            raise PermutationError("target degree too small")
        images = list(range(degree))
        for i, j in enumerate(self.images):
            images[i + shift] = j + shift
        return Permutation(images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"

    def __str__(self) -> str:
        return self.cycle_string()

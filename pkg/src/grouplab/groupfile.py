"""Line-oriented group files.

::

    # comment
    group s3
    degree 3
    gen (1 2 3)
    gen (1 2)
    end

Points are 1-based and at most ``degree``; fixed points may be omitted and
``gen ()`` is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Group, generate_group
from .perm import Permutation, PermutationError


class GroupFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class GroupFile:
    name: str
    degree: int
    generators: list[Permutation] = field(default_factory=list)

    def build(self, max_elements: int | None = None) -> Group:
        return generate_group(self.generators, self.degree, max_elements=max_elements, name=self.name)


def parse_group_file(text: str) -> GroupFile:
    name = None
    degree = None
    gens: list[tuple[int, str]] = []
    ended = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise GroupFileError("content after 'end'", lineno)
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "group":
            if not rest or len(rest.split()) != 1:
                raise GroupFileError("expected 'group <name>'", lineno)
            name = rest
        elif keyword == "degree":
            try:
                degree = int(rest)
            except ValueError:
                raise GroupFileError(f"bad degree {rest!r}", lineno) from None
            if degree < 1:
                raise GroupFileError("degree must be positive", lineno)
        elif keyword == "gen":
            if degree is None:
                raise GroupFileError("'gen' before 'degree'", lineno)
            gens.append((lineno, rest))
        elif keyword == "end":
            if rest:
                raise GroupFileError("unexpected text after 'end'", lineno)
            ended = True
        else:
            raise GroupFileError(f"unknown keyword {keyword!r}", lineno)
    if not ended:
        raise GroupFileError("missing 'end'")
    if name is None:
        raise GroupFileError("missing 'group <name>'")
    if degree is None:
        raise GroupFileError("missing 'degree <n>'")
    if not gens:
        raise GroupFileError("at least one 'gen' line required")
    perms = []
    for lineno, spec in gens:
        try:
            perms.append(Permutation.parse(spec, degree))
        except PermutationError as exc:
            raise GroupFileError(str(exc), lineno) from None
    return GroupFile(name, degree, perms)


def load_group_file(path) -> Group:
    with open(path) as fh:
        return parse_group_file(fh.read()).build()


def write_group_file(G: Group, name: str | None = None, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"group {name or G.name or 'group'}")
    lines.append(f"degree {G.degree}")
    gens = G.generators or [G.identity]
    lines.extend(f"gen {g.cycle_string()}" for g in gens)
    lines.append("end")
    return "\n".join(lines) + "\n"

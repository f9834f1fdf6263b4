"""Finite group presentations and free-group words.

Words are stored freely reduced as (generator index, nonzero exponent)
pairs; no group-theoretic simplification beyond free reduction is ever
applied, since Fox calculus is defined on free-group words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple


class PresentationError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        if line:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Word:
    """A freely reduced word in a free group, as (index, exponent) letters."""

    letters: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        for i, (g, e) in enumerate(self.letters):
            if e == 0:
                raise PresentationError("zero exponent in word")
            if i and self.letters[i - 1][0] == g:
                raise PresentationError("word is not freely reduced")

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce_letters(self.letters + other.letters)

    def exponent_vector(self, num_generators: int) -> List[int]:
        out = [0] * num_generators
        for g, e in self.letters:
            out[g] += e
        return out

    def max_index(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    def is_empty(self) -> bool:
        return not self.letters


EMPTY_WORD = Word(())


def word(letters: Sequence[Tuple[int, int]]) -> Word:
    """Build a Word from arbitrary letters, reducing freely."""
    return free_reduce_letters(tuple(letters))


def free_reduce_letters(letters: Sequence[Tuple[int, int]]) -> Word:
    stack: List[List[int]] = []
    for g, e in letters:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return Word(tuple((g, e) for g, e in stack))


def free_reduce(w: Word) -> Word:
    """The unique freely reduced representative (idempotent)."""
    return free_reduce_letters(w.letters)


def commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


@dataclass(frozen=True)
class GroupPresentation:
    """⟨generators | relators⟩ with relators stored freely reduced."""

    generator_names: Tuple[str, ...]
    relators: Tuple[Word, ...]

    def __post_init__(self):
        for r in self.relators:
            if r.max_index() >= self.num_generators:
                raise PresentationError("relator uses an undeclared generator")

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    @property
    def num_relators(self) -> int:
        return len(self.relators)

    def exponent_matrix(self) -> List[List[int]]:
        """One row per relator: total exponent of each generator."""
        return [r.exponent_vector(self.num_generators) for r in self.relators]


def deficiency_lower_bound(p: GroupPresentation) -> int:
    """Generators minus relators: a lower bound for the deficiency."""
    return p.num_generators - p.num_relators


_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_LETTER = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_presentation(text: str) -> GroupPresentation:
    """Parse the line-oriented presentation format.

    `gens: <name> ...` then zero or more `rel: <letter> ...` lines, where a
    letter is `name` or `name^int`.  Blank lines and `#` comments ignored.
    """
    names: List[str] = []
    index = {}
    relators: List[Word] = []
    seen_gens = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if seen_gens:
                raise PresentationError("duplicate gens: line", lineno, 1)
            seen_gens = True
            for tok in line[len("gens:"):].split():
                if not _NAME.fullmatch(tok):
                    raise PresentationError(
                        f"bad generator name {tok!r}", lineno,
                        raw.index(tok) + 1)
                if tok in index:
                    raise PresentationError(
                        f"duplicate generator {tok!r}", lineno,
                        raw.index(tok) + 1)
                index[tok] = len(names)
                names.append(tok)
        elif line.startswith("rel:"):
            if not seen_gens:
                raise PresentationError("rel: before gens:", lineno, 1)
            letters = []
            for tok in line[len("rel:"):].split():
                m = _LETTER.match(tok)
                if not m:
                    raise PresentationError(
                        f"bad letter {tok!r}", lineno, raw.index(tok) + 1)
                name, exp = m.group(1), m.group(2)
                if name not in index:
                    raise PresentationError(
                        f"undeclared generator {name!r}", lineno,
                        raw.index(tok) + 1)
                e = int(exp) if exp is not None else 1
                if e == 0:
                    raise PresentationError(
                        f"zero exponent on {name!r}", lineno,
                        raw.index(tok) + 1)
                letters.append((index[name], e))
            relators.append(free_reduce_letters(tuple(letters)))
        else:
            raise PresentationError(f"unrecognized line {line!r}", lineno, 1)
    if not seen_gens:
        raise PresentationError("missing gens: line", 1, 1)
    return GroupPresentation(tuple(names), tuple(relators))


def render_presentation(p: GroupPresentation) -> str:
    """Canonical text form; parse(render(p)) == p."""
    lines = ["gens: " + " ".join(p.generator_names)]
    for r in p.relators:
        parts = []
        for g, e in r.letters:
            name = p.generator_names[g]
            parts.append(name if e == 1 else f"{name}^{e}")
        lines.append("rel: " + " ".join(parts))
    return "\n".join(lines) + "\n"

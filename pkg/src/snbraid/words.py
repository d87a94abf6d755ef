"""
Braid words in Artin generators, and the elementary quantities that only
depend on the word (underlying permutation, exponent sum, free reduction).

A word on n strands is a sequence of nonzero integers k with 1 <= |k| <= n-1:
k > 0 means the positive crossing sigma_k (the strand at position k passes
over the strand at position k+1), k < 0 means its inverse. Words compose
left-to-right: "a b" means a happens first (cylinders stacked bottom to top).

Text grammar, used by every interface that reads or prints words:
`s3` = sigma_3, `S3` = sigma_3 inverse, plain signed integers also work
(`3` / `-3`), tokens separated by whitespace. The strand count is always
given out-of-band.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable


class StrandMismatchError(ValueError):
    """Two words that must live in the same braid group do not."""


class WordSyntaxError(ValueError):
    """A braid word failed to parse; carries the position of the bad token."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_n. Immutable value."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        # Strand count 0 is tolerated as the degenerate base of a mixed braid
        # with an empty invariant set; it carries no letters.
        if self.strands < 0:
            raise ValueError(f"strand count must be >= 0, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for k in self.letters:
            if k == 0 or not (1 <= abs(k) <= self.strands - 1):
                raise ValueError(
                    f"letter {k} out of range for {self.strands} strands"
                )

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __len__(self) -> int:
        return len(self.letters)

    @staticmethod
    def identity(n: int) -> "BraidWord":
        return BraidWord(n, ())

    @staticmethod
    def parse(n: int, text: str) -> "BraidWord":
        """Parse a word in the text grammar (see module docstring)."""
        letters = []
        for lineno, line in enumerate(text.splitlines() or [""], start=1):
            body = line.split("#", 1)[0]
            col = 0
            for token in body.split():
                col = body.index(token, col)
                letters.append(_parse_token(token, lineno, col + 1))
                col += len(token)
        return BraidWord(n, tuple(letters))

    def format(self) -> str:
        """Render in the canonical `s<k>` / `S<k>` spelling."""
        return " ".join(f"s{k}" if k > 0 else f"S{-k}" for k in self.letters)

    def __str__(self) -> str:
        return self.format() or "<empty>"


def _parse_token(token: str, line: int, column: int) -> int:
    sign = 1
    body = token
    if token[0] in "sS":
        sign = 1 if token[0] == "s" else -1
        body = token[1:]
    try:
        value = int(body)
    except ValueError:
        raise WordSyntaxError(f"bad braid letter {token!r}", line, column) from None
    if token[0] in "sS" and value <= 0:
        raise WordSyntaxError(f"bad generator index in {token!r}", line, column)
    if value == 0:
        raise WordSyntaxError("generator index 0 is not allowed", line, column)
    return sign * value


@dataclasses.dataclass(frozen=True)
class PermutationTable:
    """The permutation underlying a braid: position i holds the endpoint of
    the strand starting at position i (1-based)."""

    size: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, self.size + 1)):
            raise ValueError(f"images {self.images} are not a bijection")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return all(self.images[i] == i + 1 for i in range(self.size))

    def then(self, other: "PermutationTable") -> "PermutationTable":
        """Composite `self` then `other`."""
        if self.size != other.size:
            raise StrandMismatchError("permutation sizes differ")
        return PermutationTable(
            self.size, tuple(other.images[self.images[i] - 1] for i in range(self.size))
        )

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycle decomposition, each cycle starting at its smallest element,
        cycles sorted by that element. Includes fixed points."""
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cycle))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Concatenate: a happens first, then b."""
    if a.strands != b.strands:
        raise StrandMismatchError(
            f"cannot compose words on {a.strands} and {b.strands} strands"
        )
    return BraidWord(a.strands, a.letters + b.letters)


def invert(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-k for k in reversed(a.letters)))


def free_reduce(a: BraidWord) -> BraidWord:
    """Cancel adjacent sigma_k sigma_k^-1 pairs until none remain."""
    stack: list[int] = []
    for k in a.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(a.strands, tuple(stack))


def permutation(a: BraidWord) -> PermutationTable:
    """Underlying permutation: start position -> end position."""
    occupant = list(range(a.strands))  # occupant[pos] = strand start (0-based)
    for k in a.letters:
        i = abs(k) - 1
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    images = [0] * a.strands
    for pos, start in enumerate(occupant):
        images[start] = pos + 1
    return PermutationTable(a.strands, tuple(images))


def exponent_sum(a: BraidWord) -> int:
    """Abelianization: sum of letter signs."""
    return sum(1 if k > 0 else -1 for k in a.letters)


def concat_all(n: int, words: Iterable[BraidWord]) -> BraidWord:
    out: list[int] = []
    for w in words:
        if w.strands != n:
            raise StrandMismatchError("strand counts differ in concatenation")
        out.extend(w.letters)
    return BraidWord(n, tuple(out))

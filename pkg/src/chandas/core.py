"""Syllable sequences and the G/L <-> binary convention.

Guru is digit 0 and laghu is digit 1. Position 1 is the leftmost syllable
and carries place value 1; place values grow to the right, so the modern
binary numeral of a row is its mirror image.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptyInput, InvalidCharacter


class Syllable(enum.IntEnum):
    GURU = 0
    LAGHU = 1

    @property
    def letter(self) -> str:
        return "G" if self is Syllable.GURU else "L"


G = Syllable.GURU
L = Syllable.LAGHU


class Notation(str, enum.Enum):
    GL = "gl"
    BINARY = "binary"


_GL_CHARS = {"G": G, "L": L}
_TO_GL = bytes.maketrans(b"\x00\x01", b"GL")
_TO_BIN = bytes.maketrans(b"\x00\x01", b"01")
_BIN_CHARS = {"0": G, "1": L}


@dataclass(frozen=True)
class GlSequence:
    """An immutable row of a prastara, leftmost syllable first."""

    syllables: tuple[Syllable, ...]

    def __init__(self, syllables: Iterable[Syllable | int]):
        items = tuple(Syllable(s) for s in syllables)
        if not items:
            raise EmptyInput()
        object.__setattr__(self, "syllables", items)

    @classmethod
    def _trusted(cls, syllables: tuple[Syllable, ...]) -> GlSequence:
        # Skips validation; callers pass a nonempty tuple of Syllable.
        obj = object.__new__(cls)
        object.__setattr__(obj, "syllables", syllables)
        return obj

    @classmethod
    def guru(cls, n: int) -> GlSequence:
        return cls((G,) * n)

    @classmethod
    def laghu(cls, n: int) -> GlSequence:
        return cls((L,) * n)

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def __getitem__(self, i):
        return self.syllables[i]

    def __str__(self) -> str:
        return self.gl()

    def __repr__(self) -> str:
        return f"GlSequence({self.gl()!r})"

    def gl(self) -> str:
        return bytes(self.syllables).translate(_TO_GL).decode()

    def binary(self) -> str:
        # Same position order as gl(); not mirrored.
        return bytes(self.syllables).translate(_TO_BIN).decode()

    def render(self, notation: Notation | str = Notation.GL) -> str:
        return self.binary() if Notation(notation) is Notation.BINARY else self.gl()

    def laghu_count(self) -> int:
        return sum(self.syllables)


def parse_sequence(text: str, notation: Notation | str = Notation.GL) -> GlSequence:
    """Parse ``GLG`` (case-insensitive) or ``010`` into a sequence.

    Positions in errors are 1-based.
    """
    if not text:
        raise EmptyInput()
    notation = Notation(notation)
    if notation is Notation.GL:
        table, text_ = _GL_CHARS, text.upper()
    else:
        table, text_ = _BIN_CHARS, text
    out = []
    for pos, ch in enumerate(text_, start=1):
        try:
            out.append(table[ch])
        except KeyError:
            raise InvalidCharacter(pos, text[pos - 1]) from None
    return GlSequence(out)


def to_modern_value(seq: GlSequence) -> int:
    """Sum of 2**(i-1) over the laghu positions i."""
    value = 0
    for i, s in enumerate(seq):
        if s is L:
            value += 1 << i
    return value


def to_row_index(seq: GlSequence) -> int:
    """1-based row of ``seq`` in its prastara."""
    return to_modern_value(seq) + 1

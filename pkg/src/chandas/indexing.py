"""Unranking (nashtam) and ranking (uddishtam) of prastara rows.

Also the extension of Pingala's ranking recurrence to numerals in any base
B, which yields the 1-based position of a numeral in counting order
(0 is the first number).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import G, L, GlSequence
from .errors import DigitOutOfRange, EmptyInput, IndexOutOfRange, InvalidBase

_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


def nashtam(k: int, n: int) -> GlSequence:
    """Recover row ``k`` (1-based) of the n-syllable prastara.

    An even value is halved and writes L; an odd value is incremented,
    halved and writes G.
    """
    if n < 1 or not 1 <= k <= 1 << n:
        raise IndexOutOfRange(k, n)
    out = []
    value = k
    for _ in range(n):
        if value % 2 == 0:
            out.append(L)
            value //= 2
        else:
            out.append(G)
            value = (value + 1) // 2
    return GlSequence(out)


def uddishtam_pingala(seq: GlSequence) -> int:
    """Row index of ``seq`` by Pingala's right-to-left doubling.

    Starting with 1 at the rightmost laghu, that laghu and every syllable
    to its left double the running value; a guru further subtracts one.
    Gurus right of the last laghu are skipped.
    """
    syl = seq.syllables
    last_l = None
    for i in range(len(syl) - 1, -1, -1):
        if syl[i] is L:
            last_l = i
            break
    if last_l is None:
        return 1
    s = 1
    for i in range(last_l, -1, -1):
        s = 2 * s if syl[i] is L else 2 * s - 1
    return s


def uddishtam_kedara(seq: GlSequence) -> int:
    """Row index of ``seq`` by Kedar Bhatt's doubled labels.

    Labels 1, 2, 4, ... are written over the syllables from the left; the
    labels standing over laghus are summed and one is added.
    """
    total = 0
    label = 1
    for s in seq:
        if s is L:
            total += label
        label *= 2
    return total + 1


@dataclass(frozen=True)
class BaseBNumeral:
    """Digits in base ``base``, most significant first. Leading zeros allowed."""

    base: int
    digits: tuple[int, ...]

    def __init__(self, base: int, digits: Iterable[int]):
        digits = tuple(digits)
        if base < 2:
            raise InvalidBase(base)
        if not digits:
            raise EmptyInput("numeral")
        for i, d in enumerate(digits):
            if not 0 <= d < base:
                raise DigitOutOfRange(i, d, base)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "digits", digits)

    @classmethod
    def parse(cls, text: str, base: int) -> BaseBNumeral:
        """Parse ``text`` with 0-9 then a-z as digits (base <= 36)."""
        if base < 2:
            raise InvalidBase(base)
        if base > len(_DIGIT_CHARS):
            raise InvalidBase(base)
        if not text:
            raise EmptyInput("numeral")
        digits = []
        for i, ch in enumerate(text.lower()):
            d = _DIGIT_CHARS.find(ch)
            if d < 0 or d >= base:
                raise DigitOutOfRange(i, ch if d < 0 else d, base)
            digits.append(d)
        return cls(base, digits)

    def complement(self, d: int) -> int:
        return self.base - 1 - d

    def __str__(self) -> str:
        if self.base <= len(_DIGIT_CHARS):
            return "".join(_DIGIT_CHARS[d] for d in self.digits)
        return ",".join(map(str, self.digits))


def rank_prefixes(num: BaseBNumeral) -> Iterator[int]:
    """Running value after each digit; the m-th value ranks the m-digit prefix."""
    b = num.base
    s = 1
    for d in num.digits:
        # A top digit (B-1) has zero complement: pure multiplication.
        s = b * s - num.complement(d)
        yield s


def rank_base_b(num: BaseBNumeral) -> int:
    """1-based position of ``num`` in counting order, i.e. value + 1."""
    s = 1
    for s in rank_prefixes(num):
        pass
    return s

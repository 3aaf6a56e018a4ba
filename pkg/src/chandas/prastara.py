"""Enumerating every laghu-guru row of n syllables.

Two independent constructions are provided. Pingala's is recursive: the
n-syllable matrix is two stacked copies of the (n-1)-syllable matrix, the
top copy extended with a guru column and the bottom with a laghu column.
Kedar Bhatt's is iterative: begin with all gurus and repeatedly derive the
next row from the previous one until every syllable is laghu.
"""

from __future__ import annotations

import gc
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import G, L, GlSequence, Syllable
from .errors import GuardExceeded, InvalidArgs

DEFAULT_GUARD = 20


@dataclass(frozen=True)
class Prastara:
    n: int
    rows: tuple[GlSequence, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[GlSequence]:
        return iter(self.rows)

    def row(self, k: int) -> GlSequence:
        """Row ``k``, counted from 1."""
        if not 1 <= k <= len(self.rows):
            raise IndexError(k)
        return self.rows[k - 1]


def check_guard(n: int, guard: Optional[int] = DEFAULT_GUARD) -> None:
    if n < 1:
        raise InvalidArgs(f"n must be >= 1, got {n}")
    if guard is not None and n > guard:
        raise GuardExceeded(n, guard)


@contextmanager
def _gc_paused():
    # Millions of acyclic tuples otherwise trigger repeated full collections.
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def _pingala_rows(n: int) -> list[tuple[Syllable, ...]]:
    if n == 1:
        return [(G,), (L,)]
    prev = _pingala_rows(n - 1)
    return [r + (G,) for r in prev] + [r + (L,) for r in prev]


def pingala_prastara(n: int, guard: Optional[int] = DEFAULT_GUARD) -> Prastara:
    check_guard(n, guard)
    with _gc_paused():
        return Prastara(n, tuple(GlSequence._trusted(r) for r in _pingala_rows(n)))


def kedara_successor(seq: GlSequence) -> Optional[GlSequence]:
    """Next row after ``seq``, or None once every syllable is laghu.

    A laghu goes under the first guru, the syllables to its right are
    copied and every place to its left becomes guru.
    """
    syl = seq.syllables
    try:
        i = syl.index(G)
    except ValueError:
        return None
    return GlSequence._trusted((G,) * i + (L,) + syl[i + 1:])


def prastara_stream(n: int) -> Iterator[GlSequence]:
    """Yield the 2**n rows lazily, in prastara order. No size guard."""
    if n < 1:
        raise InvalidArgs(f"n must be >= 1, got {n}")
    seq: Optional[GlSequence] = GlSequence.guru(n)
    while seq is not None:
        yield seq
        seq = kedara_successor(seq)


def kedara_prastara(n: int, guard: Optional[int] = DEFAULT_GUARD) -> Prastara:
    check_guard(n, guard)
    with _gc_paused():
        return Prastara(n, tuple(prastara_stream(n)))

"""The pataka prastara: row positions grouped by their number of laghus.

Column r lists every row of the n-syllable prastara holding exactly r
laghus, computed from powers of two without enumerating the rows. Each
entry is 1 plus a sum of distinct powers 2**0 .. 2**(n-1); column r+1 is
grown from column r by adding, to each entry in turn, every power larger
than the largest one already in it. Restricting to larger powers is what
skips sums already present in the matrix (5 + 4 = 9 for n = 5).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidArgs
from .prastara import DEFAULT_GUARD, check_guard


@dataclass(frozen=True)
class PatakaMatrix:
    n: int
    columns: tuple[tuple[int, ...], ...]

    def column(self, r: int) -> tuple[int, ...]:
        if not 0 <= r <= self.n:
            raise InvalidArgs(f"need 0 <= r <= n, got n={self.n}, r={r}")
        return self.columns[r]


def _columns(n: int, upto: int) -> list[list[int]]:
    # (entry, index of the largest power used; -1 for the bare 1)
    col = [(1, -1)]
    out = [[1]]
    for _ in range(upto):
        nxt = []
        for value, top in col:
            for i in range(top + 1, n):
                nxt.append((value + (1 << i), i))
        col = nxt
        out.append([v for v, _ in col])
    return out


def pataka(n: int, guard: Optional[int] = DEFAULT_GUARD) -> PatakaMatrix:
    check_guard(n, guard)
    return PatakaMatrix(n, tuple(tuple(c) for c in _columns(n, n)))


def pataka_column(n: int, r: int, guard: Optional[int] = DEFAULT_GUARD) -> list[int]:
    """Column ``r`` alone; generation stops once it is reached."""
    check_guard(n, guard)
    if not 0 <= r <= n:
        raise InvalidArgs(f"need 0 <= r <= n, got n={n}, r={r}")
    return _columns(n, r)[r]

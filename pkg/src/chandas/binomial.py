"""Three historical constructions of the binomial coefficients nCr."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgs


@dataclass(frozen=True)
class LagakriyaTable:
    """Kedar Bhatt's staircase for n syllables.

    Row i has n+1-i entries. The top row and the left column are all 1s and
    every other cell is the sum of the cell above and the cell to its left,
    so cell (i, j) holds C(i+j, i). The last cell of row i is nCi.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def terminals(self) -> list[int]:
        return [row[-1] for row in self.rows]


def lagakriya_table(n: int) -> LagakriyaTable:
    if n < 1:
        raise InvalidArgs(f"n must be >= 1, got {n}")
    rows = [[1] * (n + 1)]
    for i in range(1, n + 1):
        above = rows[-1]
        row = [1]
        for j in range(1, n + 1 - i):
            row.append(above[j] + row[j - 1])
        rows.append(row)
    return LagakriyaTable(n, tuple(tuple(r) for r in rows))


def lagakriya(n: int) -> list[int]:
    """[nC0, ..., nCn]: the count of rows with 0, 1, ..., n laghus."""
    return lagakriya_table(n).terminals()


@dataclass(frozen=True)
class MeruPyramid:
    depth: int
    rows: tuple[tuple[int, ...], ...]


def meru(depth: int) -> MeruPyramid:
    """Halayudha's meru: ends of every row are 1, inner cells add the two above."""
    if depth < 1:
        raise InvalidArgs(f"depth must be >= 1, got {depth}")
    rows = [(1,)]
    for i in range(1, depth):
        above = rows[-1]
        rows.append((1,) + tuple(above[j - 1] + above[j] for j in range(1, i)) + (1,))
    return MeruPyramid(depth, tuple(rows))


def bhaskara_steps(n: int, r: int) -> list[int]:
    """[nC0, nC1, ..., nCr] by C_{k+1} = C_k * (n-k) / (k+1)."""
    if n < 0 or r < 0 or r > n:
        raise InvalidArgs(f"need 0 <= r <= n, got n={n}, r={r}")
    out = [1]
    c = 1
    for k in range(r):
        num = c * (n - k)
        c, rem = divmod(num, k + 1)
        assert rem == 0, (n, k, num)
        out.append(c)
    return out


def bhaskara_ncr(n: int, r: int) -> int:
    return bhaskara_steps(n, r)[-1]

"""Modern reference computations used to cross-check the historical ones.

Nothing here imports the historical modules except ``prastara_stream``,
which brute_positions scans by design; values are obtained by textbook
means (division by two, factorials, repeated doubling, direct sums).
"""

from __future__ import annotations

import math
from typing import Iterator

from .core import GlSequence, Syllable
from .errors import IndexOutOfRange, InvalidArgs, Overflow
from .prastara import prastara_stream


def modern_to_binary(v: int, width: int) -> list[int]:
    """Bits of ``v``, most significant first, by repeated division by 2."""
    if v < 0 or width < 1 or v >= 1 << width:
        raise Overflow(v, width)
    remainders = []
    for _ in range(width):
        v, rem = divmod(v, 2)
        remainders.append(rem)
    return remainders[::-1]


def mirror_bridge(seq: GlSequence) -> list[int]:
    """Read a row as a modern numeral: reverse it, then G -> 0 and L -> 1."""
    return [int(s) for s in reversed(seq.syllables)]


def bits_value(bits: list[int]) -> int:
    value = 0
    for b in bits:
        value = value * 2 + b
    return value


def counting_row(k: int, n: int) -> GlSequence:
    """Row ``k`` as the mirrored n-bit binary numeral of k - 1."""
    if not 1 <= k <= 1 << n:
        raise IndexOutOfRange(k, n)
    bits = modern_to_binary(k - 1, n)
    return GlSequence(Syllable(b) for b in reversed(bits))


def counting_rows(n: int) -> Iterator[GlSequence]:
    for k in range(1, (1 << n) + 1):
        yield counting_row(k, n)


def counting_row_index(seq: GlSequence) -> int:
    return bits_value(mirror_bridge(seq)) + 1


def numeral_value(digits: list[int] | tuple[int, ...], base: int) -> int:
    value = 0
    for d in digits:
        value = value * base + d
    return value


def ncr_factorial(n: int, r: int) -> int:
    if n < 0 or not 0 <= r <= n:
        raise InvalidArgs(f"need 0 <= r <= n, got n={n}, r={r}")
    return math.factorial(n) // (math.factorial(r) * math.factorial(n - r))


def pow2_doubling(n: int) -> int:
    v = 1
    for _ in range(n):
        v += v
    return v


def geometric_sum(n: int) -> int:
    """2 + 4 + ... + 2**n by direct summation."""
    return sum(pow2_doubling(i) for i in range(1, n + 1))


def brute_positions(n: int, r: int) -> list[int]:
    """Positions, in prastara order, of the rows with exactly ``r`` laghus."""
    if not 0 <= r <= n:
        raise InvalidArgs(f"need 0 <= r <= n, got n={n}, r={r}")
    return [k for k, seq in enumerate(prastara_stream(n), start=1)
            if seq.laghu_count() == r]

"""Sankhya (the row count 2**n) and adhvayoga (the sum of 2**i for i <= n).

Pingala's method is the binary square-and-multiply: reduce n to zero,
halving when even (token 2) and subtracting one when odd (token 0), then
replay the tokens last-emitted first from 1, doubling on 0 and squaring
on 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .binomial import lagakriya
from .errors import InvalidArgs


class Token(enum.IntEnum):
    DECREMENT = 0
    HALVE = 2


@dataclass(frozen=True)
class SankhyaTrace:
    n: int
    # (value after the step, token written) in emission order
    reduction: tuple[tuple[int, Token], ...]
    replay: tuple[int, ...]

    @property
    def tokens(self) -> tuple[Token, ...]:
        return tuple(t for _, t in self.reduction)

    @property
    def result(self) -> int:
        return self.replay[-1] if self.replay else 1

    @property
    def multiplications(self) -> int:
        return len(self.replay)


def sankhya_tokens(n: int) -> list[Token]:
    """Reduction phase only: the token stack for ``n``, in emission order."""
    if n < 0:
        raise InvalidArgs(f"n must be >= 0, got {n}")
    tokens = []
    while n > 0:
        if n % 2 == 0:
            tokens.append(Token.HALVE)
            n //= 2
        else:
            tokens.append(Token.DECREMENT)
            n -= 1
    return tokens


def sankhya_pingala(n: int) -> SankhyaTrace:
    if n < 0:
        raise InvalidArgs(f"n must be >= 0, got {n}")
    reduction = []
    m = n
    while m > 0:
        if m % 2 == 0:
            m //= 2
            reduction.append((m, Token.HALVE))
        else:
            m -= 1
            reduction.append((m, Token.DECREMENT))

    replay = []
    v = 1
    for _, token in reversed(reduction):
        v = v * 2 if token is Token.DECREMENT else v * v
        replay.append(v)
    return SankhyaTrace(n, tuple(reduction), tuple(replay))


def sankhya_kedara_lagakriya(n: int) -> int:
    """Sum of the laga-kriya numbers for n syllables."""
    return sum(lagakriya(n))


def sankhya_kedara_uddishta(n: int) -> int:
    """Sum of the uddishta labels 1, 2, ..., 2**(n-1), plus one."""
    if n < 1:
        raise InvalidArgs(f"n must be >= 1, got {n}")
    total = 0
    label = 1
    for _ in range(n):
        total += label
        label *= 2
    return total + 1


def adhvayoga(n: int) -> int:
    """Rows over all meters of 1..n syllables: twice the last sankhya, less two."""
    if n < 1:
        raise InvalidArgs(f"n must be >= 1, got {n}")
    return sankhya_pingala(n).result * 2 - 2

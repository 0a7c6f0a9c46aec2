"""Pair coding of N^2, the permutations pi_a, and the ball-pattern code."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .freegroup import ball_size, index_of_word, mul, word_of_index


def pair(n: int, m: int) -> int:
    """Cantor pairing <n, m> = (n+m)(n+m+1)/2 + n."""
    if n < 0 or m < 0:
        raise ValueError("pair expects non-negative arguments")
    s = n + m
    return s * (s + 1) // 2 + n


def unpair(k: int) -> tuple[int, int]:
    if k < 0:
        raise ValueError("unpair expects a non-negative code")
    s = (isqrt(8 * k + 1) - 1) // 2
    n = k - s * (s + 1) // 2
    return n, s - n


@lru_cache(maxsize=1 << 18)
def rra(a: int, n: int, rank: int = 2) -> int:
    """Right regular representation: the index of g_n . g_a."""
    return index_of_word(mul(word_of_index(rank, n), word_of_index(rank, a)))


def pi_apply(a: int, k: int) -> int:
    if k < 0:
        raise ValueError("pi_a acts on non-negative codes")
    # unpair, move the first coordinate, pair again
    t = (isqrt(8 * k + 1) - 1) // 2
    n = k - t * (t + 1) // 2
    m = t - n
    n2 = rra(a, n)
    s = n2 + m
    return s * (s + 1) // 2 + n2


def pi_compose_index(a: int, b: int) -> int:
    """Index c with pi_b(pi_a(k)) == pi_c(k); c is the index of g_a . g_b."""
    return index_of_word(mul(word_of_index(2, a), word_of_index(2, b)))


def code6(bit: int, t: int) -> int:
    if bit not in (0, 1) or t not in (0, 1, 2):
        raise ValueError(f"code6 expects bit in 0..1 and t in 0..2, got ({bit}, {t})")
    return 3 * bit + t


def decode6(v: int) -> tuple[int, int]:
    if not 0 <= v < 6:
        raise ValueError(f"decode6 expects a value in 0..5, got {v}")
    return divmod(v, 3)


PATTERN_BASE = 9


def pattern_code(radius: int, digits, base: int = PATTERN_BASE) -> int:
    """Injective code of a pattern on B_3(1, radius): <radius, sum digit_i * 9^i>."""
    digits = list(digits)
    if len(digits) != ball_size(3, radius):
        raise ValueError(
            f"pattern on B_3(1,{radius}) needs {ball_size(3, radius)} digits, got {len(digits)}")
    value = 0
    for d in reversed(digits):
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range 0..{base - 1}")
        value = value * base + d
    return pair(radius, value)


def pattern_decode(code: int, base: int = PATTERN_BASE) -> tuple[int, list[int]]:
    radius, value = unpair(code)
    size = ball_size(3, radius)
    digits = []
    for _ in range(size):
        value, d = divmod(value, base)
        digits.append(d)
    if value:
        raise ValueError(f"{code} is not the code of a pattern")
    return radius, digits

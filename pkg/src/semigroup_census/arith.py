"""Integer helpers shared by the counting modules.

Both conventions used throughout the counting formulas live here so every
module agrees on them: ``fib(n) == 0`` for ``n <= 0`` and ``binom(a, b) == 0``
unless ``0 <= b <= a``.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def _fib_pair(n: int) -> tuple[int, int]:
    # (F_n, F_{n+1}) by fast doubling
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    """Fibonacci number with F_1 = F_2 = 1 and F_n = 0 for every n <= 0."""
    if n <= 0:
        return 0
    return _fib_pair(n)[0]


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero unless 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def popcount(x: int) -> int:
    return x.bit_count()


def bits(mask: int) -> list[int]:
    """Positions of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(elements) -> int:
    m = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element {e}")
        m |= 1 << e
    return m


def format_set(elements) -> str:
    return "{" + ",".join(str(e) for e in sorted(elements)) + "}"


def parse_int_list(text: str) -> list[int]:
    """Parse ``"0,2"``, ``"{0, 2}"`` or ``""`` into a list of integers."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return []
    try:
        return [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"invalid integer set syntax: {text!r}") from None

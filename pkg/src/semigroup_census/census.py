"""Genus-indexed totals: t_g exactly and its Fibonacci bounds, plus older baselines."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

import numpy as np

from .arith import fib
from .construction import count_typed_g_sizes, typed_index
from .errors import ResourceLimitError
from .quad_field import phi_pow, to_decimal
from .type_space import type_profile

GENUS_CEILING = 36


@dataclass(frozen=True)
class CensusRow:
    g: int
    n_g: Optional[int]
    t_g: int
    ratio_n: Optional[str]
    ratio_t: str
    fraction: Optional[str]

    @classmethod
    def build(cls, g: int, t_g: int, n_g: Optional[int] = None, places: int = 5) -> "CensusRow":
        if n_g is not None and t_g > n_g:
            raise ValueError(f"t_g={t_g} exceeds n_g={n_g} at genus {g}")
        weight = phi_pow(-g)
        return cls(
            g,
            n_g,
            t_g,
            to_decimal(n_g * weight, places) if n_g is not None else None,
            to_decimal(t_g * weight, places),
            to_decimal(Fraction(t_g, n_g), places) if n_g else None,
        )


def _guard(g: int, ceiling: Optional[int]) -> None:
    if g < 1:
        raise ValueError("g must be positive")
    if ceiling is not None and g > ceiling:
        raise ResourceLimitError(
            f"enumeration too large: genus {g} exceeds ceiling {ceiling} (override to lift)"
        )


def _type_sum(g: int, k_hi: int, term) -> int:
    total = 0
    for k in range(1, k_hi + 1):
        prof = type_profile(k)
        for a, s in zip(*np.nonzero(prof)):
            total += int(prof[a, s]) * term(k, int(a), int(s))
    return total


def t_exact(g: int, ceiling: Optional[int] = GENUS_CEILING) -> int:
    """Exact number of genus-g semigroups with f < 3m."""
    _guard(g, ceiling)
    return fib(g + 1) + _type_sum(g, g - 1, lambda k, a, s: count_typed_g_sizes(g, k, a, s))


def t_exact_small_types(g: int) -> int:
    """Exact count restricted to f < 2m and types with k <= g/3."""
    _guard(g, None)
    return fib(g + 1) + _type_sum(g, g // 3, lambda k, a, s: count_typed_g_sizes(g, k, a, s))


def t_lower(g: int) -> int:
    _guard(g, None)
    return fib(g + 1) + _type_sum(g, g // 3, lambda k, a, s: fib(typed_index(g, a, s, k)))


def t_upper(g: int, ceiling: Optional[int] = GENUS_CEILING) -> int:
    _guard(g, ceiling)
    return fib(g + 1) + _type_sum(g, g - 1, lambda k, a, s: fib(typed_index(g, a, s, k)))


@dataclass(frozen=True)
class Baselines:
    bras_lower: int
    bras_upper: int
    dyck_upper: int


def baselines(g: int) -> Baselines:
    """2F_g, 1 + 3·2^(g-3) and the Catalan number C(2g, g)/(g+1).

    Below g = 3 the middle bound is not an integer and is floored, which
    keeps it an upper bound on the integer n_g.
    """
    if g < 0:
        raise ValueError("g must be non-negative")
    if g >= 3:
        bras_upper = 1 + 3 * 2 ** (g - 3)
    else:
        bras_upper = int(1 + Fraction(3 * 2**g, 8))
    num = comb(2 * g, g)
    dyck, rem = divmod(num, g + 1)
    assert rem == 0
    return Baselines(2 * fib(g), bras_upper, dyck)


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


ELIZALDE_NUMERATOR = [0, 1, 0, -1, -2, -3, 1, 2, 3, 3, 1]
ELIZALDE_DENOMINATOR_FACTORS = [
    [1, 1],
    [1, -1],
    [1, -1, -1],
    [1, -1, 0, -1],
    [1, 0, 0, -1, -2, -2, -1],
]


def elizalde_series(g_max: int) -> list[int]:
    """Coefficients a_1..a_{g_max} of Elizalde's lower-bound generating function."""
    if g_max < 1:
        raise ValueError("g_max must be positive")
    den = [1]
    for factor in ELIZALDE_DENOMINATOR_FACTORS:
        den = _poly_mul(den, factor)
    assert den[0] == 1
    a = [0] * (g_max + 1)
    for n in range(g_max + 1):
        v = ELIZALDE_NUMERATOR[n] if n < len(ELIZALDE_NUMERATOR) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            v -= den[j] * a[n - j]
        a[n] = v
    return a[1:]

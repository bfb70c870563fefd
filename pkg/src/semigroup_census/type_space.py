"""Types (A; k): subsets A of [0, k-1] with 0 in A and k not in A + A.

A type is stored as a bit mask of width k. The family of all such A for a
given k has 3^floor((k-1)/2) members, because each pair {x, k-x} with
1 <= x < k/2 contributes at most one element and k/2 is always excluded.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

import numpy as np

from . import _kernels
from .arith import bits, format_set, mask_of
from .errors import ResourceLimitError

KMAX_CEILING = 48
# pairs fixed before handing a shard to the compiled walker
_SHARD_PAIRS = 4


@dataclass(frozen=True, order=True)
class TypeDescriptor:
    k: int
    mask: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if not self.mask & 1:
            raise ValueError("A must contain 0")
        if self.mask >> self.k:
            raise ValueError(f"A must lie in [0, {self.k - 1}]")
        if (sumset_mask(self.mask) >> self.k) & 1:
            raise ValueError(f"{self.k} lies in A + A")

    @classmethod
    def of(cls, elements, k: int) -> "TypeDescriptor":
        return cls(k, mask_of(elements))

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __str__(self) -> str:
        return f"({format_set(self.elements)};{self.k})"


def sumset_mask(mask: int) -> int:
    """Bit mask of A + A, by OR-ing shifted copies of A."""
    out = 0
    m = mask
    while m:
        low = m & -m
        out |= mask << (low.bit_length() - 1)
        m ^= low
    return out


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError("k must be a positive integer")


def count_Ak(k: int) -> int:
    _check_k(k)
    return 3 ** ((k - 1) // 2)


def enumerate_Ak(k: int) -> Iterator[TypeDescriptor]:
    """Yield every A in the family for ``k``, in increasing bit-mask order.

    The upper half k-1, ..., k-p of each pair dominates the mask value, so
    the upper choices are walked as a binary counter and, for each, every
    subset of the still-free lower positions is deposited in increasing order.
    """
    _check_k(k)
    p = (k - 1) // 2
    for hi in range(1 << p):
        hi_mask = 0
        free = []
        for x in range(1, p + 1):
            if (hi >> (p - x)) & 1:
                hi_mask |= 1 << (k - x)
            else:
                free.append(x)
        for lo in range(1 << len(free)):
            mask = hi_mask | 1
            for j, x in enumerate(free):
                if (lo >> j) & 1:
                    mask |= 1 << x
            yield TypeDescriptor(k, mask)


def restricted_sumset_size(t: TypeDescriptor) -> int:
    """|(A + A) ∩ [0, k]|."""
    return (sumset_mask(t.mask) & ((1 << (t.k + 1)) - 1)).bit_count()


def weight_exponent(t: TypeDescriptor) -> int:
    """c(A, k) = |(A+A) ∩ [0,k]| - |A| + k + 1; the type carries weight φ^(-c)/√5."""
    return restricted_sumset_size(t) - t.size + t.k + 1


def _shards(k: int):
    p = (k - 1) // 2
    fixed = min(p, _SHARD_PAIRS)
    for choice in itertools.product(range(3), repeat=fixed):
        a = 1
        for x, c in enumerate(choice, start=1):
            if c == 1:
                a |= 1 << x
            elif c == 2:
                a |= 1 << (k - x)
        s = sumset_mask(a) & ((1 << (k + 1)) - 1)
        yield fixed + 1, a, s, a.bit_count()


# set by the CLI; CENSUS_THREADS still wins
configured_threads: int | None = None


def default_threads() -> int:
    env = os.environ.get("CENSUS_THREADS")
    if env:
        return max(1, int(env))
    if configured_threads:
        return configured_threads
    return os.cpu_count() or 1


def _profile_uncached(k: int, threads: int) -> np.ndarray:
    shards = list(_shards(k))

    def run(shard):
        start, a, s, n = shard
        out = np.zeros((k + 1, k + 2), dtype=np.int64)
        _kernels.type_profile_shard(k, start, a, s, n, out)
        return out

    if threads > 1 and len(shards) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, shards))
    else:
        parts = [run(sh) for sh in shards]
    total = np.zeros((k + 1, k + 2), dtype=np.int64)
    for part in parts:
        total += part
    return total


@lru_cache(maxsize=None)
def _profile_cached(k: int) -> np.ndarray:
    prof = _profile_uncached(k, default_threads())
    prof.setflags(write=False)
    return prof


def type_profile(k: int, threads: int | None = None) -> np.ndarray:
    """Joint counts ``P[a, s]`` of types (A; k) with |A| = a and |(A+A)∩[0,k]| = s.

    Every formula summed over a family only depends on these two sizes, so
    one walk per k serves all of them. Results are cached per k; passing
    ``threads`` forces a fresh (uncached) computation with that many workers.
    """
    _check_k(k)
    if k > 62:
        raise ResourceLimitError("k beyond 62 does not fit a machine word")
    if threads is None:
        return _profile_cached(k)
    return _profile_uncached(k, max(1, threads))


@dataclass
class ExponentHistogram:
    """Counts of types by weight exponent c, over all k <= kmax."""

    counts: dict[int, int] = field(default_factory=dict)
    kmax: int = 0

    def total(self) -> int:
        return sum(self.counts.values())

    def __add__(self, other: "ExponentHistogram") -> "ExponentHistogram":
        merged = Counter(self.counts)
        merged.update(other.counts)
        return ExponentHistogram(dict(sorted(merged.items())), max(self.kmax, other.kmax))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExponentHistogram):
            return NotImplemented
        a = {c: n for c, n in self.counts.items() if n}
        b = {c: n for c, n in other.counts.items() if n}
        return a == b


def histogram_for_k(k: int, threads: int | None = None) -> ExponentHistogram:
    prof = type_profile(k, threads)
    counts: dict[int, int] = {}
    for a, s in zip(*np.nonzero(prof)):
        c = int(s) - int(a) + k + 1
        counts[c] = counts.get(c, 0) + int(prof[a, s])
    return ExponentHistogram(dict(sorted(counts.items())), k)


def exponent_histogram(
    k_max: int, threads: int | None = None, ceiling: int | None = KMAX_CEILING
) -> ExponentHistogram:
    """Histogram of c(A, k) over all types with 1 <= k <= k_max.

    Refuses ``k_max`` above ``ceiling`` (pass ``None`` to lift it).
    """
    if k_max < 1:
        raise ValueError("k_max must be positive")
    if ceiling is not None and k_max > ceiling:
        raise ResourceLimitError(
            f"enumeration too large: k_max={k_max} exceeds ceiling {ceiling}"
        )
    hist = ExponentHistogram({}, 0)
    for k in range(1, k_max + 1):
        hist = hist + histogram_for_k(k, threads)
    return hist


def histogram_from_counts(counts: Mapping[int, int], kmax: int = 0) -> ExponentHistogram:
    return ExponentHistogram(dict(sorted(counts.items())), kmax)

"""Brute-force enumeration of all numerical semigroups through the semigroup tree.

The root is N_0. The children of a semigroup are obtained by deleting one
minimal generator larger than its Frobenius number; every semigroup of genus
g >= 1 has exactly one parent (add back its Frobenius number), so walking the
tree level by level lists each semigroup once.

Two walkers are provided. :func:`enumerate_by_genus` yields
:class:`GapSemigroup` values and tests generators directly on bit masks; it
is the readable reference. :func:`genus_counts` drives a compiled walker
that tracks decomposition numbers and only returns counts; it is what makes
genus 30 reachable.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import _kernels
from .census import CensusRow
from .construction import type_of
from .core import GapSemigroup, SemigroupClass, classify
from .errors import ResourceLimitError
from .type_space import default_threads

GENUS_CEILING = 32


def _guard(g_max: int, ceiling: Optional[int]) -> None:
    if g_max < 0:
        raise ValueError("g_max must be non-negative")
    if ceiling is not None and g_max > ceiling:
        raise ResourceLimitError(
            f"enumeration too large: genus {g_max} exceeds ceiling {ceiling} (override to lift)"
        )


def minimal_generators_above_frobenius(s: GapSemigroup) -> list[int]:
    """Minimal generators x > f; they all lie in (f, f + m] (just {1} for N_0)."""
    f, m = s.frobenius, s.multiplicity
    out = []
    for x in range(max(f + 1, 1), max(f + m, 1) + 1):
        # x is decomposable iff x - y is a nonzero member for some member 0 < y < x
        if not any(y in s and (x - y) in s for y in range(m, x - m + 1)):
            out.append(x)
    return out


def children(s: GapSemigroup) -> list[GapSemigroup]:
    return [GapSemigroup(s.gapmask | (1 << x)) for x in minimal_generators_above_frobenius(s)]


def enumerate_by_genus(g_max: int, ceiling: Optional[int] = GENUS_CEILING) -> Iterator[list[GapSemigroup]]:
    """Yield, for g = 0, 1, ..., g_max, the list of all semigroups of genus g."""
    _guard(g_max, ceiling)
    level = [GapSemigroup(0)]
    yield level
    for _ in range(g_max):
        level = [c for s in level for c in children(s)]
        yield level


def semigroups_of_genus(g: int, ceiling: Optional[int] = GENUS_CEILING) -> list[GapSemigroup]:
    *_, last = enumerate_by_genus(g, ceiling)
    return last


@dataclass(frozen=True)
class GenusCounts:
    """Per-genus totals from the compiled tree walk, indexed by genus 0..g_max."""

    n: tuple[int, ...]
    t: tuple[int, ...]
    f_lt_2m: tuple[int, ...]


def _root_dec(size: int) -> np.ndarray:
    # in N_0, y = a + b with 0 <= a <= b in floor(y/2) + 1 ways
    return (np.arange(size, dtype=np.int32) // 2 + 1).astype(np.int32)


def _dec_of(s: GapSemigroup, size: int) -> np.ndarray:
    member = np.array([x in s for x in range(size)], dtype=bool)
    dec = np.zeros(size, dtype=np.int32)
    for y in range(size):
        for a in range(y // 2 + 1):
            if member[a] and member[y - a]:
                dec[y] += 1
    return dec


def genus_counts(
    g_max: int,
    threads: Optional[int] = None,
    ceiling: Optional[int] = GENUS_CEILING,
    split_depth: Optional[int] = None,
) -> GenusCounts:
    """n_g, t_g and the f < 2m count for every genus up to ``g_max``.

    The tree is cut at genus ``split_depth``; each node there is an
    independent task and the counts are summed, so the result does not depend
    on ``threads``.
    """
    _guard(g_max, ceiling)
    threads = default_threads() if threads is None else max(1, threads)
    size = 3 * g_max + 3
    if split_depth is None:
        split_depth = min(g_max, 8 if threads > 1 else 0)
    split_depth = max(0, min(split_depth, g_max))

    n = np.zeros(g_max + 1, dtype=np.int64)
    t = np.zeros(g_max + 1, dtype=np.int64)
    lt2 = np.zeros(g_max + 1, dtype=np.int64)
    # levels above the cut are counted directly
    for g, level in enumerate(enumerate_by_genus(split_depth, None)):
        for s in level:
            n[g] += 1
            cls = classify(s)
            if cls is not SemigroupClass.F_GT_3M:
                t[g] += 1
                if cls is SemigroupClass.F_LT_2M:
                    lt2[g] += 1
        if g == split_depth:
            roots = level

    def run(s: GapSemigroup):
        out = np.zeros((3, g_max + 1), dtype=np.int64)
        dec = _root_dec(size) if s.genus == 0 else _dec_of(s, size)
        _kernels.tree_walk(dec, s.genus, s.multiplicity, s.frobenius, g_max, out[0], out[1], out[2])
        return out

    if threads > 1 and len(roots) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, roots))
    else:
        parts = [run(s) for s in roots]
    for part in parts:
        n += part[0]
        t += part[1]
        lt2 += part[2]
    return GenusCounts(tuple(map(int, n)), tuple(map(int, t)), tuple(map(int, lt2)))


def census_table(
    g_max: int,
    threads: Optional[int] = None,
    ceiling: Optional[int] = GENUS_CEILING,
    places: int = 5,
) -> list[CensusRow]:
    """Rows g = 1..g_max with n_g, t_g and the three ratio columns."""
    counts = genus_counts(g_max, threads, ceiling)
    return [CensusRow.build(g, counts.t[g], counts.n[g], places) for g in range(1, g_max + 1)]


def bucket_counts(g: int, by_type: bool = False, ceiling: Optional[int] = 24) -> Counter:
    """Partition the genus-g semigroups by class, and optionally by type.

    Keys are :class:`SemigroupClass` members; with ``by_type`` the middle
    class is replaced by one key per :class:`TypeDescriptor` found.
    """
    _guard(g, ceiling)
    out: Counter = Counter()
    for s in semigroups_of_genus(g, None):
        cls = classify(s)
        if by_type and cls is SemigroupClass.F_BETWEEN_2M_3M:
            out[type_of(s)] += 1
        else:
            out[cls] += 1
    return out

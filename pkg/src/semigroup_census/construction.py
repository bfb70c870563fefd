"""Explicit families of semigroups with f < 2m and 2m < f < 3m, and their counts."""
from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .arith import binom, bits, fib, mask_of
from .core import GapSemigroup, SemigroupClass, classify
from .type_space import TypeDescriptor, restricted_sumset_size, sumset_mask


def build_f_lt_2m(m: int, S: Iterable[int] = ()) -> GapSemigroup:
    """The semigroup {0, m} ∪ S ∪ [2m, ∞) for S ⊆ [m+1, 2m-1]."""
    if m < 1:
        raise ValueError("m must be positive")
    S = set(S)
    bad = [x for x in S if not m + 1 <= x <= 2 * m - 1]
    if bad:
        raise ValueError(f"S must lie in [{m + 1}, {2 * m - 1}], got {sorted(bad)}")
    members = {0, m} | S
    return GapSemigroup.from_members(members, 2 * m)


def count_f_lt_2m(m: int, g: int) -> int:
    return binom(m - 1, 2 * m - 2 - g)


def total_f_lt_2m(g: int) -> int:
    """Number of genus-g semigroups with f < 2m, summed over m; equals F_{g+1}."""
    if g < 1:
        raise ValueError("g must be positive")
    total = sum(count_f_lt_2m(m, g) for m in range(1, g + 2))
    fib_form = fib(g + 1)
    if total != fib_form:
        raise ArithmeticError(f"sum {total} disagrees with F_{g + 1} = {fib_form}")
    return total


def free_positions(m: int, t: TypeDescriptor) -> list[int]:
    """Positions in [m+k+1, 2m+k-1] that the free subset B may use."""
    if m <= t.k:
        raise ValueError(f"need m > k, got m={m}, k={t.k}")
    forced = sumset_mask(t.mask) << (2 * m)
    return [x for x in range(m + t.k + 1, 2 * m + t.k) if not (forced >> x) & 1]


def build_typed(m: int, t: TypeDescriptor, B: Iterable[int] = ()) -> GapSemigroup:
    """{0} ∪ (m+A) ∪ (2m + (A+A)∩[0,k]) ∪ B ∪ [2m+k+1, ∞)."""
    allowed = set(free_positions(m, t))
    B = set(B)
    bad = sorted(B - allowed)
    if bad:
        raise ValueError(
            f"B elements {bad} are outside [{m + t.k + 1}, {2 * m + t.k - 1}] "
            "or collide with 2m + A + A"
        )
    k = t.k
    sums = sumset_mask(t.mask) & ((1 << (k + 1)) - 1)
    members = {0} | {m + a for a in t.elements} | {2 * m + c for c in bits(sums)} | B
    return GapSemigroup.from_members(members, 2 * m + k + 1)


def semigroups_of_type(m: int, t: TypeDescriptor) -> Iterator[GapSemigroup]:
    """Every semigroup with multiplicity m and type t, one per free subset B."""
    free = free_positions(m, t)
    for sel in range(1 << len(free)):
        yield build_typed(m, t, [x for j, x in enumerate(free) if (sel >> j) & 1])


def type_of(s: GapSemigroup) -> TypeDescriptor:
    if classify(s) is not SemigroupClass.F_BETWEEN_2M_3M:
        raise ValueError(f"type is only defined when 2m < f < 3m: {s}")
    m, f = s.multiplicity, s.frobenius
    k = f - 2 * m
    return TypeDescriptor(k, mask_of(x - m for x in range(m, m + k + 1) if x in s))


def count_typed_mg(m: int, t: TypeDescriptor, g: int) -> int:
    """Semigroups of multiplicity m, type t and genus g."""
    if m <= t.k:
        raise ValueError(f"need m > k, got m={m}, k={t.k}")
    s = restricted_sumset_size(t)
    return binom(m - 1 - s, g + t.size - m - t.k - 1)


class TypedCount(NamedTuple):
    value: int
    fibonacci: int
    exact_condition: bool
    agree: bool


def typed_index(g: int, a: int, s: int, k: int) -> int:
    return g - s + a - k - 1


def count_typed_g_sizes(g: int, k: int, a: int, s: int) -> int:
    """Sum over m > k of C(m-1-s, g+a-m-k-1), for a type with |A|=a, |(A+A)∩[0,k]|=s."""
    return sum(binom(m - 1 - s, g + a - m - k - 1) for m in range(k + 1, g + a - k))


def count_typed_g(g: int, t: TypeDescriptor) -> TypedCount:
    """Genus-g semigroups of type t, with the Fibonacci upper bound beside it.

    ``exact_condition`` is the sufficient condition 3k <= g + |A| + s - 2 under
    which the two coincide; ``agree`` reports whether they actually do.
    """
    if g < 1:
        raise ValueError("g must be positive")
    a, s, k = t.size, restricted_sumset_size(t), t.k
    value = count_typed_g_sizes(g, k, a, s)
    fib_form = fib(typed_index(g, a, s, k))
    return TypedCount(value, fib_form, 3 * k <= g + a + s - 2, value == fib_form)

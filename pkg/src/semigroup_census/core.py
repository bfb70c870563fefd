"""Numerical semigroups stored by their gap set."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .arith import bits, mask_of


class SemigroupClass(enum.Enum):
    F_LT_2M = "f<2m"
    F_BETWEEN_2M_3M = "2m<f<3m"
    F_GT_3M = "f>3m"


def _closed_mask(gapmask: int) -> bool:
    if gapmask == 0:
        return True
    f = gapmask.bit_length() - 1
    members = ~gapmask & ((1 << (f + 1)) - 1) & ~1
    a_bits = members
    a = 0
    while a_bits:
        low = a_bits & -a_bits
        a = low.bit_length() - 1
        if 2 * a > f:
            break
        # every sum a + b with b a nonzero member must avoid the gaps
        if (members << a) & gapmask:
            return False
        a_bits ^= low
    return True


def is_closed(gaps: Iterable[int]) -> bool:
    """True iff the complement of ``gaps`` in N_0 is closed under addition."""
    gaps = list(gaps)
    if any(x <= 0 for x in gaps):
        raise ValueError("gaps must be positive integers")
    return _closed_mask(mask_of(gaps))


@dataclass(frozen=True)
class GapSemigroup:
    """A numerical semigroup, identified by its finite set of gaps.

    Construction checks additive closure; use :meth:`from_mask` with
    ``check=False`` on hot paths that already guarantee it.
    """

    gapmask: int
    genus: int = field(init=False, compare=False)
    multiplicity: int = field(init=False, compare=False)
    frobenius: int = field(init=False, compare=False)

    def __post_init__(self):
        gm = self.gapmask
        if gm < 0 or gm & 1:
            raise ValueError("0 can never be a gap")
        object.__setattr__(self, "genus", gm.bit_count())
        object.__setattr__(self, "frobenius", gm.bit_length() - 1 if gm else -1)
        # length of the initial run 1, 2, ..., j of gaps
        run = (~(gm >> 1)) & -(~(gm >> 1))
        object.__setattr__(self, "multiplicity", run.bit_length())

    @classmethod
    def from_gaps(cls, gaps: Iterable[int], check: bool = True) -> "GapSemigroup":
        gaps = list(gaps)
        if any(x <= 0 for x in gaps):
            raise ValueError("gaps must be positive integers")
        return cls.from_mask(mask_of(gaps), check=check)

    @classmethod
    def from_mask(cls, gapmask: int, check: bool = True) -> "GapSemigroup":
        if check and not _closed_mask(gapmask):
            raise ValueError("gap set does not leave an additively closed complement")
        return cls(gapmask)

    @classmethod
    def from_members(cls, members: Iterable[int], conductor: int) -> "GapSemigroup":
        """Semigroup ``members ∪ [conductor, ∞)``; members >= conductor are ignored."""
        full = (1 << conductor) - 1
        mm = mask_of(x for x in members if x < conductor)
        if conductor > 0 and not mm & 1:
            raise ValueError("0 must be a member")
        return cls.from_mask(full & ~mm)

    @property
    def gaps(self) -> frozenset[int]:
        return frozenset(bits(self.gapmask))

    def __contains__(self, x: int) -> bool:
        return x >= 0 and not (self.gapmask >> x) & 1

    def members_upto(self, n: int) -> list[int]:
        return [x for x in range(n + 1) if x in self]

    def __str__(self) -> str:
        return format_members(self)

    def __repr__(self) -> str:
        return f"GapSemigroup({format_members(self)})"


def genus(s: GapSemigroup) -> int:
    return s.genus


def multiplicity(s: GapSemigroup) -> int:
    return s.multiplicity


def frobenius(s: GapSemigroup) -> int:
    """Largest gap, or -1 for N_0."""
    return s.frobenius


def classify(s: GapSemigroup) -> SemigroupClass:
    f, m = s.frobenius, s.multiplicity
    if f < 2 * m:
        return SemigroupClass.F_LT_2M
    if f < 3 * m:
        return SemigroupClass.F_BETWEEN_2M_3M
    return SemigroupClass.F_GT_3M


def format_members(s: GapSemigroup) -> str:
    """Members up to the Frobenius number, then the conductor and ``...``."""
    return ",".join(str(x) for x in s.members_upto(s.frobenius + 1)) + "..."


def format_gaps(s: GapSemigroup) -> str:
    return "{" + ",".join(str(x) for x in bits(s.gapmask)) + "}"

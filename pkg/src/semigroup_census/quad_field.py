"""Exact arithmetic in Q(φ), φ = (1 + √5)/2, and correctly rounded output."""
from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .arith import _fib_pair

Number = Union[int, Fraction]


def _signed_fib(n: int) -> int:
    # F(-n) = (-1)^(n+1) F(n); only used for powers of φ
    if n >= 0:
        return _fib_pair(n)[0]
    v = _fib_pair(-n)[0]
    return v if (-n) % 2 == 1 else -v


@dataclass(frozen=True)
class QuadraticValue:
    """a + b·φ with rational a, b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def _coerce(x) -> "QuadraticValue":
        if isinstance(x, QuadraticValue):
            return x
        if isinstance(x, (int, Rational)):
            return QuadraticValue(Fraction(x), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticValue(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticValue(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticValue(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        # φ² = φ + 1
        a, b, c, d = self.a, self.b, o.a, o.b
        return QuadraticValue(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticValue":
        # φ -> 1 - φ
        return QuadraticValue(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(φ)")
        num = self * o.conjugate()
        return QuadraticValue(num.a / n, num.b / n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def _rs(self) -> tuple[Fraction, Fraction]:
        # a + bφ = r + s√5
        return self.a + self.b / 2, self.b / 2

    def sign(self) -> int:
        return _sign(*self._rs())

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return float(to_decimal(self, 20))

    def __str__(self) -> str:
        return f"{self.a} + {self.b}φ"


PHI = QuadraticValue(0, 1)
ONE = QuadraticValue(1, 0)
SQRT5 = QuadraticValue(-1, 2)
INV_SQRT5 = QuadraticValue(Fraction(-1, 5), Fraction(2, 5))


def _sign(r: Fraction, s: Fraction) -> int:
    """Sign of r + s√5, decided exactly."""
    if s == 0:
        return (r > 0) - (r < 0)
    if r == 0:
        return (s > 0) - (s < 0)
    if (r > 0) == (s > 0):
        return 1 if r > 0 else -1
    # opposite signs: compare r² with 5s²
    lhs, rhs = r * r, 5 * s * s
    if lhs == rhs:
        return 0
    dominant_r = lhs > rhs
    if dominant_r:
        return 1 if r > 0 else -1
    return 1 if s > 0 else -1


def phi_pow(n: int) -> QuadraticValue:
    """φ^n = F(n)·φ + F(n-1), with Fibonacci numbers extended to negative n."""
    return QuadraticValue(_signed_fib(n - 1), _signed_fib(n))


def bound_value(hist) -> QuadraticValue:
    """φ/√5 + (1/√5)·Σ_c H[c]·φ^(-c), exactly."""
    acc = PHI
    for c, count in hist.counts.items():
        if count:
            acc = acc + count * phi_pow(-c)
    return acc * INV_SQRT5


def to_decimal(v, places: int = 5) -> str:
    """Correctly rounded (half to even) fixed-point decimal of ``v``.

    ``v`` may be a QuadraticValue, a Fraction or an int.
    """
    if places < 0 or places > 50:
        raise ValueError("places must be in [0, 50]")
    if not isinstance(v, QuadraticValue):
        v = QuadraticValue(Fraction(v), 0)
    scale = 10**places
    r, s = v._rs()
    r, s = r * scale, s * scale
    if s == 0:
        n = round(r)  # Fraction.__round__ is half-to-even
    else:
        n = _round_irrational(r, s, places)
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def _round_irrational(r: Fraction, s: Fraction, places: int) -> int:
    # r + s√5 is irrational, so no ties; verify the candidate exactly
    guard = 10
    while True:
        mag = max(abs(r), abs(s), Fraction(1))
        digits = len(str(int(mag))) + guard
        ctx = decimal.Context(prec=digits + places + 5, rounding=decimal.ROUND_HALF_EVEN)
        approx = ctx.add(
            ctx.divide(decimal.Decimal(r.numerator), decimal.Decimal(r.denominator)),
            ctx.multiply(
                ctx.divide(decimal.Decimal(s.numerator), decimal.Decimal(s.denominator)),
                ctx.sqrt(decimal.Decimal(5)),
            ),
        )
        n = int(approx.to_integral_value(rounding=decimal.ROUND_HALF_EVEN))
        half = Fraction(1, 2)
        if _sign(r - n + half, s) > 0 and _sign(n + half - r, -s) > 0:
            return n
        guard *= 2

from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from semigroup_census.quad_field import (
    INV_SQRT5,
    ONE,
    PHI,
    SQRT5,
    QuadraticValue,
    bound_value,
    phi_pow,
    to_decimal,
)
from semigroup_census.type_space import ExponentHistogram, exponent_histogram

small = st.integers(-50, 50)
rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


def mp_decimal(v: QuadraticValue, places: int) -> str:
    """Independent rounding: 80-digit mpmath value, then Decimal half-even."""
    with mpmath.workdps(80):
        phi = (1 + mpmath.sqrt(5)) / 2
        x = mpmath.mpf(v.a.numerator) / v.a.denominator + mpmath.mpf(v.b.numerator) / v.b.denominator * phi
        text = mpmath.nstr(x, 70, strip_zeros=False)
    with localcontext() as ctx:
        ctx.prec = 100
        out = Decimal(text).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)
        if out == 0:
            out = abs(out)  # no negative zero
    return str(out)


def test_phi_square():
    assert PHI * PHI == PHI + 1
    assert SQRT5 * SQRT5 == 5
    assert SQRT5 * INV_SQRT5 == ONE


def test_phi_pow_examples():
    assert phi_pow(-2) == QuadraticValue(2, -1)
    assert phi_pow(0) == ONE
    assert phi_pow(-3) == QuadraticValue(-3, 2)
    assert to_decimal(phi_pow(-3), 5) == "0.23607"


@settings(max_examples=300, deadline=None)
@given(small, small)
def test_phi_pow_multiplicative(m, n):
    assert phi_pow(m) * phi_pow(n) == phi_pow(m + n)
    assert phi_pow(n) * phi_pow(-n) == ONE


@settings(max_examples=200, deadline=None)
@given(rationals, rationals, rationals, rationals)
def test_field_laws(a, b, c, d):
    x, y = QuadraticValue(a, b), QuadraticValue(c, d)
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    if y != 0:
        assert (x / y) * y == x


@pytest.mark.parametrize("places", [0, 1, 5, 12, 30])
def test_to_decimal_matches_mpmath(places):
    for n in range(-40, 41, 3):
        for coeff in (1, 7, -3):
            v = coeff * phi_pow(n) + Fraction(1, 3)
            assert to_decimal(v, places) == mp_decimal(v, places)


@settings(max_examples=300, deadline=None)
@given(rationals, rationals, st.integers(0, 20))
def test_to_decimal_random(a, b, places):
    v = QuadraticValue(a, b)
    assert to_decimal(v, places) == mp_decimal(v, places)


def test_to_decimal_rational_half_even():
    assert to_decimal(Fraction(1, 8), 2) == "0.12"
    assert to_decimal(Fraction(3, 8), 2) == "0.38"
    assert to_decimal(Fraction(-1, 8), 2) == "-0.12"
    assert to_decimal(ONE, 5) == "1.00000"
    with pytest.raises(ValueError):
        to_decimal(ONE, 51)


def test_bound_examples():
    assert to_decimal(bound_value(ExponentHistogram()), 5) == "0.72361"
    b1 = bound_value(exponent_histogram(1))
    assert b1 == 2 * INV_SQRT5
    assert to_decimal(b1, 5) == "0.89443"
    assert bound_value(exponent_histogram(2)) == ONE
    assert to_decimal(bound_value(exponent_histogram(3)), 5) == "1.17082"
    assert to_decimal(bound_value(exponent_histogram(10)), 5) == "2.07121"


def test_bound_strictly_increasing():
    prev = bound_value(ExponentHistogram())
    for k in range(1, 22):
        cur = bound_value(exponent_histogram(k))
        assert cur > prev
        prev = cur


def test_ordering_is_exact():
    # φ^-40 is tiny but positive
    assert phi_pow(-40) > 0
    assert SQRT5 - Fraction(2236067977, 10**9) > 0
    assert SQRT5 - Fraction(2236067978, 10**9) < 0

from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wreathavg.errors import PreconditionError, ResourceCapError
from wreathavg.exact import bit_budget, from_json, rat, rat_pow, to_decimal, to_json

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x) < 10**6)


@pytest.mark.parametrize("n, d, expected", [(19, 8, (19, 8)), (-4, -8, (1, 2)), (0, 7, (0, 1)), (3, -6, (-1, 2))])
def test_rat_normalizes(n, d, expected):
    x = rat(n, d)
    assert (x.numerator, x.denominator) == expected


def test_rat_zero_denominator():
    with pytest.raises(PreconditionError):
        rat(1, 0)


def test_rat_pow_examples():
    assert rat_pow(rat(1, 2), 3) == rat(1, 8)
    assert rat_pow(rat(2, 6), 2) == rat(1, 9)
    assert rat_pow(rat(0), 0) == 1
    naive = Fraction(1)
    for _ in range(16):
        naive *= Fraction(1, 2)
    assert rat_pow(rat(1, 2), 16) == naive == rat(1, 65536)


def test_rat_pow_respects_bit_budget():
    with bit_budget(1000):
        rat_pow(rat(1, 3), 600)
        with pytest.raises(ResourceCapError) as info:
            rat_pow(rat(1, 3), 2000)
    assert info.value.cap == 1000
    # powers of +-1 and 0 never grow
    with bit_budget(8):
        assert rat_pow(rat(-1), 10**6) == 1


@pytest.mark.parametrize("x, digits, s", [
    (rat(19, 8), 4, "2.3750"),
    (rat(283, 72), 6, "3.930556"),
    (rat(1, 3), 3, "0.333"),
    (rat(-1, 3), 3, "-0.333"),
    (rat(1, 8), 2, "0.12"),  # half-even
    (rat(3, 8), 2, "0.38"),
    (rat(5, 2), 0, "2"),
])
def test_to_decimal(x, digits, s):
    assert to_decimal(x, digits) == s


def test_json_round_trip():
    x = rat(-283, 72)
    assert to_json(x) == {"num": "-283", "den": "72"}
    assert from_json(to_json(x, 5)) == x


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(rationals, st.integers(0, 20), st.integers(0, 20))
def test_pow_adds_exponents(x, a, b):
    assert rat_pow(x, a + b) == rat_pow(x, a) * rat_pow(x, b)


@given(rationals, st.integers(1, 30))
def test_decimal_round_trip(x, digits):
    assert abs(Fraction(Decimal(to_decimal(x, digits))) - x) <= Fraction(1, 10**digits)

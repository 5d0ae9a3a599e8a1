"""
Exact rational arithmetic.

Every average order, cumulative distribution value and psi ratio in this
package is a :class:`fractions.Fraction`.  ``BigRational`` is an alias kept
for readability.  What this module adds on top of the stdlib is a bit budget
(powers refuse to build integers above it) and serialization helpers.
"""

import contextlib
import contextvars
import math
from fractions import Fraction

from .errors import PreconditionError, ResourceCapError

BigRational = Fraction

DEFAULT_BIT_BUDGET = 2**22

_budget = contextvars.ContextVar("bit_budget", default=DEFAULT_BIT_BUDGET)


def get_bit_budget():
    return _budget.get()


def set_bit_budget(bits):
    if bits < 1:
        raise PreconditionError("bit budget must be positive")
    _budget.set(int(bits))


@contextlib.contextmanager
def bit_budget(bits):
    """Temporarily run with a different bit budget."""
    if bits < 1:
        raise PreconditionError("bit budget must be positive")
    token = _budget.set(int(bits))
    try:
        yield
    finally:
        _budget.reset(token)


def rat(n, d=1):
    """Normalized rational n/d; the sign lives on the numerator."""
    if d == 0:
        raise PreconditionError("zero denominator")
    return Fraction(n, d)


def bits(x):
    x = Fraction(x)
    return max(x.numerator.bit_length(), x.denominator.bit_length())


def check_budget(x, what="value"):
    b = bits(x)
    cap = get_bit_budget()
    if b > cap:
        raise ResourceCapError(f"{what} needs {b} bits, budget is {cap}", size=b, cap=cap)
    return x


def rat_pow(x, e):
    """Exact ``x**e`` for a nonnegative integer exponent.

    The size of the result is predicted before computing it; anything over
    the bit budget raises :class:`ResourceCapError` instead of allocating.
    ``0**0`` is 1.
    """
    if e < 0:
        raise PreconditionError("negative exponent")
    x = Fraction(x)
    if e == 0:
        return Fraction(1)
    cap = get_bit_budget()
    predicted = math.ceil(e * math.log2(max(abs(x.numerator), x.denominator, 1)))
    if predicted > cap:
        raise ResourceCapError(
            f"power would need up to {predicted} bits, budget is {cap}",
            size=predicted,
            cap=cap,
        )
    return x**e


def to_decimal(x, digits=8):
    """Decimal string of ``x`` with ``digits`` places, rounded half-even."""
    if not 0 <= digits <= 50:
        raise PreconditionError("digits must be in 0..50")
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    q, r = divmod(num * 10**digits, den)
    if 2 * r > den or (2 * r == den and q % 2 == 1):
        q += 1
    if q == 0:
        sign = ""
    s = str(q).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def to_json(x, digits=None):
    """``{"num": str, "den": str}``, plus ``"decimal"`` when digits is given."""
    x = Fraction(x)
    out = {"num": str(x.numerator), "den": str(x.denominator)}
    if digits is not None:
        out["decimal"] = to_decimal(x, digits)
    return out


def from_json(obj):
    return rat(int(obj["num"]), int(obj["den"]))


def fmt(x, digits=8):
    """Human form such as ``13/6 ≈ 2.16666667``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x} ≈ {to_decimal(x, digits)}"

"""
Small number-theory helpers: factorization, divisors, Moebius and tau.

Inputs are group orders, so plain trial division is fast enough.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt, prod

from .errors import PreconditionError

FACTOR_CAP = 2**63 - 1


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for q in range(3, isqrt(n) + 1, 2):
        if n % q == 0:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple  # ((prime, exponent), ...) with strictly increasing primes

    def __post_init__(self):
        if prod(q**e for q, e in self.factors) != self.value:
            raise PreconditionError(f"factors do not multiply to {self.value}")
        primes = [q for q, _ in self.factors]
        if primes != sorted(set(primes)):
            raise PreconditionError("primes must be strictly increasing")
        if any(e < 1 or not is_prime(q) for q, e in self.factors):
            raise PreconditionError("factors must be primes with exponent >= 1")

    @property
    def primes(self):
        return tuple(q for q, _ in self.factors)


@lru_cache(maxsize=4096)
def factorize(n, cap=FACTOR_CAP):
    """Prime factorization of ``n`` by trial division."""
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"factorize needs a positive integer, got {n!r}")
    if n > cap:
        raise PreconditionError(f"{n} exceeds the factorization cap {cap}")
    factors = []
    m = n
    q = 2
    while q * q <= m:
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            factors.append((q, e))
        q += 1 if q == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def divisors(n):
    """All divisors of ``n`` in increasing order."""
    divs = [1]
    for q, e in factorize(n).factors:
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n):
    factors = factorize(n).factors
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def tau(n):
    """Product of (1 - q) over the distinct primes q dividing n."""
    return prod(1 - q for q in factorize(n).primes)


def prime_power(n):
    """Return ``(p, k)`` with ``n == p**k``, or None if n is not a prime power.

    ``n == 1`` is not treated as a prime power.
    """
    factors = factorize(n).factors
    if len(factors) != 1:
        return None
    return factors[0]


def ilog(n, p):
    """Exact k with p**k == n; raises if n is not a power of p."""
    k = 0
    m = n
    while m % p == 0 and m > 1:
        m //= p
        k += 1
    if m != 1:
        raise PreconditionError(f"{n} is not a power of {p}")
    return k

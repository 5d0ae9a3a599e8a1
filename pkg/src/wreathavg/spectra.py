"""
Order statistics of a finite group.

``OrderSpectrum`` holds the exact counts ``d_n`` of elements of order ``n``;
torsion counts ``s_m`` (elements with ``g^m = 1``) are divisor sums over it.
For p-groups, :class:`CumulativeOrderDistribution` stores
``r_k = #{g : order(g) <= p^(d-k)} / |G|`` for ``k = 0..d``.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError
from .exact import to_json
from .groups import element_orders
from .numtheory import divisors, ilog, is_prime, prime_power


@dataclass(frozen=True)
class OrderSpectrum:
    group_size: int
    counts: dict = field(hash=False)

    def __post_init__(self):
        counts = {int(n): int(c) for n, c in self.counts.items() if c}
        object.__setattr__(self, "counts", dict(sorted(counts.items())))
        if sum(counts.values()) != self.group_size:
            raise PreconditionError("spectrum counts do not sum to the group order")
        if counts.get(1) != 1:
            raise PreconditionError("exactly one element (the identity) has order 1")
        bad = [n for n in counts if self.group_size % n]
        if bad:
            raise PreconditionError(f"order {bad[0]} does not divide {self.group_size}")

    def d(self, n):
        return self.counts.get(n, 0)

    def s(self, m):
        return s_of_m(self, m)

    @property
    def exponent(self):
        from math import lcm

        return lcm(*self.counts)

    def to_json(self):
        return {str(n): c for n, c in self.counts.items()}

    @classmethod
    def from_json(cls, obj, group_size=None):
        counts = {int(n): int(c) for n, c in obj.items()}
        return cls(group_size or sum(counts.values()), counts)


def spectrum(G):
    """Exact order spectrum by enumerating every element of ``G``."""
    orders = element_orders(G)
    return OrderSpectrum(G.size, Counter(orders.tolist()))


def as_spectrum(G):
    return G if isinstance(G, OrderSpectrum) else spectrum(G)


def s_of_m(spec, m):
    """Number of elements whose m-th power is the identity."""
    if m < 1:
        raise PreconditionError("m must be positive")
    return sum(c for n, c in spec.counts.items() if m % n == 0)


def average_order(spec):
    spec = as_spectrum(spec)
    return Fraction(sum(n * c for n, c in spec.counts.items()), spec.group_size)


def max_order(spec):
    return max(as_spectrum(spec).counts)


def p_of(spec):
    """The prime p when ``spec`` describes a nontrivial p-group."""
    pk = prime_power(spec.group_size)
    if pk is None:
        raise PreconditionError(f"order {spec.group_size} is not a prime power")
    return pk[0]


@dataclass(frozen=True)
class CumulativeOrderDistribution:
    p: int
    a: int  # |G| = p^a
    d: int  # m(G) = p^d
    r: tuple  # r[k] for k = 0..d

    def __post_init__(self):
        # float entries come from the opt-in float tower and are kept as-is
        r = tuple(x if isinstance(x, float) else Fraction(x) for x in self.r)
        object.__setattr__(self, "r", r)
        if len(r) != self.d + 1:
            raise PreconditionError("r must have d+1 entries")
        if r[0] != 1:
            raise PreconditionError("r_0 must be 1")
        if any(x < y for x, y in zip(r, r[1:])):
            raise PreconditionError("r must be non-increasing")
        if self.exact and r[-1] != Fraction(1, self.p**self.a):
            raise PreconditionError("r_d must be p^-a: only the identity has order 1")

    @property
    def exact(self):
        return not any(isinstance(x, float) for x in self.r)

    def at(self, k):
        """r_k with r_k = 1 for k <= 0 and r_k = 0 for k > d."""
        if k <= 0:
            return Fraction(1) if self.exact else 1.0
        if k > self.d:
            return Fraction(0) if self.exact else 0.0
        return self.r[k]

    def counts_at_most(self):
        """Number of elements of order <= p^j, for j = 0..d."""
        size = self.p**self.a
        return [self.at(self.d - j) * size for j in range(self.d + 1)]

    def to_json(self, digits=None):
        if not self.exact:
            return {"p": self.p, "a": self.a, "d": self.d, "r": [repr(x) for x in self.r]}
        return {
            "p": self.p, "a": self.a, "d": self.d,
            "r": [to_json(x, digits) for x in self.r],
        }


def r_distribution(G, p):
    """Cumulative order distribution of a p-group (Cayley table or spectrum)."""
    spec = as_spectrum(G)
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    try:
        a = ilog(spec.group_size, p)
    except PreconditionError:
        raise PreconditionError(f"group order {spec.group_size} is not a power of {p}") from None
    if a < 1:
        raise PreconditionError("trivial group has no order distribution")
    for n in spec.counts:
        try:
            ilog(n, p)
        except PreconditionError:
            raise PreconditionError(f"element order {n} is not a power of {p}") from None
    d = ilog(max(spec.counts), p)
    size = spec.group_size
    r = [Fraction(s_of_m(spec, p ** (d - k)), size) for k in range(d + 1)]
    return CumulativeOrderDistribution(p, a, d, tuple(r))


def spectrum_from_distribution(dist):
    """Recover d_{p^j} from a cumulative distribution (inverse of r_distribution)."""
    at_most = dist.counts_at_most()
    counts = {}
    prev = 0
    for j, c in enumerate(at_most):
        if c.denominator != 1:
            raise PreconditionError("distribution does not describe integral counts")
        counts[dist.p**j] = int(c) - prev
        prev = int(c)
    return OrderSpectrum(dist.p**dist.a, counts)


def t_invariant(exponents):
    """Multiplicity of the largest cyclic factor of an abelian p-group."""
    exponents = list(exponents)
    if not exponents:
        raise PreconditionError("t_invariant needs a nonempty exponent list")
    if any(e < 1 for e in exponents):
        raise PreconditionError("exponents must be positive")
    return exponents.count(max(exponents))


def abelian_torsion(p, exponents, m):
    """s_{p^m} for Z/p^e1 x ... computed from the invariants, not by enumeration."""
    return p ** sum(min(e, m) for e in exponents)


def divisor_counts(spec):
    """``{m: s_m}`` for every divisor m of the group order."""
    return {m: s_of_m(spec, m) for m in divisors(spec.group_size)}

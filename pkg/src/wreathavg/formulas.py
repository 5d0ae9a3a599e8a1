"""
Closed forms for the average order and order distribution of ``A wr B``.

Everything here works from order statistics alone (spectra, torsion counts
or cumulative distributions); no wreath product is ever materialized.  All
arithmetic is exact unless a caller explicitly asks for the float tower.

Notation used in names and docstrings:

* ``s_m``   number of elements of A with ``g^m = 1``
* ``d_n``   number of elements of B of order ``n``
* ``p^a = |A|``, ``p^d = m(A)``, ``p^b = |B|``, ``p^e = m(B)`` for p-groups
* ``k_n = p^-n d_{p^(b-n)} / a(B)``, weights that sum to 1
* ``psi(A, B) = a(A wr B) / (m(A) a(B))``
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, ResourceCapError
from .exact import check_budget, rat_pow
from .numtheory import divisors, ilog, is_prime, tau
from .spectra import (
    CumulativeOrderDistribution,
    OrderSpectrum,
    abelian_torsion,
    as_spectrum,
    average_order,
    max_order,
    p_of,
    s_of_m,
    t_invariant,
)

MAX_TOWER_STEPS = 64
MAX_LIMIT_N = 40


@dataclass(frozen=True)
class PGroupProfile:
    """Torsion profile of a p-group: ``s[m] = s_{p^m}`` for m = 0..a."""

    p: int
    a: int
    d: int
    s: tuple

    def __post_init__(self):
        s = tuple(int(x) for x in self.s)
        object.__setattr__(self, "s", s)
        if self.a < 1:
            raise PreconditionError("p-group profile needs |A| = p^a with a >= 1")
        if len(s) != self.a + 1 or s[0] != 1:
            raise PreconditionError("profile needs s_1 = 1 and a+1 entries")
        if any(x > y for x, y in zip(s, s[1:])):
            raise PreconditionError("torsion counts must be non-decreasing")
        size = self.p**self.a
        if s[-1] != size:
            raise PreconditionError("every element of a p-group has p^a-th power 1")
        # the number of solutions of g^n = 1 is a multiple of gcd(n, |A|)
        if any(x % self.p**m for m, x in enumerate(s)):
            raise PreconditionError("s_{p^m} must be a multiple of p^m")
        if any(x != size for x in s[self.d:]) or (self.d > 0 and s[self.d - 1] == size):
            raise PreconditionError("torsion counts inconsistent with m(A) = p^d")

    def ratio(self, m):
        """s_{p^m} / p^a, equal to 1 for m >= d."""
        if m >= self.a:
            return Fraction(1)
        return Fraction(self.s[m], self.p**self.a)


def p_group_profile(A, p=None):
    """Profile of a p-group from its Cayley table or spectrum."""
    spec = as_spectrum(A)
    p = p or p_of(spec)
    a = _exponent_of(spec.group_size, p, "A")
    d = ilog(max_order(spec), p)
    return PGroupProfile(p, a, d, tuple(s_of_m(spec, p**m) for m in range(a + 1)))


def profile_from_distribution(dist):
    size = dist.p**dist.a
    s = [dist.at(dist.d - m) * size for m in range(dist.a + 1)]
    return PGroupProfile(dist.p, dist.a, dist.d, tuple(int(x) for x in s))


def abelian_profile(p, exponents):
    a, d = sum(exponents), max(exponents)
    return PGroupProfile(p, a, d, tuple(abelian_torsion(p, exponents, m) for m in range(a + 1)))


def _exponent_of(size, p, label):
    try:
        return ilog(size, p)
    except PreconditionError:
        raise PreconditionError(f"{label} has order {size}, not a power of {p}") from None


def _require_nontrivial(spec, label):
    if spec.group_size < 2:
        raise PreconditionError(f"{label} must have at least 2 elements")


# -- arbitrary finite groups ----------------------------------------------------

def theorem1_average(specA, specB):
    """Exact a(A wr B) for arbitrary finite A, B with at least two elements.

    a(A wr B) = sum over m | |A|, n | |B| of
        (m/n) (s_m/|A|)^n d_{|B|/n} tau(|A|/m)
    """
    specA, specB = as_spectrum(specA), as_spectrum(specB)
    _require_nontrivial(specA, "A")
    _require_nontrivial(specB, "B")
    nA, nB = specA.group_size, specB.group_size
    total = Fraction(0)
    for n in divisors(nB):
        dn = specB.d(nB // n)
        if not dn:
            continue
        inner = Fraction(0)
        for m in divisors(nA):
            t = tau(nA // m)
            if t:
                inner += m * t * rat_pow(Fraction(s_of_m(specA, m), nA), n)
        total += Fraction(dn, n) * inner
    return check_budget(total, "general average-order sum")


# -- p-group forms -------------------------------------------------------------

@dataclass(frozen=True)
class KCoefficients:
    p: int
    b: int
    k: tuple  # k[n] for n = 0..b

    def __post_init__(self):
        k = tuple(Fraction(x) for x in self.k)
        object.__setattr__(self, "k", k)
        if any(x < 0 for x in k) or sum(k) != 1:
            raise PreconditionError("k coefficients must be nonnegative and sum to 1")


def k_coefficients(specB, p=None):
    """k_n = p^-n d_{p^(b-n)} / a(B) for n = 0..b.

    k_0 is the weight of the elements of order p^b, so it vanishes for
    noncyclic B.
    """
    specB = as_spectrum(specB)
    p = p or p_of(specB)
    b = _exponent_of(specB.group_size, p, "B")
    if b < 1:
        raise PreconditionError("B must be nontrivial")
    if any(n != p ** ilog(n, p) for n in specB.counts):
        raise PreconditionError("B has an element whose order is not a power of p")
    aB = average_order(specB)
    k = tuple(Fraction(specB.d(p ** (b - n)), p**n) / aB for n in range(b + 1))
    return KCoefficients(p, b, k)


def _check_same_prime(profileA, specB):
    p = profileA.p
    if specB.group_size < 2:
        raise PreconditionError("B must have at least 2 elements")
    q = p_of(specB)
    if q != p:
        raise PreconditionError(f"prime mismatch: A is a {p}-group, B is a {q}-group")
    return p


def _theorem2_inner(profileA, n, m_range):
    p = profileA.p
    return sum(
        (p**m * rat_pow(profileA.ratio(m), p**n) for m in m_range), Fraction(0)
    )


def theorem2_average(profileA, specB):
    """a(A wr B) for p-groups:

    p^d a(B) - (p-1) a(B) sum_n k_n [sum_{m <= d-1} p^m (s_{p^m}/p^a)^(p^n)]
    """
    if not isinstance(profileA, PGroupProfile):
        profileA = p_group_profile(profileA)
    specB = as_spectrum(specB)
    p = _check_same_prime(profileA, specB)
    kc = k_coefficients(specB, p)
    aB = average_order(specB)
    d = profileA.d
    correction = sum(
        (kn * _theorem2_inner(profileA, n, range(d)) for n, kn in enumerate(kc.k) if kn),
        Fraction(0),
    )
    return check_budget(p**d * aB - (p - 1) * aB * correction, "p-group average-order sum")


def theorem3_check(aB, aWreath, p, d):
    """a(B) <= a(A wr B) <= p^d a(B)."""
    return Fraction(aB) <= Fraction(aWreath) <= p**d * Fraction(aB)


def theorem4_remainder(profileA, specB, wreath_average=None):
    """Remainder after keeping only the m = d-1 term of the p-group sum.

    R = p^d a(B) - a(A wr B) - (p-1) a(B) sum_n k_n p^(d-1) (s_{p^(d-1)}/p^a)^(p^n)

    ``wreath_average`` lets the caller supply a(A wr B) from an independent
    route; by default it is evaluated with :func:`theorem2_average`.
    The guaranteed range is ``0 <= R <= (p^(d-1) - 1) a(B)``.
    """
    if not isinstance(profileA, PGroupProfile):
        profileA = p_group_profile(profileA)
    specB = as_spectrum(specB)
    p = _check_same_prime(profileA, specB)
    if wreath_average is None:
        wreath_average = theorem2_average(profileA, specB)
    kc = k_coefficients(specB, p)
    aB = average_order(specB)
    d = profileA.d
    leading = sum(
        (kn * p ** (d - 1) * rat_pow(profileA.ratio(d - 1), p**n) for n, kn in enumerate(kc.k)),
        Fraction(0),
    )
    return p**d * aB - Fraction(wreath_average) - (p - 1) * aB * leading


def theorem4_bound(profileA, specB):
    return (profileA.p ** (profileA.d - 1) - 1) * average_order(as_spectrum(specB))


# -- order distributions -------------------------------------------------------

def _power(x, e):
    return x**e if isinstance(x, float) else rat_pow(x, e)


def theorem5_distribution(rA, rB):
    """Cumulative order distribution of A wr B:

    r_{A wr B, k} = sum_{i=0..e} (r_{B,i} - r_{B,i+1}) r_{A,k-i}^(p^(b-e+i))

    The result has |A wr B| = p^(a p^b + b) and m(A wr B) = p^(d+e).
    """
    if rA.p != rB.p:
        raise PreconditionError(f"prime mismatch: {rA.p} vs {rB.p}")
    p, b, e = rA.p, rB.a, rB.d
    d_new = rA.d + e
    weights = [rB.at(i) - rB.at(i + 1) for i in range(e + 1)]
    r = []
    for k in range(d_new + 1):
        val = sum(
            (w * _power(rA.at(k - i), p ** (b - e + i)) for i, w in enumerate(weights) if w),
            0 * weights[0],
        )
        if not isinstance(val, float):
            check_budget(val, f"r_{k}")
        r.append(val)
    if isinstance(r[0], float):
        r[0] = 1.0
    return CumulativeOrderDistribution(p, rA.a * p**b + b, d_new, tuple(r))


def cor51_step(rA):
    """Distribution of A wr Z/p from that of A:

    r_k -> (1 - 1/p) r_k + r_{k-1}^p / p
    """
    p = rA.p
    if rA.exact:
        c0, c1 = Fraction(p - 1, p), Fraction(1, p)
    else:
        c0, c1 = (p - 1) / p, 1 / p
    r = []
    for k in range(rA.d + 2):
        val = c0 * rA.at(k) + c1 * _power(rA.at(k - 1), p)
        if rA.exact:
            check_budget(val, f"r_{k}")
        r.append(val)
    if not rA.exact:
        r[0] = 1.0
    return CumulativeOrderDistribution(p, rA.a * p + 1, rA.d + 1, tuple(r))


def _float_distribution(dist):
    return CumulativeOrderDistribution(dist.p, dist.a, dist.d, tuple(float(x) for x in dist.r))


def iterate_tower(rA0, steps, mode="exact"):
    """Distributions of A_0 = A, A_n = A_{n-1} wr Z/p for n = 0..steps.

    ``mode="float"`` runs the same recursion in double precision with no
    accuracy guarantee; it exists for step counts past the exact bit budget.
    """
    if not 0 <= steps <= MAX_TOWER_STEPS:
        raise PreconditionError(f"steps must be in 0..{MAX_TOWER_STEPS}")
    if mode not in ("exact", "float"):
        raise PreconditionError(f"unknown mode {mode!r}")
    cur = rA0 if mode == "exact" else _float_distribution(rA0)
    out = [cur]
    for n in range(1, steps + 1):
        try:
            cur = cor51_step(cur)
        except ResourceCapError as exc:
            raise ResourceCapError(
                f"tower step {n}: {exc}", size=exc.size, cap=exc.cap
            ) from exc
        out.append(cur)
    return out


# -- psi -------------------------------------------------------------------------

def psi(aWreath, mA, aB):
    """a(A wr B) / (m(A) a(B))."""
    if mA < 1 or aB <= 0:
        raise PreconditionError("psi needs m(A) >= 1 and a(B) > 0")
    return Fraction(aWreath) / (mA * Fraction(aB))


def psi_from_distribution(dist, kc):
    """psi(A, B) = 1 - (p-1)/p^d sum_r k_r sum_{m<d} p^m r_{d-m}^(p^r)."""
    p, d = dist.p, dist.d
    exact = dist.exact
    total = 0 if exact else 0.0
    for n, kn in enumerate(kc.k):
        if not kn:
            continue
        inner = sum((p**m * _power(dist.at(d - m), p**n) for m in range(d)), 0 * total)
        total += (kn if exact else float(kn)) * inner
    if exact:
        return 1 - Fraction(p - 1, p**d) * total
    return 1.0 - (p - 1) / p**d * total


def psi_tower(rA0, specB, steps, mode="exact"):
    """psi(A_n, B) for the tower A_n = A_{n-1} wr Z/p, n = 0..steps."""
    if isinstance(rA0, PGroupProfile):
        from .spectra import r_distribution

        rA0 = r_distribution(_profile_spectrum(rA0), rA0.p)
    specB = as_spectrum(specB)
    if p_of(specB) != rA0.p:
        raise PreconditionError("A and B must be p-groups for the same prime")
    kc = k_coefficients(specB, rA0.p)
    return [psi_from_distribution(dist, kc) for dist in iterate_tower(rA0, steps, mode)]


def _profile_spectrum(profile):
    p = profile.p
    counts = {1: 1}
    for m in range(1, profile.a + 1):
        c = profile.s[m] - profile.s[m - 1]
        if c:
            counts[p**m] = c
    return OrderSpectrum(p**profile.a, counts)


# -- abelian base groups -------------------------------------------------------

@dataclass(frozen=True)
class Theorem6Report:
    p: int
    t: int
    d: int
    psi: Fraction
    lower: Fraction  # 1 - p^(-t p)
    delta: Fraction
    delta_bound: Fraction  # a(B) p^(d - t p)
    cyclic_b: bool
    top_ratio: Fraction  # s_{p^(d-1)} / p^a, equal to p^-t
    cyclic_estimate: Fraction  # 1 - p^-t, the leading term for cyclic B

    @property
    def holds(self):
        ok = 0 <= self.delta <= self.delta_bound and 0 <= self.psi <= 1
        if not self.cyclic_b:
            ok = ok and self.psi >= self.lower
        return ok and self.top_ratio == Fraction(1, self.p**self.t)


def theorem6_check(exponentsA, specB, p=None, specA=None):
    """Bounds on psi(A, B) for abelian A = Z/p^e1 x ... given by exponents.

    ``specA`` may carry the enumerated spectrum of A; otherwise the torsion
    counts come from the invariants.  a(A wr B) is evaluated with the
    general divisor sum, independent of the p-group rearrangement that
    the bounds are derived from.
    """
    specB = as_spectrum(specB)
    p = p or p_of(specB)
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    exponents = sorted(exponentsA)
    t = t_invariant(exponents)
    if specA is None:
        profileA = abelian_profile(p, exponents)
        specA = _profile_spectrum(profileA)
    else:
        profileA = p_group_profile(specA, p)
        if profileA != abelian_profile(p, exponents):
            raise PreconditionError("spectrum of A does not match the exponent list")
    a, d = profileA.a, profileA.d
    _check_same_prime(profileA, specB)
    kc = k_coefficients(specB, p)
    aB = average_order(specB)
    aW = theorem1_average(specA, specB)
    k0_term = (p - 1) * aB * kc.k[0] * sum(
        (p**m * profileA.ratio(m) for m in range(d)), Fraction(0)
    )
    return Theorem6Report(
        p=p,
        t=t,
        d=d,
        psi=psi(aW, p**d, aB),
        lower=1 - Fraction(1, p ** (t * p)),
        delta=p**d * aB - aW - k0_term,
        delta_bound=aB * Fraction(p) ** (d - t * p),
        cyclic_b=max_order(specB) == specB.group_size,
        top_ratio=Fraction(profileA.s[d - 1], p**a),
        cyclic_estimate=1 - Fraction(1, p**t),
    )


# -- average order limits -------------------------------------------------------

def elementary_profile(p, n):
    """Profile of (Z/p)^n: d = 1, s_1 = 1, s_p = p^n."""
    return PGroupProfile(p, n, 1, (1,) + (p**n,) * n)


def theorem7_sequence(specB, p, nMax):
    """a((Z/p)^n wr B) for n = 1..nMax; tends to p a(B)."""
    if not 1 <= nMax <= MAX_LIMIT_N:
        raise PreconditionError(f"nMax must be in 1..{MAX_LIMIT_N}")
    specB = as_spectrum(specB)
    return [theorem2_average(elementary_profile(p, n), specB) for n in range(1, nMax + 1)]


def theorem7_bound(specB, p, n):
    """Upper bound (p-1) a(B) p^-n on p a(B) - a((Z/p)^n wr B)."""
    return (p - 1) * average_order(as_spectrum(specB)) / Fraction(p) ** n


def average_order_limit(specB, p, r):
    """p^r a(B), reached along iterated elementary wreath products."""
    if r < 0:
        raise PreconditionError("r must be nonnegative")
    return p**r * average_order(as_spectrum(specB))


def elementary_limit_as_printed(p, b, r):
    """The closed form p^(r+b+1) - (p-1)/p^(b-r) stated for B = (Z/p)^b.

    Kept only for comparison: the value actually reached is
    ``average_order_limit`` = p^(r+1) - (p-1) p^(r-b).
    """
    return Fraction(p ** (r + b + 1)) - Fraction(p - 1) / Fraction(p) ** (b - r)


def lemma2_cyclic_average(p, b):
    """a(Z/p^b) = p^-b + p/(p+1) (p^b - p^-b)."""
    if b < 1 or not is_prime(p):
        raise PreconditionError("need a prime p and b >= 1")
    inv = Fraction(1, p**b)
    return inv + Fraction(p, p + 1) * (p**b - inv)

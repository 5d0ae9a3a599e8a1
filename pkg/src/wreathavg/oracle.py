"""
Independent ground truth for wreath-product order statistics.

``brute_force_spectrum`` multiplies out every element of A wr B, using
nothing but the Cayley tables of A and B.  ``orbit_spectrum`` is a second,
semi-analytic route: for a top element x of order d, B splits into |B|/d
orbits under left multiplication by x, and the order of (alpha, x^-1) is
d times the lcm of the orders of the orbit products, which are independent
and uniform on A.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .errors import DisagreementError, ResourceCapError
from .groups import base_tuples, element_order, element_orders, shift_permutation, wreath_size
from .numtheory import divisors, mobius
from .spectra import OrderSpectrum

ORACLE_CAP = 2**21
CHUNK_ROWS = 2**16


def _check_cap(A, B, cap):
    size = wreath_size(A, B)
    if size > cap:
        raise ResourceCapError(
            f"{A.name} wr {B.name} has {size} elements, above the oracle cap {cap}",
            size=size, cap=cap,
        )
    return size


def _partition_orders(A, B, x, start, stop):
    """Orders of (alpha, x) for base tuples ``start:stop``, by repeated multiplication."""
    alpha = base_tuples(A, B, start, stop)
    ox = element_order(B, x)
    orders = np.zeros(len(alpha), dtype=np.int64)
    rows = np.arange(len(alpha))
    cur = alpha.copy()
    top, k = x, 1
    limit = A.size**B.size * B.size
    while rows.size:
        # cur = (alpha, x)^k = (cur, top)
        if top == 0:
            hit = ~cur.any(axis=1)
            orders[rows[hit]] = k
            rows, cur = rows[~hit], cur[~hit]
        # (cur, x^k)(alpha, x) = (cur * (x^k . alpha), x^(k+1))
        perm = shift_permutation(B, top)
        cur = np.asarray(A.mul(cur, alpha[rows][:, perm]), dtype=np.int64)
        top = int(B.mul(top, x))
        k += 1
        if k > limit:
            raise DisagreementError("element without finite order; corrupted tables")
    if np.any(orders % ox):
        raise DisagreementError(f"order of top element {x} does not divide a wreath element order")
    return Counter(orders.tolist())


def _partition(args):
    A, B, x = args
    nbase = A.size**B.size
    counts = Counter()
    for start in range(0, nbase, CHUNK_ROWS):
        counts.update(_partition_orders(A, B, x, start, min(nbase, start + CHUNK_ROWS)))
    return x, counts


def brute_force_spectrum(A, B, cap=ORACLE_CAP, workers=1):
    """Order spectrum of A wr B by explicit enumeration.

    Work is partitioned by top element and merged in top-element order, so
    the result does not depend on ``workers``.  Each element is checked for
    the divisibility of its order by the order of its top component.
    """
    size = _check_cap(A, B, cap)
    jobs = [(A, B, x) for x in range(B.size)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = dict(pool.map(_partition, jobs))
    else:
        parts = dict(map(_partition, jobs))
    total = Counter()
    for x in range(B.size):
        total.update(parts[x])
    return OrderSpectrum(size, total)


def left_orbits(B, x):
    """Cycles of b -> x*b on B, read off the Cayley table."""
    image = np.asarray(B.mul(x, np.arange(B.size)), dtype=np.int64)
    seen = np.zeros(B.size, dtype=bool)
    cycles = []
    for b in range(B.size):
        if seen[b]:
            continue
        cycle = []
        c = b
        while not seen[c]:
            seen[c] = True
            cycle.append(c)
            c = int(image[c])
        cycles.append(cycle)
    return cycles


def orbit_spectrum(A, B):
    """Order spectrum of A wr B from the orbit-product structure.

    For x of order d with r = |B|/d orbits, the number of alpha with
    lcm(orbit product orders) | m is |A|^(|B|-r) s_m^r; Moebius inversion
    over the divisors of |A| turns these into exact-lcm counts.
    """
    ordersA = element_orders(A)
    nA, nB = A.size, B.size
    divs = divisors(nA)
    s = {m: int(np.count_nonzero(m % ordersA == 0)) for m in divs}
    total = Counter()
    for x in range(nB):
        cycles = left_orbits(B, x)
        d = len(cycles[0])
        if any(len(c) != d for c in cycles):
            raise DisagreementError(f"orbits of {x} have unequal lengths")
        r = len(cycles)
        free = nA ** (nB - r)
        for m in divs:
            exact_lcm = sum(mobius(m // n) * s[n] ** r for n in divs if m % n == 0)
            if exact_lcm:
                total[d * m] += free * exact_lcm
    return OrderSpectrum(wreath_size(A, B), total)

"""
Finite groups as Cayley tables.

Elements are the integers ``0 .. size-1`` and the identity is always 0.
Most groups carry a dense numpy table.  Abelian groups built from cyclic
factors use :class:`AbelianTable`, which computes products on the fly so
that groups up to order 2**16 never allocate a size x size array.

The wreath product ``A wr B`` is the semidirect product of ``A^B`` by ``B``
where ``x`` acts on tuples by ``(x.beta)_b = beta_{x^-1 b}``.
"""

from dataclasses import dataclass
from itertools import permutations
from math import prod

import numpy as np

from .errors import PreconditionError, ResourceCapError

GROUP_CAP = 2**16
DENSE_CAP = 2**12
WREATH_TABLE_CAP = 2**12
FULL_ASSOC_LIMIT = 512
ASSOC_SAMPLES = 10**5


class AbelianTable:
    """Implicit Cayley table of Z/m1 x Z/m2 x ... (first factor most significant)."""

    def __init__(self, moduli):
        self.moduli = tuple(int(m) for m in moduli)
        self.size = prod(self.moduli)
        weights = []
        w = 1
        for m in reversed(self.moduli):
            weights.append(w)
            w *= m
        self.weights = tuple(reversed(weights))

    @property
    def shape(self):
        return (self.size, self.size)

    def __getitem__(self, key):
        a, b = key
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if len(self.moduli) == 1:
            return (a + b) % self.size
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for m, w in zip(self.moduli, self.weights):
            out += ((a // w + b // w) % m) * w
        return out

    def inverses(self):
        a = np.arange(self.size, dtype=np.int64)
        out = np.zeros_like(a)
        for m, w in zip(self.moduli, self.weights):
            out += ((-(a // w)) % m) * w
        return out

    def dense(self):
        a = np.arange(self.size)
        return _compact(self[a[:, None], a[None, :]])


def _compact(table):
    n = table.shape[0]
    dtype = np.uint8 if n <= 256 else np.uint16 if n <= 65536 else np.int32
    return np.ascontiguousarray(table, dtype=dtype)


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[i, j]`` is the index of ``i*j``; index 0 is the identity.  The
    table is validated on construction unless ``check=False``.
    """

    def __init__(self, table, name="G", check=True, moduli=None, factors=None):
        if isinstance(table, AbelianTable):
            self.table = table
            moduli = table.moduli
        else:
            table = np.asarray(table)
            if table.ndim != 2 or table.shape[0] != table.shape[1]:
                raise PreconditionError("Cayley table must be square")
            self.table = _compact(table)
        self.size = int(self.table.shape[0])
        self.name = name
        self.moduli = moduli  # cyclic factor orders when built as an abelian product
        self.factors = factors  # (A, B) for wreath products
        self._inv = None
        if check:
            validate(self)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.size})"

    def __len__(self):
        return self.size

    def mul(self, a, b):
        """Vectorized product; ``a`` and ``b`` broadcast like numpy arrays."""
        return self.table[a, b]

    @property
    def dense(self):
        return isinstance(self.table, np.ndarray)

    def inverses(self):
        if self._inv is None:
            if isinstance(self.table, AbelianTable):
                self._inv = self.table.inverses()
            else:
                self._inv = np.argmax(self.table == 0, axis=1).astype(np.int64)
        return self._inv

    def inverse(self, g):
        return int(self.inverses()[g])

    def dense_table(self):
        if isinstance(self.table, AbelianTable):
            if self.size > DENSE_CAP:
                raise ResourceCapError(
                    f"dense table of order {self.size} exceeds {DENSE_CAP}",
                    size=self.size, cap=DENSE_CAP,
                )
            return self.table.dense()
        return self.table


def validate(G):
    """Check identity, Latin-square and associativity invariants."""
    n = G.size
    if n < 1:
        raise PreconditionError("empty group")
    rng = np.random.default_rng(0)
    if G.dense:
        T = G.table.astype(np.int64)
        idx = np.arange(n)
        if not (np.array_equal(T[0], idx) and np.array_equal(T[:, 0], idx)):
            raise PreconditionError(f"{G.name}: index 0 is not the identity")
        if not (np.array_equal(np.sort(T, axis=1), np.broadcast_to(idx, (n, n)))
                and np.array_equal(np.sort(T, axis=0), np.broadcast_to(idx[:, None], (n, n)))):
            raise PreconditionError(f"{G.name}: table is not a Latin square")
        if n <= FULL_ASSOC_LIMIT:
            for i in range(n):
                # (i*j)*k vs i*(j*k) for all j, k
                if not np.array_equal(T[T[i]], T[i][T]):
                    raise PreconditionError(f"{G.name}: multiplication is not associative")
            return
    triples = rng.integers(0, n, size=(3, ASSOC_SAMPLES))
    x, y, z = triples
    if not np.array_equal(G.mul(G.mul(x, y), z), G.mul(x, G.mul(y, z))):
        raise PreconditionError(f"{G.name}: multiplication is not associative")
    if not (np.array_equal(G.mul(0, x), x) and np.array_equal(G.mul(x, 0), x)):
        raise PreconditionError(f"{G.name}: index 0 is not the identity")


def _check_size(n, cap=GROUP_CAP):
    if n > cap:
        raise ResourceCapError(f"group of order {n} exceeds the cap {cap}", size=n, cap=cap)


# -- catalog ---------------------------------------------------------------

def cyclic(n):
    if n < 2:
        raise PreconditionError(f"cyclic group needs n >= 2, got {n}")
    _check_size(n)
    return FiniteGroup(AbelianTable([n]), name=f"C{n}")


def abelian(p, exponents):
    """Z/p^e1 x Z/p^e2 x ... from a list of positive exponents."""
    from .numtheory import is_prime

    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    exponents = list(exponents)
    if not exponents or any(e < 1 for e in exponents):
        raise PreconditionError("abelian group needs a nonempty list of positive exponents")
    moduli = [p**e for e in exponents]
    _check_size(prod(moduli))
    name = "A(%d;%s)" % (p, ",".join(map(str, exponents)))
    return FiniteGroup(AbelianTable(moduli), name=name)


def elementary_abelian(p, k):
    if k < 1:
        raise PreconditionError("elementary abelian group needs k >= 1")
    G = abelian(p, [1] * k)
    G.name = f"E({p},{k})"
    return G


def dihedral(n):
    """Symmetries of the n-gon: r^i s^j stored at index i + n*j."""
    if n < 3:
        raise PreconditionError(f"dihedral group needs n >= 3, got {n}")
    _check_size(2 * n, DENSE_CAP)
    idx = np.arange(2 * n)
    i, j = idx % n, idx // n
    # r^i s^a * r^k s^c = r^(i + (-1)^a k) s^(a+c)
    sign = np.where(j == 1, -1, 1)
    rot = (i[:, None] + sign[:, None] * i[None, :]) % n
    ref = (j[:, None] + j[None, :]) % 2
    return FiniteGroup(rot + n * ref, name=f"D{n}")


def quaternion8():
    # units 1, i, j, k with sign bit; index = unit + 4*negative
    unit_mul = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }
    table = np.zeros((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            u, s = unit_mul[(a % 4, b % 4)]
            if (a >= 4) != (b >= 4):
                s = -s
            table[a, b] = u + (4 if s < 0 else 0)
    return FiniteGroup(table, name="Q8")


def symmetric(n):
    """S_n with (s*t)(x) = s(t(x)); permutations in lexicographic order."""
    if not 1 <= n <= 6:
        raise PreconditionError(f"symmetric group supported for 1 <= n <= 6, got {n}")
    perms = list(permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = np.array([[pos[tuple(s[t[x]] for x in range(n))] for t in perms] for s in perms])
    return FiniteGroup(table, name=f"S{n}")


def direct_product(G, H):
    """G x H with (g, h) stored at index g*|H| + h."""
    n = G.size * H.size
    _check_size(n)
    name = f"{G.name} x {H.name}"
    if isinstance(G.table, AbelianTable) and isinstance(H.table, AbelianTable):
        return FiniteGroup(AbelianTable(G.table.moduli + H.table.moduli), name=name)
    _check_size(n, DENSE_CAP)
    TG = G.dense_table().astype(np.int64)
    TH = H.dense_table().astype(np.int64)
    table = (TG[:, None, :, None] * H.size + TH[None, :, None, :]).reshape(n, n)
    return FiniteGroup(table, name=name)


# -- wreath products ---------------------------------------------------------

@dataclass(frozen=True)
class WreathElement:
    base: tuple  # alpha_b for b in B, entries are A-indices
    top: int  # x in B


def wreath_size(A, B):
    return A.size**B.size * B.size


def base_tuples(A, B, start=0, stop=None):
    """Rows ``start:stop`` of A^|B| in mixed-radix order (coordinate 0 most significant)."""
    n = A.size**B.size
    stop = n if stop is None else stop
    idx = np.arange(start, stop, dtype=np.int64)
    place = A.size ** np.arange(B.size - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // place[None, :]) % A.size


def encode_base(A, alpha):
    place = A.size ** np.arange(alpha.shape[-1] - 1, -1, -1, dtype=np.int64)
    return (np.asarray(alpha, dtype=np.int64) * place).sum(axis=-1)


def shift_permutation(B, x):
    """Column permutation realizing beta -> x.beta, i.e. ``perm[b] = x^-1 b``."""
    return np.asarray(B.mul(B.inverse(x), np.arange(B.size)), dtype=np.int64)


def wreath_product(A, B, cap=WREATH_TABLE_CAP):
    """Explicit Cayley table of A wr B.

    Element order: top index slowest, then the base tuple in mixed radix, so
    index = x * |A|^|B| + code(alpha).  Raises :class:`ResourceCapError` with
    the would-be order when the table would exceed ``cap`` elements.
    """
    size = wreath_size(A, B)
    if size > cap:
        raise ResourceCapError(
            f"{A.name} wr {B.name} has order {size}, above the table cap {cap}",
            size=size, cap=cap,
        )
    nbase = A.size**B.size
    alpha = base_tuples(A, B)
    perms = [shift_permutation(B, x) for x in range(B.size)]
    tops = np.repeat(np.arange(B.size), nbase)
    all_alpha = np.tile(alpha, (B.size, 1))
    table = np.empty((size, size), dtype=np.int64)
    for x in range(B.size):
        shifted = all_alpha[:, perms[x]]
        new_top = np.asarray(B.mul(x, tops), dtype=np.int64)
        for c in range(nbase):
            new_base = A.mul(alpha[c][None, :], shifted)
            table[x * nbase + c] = new_top * nbase + encode_base(A, new_base)
    return FiniteGroup(table, name=f"W({A.name},{B.name})", factors=(A, B))


def wreath_element(A, B, index):
    nbase = A.size**B.size
    top, code = divmod(int(index), nbase)
    return WreathElement(tuple(int(a) for a in base_tuples(A, B, code, code + 1)[0]), top)


def wreath_index(A, B, element):
    if len(element.base) != B.size or not 0 <= element.top < B.size:
        raise PreconditionError("wreath element does not match the factor groups")
    if any(not 0 <= a < A.size for a in element.base):
        raise PreconditionError("base entry out of range")
    return element.top * A.size**B.size + int(encode_base(A, np.array(element.base)))


# -- orders ------------------------------------------------------------------

def element_order(G, g):
    """Least k >= 1 with g^k = 1, by repeated multiplication."""
    if not 0 <= g < G.size:
        raise PreconditionError(f"element {g} not in {G.name}")
    cur, k = int(g), 1
    while cur != 0:
        cur = int(G.mul(cur, g))
        k += 1
        if k > G.size:
            raise PreconditionError(f"{G.name}: corrupted table, element {g} has no finite order")
    assert G.size % k == 0, "element order must divide the group order"
    return k


def element_orders(G):
    """Orders of all elements, vectorized over the group."""
    n = G.size
    orders = np.zeros(n, dtype=np.int64)
    g = np.arange(n, dtype=np.int64)
    cur = g.copy()
    k = 1
    while g.size:
        hit = cur == 0
        orders[g[hit]] = k
        g, cur = g[~hit], cur[~hit]
        cur = np.asarray(G.mul(cur, g), dtype=np.int64)
        k += 1
        if k > n + 1:
            raise PreconditionError(f"{G.name}: corrupted table")
    return orders

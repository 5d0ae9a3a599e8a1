from collections import Counter

import numpy as np
import pytest

from wreathavg import groups
from wreathavg.errors import PreconditionError, ResourceCapError
from wreathavg.groups import (
    WreathElement,
    cyclic,
    dihedral,
    direct_product,
    element_order,
    element_orders,
    elementary_abelian,
    quaternion8,
    symmetric,
    wreath_element,
    wreath_index,
    wreath_product,
)

from conftest import CATALOG, group


def order_counts(G):
    return dict(Counter(element_orders(G).tolist()))


def test_cyclic():
    assert element_order(cyclic(2), 1) == 2
    C4 = cyclic(4)
    assert [element_order(C4, g) for g in range(4)] == [1, 4, 2, 4]
    assert element_order(cyclic(8), 1) == 8
    with pytest.raises(PreconditionError):
        cyclic(1)


@pytest.mark.parametrize("G, counts", [
    (lambda: dihedral(4), {1: 1, 2: 5, 4: 2}),
    (lambda: elementary_abelian(2, 2), {1: 1, 2: 3}),
    (lambda: symmetric(3), {1: 1, 2: 3, 3: 2}),
    (lambda: quaternion8(), {1: 1, 2: 1, 4: 6}),
    (lambda: direct_product(cyclic(2), cyclic(2)), {1: 1, 2: 3}),
    (lambda: direct_product(cyclic(2), cyclic(3)), {1: 1, 2: 1, 3: 2, 6: 2}),
    (lambda: direct_product(cyclic(4), cyclic(2)), {1: 1, 2: 3, 4: 4}),
    (lambda: direct_product(symmetric(3), cyclic(2)), {1: 1, 2: 7, 3: 2, 6: 2}),
])
def test_catalog_spectra(G, counts):
    assert order_counts(G()) == counts


def test_symmetric_sizes():
    assert symmetric(5).size == 120
    assert symmetric(6).size == 720
    with pytest.raises(PreconditionError):
        symmetric(7)


def test_bad_parameters():
    for bad in (lambda: dihedral(2), lambda: elementary_abelian(4, 2), lambda: groups.abelian(2, [])):
        with pytest.raises(PreconditionError):
            bad()
    with pytest.raises(ResourceCapError):
        cyclic(2**16 + 1)


def test_validation_catches_broken_tables():
    T = np.array([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    groups.FiniteGroup(T)
    with pytest.raises(PreconditionError):
        groups.FiniteGroup(T[[1, 0, 2]])  # identity moved
    bad = T.copy()
    bad[1, 1] = 1
    with pytest.raises(PreconditionError):
        groups.FiniteGroup(bad)
    # Latin square with identity but not associative (order-5 loop)
    loop = np.array([
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ])
    with pytest.raises(PreconditionError):
        groups.FiniteGroup(loop)


@pytest.mark.parametrize("name", list(CATALOG))
def test_identity_and_latin_square(name):
    G = group(name)
    T = G.dense_table().astype(int)
    n = G.size
    assert list(T[0]) == list(range(n)) and list(T[:, 0]) == list(range(n))
    for i in range(n):
        assert sorted(T[i]) == list(range(n))
        assert sorted(T[:, i]) == list(range(n))


def test_implicit_abelian_matches_dense():
    G = groups.abelian(2, [1, 2, 3])
    dense = groups.FiniteGroup(G.dense_table())
    assert order_counts(G) == order_counts(dense)
    assert np.array_equal(G.inverses(), dense.inverses())


def test_direct_product_keeps_identity_at_zero():
    G = direct_product(symmetric(3), quaternion8())
    assert G.size == 48 and element_order(G, 0) == 1


def test_wreath_small_cases():
    W = wreath_product(cyclic(2), cyclic(2))
    assert W.size == 8 and order_counts(W) == {1: 1, 2: 5, 4: 2}
    assert order_counts(wreath_product(cyclic(2), cyclic(3))) == {1: 1, 2: 7, 3: 8, 6: 8}
    W = wreath_product(cyclic(4), cyclic(2))
    assert W.size == 32 and max(element_orders(W)) == 8


def test_wreath_element_order_four():
    A, B = cyclic(2), cyclic(2)
    W = wreath_product(A, B)
    g = wreath_index(A, B, WreathElement((1, 0), 1))
    assert element_order(W, g) == 4
    h = wreath_index(A, B, WreathElement((1, 1), 1))
    assert element_order(W, h) == 2


def test_wreath_multiplication_convention():
    # (alpha, x)(beta, y) = (alpha * (x . beta), xy) with (x . beta)_b = beta_{x^-1 b}
    A, B = symmetric(3), cyclic(3)
    W = wreath_product(A, B)
    rng = np.random.default_rng(1)
    for _ in range(200):
        i, j = rng.integers(0, W.size, size=2)
        g, h = wreath_element(A, B, i), wreath_element(A, B, j)
        x = g.top
        xinv = B.inverse(x)
        shifted = [h.base[int(B.mul(xinv, b))] for b in range(B.size)]
        base = tuple(int(A.mul(a, s)) for a, s in zip(g.base, shifted))
        expected = WreathElement(base, int(B.mul(x, h.top)))
        assert wreath_element(A, B, W.mul(i, j)) == expected


def test_wreath_enumeration_order():
    A, B = cyclic(3), cyclic(2)
    assert wreath_element(A, B, 0) == WreathElement((0, 0), 0)
    assert wreath_element(A, B, 1) == WreathElement((0, 1), 0)
    assert wreath_element(A, B, 3) == WreathElement((1, 0), 0)
    assert wreath_element(A, B, 9) == WreathElement((0, 0), 1)
    for i in range(18):
        assert wreath_index(A, B, wreath_element(A, B, i)) == i


def test_wreath_cap_reports_size():
    with pytest.raises(ResourceCapError) as info:
        wreath_product(cyclic(4), cyclic(8))
    assert info.value.size == 4**8 * 8


def _feasible_pairs(cap=512):
    for a in CATALOG:
        for b in CATALOG:
            if group(a).size ** group(b).size * group(b).size <= cap:
                yield a, b


@pytest.mark.parametrize("a, b", list(_feasible_pairs()))
def test_top_order_divides_wreath_order(a, b):
    A, B = group(a), group(b)
    W = wreath_product(A, B)
    orders = element_orders(W)
    nbase = A.size**B.size
    top_orders = element_orders(B)
    for idx, o in enumerate(orders):
        assert o % top_orders[idx // nbase] == 0
    assert orders.sum() / W.size >= top_orders.sum() / B.size


def test_element_order_divides_group_order():
    for name in CATALOG:
        G = group(name)
        for g in range(G.size):
            assert G.size % element_order(G, g) == 0

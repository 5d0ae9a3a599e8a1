from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wreathavg import formulas as F
from wreathavg import groups
from wreathavg.errors import PreconditionError, ResourceCapError
from wreathavg.exact import bit_budget
from wreathavg.oracle import brute_force_spectrum
from wreathavg.spectra import average_order, max_order, r_distribution, spectrum

from conftest import P_GROUPS, group

C2, C3, C4, C8 = (groups.cyclic(n) for n in (2, 3, 4, 8))
V4 = groups.elementary_abelian(2, 2)
S3 = groups.symmetric(3)
sp = spectrum


def prof(G):
    return F.p_group_profile(sp(G))


@pytest.mark.parametrize("A, B, expected", [
    (C2, C2, Fraction(19, 8)),
    (C2, C3, Fraction(29, 8)),
    (S3, C2, Fraction(283, 72)),
    (C4, C2, Fraction(143, 32)),
])
def test_theorem1_examples(A, B, expected):
    assert F.theorem1_average(sp(A), sp(B)) == expected


def test_theorem1_rejects_trivial():
    trivial = groups.FiniteGroup([[0]], name="1")
    with pytest.raises(PreconditionError):
        F.theorem1_average(sp(trivial), sp(C2))
    with pytest.raises(PreconditionError):
        F.theorem1_average(sp(C2), sp(trivial))


def test_k_coefficients():
    assert F.k_coefficients(sp(C2)).k == (Fraction(2, 3), Fraction(1, 3))
    # k_0 weighs elements of order p^b, absent in the Klein four-group
    assert F.k_coefficients(sp(V4)).k == (0, Fraction(6, 7), Fraction(1, 7))
    assert F.k_coefficients(sp(C4)).k == (Fraction(8, 11), Fraction(2, 11), Fraction(1, 11))
    with pytest.raises(PreconditionError):
        F.k_coefficients(sp(S3))


def test_theorem2_examples():
    assert F.theorem2_average(prof(C4), sp(C2)) == Fraction(143, 32)
    hand = 6 - Fraction(3, 2) * (Fraction(2, 3) * Fraction(5, 4) + Fraction(1, 3) * Fraction(9, 16))
    assert hand == Fraction(143, 32)
    assert F.theorem2_average(prof(C4), sp(V4)) == Fraction(6271, 1024)
    for n in range(1, 6):
        E = groups.elementary_abelian(2, n)
        expected = 3 - Fraction(1, 2**n) - Fraction(1, 2 * 4**n)
        assert F.theorem2_average(prof(E), sp(C2)) == expected
    assert F.theorem2_average(prof(V4), sp(C2)) == Fraction(87, 32)


def test_theorem2_prime_mismatch():
    with pytest.raises(PreconditionError, match="prime mismatch"):
        F.theorem2_average(prof(C4), sp(C3))


def test_theorem3_examples():
    assert F.theorem3_check(Fraction(3, 2), Fraction(19, 8), 2, 1)
    assert F.theorem3_check(Fraction(3, 2), Fraction(143, 32), 2, 2)
    assert F.theorem3_check(Fraction(7, 4), Fraction(6271, 1024), 2, 2)
    assert not F.theorem3_check(Fraction(3, 2), Fraction(4), 2, 1)


def test_theorem4_examples():
    assert F.theorem4_remainder(prof(C2), sp(C2)) == 0
    assert F.theorem4_remainder(prof(C4), sp(C2)) == Fraction(9, 32)
    R = F.theorem4_remainder(prof(C8), sp(C2))
    assert 0 <= R <= 3 * Fraction(3, 2)
    # same value when a(A wr B) comes from the general sum
    aW = F.theorem1_average(sp(C8), sp(C2))
    assert F.theorem4_remainder(prof(C8), sp(C2), wreath_average=aW) == R


def test_theorem5_examples():
    rC2, rC4 = r_distribution(C2, 2), r_distribution(C4, 2)
    d = F.theorem5_distribution(rC2, rC2)
    assert d.r == (1, Fraction(3, 4), Fraction(1, 8)) and 2**d.d == 4
    assert F.theorem5_distribution(rC4, rC2).r == (1, Fraction(3, 4), Fraction(1, 4), Fraction(1, 32))
    with pytest.raises(PreconditionError):
        F.theorem5_distribution(rC2, r_distribution(C3, 3))


def test_one_step_examples():
    rC2 = r_distribution(C2, 2)
    assert F.cor51_step(rC2).r == (1, Fraction(3, 4), Fraction(1, 8))
    assert F.cor51_step(F.cor51_step(rC2)).at(1) == Fraction(7, 8)
    step = F.cor51_step(r_distribution(V4, 2))
    assert step.r == (1, Fraction(5, 8), Fraction(1, 32))
    assert step == r_distribution(brute_force_spectrum(V4, C2), 2)


def test_iterate_tower():
    rC2 = r_distribution(C2, 2)
    assert F.iterate_tower(rC2, 0) == [rC2]
    traj = F.iterate_tower(rC2, 12)
    for n, dist in enumerate(traj):
        assert dist.at(1) == 1 - Fraction(1, 2 ** (n + 1))
        assert (dist.a, dist.d) == (2 ** (n + 1) - 1, n + 1)
    for prev, cur in zip(traj, traj[1:]):
        assert all(cur.at(k) >= prev.at(k) for k in range(cur.d + 1))


def test_iterate_tower_budget_names_step():
    with bit_budget(2000):
        with pytest.raises(ResourceCapError, match="tower step"):
            F.iterate_tower(r_distribution(C2, 2), 20)


def test_iterate_tower_float_mode_tracks_exact():
    rC4 = r_distribution(C4, 2)
    exact = F.iterate_tower(rC4, 8)
    approx = F.iterate_tower(rC4, 8, mode="float")
    for e, a in zip(exact, approx):
        assert all(abs(float(x) - y) < 1e-12 for x, y in zip(e.r, a.r))
    # float mode keeps going where exact mode would need millions of bits
    far = F.iterate_tower(rC4, 40, mode="float")
    assert far[-1].at(1) > 0.999


def test_iterate_tower_limits():
    with pytest.raises(PreconditionError):
        F.iterate_tower(r_distribution(C2, 2), 65)
    with pytest.raises(PreconditionError):
        F.iterate_tower(r_distribution(C2, 2), 2, mode="fast")


def test_psi_examples():
    assert F.psi(Fraction(19, 8), 2, Fraction(3, 2)) == Fraction(19, 24)
    assert F.psi(Fraction(143, 32), 4, Fraction(3, 2)) == Fraction(143, 192)
    assert F.psi(Fraction(6271, 1024), 4, Fraction(7, 4)) == Fraction(6271, 7168)


def test_psi_tower_start_and_first_step():
    traj = F.psi_tower(r_distribution(C2, 2), sp(C2), 2)
    assert traj[0] == Fraction(19, 24)
    D4 = groups.wreath_product(C2, C2)
    a1 = F.theorem1_average(sp(D4), sp(C2))
    assert traj[1] == a1 / (4 * Fraction(3, 2)) == F.psi(a1, 4, Fraction(3, 2))
    assert F.psi_tower(prof(C2), sp(C2), 1) == traj[:2]


def test_theorem6_examples():
    rep = F.theorem6_check([2], sp(V4))
    assert rep.psi == Fraction(6271, 7168) and rep.lower == Fraction(3, 4) and rep.holds
    rep = F.theorem6_check([1], sp(V4))
    aW = average_order(brute_force_spectrum(C2, V4))
    assert rep.psi == aW / (2 * Fraction(7, 4)) and rep.psi >= Fraction(3, 4)
    rep = F.theorem6_check([1, 1], sp(V4))
    assert rep.t == 2 and rep.lower == Fraction(15, 16) and rep.psi >= rep.lower
    aW = average_order(brute_force_spectrum(V4, V4))
    assert rep.psi == aW / (2 * Fraction(7, 4))


def test_theorem6_uses_enumerated_spectrum_when_given():
    A = groups.abelian(3, [1, 2])
    rep = F.theorem6_check([2, 1], sp(C3), specA=sp(A))
    assert rep == F.theorem6_check([1, 2], sp(C3))
    with pytest.raises(PreconditionError):
        F.theorem6_check([1, 1], sp(C3), specA=sp(A))


def test_theorem7_examples():
    seq = F.theorem7_sequence(sp(C2), 2, 10)
    assert seq[1] == Fraction(87, 32)
    assert seq[1] == average_order(brute_force_spectrum(V4, C2))
    assert 0 <= 3 - seq[-1] <= Fraction(3, 2) / 2**10
    E3 = groups.elementary_abelian(2, 3)
    assert average_order(E3) == Fraction(15, 8)
    assert F.average_order_limit(sp(E3), 2, 1) == Fraction(15, 4)


def test_printed_limit_differs_from_computed_one():
    # B = (Z/p)^b: p^r a(B) = p^(r+1) - (p-1) p^(r-b)
    for p, b in [(2, 3), (2, 4), (3, 3)]:
        B = sp(groups.elementary_abelian(p, b))
        for r in range(2, b):
            computed = F.average_order_limit(B, p, r)
            assert computed == p ** (r + 1) - (p - 1) * Fraction(p) ** (r - b)
            assert F.elementary_limit_as_printed(p, b, r) - computed == p ** (r + b + 1) - p ** (r + 1)


def test_cyclic_average_examples():
    assert F.lemma2_cyclic_average(2, 1) == Fraction(3, 2)
    assert F.lemma2_cyclic_average(2, 2) == Fraction(11, 4)
    assert F.lemma2_cyclic_average(3, 2) == Fraction(61, 9)


def test_profile_validation():
    with pytest.raises(PreconditionError):
        F.PGroupProfile(2, 2, 2, (1, 3, 4))
    with pytest.raises(PreconditionError):
        F.PGroupProfile(2, 2, 1, (1, 2, 4))  # s_p must be p^a once d = 1
    assert F.abelian_profile(2, [1, 2]) == prof(groups.abelian(2, [1, 2]))
    # torsion counts of nonabelian groups need not be subgroup orders
    assert prof(groups.dihedral(4)).s == (1, 6, 8, 8)


# -- properties over random abelian p-groups -----------------------------------

@st.composite
def abelian_pair(draw):
    """Exponent lists of two abelian p-groups for one prime, each of order <= 5^5."""
    p = draw(st.sampled_from([2, 3, 5]))
    exps = st.lists(st.integers(1, 4), min_size=1, max_size=4).filter(
        lambda e: p ** sum(e) <= 5**5
    )
    return p, draw(exps), draw(exps)


@settings(max_examples=60, deadline=None)
@given(abelian_pair())
def test_formula_properties(pair):
    p, ea, eb = pair
    profA = F.abelian_profile(p, ea)
    specB = F._profile_spectrum(F.abelian_profile(p, eb))
    specA = F._profile_spectrum(profA)
    aW = F.theorem1_average(specA, specB)
    assert F.theorem2_average(profA, specB) == aW
    kc = F.k_coefficients(specB, p)
    assert all(k >= 0 for k in kc.k) and sum(kc.k) == 1
    aB = average_order(specB)
    assert F.theorem3_check(aB, aW, p, profA.d)
    assert 0 <= F.psi(aW, p**profA.d, aB) <= 1
    assert 0 <= F.theorem4_remainder(profA, specB, aW) <= F.theorem4_bound(profA, specB)
    rep = F.theorem6_check(ea, specB, p=p)
    assert rep.holds
    rB = r_distribution(specB, p)
    dist = F.theorem5_distribution(r_distribution(specA, p), rB)
    assert p**dist.d == max_order(specA) * max_order(specB)
    assert sum(x for x in dist.r) >= 1


@pytest.mark.parametrize("p", [2, 3])
def test_theorem7_monotone(p):
    for name in P_GROUPS[p]:
        seq = F.theorem7_sequence(sp(group(name)), p, 15)
        assert all(x < y for x, y in zip(seq, seq[1:]))

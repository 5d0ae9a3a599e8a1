"""Average element order of small wreath products, three ways."""

import wreathavg as wa
from wreathavg.exact import fmt

C2, C3, C4 = wa.cyclic(2), wa.cyclic(3), wa.cyclic(4)
S3 = wa.symmetric(3)

# The closed form needs only the order statistics of A and B.
a = wa.theorem1_average(wa.spectrum(C2), wa.spectrum(C2))
print("a(C2 wr C2) =", fmt(a))  # the dihedral group of order 8: 19/8

# Brute force: build every (alpha, x) and multiply until the identity.
brute = wa.brute_force_spectrum(C2, C2)
print("orders in C2 wr C2:", dict(sorted(brute.counts.items())))
assert wa.average_order(brute) == a

# Same thing with a nonabelian base group.
for A, B in [(S3, C2), (C3, C3), (C4, C2), (C2, S3)]:
    closed = wa.theorem1_average(wa.spectrum(A), wa.spectrum(B))
    enum = wa.average_order(wa.brute_force_spectrum(A, B))
    orbit = wa.average_order(wa.orbit_spectrum(A, B))
    print(f"a({A.name} wr {B.name}) = {fmt(closed)}", "agree" if closed == enum == orbit else "DIFFER")

# For p-groups there is a rearranged form in terms of torsion counts.
prof = wa.p_group_profile(C4)
print("torsion counts of C4:", prof.s)
print("a(C4 wr C2) via p-group form:", fmt(wa.theorem2_average(prof, wa.spectrum(C2))))

# The average order sits between a(B) and m(A) a(B).
aB = wa.average_order(wa.spectrum(C2))
aW = wa.theorem2_average(prof, wa.spectrum(C2))
print("a(B) <= a(W) <= m(A) a(B):", wa.theorem3_check(aB, aW, 2, prof.d))
print("psi(C4, C2) =", fmt(wa.psi(aW, 4, aB)))

# A bigger example that is never materialized: C8 wr (C4 x C4) has 8^16 * 16 elements.
B = wa.abelian(2, [2, 2])
print("a(C8 wr (C4 x C4)) ~", float(wa.theorem1_average(wa.spectrum(wa.cyclic(8)), wa.spectrum(B))))

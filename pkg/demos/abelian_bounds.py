"""psi(A, B) for abelian A, and the limit p a(B) along (Z/p)^n wr B."""

import wreathavg as wa
from wreathavg.exact import fmt
from wreathavg.formulas import average_order_limit, theorem7_bound

# t counts the cyclic factors of maximal exponent.
for exps in ([3], [1, 3], [3, 3], [2, 3, 3]):
    rep = wa.theorem6_check(exps, wa.spectrum(wa.elementary_abelian(2, 2)))
    print(f"A = A(2;{','.join(map(str, exps))}), t={rep.t}: psi = {fmt(rep.psi, 6)}, lower bound {fmt(rep.lower, 6)}, ok={rep.holds}")

# With cyclic B the leading estimate is 1 - p^-t instead.
rep = wa.theorem6_check([2, 2], wa.spectrum(wa.cyclic(9)), p=3)
print("A = C9 x C9, B = C9: psi =", fmt(rep.psi, 6), "estimate", fmt(rep.cyclic_estimate, 6))

# (Z/p)^n wr B: the average order approaches p a(B) from below.
B = wa.spectrum(wa.dihedral(4))
seq = wa.theorem7_sequence(B, 2, 12)
target = average_order_limit(B, 2, 1)
print("2 a(D4) =", fmt(target))
for n in (1, 2, 4, 8, 12):
    gap = target - seq[n - 1]
    print(f"n={n:2d}: gap {float(gap):.3e} <= {float(theorem7_bound(B, 2, n)):.3e}")

# Average order of a cyclic p-group in closed form.
print([str(wa.lemma2_cyclic_average(3, b)) for b in range(1, 5)])

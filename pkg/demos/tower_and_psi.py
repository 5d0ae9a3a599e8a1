"""Iterated wreath products A_n = A_{n-1} wr C_p and the ratio psi."""

import wreathavg as wa
from wreathavg.exact import to_decimal

C2 = wa.cyclic(2)
rC2 = wa.r_distribution(C2, 2)

# Exact distributions of groups far too large to enumerate.
tower = wa.iterate_tower(rC2, 12)
last = tower[-1]
print("A_12: order 2^%d, exponent 2^%d" % (last.a, last.d))
print("r_{12,1} = 1 - 2^-13:", last.at(1) == 1 - wa.rat(1, 2**13))

# psi(A_n, C2) decreases along the tower.
psis = wa.psi_tower(rC2, wa.spectrum(C2), 6)
for n, x in enumerate(psis):
    print(f"psi(A_{n}, C2) = {to_decimal(x, 10)}  ({x.denominator.bit_length()} bit denominator)")

# Double precision runs past the exact budget, with no accuracy guarantee.
approx = wa.psi_tower(rC2, wa.spectrum(C2), 40, mode="float")
print("float psi at n = 10, 20, 40:", approx[10], approx[20], approx[40])

# The exact run refuses to allocate past the bit budget.
with wa.bit_budget(2**12):
    try:
        wa.iterate_tower(rC2, 20)
    except wa.ResourceCapError as exc:
        print("exact tower stopped:", exc)

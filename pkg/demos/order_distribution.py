"""Cumulative order distribution r_k of p-groups and how wreathing moves it."""

import wreathavg as wa
from wreathavg.exact import fmt

# r_k is the probability that a uniformly random element has order at
# least p^k; r_0 = 1 and r_{d} = P(order = m(A)).
V4 = wa.elementary_abelian(2, 2)
r = wa.r_distribution(V4, 2)
print("r(V4) =", [str(x) for x in r.r])

C2 = wa.cyclic(2)
rC2 = wa.r_distribution(C2, 2)

# Wreathing with Z/p is one step of a simple recursion.
step = wa.cor51_step(r)
print("r(V4 wr C2) =", [str(x) for x in step.r])

# The general composition rule agrees with the recursion for B = Z/p ...
print("general rule agrees:", wa.theorem5_distribution(r, rC2).r == step.r)

# ... and with enumeration.
W = wa.wreath_product(V4, C2)
print("enumerated:", wa.r_distribution(W, 2).r == step.r)

# Larger top groups change the exponent and the weights.
for B in [wa.cyclic(4), wa.elementary_abelian(2, 2), wa.dihedral(4)]:
    rB = wa.r_distribution(B, 2)
    rW = wa.theorem5_distribution(r, rB)
    print(f"m(V4 wr {B.name}) = 2^{rW.d}, r =", ", ".join(fmt(x, 5) for x in rW.r))

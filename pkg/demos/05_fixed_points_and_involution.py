"""Fixed points and the involution structure of the critical curves.

Both critical maps are involutions (G(G(q0)) = q0 and likewise for K),
reflecting the digit-swap symmetry between the (q0, q1) and (q1, q0)
systems.  G has its unique fixed point at the golden ratio; the unique
fixed point of K is the classical Komornik-Loreti constant 1.787231650...
"""

import math

from doublebase import (
    generalized_golden_ratio,
    kl_fixed_point,
    komornik_loreti,
    limit_word,
    mu,
    parse_directive,
)

PHI = (1 + math.sqrt(5)) / 2

print("involution check on a short grid:")
for q0 in [1.2, 1.45, 1.7, 2.1, 2.8]:
    g1 = generalized_golden_ratio(q0).value.mid
    k1 = komornik_loreti(q0).value.mid
    g2 = generalized_golden_ratio(g1).value.mid
    k2 = komornik_loreti(k1).value.mid
    print(f"  q0 = {q0}: |G(G(q0)) - q0| = {abs(g2 - q0):.2e}, "
          f"|K(K(q0)) - q0| = {abs(k2 - q0):.2e}")
print()

print(f"G fixes the golden ratio: G(phi) = "
      f"{generalized_golden_ratio(PHI).value.mid:.15f}")
print(f"                            phi = {PHI:.15f}")
print()

br = kl_fixed_point(tol=1e-10)
print(f"K fixes q* in {br} (the Komornik-Loreti constant)")
print(f"K(q*) = {komornik_loreti(br.mid).value.mid:.12f}")
print()

tm0 = limit_word(parse_directive("(M)"), 0)
tm1 = limit_word(parse_directive("(M)"), 1)
crossing = mu(tm0, tm1)
print("the same constant as the crossing of the Thue-Morse value curves:")
print(f"  mu(TM, reflected TM) = {crossing}")
print()

fib = mu(limit_word(parse_directive("(LR)"), 0), limit_word(parse_directive("(LR)"), 1))
q = fib.mid
print("a Sturmian crossing point, where G and K coincide:")
print(f"  mu(Fibonacci pair) = {q:.12f}")
print(f"  (q-1)(G(q)-1) = {(q - 1) * (generalized_golden_ratio(q).value.mid - 1):.12f}"
      f"  (exactly 1/2 at coincidence points)")

"""The generalized golden ratio G and Komornik-Loreti constant K.

For each base q0 > 1, G(q0) is the threshold base q1 above which some
sequence besides 0^inf and 1^inf is a unique (q0, q1)-expansion, and
K(q0) the threshold above which uncountably many are.  Both are computed
by descending the directive tree and solving one root equation at the
matched node; results are certified brackets, never bare floats.
"""

import math

from doublebase import (
    curve_csv,
    generalized_golden_ratio,
    komornik_loreti,
    ks_crosscheck,
    sample_curve,
)

PHI = (1 + math.sqrt(5)) / 2

print("pointwise values (bracket, node, formula case):")
for q0 in [1.3, 1.5, PHI, 1.7, 1.75, 1.9, 2.0, 2.5]:
    rg = generalized_golden_ratio(q0)
    rk = komornik_loreti(q0)
    print(f"  q0 = {q0:<10.6f} G = {rg.value.mid:.12f} ({rg.node or '.'}, {rg.case.value})"
          f"   K = {rk.value.mid:.12f} ({rk.node or '.'}, {rk.case.value})")
print()

print("closed forms at the root node: G = 1/(q0-1) then (q0+1)/q0,")
print("K = (q0+2+sqrt(q0^2+4))/(2q0) then (2q0-1)/(q0(q0-1)):")
for q0 in [1.55, 1.75, 1.9]:
    rg, rk = generalized_golden_ratio(q0), komornik_loreti(q0)
    g_form = 1 / (q0 - 1) if q0 <= PHI else (q0 + 1) / q0
    print(f"  q0 = {q0}: |G - closed form| = {abs(rg.value.mid - g_form):.2e}")
print()

print("the product (q0-1)(q1-1) pins both curves between 1/(q0+1) and q0/(q0+1):")
for q0 in [1.5, PHI, 1.7, 2.0]:
    rg, rk = generalized_golden_ratio(q0), komornik_loreti(q0)
    print(f"  q0 = {q0:<10.6f} (q0-1)(G-1) = {rg.inequality_witness:.9f}"
          f"   (q0-1)(K-1) = {rk.inequality_witness:.9f}")
print()

print("the descent agrees with the s-map of the expansion bounds:")
for q0, q1 in [(1.9, 1.70), (1.9, 1.55), (2.0, 1.5)]:
    res = ks_crosscheck(q0, q1)
    print(f"  s(a) vs s(b) at ({q0}, {q1}): {res.order!r} after node {res.node or '.'}")
print()

rows = sample_curve(1.5, 2.0, 11, "both")
print("curve sample as CSV (same schema the CLI writes):")
print("\n".join(curve_csv(rows).splitlines()[:8]))
print("...")

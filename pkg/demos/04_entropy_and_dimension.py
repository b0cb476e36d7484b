"""Entropy of survivor subshifts and dimension bounds for value sets.

The subset-construction automaton presents Omega_{a,b} for eventually
periodic bounds; its Perron root gives the topological entropy.  Above
the K threshold, a two-word free-concatenation system of unique
expansions gives a positive Hausdorff-dimension lower bound via the
Moran equation r0^s + r1^s = 1.
"""

import math

from doublebase import (
    block_counts,
    build_automaton,
    entropy,
    entropy_estimate,
    ifs_dimension,
    komornik_loreti,
    parse_word,
    univoque_dimension_lower_bound,
)

pairs = [("0(1)", "1(0)"), ("(01)", "1(0)"), ("(01)", "(10)"), ("(001)", "(101)")]
print("automata and entropies:")
for ta, tb in pairs:
    a, b = parse_word(ta), parse_word(tb)
    m = build_automaton(a, b, validate=False)
    h = entropy(m)
    small = m.minimized()
    print(f"  a = {ta:>6}, b = {tb:>6}: {len(m):>3} states ({len(small)} minimized), "
          f"h = {h:.6f}")
print(f"  (ln 2 = {math.log(2):.6f}, ln golden ratio = {math.log((1+5**0.5)/2):.6f})")
print()

a, b = parse_word("(01)"), parse_word("1(0)")
counts = block_counts(a, b, 18)
print(f"block counts A_1..A_18 of the 011-free shift: {counts}")
print(f"finite-difference slope (ln A_18 - ln A_14)/4 = "
      f"{(math.log(counts[17]) - math.log(counts[13])) / 4:.6f}")
print()

q0 = 1.9
k = komornik_loreti(q0).value.mid
print(f"first entropy plateau at q0 = {q0}: h(U) = 0 for q1 <= K(q0) = {k:.9f}")
for dq in [-0.03, +0.02, +0.05, +0.10]:
    est = entropy_estimate(q0, k + dq, digits=48)
    print(f"  q1 = K{dq:+.2f}: truncated-bound entropy estimate = {est:.6f}")
print()

print("Moran exponents: r0^s + r1^s = 1")
for r0, r1 in [(0.5, 0.5), (0.25, 0.25), (0.5, 0.25)]:
    print(f"  ({r0}, {r1}) -> s = {ifs_dimension(r0, r1):.6f}")
print()

print("dimension lower bounds for the value set of unique expansions:")
for q0, q1 in [(1.9, k + 0.05), (1.9, 1.8), (2.0, 2.0)]:
    d = univoque_dimension_lower_bound(q0, q1)
    print(f"  ({q0}, {q1:.6f}): dim >= {d:.6f}")

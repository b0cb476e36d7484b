"""Classifying lexicographic subshifts and univoque sets.

Omega_{a,b} holds the sequences whose every suffix avoids the open
interval (a, b).  Comparing the s-map directives of a and b decides
whether it is trivial, countable, or uncountable with zero or positive
entropy -- and the same machinery classifies the set of unique
(q0, q1)-expansions for numeric base pairs.
"""

from doublebase import (
    classify_omega,
    classify_sigma,
    classify_univoque,
    limit_word,
    parse_directive,
    parse_word,
)

gallery = [
    ("(0)", "(10)"),     # everything below the first window: trivial
    ("01(0)", "1(0)"),   # b = 1 0^inf alone already forces 1^* 0^* 1 0^inf orbits
    ("(01)", "(10)"),    # the fixed pair of the root node
    ("(01)", "1(0)"),    # the 011-free shift
    ("0(1)", "(10)"),    # a maximal: positive entropy
    ("0(1)", "1(0)"),    # no constraint at all: the full shift
    ("(001)", "(110)"),
    ("(0011)", "(1100)"),
]
print("Omega_{a,b} over a small gallery:")
for ta, tb in gallery:
    label = classify_omega(parse_word(ta), parse_word(tb))
    print(f"  a = {ta:>7}, b = {tb:>7}:  {label}")
print()

tm0 = limit_word(parse_directive("(M)"), 0)
tm1 = limit_word(parse_directive("(M)"), 1)
print(f"the Thue-Morse pair (limit words of (M)): {classify_omega(tm0, tm1)}")
fib0 = limit_word(parse_directive("(LR)"), 0)
fib1 = limit_word(parse_directive("(LR)"), 1)
print(f"the Fibonacci pair (limit words of (LR)): {classify_omega(fib0, fib1)}")
print()

print("Sigma_{a,b} (suffixes confined to the closed interval [a, b]):")
for ta, tb in [("(01)", "(10)"), ("1(0)", "0(1)"), ("(0)", "(1)")]:
    print(f"  a = {ta:>5}, b = {tb:>5}:  {classify_sigma(parse_word(ta), parse_word(tb))}")
print()

print("unique-expansion sets on the diagonal q0 = q1 = q:")
print("(two-element below the golden ratio, countable up to the")
print("Komornik-Loreti constant 1.78723..., then uncountable)")
for q in [1.5, 1.6, 1.61, 1.63, 1.7, 1.78, 1.8, 1.9, 2.0]:
    print(f"  q = {q:<5} {classify_univoque(q, q)}")
print()

print("off the diagonal, against the critical thresholds at q0 = 1.7:")
for q1 in [1.55, 1.7, 1.9]:
    print(f"  (1.7, {q1}): {classify_univoque(1.7, q1)}")

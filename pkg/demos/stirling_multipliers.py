#!/usr/bin/env python3
# Diagonal Stirling sequences a_n = S(n+k-1, k) and the least constant C
# making (C a_n) pass the divisibility condition.
#
# Second kind: C stabilizes at a constant dividing (k-1)!, so the column is
# "almost realizable".  First kind: the signs stay fine but every prime up
# to the horizon eventually divides some denominator, so no C can work.

from math import factorial

from realizable import (
    check_realizable,
    denominator_prime_scan,
    minimal_multiplier,
    stirling_row_sequence,
)

print("second kind, horizon 200:")
print("k   C     divides (k-1)!")
for k in range(1, 9):
    a = stirling_row_sequence(2, k, 200)
    m = minimal_multiplier(a, 200)
    print(f"{k:<3} {m.multiplier:<5} {factorial(k - 1) % m.multiplier == 0}")

# k = 1 is all ones and k = 2 is 2^n - 1; both pass without help
for k in (1, 2):
    verdict = check_realizable(stirling_row_sequence(2, k, 200), 200).verdict
    print(f"k={k} unscaled: {verdict}")

print()
print("first kind, growing denominator prime sets (k = 3):")
a = stirling_row_sequence(1, 3, 100)
for N in (25, 50, 100):
    primes = sorted(denominator_prime_scan(a, N))
    print(f"N={N:<4} {len(primes):>2} primes: {primes}")
print("sign condition still holds:", minimal_multiplier(a, 100).sign_ok)

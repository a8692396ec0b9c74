#!/usr/bin/env python3
"""Classical coefficient sequences under the horizon tests.

The secant numbers |E_{2n}| pass cleanly.  For the Bernoulli quotients
|B_{2n}/2n| = tau_n / beta_n, both the numerator and the denominator
sequences pass globally, and beta is even a divisibility sequence.  But
the numerators carry a hidden local obstruction: the 37-part of tau fails,
and 37 is precisely the first irregular prime.
"""

from realizable import (
    check_local,
    check_realizable,
    divisibility_check,
    euler_abs_sequence,
    irregular_primes,
    tau_beta_sequences,
)

euler = euler_abs_sequence(50)
print("|E_2|, |E_4|, ...:", euler.terms[:6])
print("secant numbers to N=50:", check_realizable(euler, 50).verdict)
print()

tau, beta = tau_beta_sequences(50)
print("tau :", tau.terms[:8])
print("beta:", beta.terms[:8])
print("tau  to N=50:", check_realizable(tau, 50).verdict)
print("beta to N=50:", check_realizable(beta, 50).verdict)
print("beta divisibility sequence:", divisibility_check(beta, 50).ok)
print()

# tau_16 = 7709321041217 = 37 * 683 * 305065927, and the 37 cannot be
# squared away: the 37-part of tau violates the congruence at n = 16
rep = check_local(tau, 37, 40)
print("37-part of tau:", rep.p_part_sequence.terms[:20], "...")
print("local check at 37:", rep.report.verdict, "first failure", rep.report.first_failure)
for p in (5, 7, 11, 13):
    print(f"local check at {p}:", check_local(tau, p, 40).report.verdict)
print()

print("irregular primes up to 150:", irregular_primes(150))

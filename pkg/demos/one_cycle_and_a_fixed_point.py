#!/usr/bin/env python3
"""A sequence can be realizable while its prime parts are not.

Take the permutation (1 2 3 4 5)(6): one 5-cycle plus a fixed point.  Its
fixed-point counts are 1, 1, 1, 1, 6, 1, 1, 1, 1, 6, ...  The sequence is
realizable by construction.  Restrict each term to its 2-part (or 3-part),
though, and realizability dies: the 2-part is 1, 1, 1, 1, 2, ... whose Dold
value at n = 5 is 1, not divisible by 5.
"""

from realizable import (
    CycleType,
    check_everywhere_local,
    check_realizable,
    explicit_permutation,
    fix_count_sequence,
    realize_cycle_type,
)

ct = CycleType({1: 1, 5: 1})
a = fix_count_sequence(ct, 30)
print("first ten terms:", a.terms[:10])

report = check_realizable(a, 30)
print("global check:", report.verdict)

recovered = realize_cycle_type(a, 30)
print("recovered cycle type:", dict(recovered.counts))
print("a permutation with those counts:", explicit_permutation(recovered))

print()
for rep in check_everywhere_local(a, 30):
    n, condition = rep.report.first_failure
    print(f"p = {rep.prime}: p-part fails ({condition}) at n = {n}")
print("every prime outside the support has all-ones p-part, nothing to check")

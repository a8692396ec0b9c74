"""The Dold transform and horizon tests for realizability.

A sequence (a_n) of non-negative integers counts the period-n points of some
map exactly when, for every n, the Dold transform

    D_n(a) = sum of mu(n/d) a_d over divisors d of n

is divisible by n (condition D) and non-negative (condition S); D_n(a)/n is
then the number of length-n orbits.  A finite prefix can only be checked up
to its horizon N, so a clean pass is reported as "consistent-up-to-N", never
as "realizable": horizon checks refute, they do not prove.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .numtheory import divisors, mobius
from .sequences import InsufficientPrefixError, RatSeq, Seq

__all__ = [
    "VERDICT_CONSISTENT",
    "VERDICT_FAILS_D",
    "VERDICT_FAILS_S",
    "VERDICT_FAILS_BOTH",
    "DoldRecord",
    "RealizabilityReport",
    "DivisibilityResult",
    "dold_transform",
    "orbit_counts",
    "check_realizable",
    "divisibility_check",
]

VERDICT_CONSISTENT = "consistent-up-to-N"
VERDICT_FAILS_D = "fails-D"
VERDICT_FAILS_S = "fails-S"
VERDICT_FAILS_BOTH = "fails-both"


@dataclass(frozen=True)
class DoldRecord:
    """One row of a horizon check: everything the verdict at index n rests on."""

    n: int
    dold_value: int
    dold_mod_n: int  # least non-negative residue of dold_value mod n
    sign_ok: bool  # dold_value >= 0       (condition S at n)
    divisibility_ok: bool  # dold_mod_n == 0      (condition D at n)

    @property
    def ok(self) -> bool:
        return self.sign_ok and self.divisibility_ok


@dataclass(frozen=True)
class RealizabilityReport:
    """Outcome of checking a prefix up to its horizon.

    ``first_failure`` is (n, which) for the smallest failing index, where
    ``which`` is "D", "S", or "both" describing what fails *at that n*;
    the verdict aggregates every violated condition across the horizon.
    """

    horizon: int
    records: tuple[DoldRecord, ...]
    verdict: str
    first_failure: tuple[int, str] | None

    @property
    def consistent(self) -> bool:
        return self.verdict == VERDICT_CONSISTENT


class DivisibilityResult(NamedTuple):
    ok: bool
    first_failure: tuple[int, int] | None  # (m, n): m | n but a_m does not divide a_n


def dold_transform(a: Seq, n: int) -> int:
    """D_n(a) = sum of mu(n/d) a_d over d | n.  Linear in a.

    >>> dold_transform(Seq((1, 3, 4, 7, 11, 18)), 6)
    12
    """
    if n < 1:
        raise ValueError("the Dold transform needs n >= 1")
    if n > len(a):
        raise InsufficientPrefixError(
            f"D_{n} needs terms a_1..a_{n} but the prefix has {len(a)}",
            required=n,
        )
    return sum(mobius(n // d) * a[d] for d in divisors(n))


def orbit_counts(a: Seq, N: int) -> RatSeq:
    """Candidate orbit counts b_n = D_n(a)/n for n = 1..N, as exact rationals.

    For a genuine fixed-point count every b_n is a non-negative integer; a
    negative or fractional entry is a certificate of non-realizability.

    >>> [str(b) for b in orbit_counts(Seq((1, 1, 1, 1, 6)), 5)]
    ['1', '0', '0', '0', '1']
    """
    _validate_horizon(a, N)
    return RatSeq(
        tuple(Fraction(dold_transform(a, n), n) for n in range(1, N + 1)),
        label=f"orbits({a.label})" if a.label else "orbits",
    )


def check_realizable(a: Seq, N: int) -> RealizabilityReport:
    """Test conditions (D) and (S) for every n <= N.

    The prefix must be non-negative throughout (fixed-point counts cannot be
    negative; reject rather than guess what a signed input means).
    """
    _validate_horizon(a, N)
    _reject_negative_terms(a)
    records = []
    first_failure: tuple[int, str] | None = None
    d_violated = s_violated = False
    for n in range(1, N + 1):
        value = dold_transform(a, n)
        record = DoldRecord(
            n=n,
            dold_value=value,
            dold_mod_n=value % n,
            sign_ok=value >= 0,
            divisibility_ok=value % n == 0,
        )
        records.append(record)
        d_violated = d_violated or not record.divisibility_ok
        s_violated = s_violated or not record.sign_ok
        if first_failure is None and not record.ok:
            which = "both" if not record.sign_ok and not record.divisibility_ok else (
                "D" if not record.divisibility_ok else "S"
            )
            first_failure = (n, which)
    if d_violated and s_violated:
        verdict = VERDICT_FAILS_BOTH
    elif d_violated:
        verdict = VERDICT_FAILS_D
    elif s_violated:
        verdict = VERDICT_FAILS_S
    else:
        verdict = VERDICT_CONSISTENT
    return RealizabilityReport(
        horizon=N,
        records=tuple(records),
        verdict=verdict,
        first_failure=first_failure,
    )


def divisibility_check(a: Seq, N: int) -> DivisibilityResult:
    """Does a_m | a_n whenever m | n, for all n <= N?

    A necessary condition for some algebraic realizations, not for
    realizability itself.  Zero terms are rejected (0 | 0 debates are not
    worth having).  The first failing pair is scanned in order of n, then m.

    >>> divisibility_check(Seq((1, 3, 4, 7, 11, 18)), 6)
    DivisibilityResult(ok=False, first_failure=(2, 4))
    """
    _validate_horizon(a, N)
    for n in range(1, N + 1):
        if a[n] == 0:
            raise ValueError(f"divisibility check needs nonzero terms; a_{n} = 0")
    for n in range(1, N + 1):
        for m in divisors(n)[:-1]:
            if a[n] % a[m] != 0:
                return DivisibilityResult(False, (m, n))
    return DivisibilityResult(True, None)


def _validate_horizon(a: Seq, N: int) -> None:
    if N < 1:
        raise ValueError("horizon N must be >= 1")
    if N > len(a):
        raise InsufficientPrefixError(
            f"horizon N={N} exceeds the {len(a)}-term prefix", required=N
        )


def _reject_negative_terms(a: Seq) -> None:
    for i, t in enumerate(a.terms, start=1):
        if t < 0:
            raise ValueError(
                f"fixed-point counts are non-negative; a_{i} = {t} is signed input"
            )

"""Exact elementary number theory: sieve, primality, factorization, valuations.

Indices fed to these functions stay small (a few thousand at most), while the
*values* being factored may be large but are expected to be smooth or to have
at most one big prime factor.  Everything is pure, deterministic, and exact.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

__all__ = [
    "primes_upto",
    "is_prime",
    "factorize",
    "mobius",
    "divisors",
    "padic_valuation",
]

# trial division covers everything below this bound before Pollard rho kicks in
_TRIAL_BOUND = 1 << 16

# deterministic Miller-Rabin witness set, valid for n < 3.317e24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=64)
def _sieve(bound: int) -> tuple[int, ...]:
    if bound < 2:
        return ()
    flags = bytearray([1]) * (bound + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(bound) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    return tuple(i for i, f in enumerate(flags) if f)


def primes_upto(bound: int) -> list[int]:
    """All primes <= bound, ascending.  Empty below 2.

    >>> primes_upto(20)
    [2, 3, 5, 7, 11, 13, 17, 19]
    """
    return list(_sieve(bound))


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24, far beyond any use here)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_split(n: int) -> int:
    """A nontrivial factor of odd composite n (Pollard rho, fixed schedule)."""
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}, keys ascending.

    n = 0 is rejected; factorize(1) == {}.

    >>> factorize(32760)
    {2: 3, 3: 2, 5: 1, 7: 1, 13: 1}
    """
    if n == 0:
        raise ValueError("cannot factorize 0")
    m = abs(n)
    out: dict[int, int] = {}
    for p in _sieve(_TRIAL_BOUND):
        if p * p > m:
            break
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    if m > 1:
        stack = [m]
        while stack:
            q = stack.pop()
            if is_prime(q):
                out[q] = out.get(q, 0) + 1
            else:
                d = _rho_split(q)
                stack.append(d)
                stack.append(q // d)
    return dict(sorted(out.items()))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Moebius function: 0 on a squared factor, else (-1)^(number of primes).

    >>> [mobius(n) for n in range(1, 13)]
    [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    """
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    exponents = factorize(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending.

    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def padic_valuation(x: int, p: int) -> int:
    """Exponent of the prime p in x (x must be nonzero, p prime).

    >>> padic_valuation(32760, 3)
    2
    """
    if x == 0:
        raise ValueError("the p-adic valuation of 0 is infinite")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v

"""Sequence types and exact generators for the families under study.

Sequences here are finite 1-indexed prefixes: ``a[n]`` is the n-th term with
n >= 1, matching how the arithmetic (divisor sums over d | n) is written on
paper.  All terms are exact: Python ints, or Fractions for rational data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator

from .numtheory import primes_upto

__all__ = [
    "Seq",
    "RatSeq",
    "LinearRecurrence",
    "InsufficientPrefixError",
    "FIBONACCI",
    "linear_recurrence_terms",
    "linear_recurrence_term",
    "fibonacci_term",
    "fibonacci_like",
    "stirling_first",
    "stirling_second",
    "stirling_row_sequence",
    "euler_abs_sequence",
    "bernoulli_numbers",
    "tau_beta_sequences",
    "irregular_primes",
]


class InsufficientPrefixError(ValueError):
    """A prefix is shorter than an operation needs.

    ``required`` carries the prefix length that would have sufficed, so
    callers can report exactly how much data to supply.
    """

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


@dataclass(frozen=True)
class Seq:
    """Finite prefix (a_1, ..., a_N) of an integer sequence, 1-indexed."""

    terms: tuple[int, ...]
    label: str = ""

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        if not terms:
            raise ValueError("a sequence prefix needs at least one term")
        for t in terms:
            if not isinstance(t, int):
                raise TypeError(f"terms must be ints, got {type(t).__name__}")
        object.__setattr__(self, "terms", terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n: int) -> int:
        """a_n for 1 <= n <= len(self); there is no a_0."""
        if not isinstance(n, int) or n < 1:
            raise IndexError(f"sequence indices start at 1, got {n!r}")
        if n > len(self.terms):
            raise InsufficientPrefixError(
                f"term a_{n} requested but prefix has only {len(self.terms)} terms",
                required=n,
            )
        return self.terms[n - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)


@dataclass(frozen=True)
class RatSeq:
    """Finite 1-indexed prefix of exact rationals (Fractions auto-reduce)."""

    terms: tuple[Fraction, ...]
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(Fraction(t) for t in self.terms))
        if not self.terms:
            raise ValueError("a sequence prefix needs at least one term")

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n: int) -> Fraction:
        if not isinstance(n, int) or n < 1:
            raise IndexError(f"sequence indices start at 1, got {n!r}")
        if n > len(self.terms):
            raise InsufficientPrefixError(
                f"term {n} requested but prefix has only {len(self.terms)} terms",
                required=n,
            )
        return self.terms[n - 1]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.terms)


@dataclass(frozen=True)
class LinearRecurrence:
    """u_{n+k} = a_1 u_{n+k-1} + ... + a_k u_n with initial terms u_1..u_k.

    The trailing coefficient a_k must be nonzero (otherwise the order lies).
    """

    coefficients: tuple[int, ...]
    initial: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        object.__setattr__(self, "initial", tuple(self.initial))
        if not self.coefficients:
            raise ValueError("a recurrence needs order k >= 1")
        if self.coefficients[-1] == 0:
            raise ValueError("trailing coefficient a_k must be nonzero")
        if len(self.initial) != len(self.coefficients):
            raise ValueError(
                f"need exactly k={len(self.coefficients)} initial terms, "
                f"got {len(self.initial)}"
            )

    @property
    def order(self) -> int:
        return len(self.coefficients)


FIBONACCI = LinearRecurrence((1, 1), (1, 1))


def linear_recurrence_terms(rec: LinearRecurrence, N: int, label: str = "") -> Seq:
    """First N terms of the recurrence, by direct iteration."""
    if N < 1:
        raise ValueError("need N >= 1")
    k = rec.order
    terms = list(rec.initial[:N])
    while len(terms) < N:
        terms.append(
            sum(c * t for c, t in zip(rec.coefficients, terms[-1 : -k - 1 : -1]))
        )
    return Seq(tuple(terms), label=label)


def _mat_mul(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    k = len(A)
    return [
        [sum(A[i][t] * B[t][j] for t in range(k)) for j in range(k)] for i in range(k)
    ]


def linear_recurrence_term(rec: LinearRecurrence, m: int) -> int:
    """u_m alone, by companion-matrix powering: O(k^3 log m) exact products.

    Use this for huge isolated indices (sampling along n^j) where iterating
    to m would materialize millions of large terms.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    k = rec.order
    if m <= k:
        return rec.initial[m - 1]
    companion = [list(rec.coefficients)] + [
        [1 if j == i else 0 for j in range(k)] for i in range(k - 1)
    ]
    power = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    e = m - k
    while e:
        if e & 1:
            power = _mat_mul(power, companion)
        companion = _mat_mul(companion, companion)
        e >>= 1
    # state vector (u_k, ..., u_1); u_m is the top entry of power @ state
    return sum(power[0][j] * rec.initial[k - 1 - j] for j in range(k))


def fibonacci_term(m: int) -> int:
    """F_m with F_1 = F_2 = 1, at any index m >= 1."""
    return linear_recurrence_term(FIBONACCI, m)


def fibonacci_like(c: int, N: int) -> Seq:
    """(1, c, 1+c, 1+2c, 2+3c, ...): a_1 = 1, a_2 = c, then the Fibonacci rule.

    c = 3 gives the Lucas numbers (1, 3, 4, 7, 11, 18, ...).

    >>> fibonacci_like(3, 6).terms
    (1, 3, 4, 7, 11, 18)
    """
    if N < 1:
        raise ValueError("need N >= 1")
    terms = [1, c]
    while len(terms) < N:
        terms.append(terms[-1] + terms[-2])
    return Seq(tuple(terms[:N]), label=f"fiblike({c})")


def _stirling_column(kind: int, k: int, rows: int) -> list[int]:
    """Column k of the chosen Stirling triangle for row indices 0..rows."""
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    if k < 0:
        raise ValueError("need k >= 0")
    # row DP capped at column k; row[j] = S(m, j)
    row = [1] + [0] * k
    column = [row[k]]
    for m in range(1, rows + 1):
        new = [0] * (k + 1)
        for j in range(1, min(m, k) + 1):
            if kind == 1:
                new[j] = row[j - 1] + (m - 1) * row[j]
            else:
                new[j] = row[j - 1] + j * row[j]
        row = new
        column.append(row[k])
    return column


def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind: permutations of n symbols
    with exactly k cycles.

    >>> stirling_first(4, 2)
    11
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return _stirling_column(1, k, n)[n]


def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind: partitions of n symbols into k
    nonempty blocks.

    >>> stirling_second(4, 2)
    7
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return _stirling_column(2, k, n)[n]


def stirling_row_sequence(kind: int, k: int, N: int) -> Seq:
    """The k-th diagonal sequence (S(n+k-1, k))_{n=1..N} for the chosen kind.

    >>> stirling_row_sequence(2, 2, 4).terms
    (1, 3, 7, 15)
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if N < 1:
        raise ValueError("need N >= 1")
    column = _stirling_column(kind, k, N + k - 1)
    return Seq(tuple(column[k : N + k]), label=f"stirling{kind}(k={k})")


def euler_abs_sequence(N: int) -> Seq:
    """(|E_2|, |E_4|, ..., |E_{2N}|): absolute zigzag (secant) numbers.

    E_n are the coefficients of 2/(e^t + e^{-t}) as an exponential generating
    function.  Indexing starts at n = 1, so E_0 = 1 is deliberately excluded.

    >>> euler_abs_sequence(5).terms
    (1, 5, 61, 1385, 50521)
    """
    if N < 1:
        raise ValueError("need N >= 1")
    evens = [1]  # E_0
    for t in range(1, N + 1):
        evens.append(-sum(comb(2 * t, 2 * j) * evens[j] for j in range(t)))
    return Seq(tuple(abs(e) for e in evens[1:]), label="|E_2n|")


def bernoulli_numbers(M: int) -> list[Fraction]:
    """Exact B_0, ..., B_M as a 0-indexed list, with the B_1 = -1/2 convention.

    Odd indices above 1 are zero; even entries come from the binomial
    recurrence sum(C(m+1, r) B_r, r=0..m) = 0 restricted to even r.

    >>> bernoulli_numbers(4)[2:]
    [Fraction(1, 6), Fraction(0, 1), Fraction(-1, 30)]
    """
    if M < 0:
        raise ValueError("need M >= 0")
    out = [Fraction(0)] * (M + 1)
    out[0] = Fraction(1)
    if M >= 1:
        out[1] = Fraction(-1, 2)
    evens = [Fraction(1)]
    for t in range(1, M // 2 + 1):
        m = 2 * t
        s = sum(comb(m + 1, 2 * j) * evens[j] for j in range(t))
        b = (Fraction(m + 1, 2) - s) / (m + 1)
        evens.append(b)
        out[m] = b
    return out


def tau_beta_sequences(N: int) -> tuple[Seq, Seq]:
    """Numerators and denominators of |B_{2n} / 2n| in lowest terms, n = 1..N.

    >>> tau, beta = tau_beta_sequences(6)
    >>> tau[1], beta[1], tau[6], beta[6]
    (1, 12, 691, 32760)
    """
    if N < 1:
        raise ValueError("need N >= 1")
    B = bernoulli_numbers(2 * N)
    taus, betas = [], []
    for n in range(1, N + 1):
        q = abs(B[2 * n]) / (2 * n)
        taus.append(q.numerator)
        betas.append(q.denominator)
    return Seq(tuple(taus), label="tau"), Seq(tuple(betas), label="beta")


def irregular_primes(bound: int) -> list[int]:
    """Irregular primes <= bound: p dividing the numerator of some B_k with
    k even and k <= p - 3 (the Kummer test, run on exact numerators).

    >>> irregular_primes(60)
    [37, 59]
    """
    if bound < 5:
        raise ValueError("need bound >= 5 (the test involves B_2, ..., B_{p-3})")
    B = bernoulli_numbers(bound - 3)
    out = []
    for p in primes_upto(bound):
        if any(B[k].numerator % p == 0 for k in range(2, p - 2, 2)):
            out.append(p)
    return out

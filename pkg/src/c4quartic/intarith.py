"""Exact integer arithmetic: square roots, factorization, radicals, valuations.

Everything here takes and returns plain Python ints, so every operation is
exact at any size.  The factorizer is sized for desk-scale inputs: small
prime trial division first, then a Brent-cycle splitter guarded by a fixed
witness primality test.  It answers reliably for |n| up to about 2**90 and
raises :class:`FactorizationIncomplete` once its effort budget runs out,
never spinning silently on adversarial input.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

__all__ = [
    "Factorization",
    "FactorizationIncomplete",
    "factor",
    "is_prime",
    "is_square",
    "is_squarefree",
    "isqrt",
    "primes_upto",
    "radical",
    "valuation",
]


class FactorizationIncomplete(ArithmeticError):
    """The factorizer ran out of effort budget; ``.n`` holds the input."""

    def __init__(self, n: int, message: str):
        super().__init__(message)
        self.n = n


@dataclass(frozen=True)
class Factorization:
    """A signed prime factorization: ``sign * prod(p**e for p, e in factors)``.

    ``factors`` lists (prime, exponent) pairs with primes strictly increasing
    and every exponent >= 1; the units +1 and -1 carry an empty list.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        """Reconstruct the factored integer."""
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    def primes(self) -> tuple[int, ...]:
        """Distinct prime divisors, increasing."""
        return tuple(p for p, _ in self.factors)

    def __str__(self) -> str:
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return ("-" if self.sign < 0 else "") + (body or "1")


def isqrt(n: int) -> int:
    """Integer square root: the unique s >= 0 with s*s <= n < (s+1)*(s+1).

    >>> isqrt(15)
    3
    """
    if n < 0:
        raise ValueError("isqrt of a negative integer")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    """True exactly when n = s*s for some integer s >= 0."""
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


# Fixed Miller-Rabin witnesses, proven deterministic below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981


def _miller_rabin(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    # n odd positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # n odd, not a perfect square (caller guarantees both).
    D = 5
    while _jacobi(D, n) != -1:
        D = -(D + 2) if D > 0 else -(D - 2)
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x: int) -> int:
        return ((x + n) // 2 if x % 2 else x // 2) % n

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(n: int) -> bool:
    """Primality with a fixed, reproducible witness policy.

    Deterministic (proven) for n < 3.3e24 via the 12 smallest prime bases;
    larger inputs must additionally pass a strong Lucas test.  No composite
    is known to pass the combination.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if not all(_miller_rabin(n, a) for a in _MR_BASES):
        return False
    if n < _MR_PROVEN_BOUND:
        return True
    if is_square(n):
        return False
    return _strong_lucas(n)


def primes_upto(n: int) -> list[int]:
    """All primes <= n, by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = bytearray(len(range(start, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


_TRIAL_LIMIT = 100_000


@functools.cache
def _trial_primes() -> tuple[int, ...]:
    return tuple(primes_upto(_TRIAL_LIMIT))


class _BudgetExhausted(Exception):
    pass


def _brent_splitter(n: int, c: int, budget: list[int]) -> int | None:
    """One Brent cycle attempt on odd composite n with increment c.

    Returns a nontrivial factor or None (cycle failed for this c).  Charges
    every f-evaluation against the shared budget and raises once it is gone.
    """
    y, r, q, g = 2, 1, 1, 1
    x = ys = y
    m = 128
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        budget[0] -= 2 * r
        if budget[0] < 0:
            raise _BudgetExhausted
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            budget[0] -= 1
            if budget[0] < 0:
                raise _BudgetExhausted
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


def factor(n: int, *, max_effort: int = 1 << 24) -> Factorization:
    """Deterministic prime factorization of a nonzero integer.

    Trial division by primes below 1e5 handles everything a coefficient-box
    search produces; larger cofactors go to a Brent splitter with a fixed
    increment schedule.  ``max_effort`` caps the splitter's total step count
    across all attempts; exceeding it raises FactorizationIncomplete.

    >>> str(factor(2000))
    '2^4 * 5^3'
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    m = abs(n)
    counts: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > m:
            break
        while m % p == 0:
            m //= p
            counts[p] = counts.get(p, 0) + 1
    if m > 1:
        budget = [max_effort]
        stack = [m]
        while stack:
            v = stack.pop()
            if v <= _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(v):
                # anything this small surviving trial division is prime
                counts[v] = counts.get(v, 0) + 1
                continue
            d = None
            for c in itertools.count(1):
                try:
                    d = _brent_splitter(v, c, budget)
                except _BudgetExhausted:
                    raise FactorizationIncomplete(
                        n, f"factorization of {n} exceeded effort budget at cofactor {v}"
                    ) from None
                if d is not None:
                    break
            stack.append(d)
            stack.append(v // d)
    return Factorization(sign, tuple(sorted(counts.items())))


def radical(n: int) -> int:
    """Product of the distinct primes dividing |n|; radical(+-1) = 1."""
    if n == 0:
        raise ValueError("radical of 0 is undefined")
    return math.prod(factor(n).primes())


def is_squarefree(n: int) -> bool:
    """True when no prime square divides n."""
    if n == 0:
        raise ValueError("squarefreeness of 0 is undefined")
    return all(e == 1 for _, e in factor(n).factors)


def valuation(n: int, q: int) -> int:
    """Largest e with q**e dividing n (q prime, n nonzero)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if not is_prime(q):
        raise ValueError(f"valuation base {q} is not prime")
    m, e = abs(n), 0
    while m % q == 0:
        m //= q
        e += 1
    return e

"""Prime-by-prime freeness test for the index of Z[theta] in the ring of integers.

For an irreducible f = x^4 + b*x^2 + d and a prime q dividing disc(f), this
module decides whether q divides the index [Z_K : Z[theta]].  f is monogenic
exactly when no such q divides the index.  The decision splits into five
mutually exclusive branches on the divisibility pattern of (b, d) by q:

  1. q | b, q | d          index-free iff q^2 does not divide d
  2. q | b, q ∤ d          two-disjunct test on b2 = b/q and d1 = (d + (-d)^s)/q,
                           where s is the largest power of q dividing 4
  3. q ∤ b, q | d          mirror test on b1 = (b + (-b)^s)/q and d2 = d/q,
                           where s is the largest power of q dividing 2
  4. q = 2, 2 ∤ b*d        coprimality over GF(2) of x^2 + b*x + d and
                           (b*x^2 + d + (b*x + d)^2)/2
  5. q ∤ 2*b*d             index-free iff q^2 does not divide b^2 - 4*d

All intermediate divisions are exact by construction; a nonzero remainder
would mean the branch dispatch is wrong, so it raises ArithmeticError rather
than returning a wrong verdict.  Verdicts carry their branch, intermediates,
and (for branch 4) the two GF(2) polynomials, so a caller can show its work.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gfq import GfPoly, gf_gcd
from .intarith import is_prime
from .trinomial import Trinomial, discriminant, is_irreducible

__all__ = [
    "BranchIntermediates",
    "PrimeVerdict",
    "prime_index_test",
]


@dataclass(frozen=True)
class BranchIntermediates:
    """Derived quantities for branches 2 and 3; unused fields stay None.

    ``disjunct`` records which of the two alternatives certified freeness
    (1 or 2, left to right), or None when both failed.
    """

    b1: int | None = None
    b2: int | None = None
    d1: int | None = None
    d2: int | None = None
    s: int | None = None
    disjunct: int | None = None

    def to_dict(self) -> dict:
        return {k: v for k, v in vars(self).items() if v is not None}


@dataclass(frozen=True)
class PrimeVerdict:
    """Outcome of the index test at one prime.

    ``evaluated`` is False for primes that were never tested because an
    earlier prime already divided the index; such placeholder verdicts
    claim nothing about divisibility.
    """

    prime: int
    evaluated: bool
    divides_index: bool
    branch: int | None
    intermediates: BranchIntermediates | None = None
    h1: GfPoly | None = None
    h2: GfPoly | None = None
    h_gcd: GfPoly | None = None

    @classmethod
    def skipped(cls, prime: int) -> "PrimeVerdict":
        return cls(prime=prime, evaluated=False, divides_index=False, branch=None)

    def to_dict(self) -> dict:
        out: dict = {
            "prime": self.prime,
            "evaluated": self.evaluated,
            "divides_index": self.divides_index,
            "branch": self.branch,
        }
        if self.intermediates is not None:
            out["intermediates"] = self.intermediates.to_dict()
        for name, poly in (("h1", self.h1), ("h2", self.h2), ("h_gcd", self.h_gcd)):
            if poly is not None:
                out[name] = list(poly.coeffs)
        return out


def _exact_div(num: int, q: int) -> int:
    quo, rem = divmod(num, q)
    if rem:
        raise ArithmeticError(f"{num} is not divisible by {q}; branch dispatch is broken")
    return quo


def _branch_1(t: Trinomial, q: int) -> PrimeVerdict:
    return PrimeVerdict(q, True, t.d % (q * q) == 0, 1)


def _branch_2(t: Trinomial, q: int) -> PrimeVerdict:
    s = 4 if q == 2 else 1
    b2 = _exact_div(t.b, q)
    d1 = _exact_div(t.d + (-t.d) ** s, q)
    if b2 % q == 0 and d1 % q != 0:
        disjunct = 1
    elif (b2 * (-t.d * b2 * b2 - d1 * d1)) % q != 0:
        disjunct = 2
    else:
        disjunct = None
    inter = BranchIntermediates(b2=b2, d1=d1, s=s, disjunct=disjunct)
    return PrimeVerdict(q, True, disjunct is None, 2, inter)


def _branch_3(t: Trinomial, q: int) -> PrimeVerdict:
    s = 2 if q == 2 else 1
    b1 = _exact_div(t.b + (-t.b) ** s, q)
    d2 = _exact_div(t.d, q)
    if b1 % q == 0 and d2 % q != 0:
        disjunct = 1
    elif (b1 * d2 * (-t.b * b1 + d2)) % q != 0:
        disjunct = 2
    else:
        disjunct = None
    inter = BranchIntermediates(b1=b1, d2=d2, s=s, disjunct=disjunct)
    return PrimeVerdict(q, True, disjunct is None, 3, inter)


def _branch_4(t: Trinomial, q: int) -> PrimeVerdict:
    b, d = t.b, t.d
    h1 = GfPoly(2, (d, b, 1))
    h2 = GfPoly(2, (_exact_div(d * (1 + d), 2), b * d, _exact_div(b * (1 + b), 2)))
    g = gf_gcd(h1, h2)
    return PrimeVerdict(q, True, g.degree > 0, 4, h1=h1, h2=h2, h_gcd=g)


def _branch_5(t: Trinomial, q: int) -> PrimeVerdict:
    e = t.b * t.b - 4 * t.d
    return PrimeVerdict(q, True, e % (q * q) == 0, 5)


def prime_index_test(t: Trinomial, q: int) -> PrimeVerdict:
    """Decide whether the prime q divides the index of x^4 + b*x^2 + d.

    Requires q prime, t irreducible, and q | disc(t); primes outside the
    discriminant never divide the index, so asking about one is a bug.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if not is_irreducible(t):
        raise ValueError(f"{t} is reducible; the index test needs a quartic field")
    if discriminant(t) % q != 0:
        raise ValueError(f"{q} does not divide disc({t})")
    b_div, d_div = t.b % q == 0, t.d % q == 0
    if b_div and d_div:
        return _branch_1(t, q)
    if b_div:
        return _branch_2(t, q)
    if d_div:
        return _branch_3(t, q)
    if q == 2:
        return _branch_4(t, q)
    return _branch_5(t, q)

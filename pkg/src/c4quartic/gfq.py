"""Dense univariate polynomial arithmetic and factorization over GF(q), q prime.

Polynomials are immutable coefficient tuples, lowest degree first, always
reduced mod q and trimmed of leading zeros (the zero polynomial is the empty
tuple, degree -1).  Factorization is the classical three-stage pipeline:
squarefree decomposition, distinct-degree splitting, then Cantor-Zassenhaus
equal-degree splitting (trace maps for q = 2).  The random choices inside
equal-degree splitting come from a caller-suppliable rng so results are
reproducible; the returned factor list is sorted and canonical either way.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .intarith import is_prime

__all__ = [
    "GfPoly",
    "gf_add",
    "gf_divmod",
    "gf_factor",
    "gf_gcd",
    "gf_mod",
    "gf_monic",
    "gf_mul",
    "gf_pow_mod",
    "gf_sub",
    "gf_x",
]


@functools.lru_cache(maxsize=None)
def _check_modulus(q: int) -> None:
    if not is_prime(q):
        raise ValueError(f"modulus {q} is not prime")


@dataclass(frozen=True)
class GfPoly:
    """A polynomial over GF(modulus); coeffs[i] multiplies x^i."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_modulus(self.modulus)
        reduced = tuple(c % self.modulus for c in self.coeffs)
        while reduced and reduced[-1] == 0:
            reduced = reduced[:-1]
        object.__setattr__(self, "coeffs", reduced)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(reversed(terms))


def gf_x(q: int) -> GfPoly:
    """The monomial x over GF(q)."""
    return GfPoly(q, (0, 1))


def _same_field(a: GfPoly, b: GfPoly) -> int:
    if a.modulus != b.modulus:
        raise ValueError(f"mixed moduli {a.modulus} and {b.modulus}")
    return a.modulus


def gf_add(a: GfPoly, b: GfPoly) -> GfPoly:
    q = _same_field(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return GfPoly(q, tuple(x + y for x, y in zip(ca, cb)))


def gf_sub(a: GfPoly, b: GfPoly) -> GfPoly:
    q = _same_field(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return GfPoly(q, tuple(x - y for x, y in zip(ca, cb)))


def gf_mul(a: GfPoly, b: GfPoly) -> GfPoly:
    q = _same_field(a, b)
    if a.is_zero or b.is_zero:
        return GfPoly(q, ())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] = (out[i + j] + x * y) % q
    return GfPoly(q, tuple(out))


def gf_divmod(a: GfPoly, b: GfPoly) -> tuple[GfPoly, GfPoly]:
    q = _same_field(a, b)
    if b.is_zero:
        raise ValueError("division by the zero polynomial")
    if a.degree < b.degree:
        return GfPoly(q, ()), a
    inv_lead = pow(b.leading(), -1, q)
    rem = list(a.coeffs)
    quo = [0] * (a.degree - b.degree + 1)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + b.degree] * inv_lead % q
        if c:
            quo[i] = c
            for j, y in enumerate(b.coeffs):
                rem[i + j] = (rem[i + j] - c * y) % q
    return GfPoly(q, tuple(quo)), GfPoly(q, tuple(rem[: b.degree]))


def gf_mod(a: GfPoly, b: GfPoly) -> GfPoly:
    return gf_divmod(a, b)[1]


def gf_monic(a: GfPoly) -> GfPoly:
    if a.is_zero or a.leading() == 1:
        return a
    inv = pow(a.leading(), -1, a.modulus)
    return GfPoly(a.modulus, tuple(c * inv for c in a.coeffs))


def gf_gcd(a: GfPoly, b: GfPoly) -> GfPoly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    _same_field(a, b)
    while not b.is_zero:
        a, b = b, gf_mod(a, b)
    return gf_monic(a)


def gf_pow_mod(base: GfPoly, exp: int, mod: GfPoly) -> GfPoly:
    """base**exp reduced mod ``mod``, by binary exponentiation."""
    q = _same_field(base, mod)
    if exp < 0:
        raise ValueError("negative exponent")
    result = GfPoly(q, (1,))
    base = gf_mod(base, mod)
    while exp:
        if exp & 1:
            result = gf_mod(gf_mul(result, base), mod)
        base = gf_mod(gf_mul(base, base), mod)
        exp >>= 1
    return result


def _derivative(a: GfPoly) -> GfPoly:
    return GfPoly(a.modulus, tuple(i * c for i, c in enumerate(a.coeffs))[1:])


def _qth_root(a: GfPoly) -> GfPoly:
    # a is a polynomial in x^q over GF(q); Frobenius fixes the base field,
    # so the q-th root just keeps every q-th coefficient.
    return GfPoly(a.modulus, a.coeffs[:: a.modulus])


def _squarefree_parts(a: GfPoly) -> list[tuple[GfPoly, int]]:
    """Yun-style decomposition: monic squarefree parts with multiplicities."""
    q = a.modulus
    out: list[tuple[GfPoly, int]] = []
    a = gf_monic(a)
    if a.degree < 1:
        return out
    da = _derivative(a)
    if da.is_zero:
        # a = c(x^q) = c(x)^q in characteristic q
        for g, m in _squarefree_parts(_qth_root(a)):
            out.append((g, m * q))
        return out
    c = gf_gcd(a, da)
    w = gf_divmod(a, c)[0]
    m = 1
    while w.degree > 0:
        y = gf_gcd(w, c)
        z = gf_divmod(w, y)[0]
        if z.degree > 0:
            out.append((z, m))
        w = y
        c = gf_divmod(c, y)[0]
        m += 1
    if c.degree > 0:
        # the residual keeps factors whose multiplicity is divisible by q,
        # at full multiplicity; it is a q-th power, so the zero-derivative
        # branch of the recursion supplies the scaling
        out.extend(_squarefree_parts(c))
    return out


def _distinct_degree_parts(a: GfPoly) -> list[tuple[GfPoly, int]]:
    """Split monic squarefree a into products of factors of equal degree."""
    q = a.modulus
    out: list[tuple[GfPoly, int]] = []
    h = gf_x(q)
    d = 0
    while a.degree >= 2 * (d + 1):
        d += 1
        h = gf_pow_mod(h, q, a)
        g = gf_gcd(gf_sub(h, gf_x(q)), a)
        if g.degree > 0:
            out.append((g, d))
            a = gf_divmod(a, g)[0]
            h = gf_mod(h, a)
    if a.degree > 0:
        # whatever survives is a single irreducible of full remaining degree
        out.append((a, a.degree))
    return out


def _equal_degree_split(a: GfPoly, d: int, rng: random.Random) -> list[GfPoly]:
    """Factor monic squarefree a whose irreducible factors all have degree d."""
    q = a.modulus
    if a.degree == d:
        return [a]
    while True:
        h = GfPoly(q, tuple(rng.randrange(q) for _ in range(a.degree)))
        if h.degree < 1:
            continue
        if q == 2:
            # trace map over GF(2^d)
            t = h
            acc = h
            for _ in range(d - 1):
                t = gf_mod(gf_mul(t, t), a)
                acc = gf_add(acc, t)
            g = gf_gcd(acc, a)
        else:
            g = gf_gcd(h, a)
            if g.degree == 0:
                e = gf_pow_mod(h, (q**d - 1) // 2, a)
                g = gf_gcd(gf_sub(e, GfPoly(q, (1,))), a)
        if 0 < g.degree < a.degree:
            left = _equal_degree_split(g, d, rng)
            right = _equal_degree_split(gf_divmod(a, g)[0], d, rng)
            return left + right


def gf_factor(a: GfPoly, rng: random.Random | None = None) -> list[tuple[GfPoly, int]]:
    """Full factorization into monic irreducibles with multiplicities.

    Returns [(g, e), ...] sorted by (degree, coefficients); the product of
    g**e times the leading coefficient of ``a`` reconstructs ``a``.
    """
    if a.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if rng is None:
        rng = random.Random(1)
    out: list[tuple[GfPoly, int]] = []
    for sqfree, mult in _squarefree_parts(a):
        for part, deg in _distinct_degree_parts(sqfree):
            for g in _equal_degree_split(part, deg, rng):
                out.append((g, mult))
    out.sort(key=lambda ge: (ge[0].degree, ge[0].coeffs))
    return out

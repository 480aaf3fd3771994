"""Reference implementations the tests trust instead of the package.

Everything here is written for obviousness, not speed: dense list
polynomials, Fraction linear algebra, exhaustive enumeration.  None of it
imports from c4quartic, so agreement between package and oracle is evidence
rather than tautology.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

# ---------------------------------------------------------------------------
# integer polynomials, coefficients lowest degree first


def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_deriv(a):
    return [i * c for i, c in enumerate(a)][1:]


def _frac_rem(a, b):
    a = [Fraction(c) for c in a]
    while len(a) >= len(b) and poly_trim(a):
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a = poly_trim(a)
        if not a:
            break
    return a


def sylvester_resultant(f, g):
    """Res(f, g) as the determinant of the Sylvester matrix, exactly."""
    f, g = poly_trim(f), poly_trim(g)
    if not f or not g:
        raise ValueError("resultant of the zero polynomial")
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    fr = [Fraction(c) for c in reversed(f)]
    gr = [Fraction(c) for c in reversed(g)]
    rows = [[Fraction(0)] * i + fr + [Fraction(0)] * (n - 1 - i) for i in range(n)]
    rows += [[Fraction(0)] * j + gr + [Fraction(0)] * (m - 1 - j) for j in range(m)]

    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col]:
                factor = rows[r][col] / rows[col][col]
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    assert det.denominator == 1
    return int(det)


def discriminant_via_resultant(f):
    """disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f)."""
    f = poly_trim(f)
    n = len(f) - 1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    num = sign * sylvester_resultant(f, poly_deriv(f))
    quo, rem = divmod(num, f[-1])
    assert rem == 0
    return quo


def _signed_divisors(n):
    n = abs(n)
    out = []
    for k in range(1, math.isqrt(n) + 1):
        if n % k == 0:
            out += [k, -k, n // k, -(n // k)]
    return sorted(set(out))


def reducible_bruteforce(b, d):
    """Exhaustive search for a monic factorization of x^4 + b*x^2 + d over Z.

    By Gauss's lemma rational reducibility gives monic integer factors, and
    any factorization contains a linear factor or splits into quadratics.
    Linear factors have roots dividing d; a quadratic split must look like
    (x^2 + p*x + q)(x^2 - p*x + s) to kill the x^3 term, with q*s = d and
    p^2 = q + s - b bounding |p|.  Candidate products are compared in full.
    """
    if d == 0:
        return True
    for r in _signed_divisors(d):
        if r**4 + b * r**2 + d == 0:
            return True
    f = [d, 0, b, 0, 1]
    p_bound = math.isqrt(abs(b) + 2 * abs(d)) + 1
    for q in _signed_divisors(d):
        s = d // q
        for p in range(-p_bound, p_bound + 1):
            if poly_mul([q, p, 1], [s, -p, 1]) == f:
                return True
    return False


def count_real_roots_sturm(f):
    """Distinct real roots of a squarefree integer polynomial, by Sturm chains."""
    chain = [[Fraction(c) for c in poly_trim(f)]]
    chain.append([Fraction(c) for c in poly_deriv(chain[0])])
    while len(chain[-1]) > 1:
        rem = _frac_rem(chain[-2], chain[-1])
        if not rem:
            raise ValueError("polynomial is not squarefree")
        chain.append([-c for c in rem])

    def variations(at_plus_inf):
        signs = []
        for p in chain:
            lead = p[-1] if at_plus_inf else p[-1] * (-1) ** (len(p) - 1)
            signs.append(1 if lead > 0 else -1)
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    return variations(False) - variations(True)


# ---------------------------------------------------------------------------
# naive GF(q) arithmetic on coefficient tuples, lowest degree first


def nmod_trim(q, a):
    a = tuple(c % q for c in a)
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def nmod_mul(q, a, b):
    a, b = nmod_trim(q, a), nmod_trim(q, b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return nmod_trim(q, out)


def nmod_divmod(q, a, b):
    a, b = list(nmod_trim(q, a)), nmod_trim(q, b)
    assert b, "division by zero"
    inv = pow(b[-1], -1, q)
    quo = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        factor = a[-1] * inv % q
        shift = len(a) - len(b)
        quo[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % q
        a = list(nmod_trim(q, a))
        if not a:
            break
    return nmod_trim(q, quo), nmod_trim(q, a)


def monic_polys(q, degree):
    """Every monic polynomial of the given degree over GF(q), lexicographic."""
    for lower in itertools.product(range(q), repeat=degree):
        yield lower + (1,)


def nmod_is_irreducible(q, a):
    a = nmod_trim(q, a)
    deg = len(a) - 1
    if deg < 1:
        return False
    for k in range(1, deg // 2 + 1):
        for g in monic_polys(q, k):
            if not nmod_divmod(q, a, g)[1]:
                return False
    return True


def nmod_factor(q, a):
    """Factor into monic irreducibles by trial division, smallest first."""
    a = nmod_trim(q, a)
    assert a, "cannot factor zero"
    out = {}
    deg = len(a) - 1
    for k in range(1, deg + 1):
        for g in monic_polys(q, k):
            while True:
                quo, rem = nmod_divmod(q, a, g)
                if rem:
                    break
                out[g] = out.get(g, 0) + 1
                a = quo
            if len(a) == 1:
                return sorted(out.items(), key=lambda ge: (len(ge[0]), ge[0]))
    return sorted(out.items(), key=lambda ge: (len(ge[0]), ge[0]))


def trial_factorization(n):
    """Prime factorization by undiluted trial division; n must be nonzero."""
    assert n != 0
    m = abs(n)
    out = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out

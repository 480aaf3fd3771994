# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled box scan for the cyclic-quartic square condition.

Mirror of :mod:`._scan_py` on C integers: same rectangle, same conditions,
same (b, d)-ascending output.  All products are taken in 128-bit arithmetic;
the dispatcher guarantees |b|, |d| <= 2**40, so d * (b^2 - 4d) stays below
2**121 and never overflows.
"""

cdef extern from *:
    ctypedef long long i128 "__int128"
    ctypedef unsigned long long u128 "unsigned __int128"

cdef extern from "<math.h>" nogil:
    long double sqrtl(long double)

cdef unsigned char _SQ256[256]
cdef int _i
for _i in range(256):
    _SQ256[(_i * _i) & 255] = 1


cdef inline u128 _isqrt_u128(u128 n) noexcept nogil:
    # seed from the 80-bit float sqrt, then correct the few possible ulps
    cdef u128 r = <u128> sqrtl(<long double> n)
    while r > 0 and r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


cdef inline bint _is_square(u128 n) noexcept nogil:
    if not _SQ256[<unsigned int> (n & 255)]:
        return False
    cdef u128 r = _isqrt_u128(n)
    return r * r == n


def scan_c4(long long b_min, long long b_max, long long d_min, long long d_max):
    """All (b, d) in the box with cyclic quartic Galois group, (b, d)-ascending."""
    cdef list out = []
    cdef long long b, d
    cdef i128 bb, e, p
    for b in range(b_min, b_max + 1):
        bb = <i128> b * b
        for d in range(d_min, d_max + 1):
            e = bb - 4 * <i128> d
            p = <i128> d * e
            # a positive square product forces d > 0 and e > 0
            if p <= 0:
                continue
            if not _is_square(<u128> p):
                continue
            if _is_square(<u128> d):
                continue
            if _is_square(<u128> e):
                continue
            out.append((b, d))
    return out

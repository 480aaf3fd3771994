"""Pure-Python box scan for the cyclic-quartic square condition.

Finds every (b, d) in a rectangle where d and e = b^2 - 4d are non-squares
while d*e is a perfect square; by the classification in :mod:`.trinomial`
those are exactly the x^4 + b*x^2 + d with cyclic quartic Galois group
(non-squareness of d and e already rules out every factorization).  This is
the portable fallback; :mod:`._scan` is the compiled twin and must return
bit-identical results.
"""

from __future__ import annotations

from math import isqrt

__all__ = ["scan_c4"]

# residues mod 256 that perfect squares can take; rejects most non-squares
# before paying for an integer square root
_SQ256 = bytearray(256)
for _i in range(256):
    _SQ256[(_i * _i) & 255] = 1
del _i


def scan_c4(b_min: int, b_max: int, d_min: int, d_max: int) -> list[tuple[int, int]]:
    """All (b, d) in the box with cyclic quartic Galois group, (b, d)-ascending."""
    out = []
    for b in range(b_min, b_max + 1):
        bb = b * b
        for d in range(d_min, d_max + 1):
            e = bb - 4 * d
            p = d * e
            # a positive square product forces d > 0 and e > 0
            if p <= 0:
                continue
            if not _SQ256[p & 255]:
                continue
            r = isqrt(p)
            if r * r != p:
                continue
            r = isqrt(d)
            if r * r == d:
                continue
            r = isqrt(e)
            if r * r == e:
                continue
            out.append((b, d))
    return out

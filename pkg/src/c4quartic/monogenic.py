"""Monogenicity decision and the full per-trinomial report.

A number field K = Q[x]/(f) is monogenic via f when Z[theta] is the whole
ring of integers, equivalently when disc(f) = disc(K), equivalently when no
prime dividing disc(f) divides the index [Z_K : Z[theta]].  This module runs
the prime-by-prime branch test over the factored discriminant and assembles
everything a caller might want into one immutable report with a stable
dictionary form for serialization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .index_criterion import PrimeVerdict, prime_index_test
from .intarith import Factorization, factor, is_squarefree, radical
from .trinomial import (
    Signature,
    Trinomial,
    discriminant,
    is_c4,
    is_irreducible,
    signature,
)

__all__ = [
    "DegenerateTrinomialError",
    "MonogenicityReport",
    "StructuralConstraints",
    "factor_discriminant",
    "is_monogenic",
    "structural_constraints",
]


class DegenerateTrinomialError(ValueError):
    """Raised for d = 0, where x^4 + b*x^2 is not even squarefree."""


def factor_discriminant(t: Trinomial) -> Factorization:
    """Factor disc(t) = 16 * d * (b^2 - 4d)^2 by factoring the small pieces.

    Never factors the discriminant itself: 2^4, the factors of d, and the
    factors of b^2 - 4d (doubled) merge directly, keeping inputs to the
    integer factorizer box-sized.
    """
    d = t.d
    e = t.b * t.b - 4 * d
    if d == 0 or e == 0:
        raise ValueError(f"disc({t}) = 0 has no prime factorization")
    counts = {2: 4}
    fd = factor(d)
    for p, k in fd.factors:
        counts[p] = counts.get(p, 0) + k
    for p, k in factor(e).factors:
        counts[p] = counts.get(p, 0) + 2 * k
    return Factorization(fd.sign, tuple(sorted(counts.items())))


@dataclass(frozen=True)
class MonogenicityReport:
    """Everything decided about one trinomial, in decision order.

    For reducible input the verdict tuple is empty and the c4/monogenic
    flags are False; ``field_disc`` is disc(t) when monogenic and None
    otherwise; ``disc_factored`` is None only when disc(t) = 0.
    """

    trinomial: Trinomial
    irreducible: bool
    c4: bool
    disc: int
    disc_factored: Factorization | None
    verdicts: tuple[PrimeVerdict, ...]
    monogenic: bool
    field_disc: int | None
    signature: Signature | None

    def failing_prime(self) -> int | None:
        """The prime whose verdict sank monogenicity, if any."""
        for v in self.verdicts:
            if v.evaluated and v.divides_index:
                return v.prime
        return None

    def to_dict(self) -> dict:
        return {
            "trinomial": {"b": self.trinomial.b, "d": self.trinomial.d},
            "irreducible": self.irreducible,
            "c4": self.c4,
            "disc": self.disc,
            "disc_factored": None
            if self.disc_factored is None
            else {
                "sign": self.disc_factored.sign,
                "factors": [[p, e] for p, e in self.disc_factored.factors],
            },
            "verdicts": [v.to_dict() for v in self.verdicts],
            "monogenic": self.monogenic,
            "field_disc": self.field_disc,
            "signature": None
            if self.signature is None
            else {"r1": self.signature.r1, "r2": self.signature.r2},
        }


def is_monogenic(t: Trinomial) -> MonogenicityReport:
    """Decide monogenicity of x^4 + b*x^2 + d and report the evidence.

    Primes dividing the discriminant are tested in increasing order and
    the scan stops at the first one dividing the index; later primes get
    placeholder verdicts marked unevaluated.
    """
    if t.d == 0:
        raise DegenerateTrinomialError(f"{t} has d = 0; its root generates no quartic order")
    disc = discriminant(t)
    if not is_irreducible(t):
        fact = None if disc == 0 else factor_discriminant(t)
        return MonogenicityReport(t, False, False, disc, fact, (), False, None, None)

    fact = factor_discriminant(t)
    verdicts: list[PrimeVerdict] = []
    blocked = False
    for q in fact.primes():
        if blocked:
            verdicts.append(PrimeVerdict.skipped(q))
        else:
            v = prime_index_test(t, q)
            verdicts.append(v)
            blocked = v.divides_index
    return MonogenicityReport(
        trinomial=t,
        irreducible=True,
        c4=is_c4(t),
        disc=disc,
        disc_factored=fact,
        verdicts=tuple(verdicts),
        monogenic=not blocked,
        field_disc=disc if not blocked else None,
        signature=signature(t),
    )


@dataclass(frozen=True)
class StructuralConstraints:
    """Shape constraints that every monogenic cyclic quartic trinomial obeys.

    With e = b^2 - 4d: d is positive and squarefree, d divides b, e >= 2,
    and d and e share the same radical.
    """

    d_positive: bool
    d_squarefree: bool
    d_divides_b: bool
    e_at_least_two: bool
    same_radical: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.d_positive
            and self.d_squarefree
            and self.d_divides_b
            and self.e_at_least_two
            and self.same_radical
        )


def structural_constraints(t: Trinomial) -> StructuralConstraints:
    """Evaluate the five shape constraints on a cyclic quartic trinomial."""
    if not is_c4(t):
        raise ValueError(f"{t} is not a cyclic quartic; constraints do not apply")
    e = t.b * t.b - 4 * t.d
    return StructuralConstraints(
        d_positive=t.d > 0,
        d_squarefree=is_squarefree(t.d),
        d_divides_b=t.b % t.d == 0,
        e_at_least_two=e >= 2,
        same_radical=radical(t.d) == radical(e),
    )

"""Partition monogenic trinomials by the invariants of the fields they cut out.

Two monogenic trinomials generating isomorphic fields must agree on field
discriminant and signature, so differing invariants prove the fields are
distinct.  Matching invariants prove nothing; this module abstains rather
than guess, reporting such pairs as undecided instead of merging them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .monogenic import MonogenicityReport
from .trinomial import Trinomial

__all__ = ["FieldPartition", "distinct_fields"]


@dataclass(frozen=True)
class FieldPartition:
    """Grouping by (field discriminant, signature), first-seen order.

    ``classes`` are pairwise provably non-isomorphic.  ``undecided_pairs``
    lists same-class pairs whose isomorphism these invariants cannot settle.
    """

    classes: tuple[tuple[Trinomial, ...], ...]
    undecided_pairs: tuple[tuple[Trinomial, Trinomial], ...]


def distinct_fields(reports: list[MonogenicityReport]) -> FieldPartition:
    """Split monogenic reports into provably distinct field classes."""
    groups: dict[tuple[int, int, int], list[Trinomial]] = {}
    for r in reports:
        if not r.monogenic:
            raise ValueError(f"{r.trinomial} is not monogenic; it defines no field class here")
        assert r.field_disc is not None and r.signature is not None
        key = (r.field_disc, r.signature.r1, r.signature.r2)
        groups.setdefault(key, []).append(r.trinomial)
    classes = tuple(tuple(members) for members in groups.values())
    undecided = tuple(
        pair for members in groups.values() for pair in itertools.combinations(members, 2)
    )
    return FieldPartition(classes, undecided)

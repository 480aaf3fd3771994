"""Box searches, the exactly-three verification, and engine-vs-oracle sampling.

A search walks a coefficient rectangle, classifies every cell, and streams
one formatted line per surviving item.  Work parallelizes by contiguous
b-strips; because every strip is classified deterministically and strips are
emitted in order, the output stream is byte-identical for any worker count.

Cells that cannot be classified (d = 0, or a discriminant the factorizer
gave up on) become error records rather than aborting the run.  JSON output
carries them inline as ``{"trinomial": ..., "error": ...}`` lines; CSV has
no column for them, so they are dropped from the stream and reported through
the ``on_skip`` callback instead.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .fields import distinct_fields
from .index_criterion import PrimeVerdict, prime_index_test
from .dedekind import dedekind_divides_index
from .intarith import FactorizationIncomplete, primes_upto
from .monogenic import DegenerateTrinomialError, MonogenicityReport, is_monogenic
from .scan import scan_c4_candidates
from .trinomial import Trinomial, discriminant, is_irreducible

__all__ = [
    "CSV_HEADER",
    "Disagreement",
    "OracleCheckResult",
    "SearchError",
    "TheoremVerification",
    "format_item",
    "iter_box",
    "oracle_check",
    "search_lines",
    "verify_theorem",
]

CSV_HEADER = "b,d,irreducible,c4,disc,monogenic,r1,r2,failing_prime"


@dataclass(frozen=True)
class SearchError:
    """A cell the search could not classify; the box walk continues past it."""

    trinomial: Trinomial
    message: str

    def to_dict(self) -> dict:
        return {
            "trinomial": {"b": self.trinomial.b, "d": self.trinomial.d},
            "error": self.message,
        }


def _cell_report(b: int, d: int) -> MonogenicityReport | SearchError:
    t = Trinomial(b, d)
    try:
        return is_monogenic(t)
    except (DegenerateTrinomialError, FactorizationIncomplete) as exc:
        return SearchError(t, str(exc))


def iter_box(
    b_min: int,
    b_max: int,
    d_min: int,
    d_max: int,
    *,
    c4_only: bool = False,
    monogenic_only: bool = False,
) -> Iterator[MonogenicityReport | SearchError]:
    """Classify every cell of the box in (b, d)-ascending order.

    ``c4_only`` restricts to cyclic quartic cells via the fast scan before
    any heavier work; ``monogenic_only`` drops non-monogenic reports.
    Error records always pass through the filters.
    """
    if b_min > b_max or d_min > d_max:
        raise ValueError(f"empty box [{b_min}, {b_max}] x [{d_min}, {d_max}]")
    if c4_only:
        cells: Iterator[tuple[int, int]] = iter(scan_c4_candidates(b_min, b_max, d_min, d_max))
    else:
        cells = ((b, d) for b in range(b_min, b_max + 1) for d in range(d_min, d_max + 1))
    for b, d in cells:
        item = _cell_report(b, d)
        if (
            monogenic_only
            and isinstance(item, MonogenicityReport)
            and not item.monogenic
        ):
            continue
        yield item


def _bool_str(v: bool) -> str:
    return "true" if v else "false"


def format_item(item: MonogenicityReport | SearchError, fmt: str) -> str | None:
    """One output line for an item, or None when the format cannot carry it."""
    if fmt == "json":
        return json.dumps(item.to_dict(), separators=(",", ":"))
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}; expected 'json' or 'csv'")
    if isinstance(item, SearchError):
        return None
    sig = item.signature
    failing = item.failing_prime()
    fields = (
        str(item.trinomial.b),
        str(item.trinomial.d),
        _bool_str(item.irreducible),
        _bool_str(item.c4),
        str(item.disc),
        _bool_str(item.monogenic),
        "" if sig is None else str(sig.r1),
        "" if sig is None else str(sig.r2),
        "" if failing is None else str(failing),
    )
    return ",".join(fields)


def _lines_for_range(
    b_lo: int,
    b_hi: int,
    d_min: int,
    d_max: int,
    c4_only: bool,
    monogenic_only: bool,
    fmt: str,
) -> tuple[list[str], list[str]]:
    lines: list[str] = []
    skips: list[str] = []
    for item in iter_box(
        b_lo, b_hi, d_min, d_max, c4_only=c4_only, monogenic_only=monogenic_only
    ):
        line = format_item(item, fmt)
        if line is None:
            assert isinstance(item, SearchError)
            skips.append(f"b={item.trinomial.b} d={item.trinomial.d}: {item.message}")
        else:
            lines.append(line)
    return lines, skips


def _strip_worker(args: tuple) -> tuple[list[str], list[str]]:
    return _lines_for_range(*args)


def _split_strips(b_min: int, b_max: int, workers: int) -> list[tuple[int, int]]:
    """At most ``workers`` contiguous, non-empty, balanced b-ranges."""
    n = b_max - b_min + 1
    k = min(workers, n)
    base, extra = divmod(n, k)
    strips = []
    lo = b_min
    for i in range(k):
        hi = lo + base - 1 + (1 if i < extra else 0)
        strips.append((lo, hi))
        lo = hi + 1
    return strips


def search_lines(
    b_min: int,
    b_max: int,
    d_min: int,
    d_max: int,
    *,
    c4_only: bool = False,
    monogenic_only: bool = False,
    fmt: str = "json",
    workers: int = 1,
    on_skip: Callable[[str], None] | None = None,
) -> Iterator[str]:
    """Stream formatted lines for a box search; output is worker-count invariant.

    ``on_skip`` receives one message per cell the chosen format had to drop
    (CSV only); leaving it None discards the messages.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if fmt not in ("json", "csv"):
        raise ValueError(f"unknown format {fmt!r}; expected 'json' or 'csv'")
    if b_min > b_max or d_min > d_max:
        raise ValueError(f"empty box [{b_min}, {b_max}] x [{d_min}, {d_max}]")

    if workers == 1:
        for item in iter_box(
            b_min, b_max, d_min, d_max, c4_only=c4_only, monogenic_only=monogenic_only
        ):
            line = format_item(item, fmt)
            if line is None:
                if on_skip is not None:
                    assert isinstance(item, SearchError)
                    on_skip(f"b={item.trinomial.b} d={item.trinomial.d}: {item.message}")
            else:
                yield line
        return

    strips = _split_strips(b_min, b_max, workers)
    args = [(lo, hi, d_min, d_max, c4_only, monogenic_only, fmt) for lo, hi in strips]
    with ProcessPoolExecutor(max_workers=len(strips)) as pool:
        for lines, skips in pool.map(_strip_worker, args):
            if on_skip is not None:
                for msg in skips:
                    on_skip(msg)
            yield from lines


_EXPECTED_MONOGENIC_C4 = (Trinomial(-5, 5), Trinomial(-4, 2), Trinomial(4, 2))


@dataclass(frozen=True)
class TheoremVerification:
    """Outcome of the exactly-three check over one search box."""

    found: tuple[Trinomial, ...]
    passed: bool
    n_classes: int
    n_undecided: int

    def to_dict(self) -> dict:
        return {
            "found": [{"b": t.b, "d": t.d} for t in self.found],
            "pass": self.passed,
            "classes": self.n_classes,
            "undecided_pairs": self.n_undecided,
        }


def verify_theorem(b_bound: int, d_bound: int) -> TheoremVerification:
    """Search |b| <= b_bound, 1 <= d <= d_bound for monogenic cyclic quartics.

    Passes when the monogenic cyclic quartic trinomials found are exactly
    x^4 - 5x^2 + 5, x^4 - 4x^2 + 2, and x^4 + 4x^2 + 2, and their field
    invariants split them into three provably distinct fields.  Bounds must
    be at least 5 so the box can contain all three witnesses.
    """
    if b_bound < 5 or d_bound < 5:
        raise ValueError("bounds below 5 cannot contain the three known witnesses")
    reports = []
    for b, d in scan_c4_candidates(-b_bound, b_bound, 1, d_bound):
        r = is_monogenic(Trinomial(b, d))
        if r.monogenic:
            reports.append(r)
    found = tuple(r.trinomial for r in reports)
    partition = distinct_fields(reports)
    passed = (
        set(found) == set(_EXPECTED_MONOGENIC_C4)
        and len(partition.classes) == 3
        and not partition.undecided_pairs
    )
    return TheoremVerification(
        found=found,
        passed=passed,
        n_classes=len(partition.classes),
        n_undecided=len(partition.undecided_pairs),
    )


@dataclass(frozen=True)
class Disagreement:
    """A prime where the branch engine and the Dedekind oracle split."""

    trinomial: Trinomial
    prime: int
    engine: PrimeVerdict
    oracle_divides: bool

    def to_dict(self) -> dict:
        return {
            "trinomial": {"b": self.trinomial.b, "d": self.trinomial.d},
            "prime": self.prime,
            "engine": self.engine.to_dict(),
            "oracle_divides": self.oracle_divides,
        }


@dataclass(frozen=True)
class OracleCheckResult:
    requested: int
    sampled: int
    agreements: int
    disagreements: tuple[Disagreement, ...]

    def to_dict(self) -> dict:
        return {
            "requested": self.requested,
            "sampled": self.sampled,
            "agreements": self.agreements,
            "disagreements": [d.to_dict() for d in self.disagreements],
        }


def oracle_check(
    samples: int,
    seed: int,
    b_min: int,
    b_max: int,
    d_min: int,
    d_max: int,
    *,
    prime_cap: int = 97,
) -> OracleCheckResult:
    """Compare the branch engine against the Dedekind route on random cells.

    Draws (b, d) uniformly from the box until ``samples`` irreducible
    trinomials are found, then runs both index tests at every prime
    q <= prime_cap dividing the discriminant; agreements count (t, q)
    pairs.  Sampling is seeded and fully reproducible.  Rejection sampling
    gives up once attempts far exceed ``samples``, so a box with few
    usable cells yields fewer samples rather than a hang.
    """
    if samples < 0:
        raise ValueError("samples must be nonnegative")
    if prime_cap < 2:
        raise ValueError("prime_cap must be at least 2")
    if b_min > b_max or d_min > d_max:
        raise ValueError(f"empty box [{b_min}, {b_max}] x [{d_min}, {d_max}]")
    rng = random.Random(seed)
    small_primes = primes_upto(prime_cap)
    sampled = agreements = 0
    disagreements: list[Disagreement] = []
    max_attempts = max(1000, 200 * samples)
    for _ in range(max_attempts):
        if sampled >= samples:
            break
        b = rng.randint(b_min, b_max)
        d = rng.randint(d_min, d_max)
        t = Trinomial(b, d)
        if not is_irreducible(t):
            continue
        sampled += 1
        disc = discriminant(t)
        for q in small_primes:
            if disc % q:
                continue
            engine = prime_index_test(t, q)
            oracle = dedekind_divides_index(t, q)
            if engine.divides_index == oracle:
                agreements += 1
            else:
                disagreements.append(Disagreement(t, q, engine, oracle))
    return OracleCheckResult(samples, sampled, agreements, tuple(disagreements))

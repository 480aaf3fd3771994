#!/usr/bin/env python3
"""Compare the compiled box-scan kernel against the pure-Python fallback.

Both backends sweep the same coefficient rectangle for cyclic quartic
candidates; results are asserted equal before any timing is reported, so a
speedup claim can never hide a divergence.
"""

import argparse
import time

from c4quartic.scan import active_backend, has_compiled_kernel, scan_c4_candidates


def _best_time(backend, box, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = scan_c4_candidates(*box, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--b-bound", type=int, default=100, help="scan |b| up to this")
    parser.add_argument("--d-bound", type=int, default=2500, help="scan 1 <= d up to this")
    parser.add_argument("--repeats", type=int, default=3, help="keep the best of N runs")
    args = parser.parse_args()

    box = (-args.b_bound, args.b_bound, 1, args.d_bound)
    cells = (2 * args.b_bound + 1) * args.d_bound
    print(f"box |b| <= {args.b_bound}, 1 <= d <= {args.d_bound}: {cells:,} cells")
    print(f"default backend: {active_backend()}")

    pure_time, pure_cells = _best_time("pure", box, args.repeats)
    print(f"pure:     {pure_time:8.4f}s  ({cells / pure_time:12,.0f} cells/s)")

    if not has_compiled_kernel():
        print("compiled: unavailable in this build; nothing to compare")
        return

    compiled_time, compiled_cells = _best_time("compiled", box, args.repeats)
    assert compiled_cells == pure_cells, "backends disagree; timing is meaningless"
    print(f"compiled: {compiled_time:8.4f}s  ({cells / compiled_time:12,.0f} cells/s)")
    print(f"speedup:  {pure_time / compiled_time:8.1f}x  ({len(pure_cells)} candidates found)")


if __name__ == "__main__":
    main()

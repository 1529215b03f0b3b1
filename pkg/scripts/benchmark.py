#!/usr/bin/env python3
"""Informational timing harness for polar-profile computations.

The costs of very large parameters (universal polynomials flooding memory
for two-digit ranks, multi-minute runs around 7 x 8) depend entirely on the
host; nothing here gates the test suite.  This script just records what the
current machine does.

Usage:
    python3 scripts/benchmark.py                 # quick default set
    python3 scripts/benchmark.py --max-hb 7      # Hilbert-Burch family up to m
    python3 scripts/benchmark.py --cell 7,8,4    # one explicit (m, n, r)
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from detlinks.polar import compute_polar_profile  # noqa: E402


def fmt_values(values, limit=6):
    shown = ", ".join(str(v) for v in values[:limit])
    return f"({shown}, ...)" if len(values) > limit else f"({shown})"


def run_cell(m, n, r):
    started = time.time()
    prof = compute_polar_profile(m, n, r)
    elapsed = time.time() - started
    print(f"  ({m:2d},{n:2d},{r}) {elapsed:8.2f}s  {fmt_values(prof.values)}")
    return elapsed


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-hb", type=int, default=6,
                        help="largest m of the (m, m+1, m-1) family to time")
    parser.add_argument("--cell", action="append", default=[],
                        help="extra cell m,n,r (repeatable)")
    args = parser.parse_args(argv)

    print("polar-profile timings (informational):")
    total = 0.0
    for m in range(2, args.max_hb + 1):
        total += run_cell(m, m + 1, m - 1)
    for text in args.cell:
        m, n, r = (int(x) for x in text.split(","))
        total += run_cell(m, n, r)
    print(f"total: {total:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())

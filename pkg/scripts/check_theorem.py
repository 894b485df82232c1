#!/usr/bin/env python3
"""Confirm the classification on small carriers, from both directions.

Forward: every disjoint union of abelian groups passes all axioms.
Backward: an exhaustive table search finds nothing else; after dividing
out relabelings, each class decomposes onto exactly one enumerated
structure.  Example:

    python3 scripts/check_theorem.py --max-n 3
    python3 scripts/check_theorem.py --max-n 4 --budget 5000000
"""

from __future__ import annotations

import argparse
import time

from relfrob import cross_validate, enumerate_classical_structures


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=3,
                        help="largest carrier size to search (default 3, max 4)")
    parser.add_argument("--budget", type=int, default=None,
                        help="search node budget, required for n=4")
    args = parser.parse_args()

    all_ok = True
    for n in range(args.max_n + 1):
        budget = args.budget if n == 4 else None
        start = time.perf_counter()
        result = cross_validate(n, budget=budget)
        elapsed = time.perf_counter() - start
        expected = len(enumerate_classical_structures(n))
        status = "ok" if result.ok else "MISMATCH"
        print(f"n={n}: {status}  {result.class_count}/{expected} classes "
              f"({elapsed:.2f}s)")
        for spec, _, size in result.matches:
            print(f"    {spec.label:<24} class size {size:>3}")
        if not result.ok:
            print(f"    {result.message}")
            all_ok = False
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())

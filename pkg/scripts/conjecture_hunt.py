#!/usr/bin/env python3
"""Long-running counterexample hunt for the open pre-composition question.

Draws mappings of order >= 2 and searches for a harmonic outer mapping
whose composition exceeds order l.  A case where every sampled outer stays
within order l is printed as a counterexample candidate together with the
seed that reproduces it.  A clean run is evidence, never a proof.
"""

import argparse
import sys

from polyharm.theorems import run_conjecture_search


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cases", type=int, default=50000)
    parser.add_argument("--l", type=int, nargs="+", default=[3, 4], help="orders to test")
    args = parser.parse_args()

    report = run_conjecture_search(args.seed, args.cases, tuple(args.l))
    print(f"cases: {report.cases_run}")
    print(f"l values: {args.l}")
    print(f"candidates: {report.failures}")
    if report.first_failure is not None:
        print(f"first candidate: {report.first_failure}")
    print("note: sampled evidence only; a clean run decides nothing")
    return 1 if report.failures else 0


if __name__ == "__main__":
    sys.exit(main())

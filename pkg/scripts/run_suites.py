#!/usr/bin/env python3
"""Run every verification suite and print one status line per suite.

Exit code 0 when all suites are clean, 1 otherwise.  Case counts follow
the acceptance defaults but can be scaled with --scale for a quick or a
deep pass.
"""

import argparse
import sys

from polyharm.theorems import run_suite

DEFAULT_CASES = {
    "thm1_suff": 200,
    "thm1_nec": 200,
    "thm2_suff": 200,
    "thm2_nec": 200,
    "thm3": 200,
    "prop21": 500,
    "prop22": 500,
    "conjecture_search": 2000,
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--scale", type=float, default=1.0, help="multiply all case counts")
    args = parser.parse_args()

    dirty = False
    for name, cases in DEFAULT_CASES.items():
        count = max(1, int(cases * args.scale))
        report = run_suite(name, args.seed, count)
        status = "ok" if report.failures == 0 else "FAIL"
        print(f"{name:<20} cases={report.cases_run:<6} failures={report.failures:<4} {status}")
        if report.failures:
            dirty = True
            print(f"  first failure: {report.first_failure}")
    return 1 if dirty else 0


if __name__ == "__main__":
    sys.exit(main())

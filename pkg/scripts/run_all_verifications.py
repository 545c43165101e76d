#!/usr/bin/env python3
"""Run every verification suite and print a one-line summary per suite.

Default scales finish in seconds; --full runs the acceptance scales
(several minutes, dominated by the n=6, d=3 rational sweeps).
"""

import argparse
import sys

from lrcumulants.verify import SUITES, run_suite

FULL_SCALES = {
    "thm49": {"max_n": 6},
    "prop46": {"max_n": 6},
    "lemma48": {"max_n": 6},
    "prop413": {"max_n": 6},
    "cor410": {"max_n": 5},
    "lemma67": {"max_n": 6, "d": 3, "seed": 0},
    "prop610": {"max_n": 6, "d": 3, "seed": 0},
    "thm65": {"max_n": 6, "d": 3, "seed": 0},
    "eq12x": {},
    "eq12y": {},
    "bifree": {"max_n": 4, "d": 2, "seed": 0},
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="acceptance scales")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    all_ok = True
    for name in SUITES:
        params = dict(FULL_SCALES[name]) if args.full else {}
        if "seed" in params:
            params["seed"] = args.seed
        result = run_suite(name, **params)
        all_ok &= result.passed
        status = "pass" if result.passed else "FAIL"
        print(
            f"{status}  {name:<8} instances={result.instances:>9}  "
            f"checks={len(result.checks):>4}  {result.elapsed:7.2f}s"
        )
        if not result.passed:
            for check in result.checks:
                if not check.ok:
                    print(f"      {check.name}: expected {check.expected}, got {check.actual}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())

"""Run the full audit on a chosen seed and corpus size, writing JSON and text reports."""

import argparse
import os
import sys
from pathlib import Path

from rainbowdom.audit import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--random-count", type=int, default=200)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--out", type=Path, default=Path("audit-reports"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    failures = 0
    for seed in args.seeds:
        rep = run_suite(args.suite, seed=seed, jobs=args.jobs, random_count=args.random_count)
        (args.out / f"{args.suite}-seed{seed}.json").write_text(rep.to_json() + "\n")
        (args.out / f"{args.suite}-seed{seed}.txt").write_text(rep.to_text())
        print(f"seed {seed}: {rep.violations} violations")
        failures += rep.violations
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Sweep the full verification battery over a range of p and write one
JSON report per run.

Usage: python scripts/run_observation_sweep.py [--p-min 4] [--p-max 12]
       [--out reports.json]
"""

import argparse
import json
import sys
import time

from hexspan.reuse import run_checks


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--p-min", type=int, default=4)
    ap.add_argument("--p-max", type=int, default=12)
    ap.add_argument("--out", default="observation_reports.json")
    args = ap.parse_args()

    all_reports = []
    t0 = time.time()
    failures = 0
    for p in range(args.p_min, args.p_max + 1):
        for report in run_checks(p):
            all_reports.append(report.to_dict())
            mark = "ok " if report.ok else "FAIL"
            failures += not report.ok
            print(f"[{time.time() - t0:7.1f}s] p={p:<3} {mark} {report.check} "
                  f"{report.params.get('q', report.params.get('stages', ''))}")
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump({"schema": "hexspan/1", "reports": all_reports}, fh, indent=1)
    print(f"\n{len(all_reports)} reports, {failures} failing, written to {args.out}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

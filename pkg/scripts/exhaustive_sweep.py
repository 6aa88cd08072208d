"""Run every core check over all labeled graphs on n vertices and print per-check counts."""

import argparse
import time

from bnspectra.harness import ALL_CHECKS, FAMILY_CHECKS, VerifyConfig, verify_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6, choices=range(1, 7))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--csv", help="also write the per-graph CSV here")
    args = ap.parse_args()

    checks = tuple(c for c in ALL_CHECKS if c not in FAMILY_CHECKS)
    start = time.perf_counter()
    report = verify_corpus(f"all{args.n}", VerifyConfig(checks), workers=args.workers, want_rows=bool(args.csv))
    elapsed = time.perf_counter() - start

    print(f"{report.size} graphs on {args.n} vertices in {elapsed:.1f}s")
    print(f"{'check':<10}{'holds':>8}{'fails':>8}{'n/a':>8}  {'min margin':>14}  witness")
    for name, s in report.summaries.items():
        mm = "" if s.min_margin is None else f"{s.min_margin:.3e}"
        print(f"{name:<10}{s.holds:>8}{s.fails:>8}{s.not_applicable:>8}  {mm:>14}  {s.witness or ''}")
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report.csv_text())


if __name__ == "__main__":
    main()

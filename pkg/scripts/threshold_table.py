"""Edge thresholds for the named graph classes, with the raw (unrounded) values."""

import argparse

from bnspectra.bounds import REMARK24_CONSTANT, THM14_CONSTANT, remark24_constant, thm14_constant
from bnspectra.cli import threshold_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--book-k", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--cycle-k", type=int, nargs="+", default=[4, 5, 6])
    args = ap.parse_args()

    print(f"constants: {thm14_constant():.6f} (rounded {THM14_CONSTANT}), {remark24_constant():.6f} (rounded {REMARK24_CONSTANT})")
    seen = set()
    for bk in args.book_k:
        for ck in args.cycle_k:
            for row in threshold_rows(bk, ck):
                if row.label in seen:
                    continue
                seen.add(row.label)
                print(f"{row.label:<16} c={row.c:<8.4g} omega<={row.omega_cap:<3} {row.raw_threshold:>12.4f} -> {row.edge_threshold}")


if __name__ == "__main__":
    main()

"""Triangle-sparse bounds on fan graphs.

Prints one line per fan: m, t, the top-ell square-sum ratio, and the three
right-hand sides it is compared against.
"""

import argparse

from bnspectra.bounds import (
    FamilyParams,
    check_remark24,
    check_theorem14,
    check_theorem16,
    compute_facts,
)
from bnspectra.generators import fan
from bnspectra.spectral import square_sum


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--nmin", type=int, default=51)
    ap.add_argument("--nmax", type=int, default=502)
    ap.add_argument("--step", type=int, default=50)
    ap.add_argument("--c", type=float, default=0.5)
    ap.add_argument("--eps", type=float, default=0.5)
    ap.add_argument("--k", type=int, default=1)
    args = ap.parse_args()
    fp = FamilyParams(args.eps, args.c)

    print(f"{'n':>5}{'m':>6}{'t':>6}{'L_ell':>10}{'thm14':>10}{'turan':>10}{'L_2':>10}{'thm16':>10}")
    for n in range(args.nmin, args.nmax + 1, args.step):
        f = compute_facts(fan(n))
        v14, v24, v16 = check_theorem14(f, fp, args.k), check_remark24(f, fp), check_theorem16(f, fp)
        ell = min(f.inertia.n_plus, f.omega)
        lell = square_sum(f.spectrum, ell) / f.graph.m
        flag = "" if all(v.holds for v in (v14, v24, v16)) else "  <-- " + ",".join(
            f"{v.name}:{v.status.value}" for v in (v14, v24, v16) if not v.holds
        )
        print(
            f"{n:>5}{f.graph.m:>6}{f.t:>6}{lell:>10.5f}{v14.rhs:>10.5f}{v24.rhs:>10.5f}"
            f"{v16.lhs:>10.5f}{v16.rhs:>10.5f}{flag}"
        )


if __name__ == "__main__":
    main()

"""Print gamma_trk(P_m x P_n) from the DP next to the closed form, if any."""

import argparse

from rainbowdom.grid import GridSpec, closed_form, dp_values


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--n-max", type=int, default=12)
    args = ap.parse_args()
    print(f"{'m':>2} {'k':>2} {'n':>3} {'dp':>5} {'formula':>8}")
    for m in args.m:
        for k in args.k:
            for n, v in enumerate(dp_values(m, k, args.n_max), start=1):
                if v is None:
                    continue
                cf = closed_form(GridSpec(m, n, k))
                mark = "" if cf is None or cf == v else "  MISMATCH"
                print(f"{m:>2} {k:>2} {n:>3} {v:>5} {'-' if cf is None else cf:>8}{mark}")


if __name__ == "__main__":
    main()

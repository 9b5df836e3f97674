"""Tabulate the exact parameters of each extremal family against its bound."""

from rainbowdom.digraph import degrees
from rainbowdom.families import bipartite_kxm, directed_path, remark1, remark2_stars, thm23_lower_stars, thm33_sharp, thm34_sharp_stars
from rainbowdom.solve import gamma, gamma_rk, gamma_t, gamma_trk


def row(name, d, k):
    g, gt = gamma(d).value, gamma_t(d).value
    rk, trk = gamma_rk(d, k).value, gamma_trk(d, k).value
    lb = -(-(k * d.n + 1) // (degrees(d)[0] + k))
    print(f"{name:28} {d.n:>3} {k:>2} {g:>5} {gt:>7} {rk:>8} {trk:>9} {(k + 1) * g:>8} {2 * rk - k + 1:>9} {lb:>7}")


def main():
    print(f"{'family':28} {'n':>3} {'k':>2} {'gamma':>5} {'gamma_t':>7} {'gamma_rk':>8} {'gamma_trk':>9} {'(k+1)g':>8} {'2rk-k+1':>9} {'deg lb':>7}")
    for k in (1, 2, 3):
        row(f"remark2_stars t=2", remark2_stars(2, k), k)
        row(f"thm23_lower_stars t=2", thm23_lower_stars(2, k), k)
        row(f"bipartite_kxm m=3", bipartite_kxm(k, 3), k)
        row(f"thm34_sharp_stars t=2 k'={k + 1}", thm34_sharp_stars(2, k, k + 1), k)
        row(f"remark1 t={k + 1}", remark1(k + 1, k), k)
    for k in (2, 3, 4):
        row("thm33_sharp", thm33_sharp(k), k)
    row("directed_path 3", directed_path(3), 1)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerate the oracle fixtures under data/ with mpmath.

oracle_grid.csv   SOP and PNSC by direct quadrature of the defining
                  integrals (30-digit arithmetic), 20 pinned points.
specfun_grid.csv  E1 = Gamma(0, x) and Whittaker W on the half-integer
                  lattice used by the closed forms.
"""
import argparse
import csv
import math
import pathlib

import mpmath as mp

mp.mp.dps = 30

GAMMA_BAR_SE = mp.mpf(10) ** mp.mpf("0.5")  # 5 dB
D_RE = mp.mpf("1.2")
ETA = 4
VARTHETA = mp.mpf(1) / 11  # Q = 10 dBW, sigma_p^2 = 1 W
N_P = N_E = 3
R_S = 1


def lambda_e(n_ris):
    lam1_sq = GAMMA_BAR_SE * D_RE ** (-ETA)
    return n_ris * lam1_sq + GAMMA_BAR_SE


def cdf_gamma_p(x, phi, n_p):
    return (-mp.expm1(-x / phi)) ** n_p


def pdf_sc(g, we, le, ne):
    s = 0
    for k in range(ne):
        h1 = mp.mpf(k + 1) / we
        u = g * h1 + 1 / le
        s += (-1) ** k * mp.binomial(ne - 1, k) * mp.exp(-g * h1) * (1 + u) / u**2
    return ne / (we * le) * s


def pdf_mrc(g, we, le, ne):
    v = g / we + 1 / le
    s = sum(mp.binomial(ne, k) * mp.factorial(k) / v ** (k + 1) for k in range(ne + 1))
    return g ** (ne - 1) * mp.exp(-g / we) / (mp.gamma(ne) * we**ne * le) * s


def integral(fn, we, le):
    knee = we / le
    return mp.quad(fn, [0, knee, 4 * knee, we, 10 * we, 60 * we, mp.inf])


def grid_rows():
    beta = mp.mpf(2) ** R_S
    alpha = beta - 1
    for n_ris in (20, 50):
        le = lambda_e(n_ris)
        for we_db in (5, 10):
            we = mp.mpf(10) ** (mp.mpf(we_db) / 10)
            for wp_db in (0, 10, 20, 30, 40):
                wp = mp.mpf(10) ** (mp.mpf(wp_db) / 10)
                phi = wp * VARTHETA
                row = [wp_db, we_db, n_ris, le, VARTHETA, R_S, N_P, N_E]
                for kind in ("sop", "pnsc"):
                    for pdf in (pdf_sc, pdf_mrc):
                        if kind == "sop":
                            f = lambda g: cdf_gamma_p(beta * g + alpha, phi, N_P) * pdf(g, we, le, N_E)
                        else:
                            f = lambda g: (1 - cdf_gamma_p(g, phi, N_P)) * pdf(g, we, le, N_E)
                        row.append(integral(f, we, le))
                # columns: sop_sc, sop_mrc, pnsc_sc, pnsc_mrc
                yield row


def whittaker_pairs():
    pairs = set()
    for ne in range(1, 9):
        for k in range(ne + 1):
            pairs.add((-(ne + k), -ne + k + 1))  # twice (kappa, mu)
            for n in range(0, 9):
                pairs.add((-(ne + k + n), -ne + k - n + 1))
    for n in range(0, 9):
        pairs.add((-n - 1, n))
        pairs.add((-n - 2, n - 1))
    return sorted(pairs)


def specfun_rows():
    for x in ("1e-6", "1e-3", "0.1", "0.5", "0.999", "1", "1.001", "2.5", "5", "10", "25", "50", "200"):
        yield ["E1", "", "", x, mp.e1(mp.mpf(x))]
    zs = ("0.001", "0.0125", "0.03", "0.1", "0.5", "1", "2", "5", "10", "20", "50")
    for two_k, two_m in whittaker_pairs():
        for z in zs:
            kap, mu = mp.mpf(two_k) / 2, mp.mpf(two_m) / 2
            yield ["W", str(kap), str(mu), z, mp.whitw(kap, mu, mp.mpf(z))]


def fmt(v):
    return mp.nstr(v, 20, min_fixed=-3, max_fixed=3) if isinstance(v, mp.mpf) else str(v)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "oracle_grid.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["omega_p_db", "omega_e_db", "n_ris", "lambda_e", "vartheta", "r_s", "n_pt", "n_eav",
                    "sop_sc", "sop_mrc", "pnsc_sc", "pnsc_mrc"])
        for r in grid_rows():
            w.writerow([fmt(v) for v in r])
    with open(out / "specfun_grid.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["function", "kappa", "mu", "z", "value"])
        for r in specfun_rows():
            w.writerow([fmt(v) for v in r])


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerate src/zeta/rs_coefficients.inc.

The Riemann-Siegel correction terms C0..C4 are expanded as power series in
x = p - 1/2 from Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) and its
derivatives, then truncated where the tail over |x| <= 1/2 drops below 1e-18.
"""
import sys
from mpmath import mp, mpf, pi, cos, taylor, nstr

mp.dps = 80
ORDER = 70


def psi(p):
    return cos(2 * pi * (p * p - p - mpf(1) / 16)) / cos(2 * pi * p)


def deriv(cs, d):
    out = list(cs)
    for _ in range(d):
        out = [(i + 1) * out[i + 1] for i in range(len(out) - 1)]
    return out


def combine(*pairs):
    n = max(len(cs) for _, cs in pairs)
    r = [mpf(0)] * n
    for w, cs in pairs:
        for i, v in enumerate(cs):
            r[i] += w * v
    return r


def tables():
    c = taylor(psi, mpf(1) / 2, ORDER)
    P = pi
    return [
        c,
        combine((-1 / (96 * P**2), deriv(c, 3))),
        combine((1 / (18432 * P**4), deriv(c, 6)), (1 / (64 * P**2), deriv(c, 2))),
        combine((-1 / (5308416 * P**6), deriv(c, 9)), (-1 / (3840 * P**4), deriv(c, 5)),
                (-1 / (64 * P**2), deriv(c, 1))),
        combine((1 / (2038431744 * P**8), deriv(c, 12)), (11 / (5898240 * P**6), deriv(c, 8)),
                (19 / (24576 * P**4), deriv(c, 4)), (1 / (128 * P**2), c)),
    ]


def truncation(cs):
    n = len(cs)
    while n > 1 and sum(abs(cs[i]) * mpf(0.5)**i for i in range(n - 1, len(cs))) < 1e-18:
        n -= 1
    return n + 1


def main(path):
    with open(path, "w") as f:
        f.write("// Generated by tools/gen_rs_coefficients.py; do not edit.\n")
        for k, cs in enumerate(tables()):
            n = truncation(cs)
            f.write("inline constexpr std::array<double, %d> kC%d{\n" % (n, k))
            for i in range(n):
                v = cs[i] if abs(cs[i]) > 1e-40 else mpf(0)
                f.write("    %s,\n" % (nstr(v, 25) if v != 0 else "0.0"))
            f.write("};\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/zeta/rs_coefficients.inc")

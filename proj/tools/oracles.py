#!/usr/bin/env python3
"""Independent high-precision oracles for the unit tests.

Every value is computed from its definition (quadrature, root finding,
exact integer sums) with mpmath at 50 digits, never from the closed forms
used in the library. The output is a C++ header of frozen constants:

    python3 tools/oracles.py > tests/oracle_values.hpp
"""
from math import comb

import mpmath as mp

mp.mp.dps = 50


def H(t):
    t = mp.mpf(t)
    if t == 0 or t == 1:
        return mp.mpf(0)
    return -t * mp.log(t, 2) - (1 - t) * mp.log(1 - t, 2)


def H_inv(y):
    y = mp.mpf(y)
    lo, hi = mp.mpf(0), mp.mpf("0.5")
    for _ in range(400):
        mid = (lo + hi) / 2
        if H(mid) < y:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def r(x, z):
    x, z = mp.mpf(x), mp.mpf(z)
    return ((1 - 2 * x) + mp.sqrt((1 - 2 * x) ** 2 - 4 * z * (1 - z))) / (2 * (1 - z))


def edge(x):
    return mp.mpf("0.5") - mp.sqrt(mp.mpf(x) * (1 - mp.mpf(x)))


def I_quad(x, y):
    """-1 + integral of log2 r(x, .) over [0, y]."""
    return -1 + mp.quad(lambda z: mp.log(r(x, z), 2), [0, y])


def tau(x, y):
    x, y = mp.mpf(x), mp.mpf(y)
    if y <= edge(x):
        return H(x) + mp.quad(lambda z: mp.log(r(x, z), 2), [0, y])
    return (1 + H(x) - H(y)) / 2


def h(p, x):
    p, x = mp.mpf(p), mp.mpf(x)
    return x ** (1 / p) * (1 - x) ** ((p - 1) / p) + x ** ((p - 1) / p) * (1 - x) ** (1 / p)


def psi(p, x):
    p, x = mp.mpf(p), mp.mpf(x)
    y = mp.findroot(lambda t: h(p, t) - (1 - 2 * x), (mp.mpf("1e-40"), mp.mpf("0.5")), solver="bisect")
    return H(y) - 1 + p * tau(x, y) - p / 2 * H(x)


def pi_fn(x, y):
    return tau(x, y) - (1 + H(x) - H(y)) / 2


def alpha(sigma, eps, x):
    sigma, eps, x = mp.mpf(sigma), mp.mpf(eps), mp.mpf(x)
    if sigma == 0:
        return mp.log(1 - eps, 2)
    return sigma * H(x / sigma) + (1 - sigma) * H(x / (1 - sigma)) + 2 * x * mp.log(eps, 2) + (1 - 2 * x) * mp.log(1 - eps, 2)


def alpha_max(sigma, eps):
    """Golden-section maximisation of the concave alpha over [0, sigma]."""
    sigma = mp.mpf(sigma)
    f = lambda x: alpha(sigma, eps, x)
    lo, hi = mp.mpf(0), sigma
    g = (mp.sqrt(5) - 1) / 2
    for _ in range(400):
        a, b = hi - g * (hi - lo), lo + g * (hi - lo)
        if f(a) < f(b):
            lo = a
        else:
            hi = b
    xs = (lo + hi) / 2
    return xs, f(xs)


def phi(sigma, eps):
    return H(sigma) - 1 + alpha_max(sigma, eps)[1]


def eta_p(p, x, eps):
    p, x, eps = mp.mpf(p), mp.mpf(x), mp.mpf(eps)
    sigma = H_inv(1 - p / (p - 1) * x)
    return phi(sigma, 2 * eps * (1 - eps)) / 2 + x / (p - 1)


def kraw(n, s, i):
    return sum((-1) ** j * comb(i, j) * comb(n - i, s - j) for j in range(s + 1))


def kraw_log2_ratio(n, s, p):
    p = mp.mpf(p)
    m = mp.fsum(comb(n, i) * abs(mp.mpf(kraw(n, s, i))) ** p for i in range(n + 1)) / mp.mpf(2) ** n
    return mp.log(m, 2) - p / 2 * mp.log(comb(n, s), 2)


def phi_big(n, s, p):
    n, s, p = mp.mpf(n), mp.mpf(s), mp.mpf(p)
    y = mp.findroot(lambda t: h(p, t) - (1 - 2 * s / n), (mp.mpf("1e-40"), mp.mpf("0.5")), solver="bisect")
    i0 = y * n
    b = n - 2 * i0
    t = (b + mp.sqrt(b * b - 4 * s * (n - s))) / (2 * (n - s))
    rho = b * t / s - 1
    val = n / (2 * (n - i0)) * (s / n) ** (p / 2) * (1 + (n - s) * t / s) ** p
    return i0, rho, val


def cap_F(x, y, p):
    """y * sup_beta P(rho beta) / (beta + 1)^{p/2}, P(z) = ((sqrt z + 1)^p + |sqrt z - 1|^p) / 2."""
    p = mp.mpf(p)
    rho = (mp.mpf(x) / y) ** (2 / p)
    g = lambda b: ((mp.sqrt(rho * b) + 1) ** p + abs(mp.sqrt(rho * b) - 1) ** p) / 2 / (b + 1) ** (p / 2)
    grid = [mp.mpf(k) / 200 * 40 / rho for k in range(1, 201)]
    b0 = max(grid, key=g)
    b = mp.findroot(lambda t: mp.diff(g, t), b0)
    return y * g(b)


def emit(name, value, digits=17):
    print(f"inline constexpr double {name} = {mp.nstr(value, digits, strip_zeros=False)};")


def main():
    print("// Generated by tools/oracles.py; do not edit.")
    print("#pragma once")
    print()
    print("namespace oracle {")
    emit("kEntropy011", H("0.11"))
    emit("kInverseEntropyHalf", H_inv(mp.mpf("0.5")))
    emit("kLog2Binom1000_500", mp.log(comb(1000, 500), 2))
    emit("kRatioR_01_02", r("0.1", "0.2"))
    emit("kExponentI_01_005", I_quad("0.1", "0.05"))
    emit("kExponentI_02_01", I_quad("0.2", "0.1"))
    emit("kTau_01_005", tau("0.1", "0.05"))
    emit("kTau_03_04", tau("0.3", "0.4"))
    emit("kLittleH_4_01", h(4, "0.1"))
    emit("kPsi_4_025", psi(4, "0.25"))
    emit("kPsi_3_01", psi(3, "0.1"))
    emit("kPsi_6_04", psi(6, "0.4"))
    emit("kPi_01_005", pi_fn("0.1", "0.05"))
    xs, am = alpha_max("0.25", "0.1")
    emit("kXStar_025_01", xs)
    emit("kAlphaMax_025_01", am)
    emit("kPhi_03_02", phi("0.3", "0.2"))
    emit("kUeExponent_05_01", alpha_max(H_inv(mp.mpf("0.5")), "0.1")[1])
    eps = mp.mpf("0.2")
    for tag, step in (("1e6", mp.mpf("1e-6")), ("1e3", mp.mpf("1e-3"))):
        emit(f"kTildePhiSlopeAtZero_{tag}", (phi(H_inv(step), eps) - phi(0, eps)) / step)
    emit("kEta_01_02", eta_p(1 + (1 - 2 * mp.mpf("0.2")) ** 2, "0.1", "0.2"))
    emit("kKrawLog2Ratio_64_16_4", kraw_log2_ratio(64, 16, 4))
    emit("kKrawLog2Ratio_30_7_3", kraw_log2_ratio(30, 7, 3))
    i0, rho, val = phi_big(64, 16, 4)
    emit("kI0_64_16_4", i0)
    emit("kRho_64_16_4", rho)
    emit("kPhiBig_64_16_4", val)
    emit("kCapF_2_1_3", cap_F(2, 1, 3))
    print("}  // namespace oracle")


if __name__ == "__main__":
    main()

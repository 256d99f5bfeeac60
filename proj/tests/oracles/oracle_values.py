"""Independent high-precision oracle for the frozen expected values used in
the C++ tests. Uses mpmath only; nothing here calls the library under test.

Run:  python3 tests/oracles/oracle_values.py
"""
import mpmath as mp

mp.mp.dps = 40


def bisect(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def j0_series(x, terms=60):
    s = mp.mpf(0)
    t = mp.mpf(1)
    for k in range(terms):
        if k > 0:
            t *= -(x * x / 4) / (k * k)
        s += t
    return s


def scan_first_root(f, lo, hi, step):
    a = lo
    fa = f(a)
    while a < hi:
        b = a + step
        fb = f(b)
        if (fa < 0) != (fb < 0):
            return bisect(f, a, b)
        a, fa = b, fb
    raise RuntimeError("no sign change")


def main():
    print("# Bessel point values")
    for x in ["1e-6", "0.5", "1", "2.5", "5", "7.99", "8", "12", "17", "17.5", "30", "100", "1234.5", "1e4"]:
        xv = mp.mpf(x)
        print(f"x={x} J0={mp.nstr(mp.besselj(0, xv), 20)} J1={mp.nstr(mp.besselj(1, xv), 20)} "
              f"Y0={mp.nstr(mp.bessely(0, xv), 20)} Y1={mp.nstr(mp.bessely(1, xv), 20)}")

    z = bisect(j0_series, mp.mpf(2), mp.mpf(3))
    print("first J0 zero (series+bisection):", mp.nstr(z, 20))

    # annulus eigenvalue F(k) = Y0(k rw) J0'(k re) - Y0'(k re) J0(k rw), k = sqrt(lambda)
    def F(k, rw, re):
        return (-mp.bessely(0, k * rw) * mp.besselj(1, k * re)
                + mp.bessely(1, k * re) * mp.besselj(0, k * rw))

    mp.mp.dps = 25
    k0 = scan_first_root(lambda k: F(k, 1, 2), mp.mpf("1e-4"), mp.mpf(40), mp.mpf("1e-4"))
    mp.mp.dps = 40
    k0 = bisect(lambda k: F(k, 1, 2), k0 - mp.mpf("1e-4"), k0 + mp.mpf("1e-4"))
    print("annulus (1,2): k0 =", mp.nstr(k0, 20), " lambda0 =", mp.nstr(k0 * k0, 20))

    # radial PSS radius
    def g_pss(R, d, rw, re):
        return -mp.pi + R * R / (re * re) + mp.pi * rw * rw / (re * re) + 2 * mp.log(d / R)
    for re in [5, 10, 50, 100, 500]:
        R = bisect(lambda r: g_pss(r, 1, mp.mpf("0.1"), re), mp.mpf("0.1"), mp.mpf(1))
        print(f"pss radial re={re}: R0 = {mp.nstr(R, 20)}")
    print("exp(-pi/2) =", mp.nstr(mp.exp(-mp.pi / 2), 20))

    # 1-D BD published equation
    def h_bd(R, d, re, tau, K):
        lam = mp.pi / (2 * re)
        return (mp.sin(lam * R) - mp.sin(lam * d) + lam * d / 2
                - mp.sin(lam * R) / (2 * K) * (mp.exp(-lam * lam * tau) - 1) / tau)
    for re, tau in [(10, "1e-6"), (10, "1e-4"), (10, "1e-8"), (10000, "1e-6")]:
        R = bisect(lambda r: h_bd(r, 1, re, mp.mpf(tau), 1), mp.mpf("1e-12"), mp.mpf(1))
        print(f"bd 1-D published re={re} tau={tau}: R0 = {mp.nstr(R, 20)}")
    print("boxed approx re=10:", mp.nstr(mp.mpf("0.5") / (1 + mp.pi ** 2 / 800), 20))

    # 2-D BD published equation, (rw=0.05, re=50, delta=1)
    rw, re, d = mp.mpf("0.05"), mp.mpf(50), mp.mpf(1)
    mp.mp.dps = 30
    kk = scan_first_root(lambda k: F(k, rw, re), mp.mpf("1e-5"), 40 / re, mp.mpf("1e-5"))
    mp.mp.dps = 40
    kk = bisect(lambda k: F(k, rw, re), kk - mp.mpf("1e-5"), kk + mp.mpf("1e-5"))
    print("annulus (0.05,50): k0 =", mp.nstr(kk, 20), " lambda0 =", mp.nstr(kk * kk, 20))
    a, b = mp.besselj(0, kk * rw), mp.bessely(0, kk * rw)

    def phi(r):
        return a * mp.bessely(0, kk * r) - b * mp.besselj(0, kk * r)

    def g_bd(R):
        return phi(R) - phi(d) + 2 / mp.pi * mp.log(d / R)
    mp.mp.dps = 20
    n = 100000
    prev_r = rw + (d - rw) / n
    prev = g_bd(prev_r)
    roots = []
    for i in range(2, n):
        r = rw + (d - rw) * i / n
        v = g_bd(r)
        if (v < 0) != (prev < 0):
            roots.append((prev_r, r))
        prev_r, prev = r, v
    mp.mp.dps = 40
    print("bd radial published sign changes:", len(roots))
    for lo, hi in roots:
        print("  root:", mp.nstr(bisect(g_bd, mp.mpf(lo), mp.mpf(hi)), 20))
    print("  g_bd samples:", [mp.nstr(g_bd(mp.mpf(r)), 8) for r in ["0.06", "0.1", "0.2", "0.5", "0.9", "0.99"]])

    # Balance-consistent variant (K = C0 = 1, tau = 1e-6).
    tau = mp.mpf("1e-6")

    def dphi(r):
        return kk * (-a * mp.bessely(1, kk * r) + b * mp.besselj(1, kk * r))

    def g_mb(R):
        return (phi(R) - phi(d) + mp.pi * rw * dphi(rw) / 2
                + d ** 2 / 4 * phi(R) * mp.expm1(-kk * kk * tau) / tau)
    print("bd radial balance root:", mp.nstr(bisect(g_mb, rw * (1 + mp.mpf("1e-9")), d * (1 - mp.mpf("1e-8"))), 20))


main()

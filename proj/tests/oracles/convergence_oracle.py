"""Independent oracle for the convergence tables (mpmath + Python fractions)."""
from fractions import Fraction as F
import mpmath as mp
import sys


def q_gamma_fast(a1, a2, b, n):
    a1, a2, b = F(a1), F(a2), F(b)
    d = a1 - a2
    up = [F(1)]          # C(n+d, k)
    for k in range(n):
        up.append(up[-1] * (n + d - k) / (k + 1))
    lo = [F(1)]          # C(n-d, j)
    for j in range(n):
        lo.append(lo[-1] * (n - d - j) / (j + 1))
    poch = F(1)
    for i in range(n):
        poch *= a2 + 1 + i
    total = F(0)
    for k in range(n + 1):
        total += up[k] * lo[n - k] * poch * b ** (n - k)
        poch *= a2 + 1 + n + k
    return total


def psi_pq(a, b, n):
    a, b = F(a), F(b)
    Ha = [F(0)]
    for k in range(1, 2 * n + 1):
        Ha.append(Ha[-1] + F(1) / (k + a))
    H = [F(0)]
    for k in range(1, n + 1):
        H.append(H[-1] + F(1, k))
    c = [F(1)]
    for k in range(n):
        c.append(c[-1] * (n - k) / (k + 1))
    poch = F(1)
    for i in range(n):
        poch *= a + 1 + i
    p = q = F(0)
    for k in range(n + 1):
        t = c[k] ** 2 * poch * b ** (n - k)
        q += t
        p += t * (Ha[n + k] + 2 * H[n - k] - 2 * H[k])
        poch *= a + 1 + n + k
    return p, q


mp.mp.dps = 80


def mpq(v):
    v = F(v)
    return mp.mpf(v.numerator) / v.denominator


def c2(a1, a2, b):
    a1, a2, b = mpq(a1), mpq(a2), mpq(b)
    return 2 ** ((a1 + a2) / 2 - mp.mpf(3) / 4) / (b ** (mp.mpf(1) / 4 + (a1 - a2) / 2) * mp.exp(3 * b / 8) * mp.sqrt(mp.pi) * mp.gamma(a2 + 1))


def ratio(a1, a2, b):
    a1, a2, b = mpq(a1), mpq(a2), mpq(b)
    return 2 * mp.sin(mp.pi * (a2 - a1)) * mp.gamma(a2 + 1) / (b ** (a2 - a1) * mp.gamma(a1 + 1))


def fq(x):
    return mp.mpf(x.numerator) / x.denominator


if __name__ == "__main__":
    ns = [64, 128, 256, 512]
    print("c2(0,0,1)", c2(0, 0, 1), 1 / (mp.sqrt(mp.pi) * (4 * mp.e) ** (mp.mpf(3) / 8)))
    print("ratio cor1", ratio(F(-2, 3), F(-1, 2), 1), mp.sqrt(mp.pi) / mp.gamma(mp.mpf(1) / 3))
    print("ratio cor2", ratio(F(-3, 4), F(-1, 2), 1), mp.sqrt(2 * mp.pi) / mp.gamma(mp.mpf(1) / 4))
    lf_const = 2 * mp.sqrt(mp.pi) / (4 * mp.e) ** (mp.mpf(3) / 8)
    g = mp.euler
    for n in ns + [800]:
        p, q = psi_pq(0, 1, n)
        qf = fq(q)
        err = fq(p / q) - g
        norm = err * mp.exp(2 * mp.sqrt(2 * n))
        fact = mp.factorial(2 * n)
        lf = qf * err * mp.exp(mp.sqrt(2 * n)) * mp.mpf(n) ** 0.25 / fact
        gr = qf / (fact * mp.exp(mp.sqrt(2 * n)) * mp.mpf(n) ** -0.25)
        print("euler n", n, "norm/2pi", mp.nstr(norm / (2 * mp.pi), 12), "lf dev", mp.nstr(lf / lf_const - 1, 8),
              "growth dev", mp.nstr(gr / c2(0, 0, 1) - 1, 8))
        sys.stdout.flush()
    for n in ns:
        p = q_gamma_fast(F(-1, 2), F(-2, 3), 1, n)
        q = q_gamma_fast(F(-2, 3), F(-1, 2), 1, n)
        target = mp.gamma(0.5) / mp.gamma(mp.mpf(1) / 3)
        err = target - fq(p / q)
        norm = err * mp.exp(2 * mp.sqrt(2 * n))
        gr = fq(q) / (mp.factorial(2 * n) * mp.exp(mp.sqrt(2 * n)) * mp.mpf(n) ** (mp.mpf(-7) / 12 - 0.25))
        print("cor1 n", n, "norm/ratio", mp.nstr(norm / ratio(F(-2, 3), F(-1, 2), 1), 12),
              "growth dev", mp.nstr(gr / c2(F(-2, 3), F(-1, 2), 1) - 1, 8))
    for n in ns:
        p, q = psi_pq(F(1, 2), 2, n)
        err = fq(p / q) - (mp.log(2) - mp.digamma(1.5))
        print("psi(1/2,2) n", n, "norm/2pi", mp.nstr(err * mp.exp(2 * mp.sqrt(4 * n)) / (2 * mp.pi), 12))
    a = F(1, 5)
    for n in ns[:3]:
        p = q_gamma_fast(a, 0, 1, n)
        q = q_gamma_fast(0, a, 1, n)
        err = mp.gamma(mp.mpf(6) / 5) - fq(p / q)
        print("cor3 n", n, "norm", mp.nstr(err * mp.exp(2 * mp.sqrt(2 * n)), 12), "limit", 2 * mp.pi / 5 / mp.gamma(mp.mpf(4) / 5),
              "ratio()", ratio(0, a, 1))
    for n in [50, 200, 800]:
        q = q_gamma_fast(F(-2, 3), F(-1, 2), 1, n)
        gr = fq(q) / (mp.factorial(2 * n) * mp.exp(mp.sqrt(2 * n)) * mp.mpf(n) ** (mp.mpf(-7) / 12 - 0.25))
        print("growth cor1 n", n, mp.nstr(gr / c2(F(-2, 3), F(-1, 2), 1) - 1, 8))

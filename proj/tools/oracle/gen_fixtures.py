#!/usr/bin/env python3
"""Extended-precision reference values for the fixture corpus.

Each record is one tab-separated line:
    name  params-json  re  im  tol
Parameters are written as JSON doubles; the oracle evaluates at exactly those
doubles, so the C++ side sees the same inputs bit for bit.
"""

import argparse
import json
import math
import sys
import time
from pathlib import Path

import mpmath as mp

DPS = 40
DIGITS = 34


def c(z):
    if isinstance(z, (mp.mpc, mp.mpf)):
        return mp.mpc(z)
    return mp.mpc(complex(z).real, complex(z).imag)


def cj(z):
    z = complex(z)
    return [z.real, z.imag]


def record(name, params, value, tol):
    v = mp.mpc(value)
    return "\t".join([name, json.dumps(params, separators=(",", ":")), mp.nstr(v.real, DIGITS),
                      mp.nstr(v.imag, DIGITS), repr(tol)])


def nterms(q):
    a = abs(q)
    return int(math.ceil((DPS + 5) / -math.log10(float(a)))) + 2 if a > 0 else 1


# ---- products and theta functions

def qpoch(x, q):
    x, q = c(x), c(q)
    out, pw = mp.mpc(1), x
    for _ in range(nterms(q) + 10):
        out *= 1 - pw
        pw *= q
    return out


def theta4(z, p):
    z, p = c(z), c(p)
    e, ei = mp.exp(2j * z), mp.exp(-2j * z)
    out = qpoch(p * p, p * p)
    pw = p
    for _ in range(nterms(p * p) + 10):
        out *= (1 - e * pw) * (1 - ei * pw)
        pw *= p * p
    return out


def theta_small(z, sigma):
    p = mp.exp(2j * mp.pi * c(sigma))
    x = mp.exp(2j * mp.pi * c(z))
    return qpoch(x, p) * qpoch(p / x, p)


def double_product(x, a, b):
    """prod_{j,k >= 0} (1 - x a^j b^k)"""
    out = mp.mpc(1)
    xa = x
    for _ in range(nterms(a) + 10):
        out *= qpoch(xa, b)
        xa *= a
    return out


# ---- Bernoulli polynomials and the R polynomials

def b33(z, w1, w2, w3):
    p = w1 * w2 * w3
    s1 = w1 + w2 + w3
    s2 = w1 * w2 + w2 * w3 + w3 * w1
    return (z**3 / p - 3 * s1 * z**2 / (2 * p) + (w1**2 + w2**2 + w3**2 + 3 * s2) * z / (2 * p)
            - s1 * s2 / (4 * p))


def b22(z, w1, w2):
    p = w1 * w2
    return z * z / p - (w1 + w2) * z / p + (w1 * w1 + w2 * w2 + 3 * p) / (6 * p)


def poly_R(z, s, t):
    return (b33(z, s, t, -1) + b33(z - 1, s, t, -1)) / 12


def R2_def(z, m, s, t, r):
    return poly_R(z + m * s, r * s, s + t) + poly_R(z + (r - m) * t, r * t, s + t)


def R2(z, m, s, t, r):
    z, s, t = c(z), c(s), c(t)
    m, r = mp.mpf(m), mp.mpf(r)
    return ((s + t - 2 * z) * (2 * z * z - 2 * z * (s + t) + s * t * (r * r + 6 * (m - r) * m) + 1) / (24 * r * s * t)
            - (s - t) * (2 * m - r) * (m - r) * m / (12 * r))


def R2_half(m, r):
    m, r = mp.mpf(m), mp.mpf(r)
    return -(2 * m - r) * (m - r) * m / (12 * r)


# ---- elliptic gamma functions

def egf_phi(z, p, q):
    z, p, q = c(z), c(p), c(q)
    pq = p * q
    return double_product(mp.exp(2j * z) * pq, p * p, q * q) / double_product(mp.exp(-2j * z) * pq, p * p, q * q)


def legf_phi(z, m, r, sigma, tau):
    """Phi_{r,m}(z) with p = e^{i pi sigma}, q = e^{i pi tau}."""
    sigma, tau = c(sigma), c(tau)
    p, q = mp.exp(1j * mp.pi * sigma), mp.exp(1j * mp.pi * tau)
    h = mp.mpf(r) / 2 - (m % r)
    return egf_phi(c(z) + h * mp.pi * sigma, p * q, p**r) * egf_phi(c(z) - h * mp.pi * tau, p * q, q**r)


def gamma_e1(z, s, t):
    z, s, t = c(z), c(s), c(t)
    P, Q = mp.exp(2j * mp.pi * s), mp.exp(2j * mp.pi * t)
    x = mp.exp(2j * mp.pi * z)
    return double_product(P * Q / x, P, Q) / double_product(x, P, Q)


def gamma_e_little(z, m, r, sigma, tau):
    s = c(sigma) + c(tau)
    return gamma_e1(c(z) + m * c(sigma), r * c(sigma), s) * gamma_e1(c(z) + (r - m) * c(tau), r * c(tau), s)


def lens_gamma_e(z, m, r, sigma, tau):
    M = m % r
    phase = 2j * mp.pi * (R2(z, 0, sigma, tau, r) + R2_half(M, r) - R2(z, M, sigma, tau, r))
    return mp.exp(phase) * gamma_e_little(z, M, r, sigma, tau)


def kappa_e(alpha, r, sigma, tau):
    alpha = c(alpha)
    p, q = mp.exp(1j * mp.pi * c(sigma)), mp.exp(1j * mp.pi * c(tau))
    pq = p * q
    total = mp.mpc(0)
    n = 1
    while True:
        term = mp.mpc(0)
        for k in (n, -n):
            num = mp.exp(4 * alpha * k) * (pq**(r * k) - pq**(-r * k))
            den = k * (pq**(2 * k) - pq**(-2 * k)) * (p**(r * k) - p**(-r * k)) * (q**(r * k) - q**(-r * k))
            term += num / den
        total += term
        if n > 5 and abs(term) < mp.mpf(10)**(-DPS - 3):
            break
        n += 1
    return mp.exp(total)


# ---- hyperbolic functions from their integral definitions

def kernel_integral(f):
    """int_0^inf f(x) dx for an integrand regular at 0 and exponentially decaying."""
    head = mp.quad(f, mp.linspace(0, 1, 5), method="gauss-legendre")
    tail = mp.quad(f, [1, 2, 4, 8, 16, 32, 64, mp.inf])
    return head + tail


def phi_rm_integral(z, m, r, w1, w2):
    z, w1, w2 = c(z), c(w1), c(w2)
    eta = (w1 + w2) / 2
    h = mp.mpf(r) / 2 - (m % r)

    def f(x):
        if x == 0:
            return mp.mpc(0)
        return (1j * z / (w1 * w2 * r * x)
                - mp.sinh(2 * x * (1j * z - h * w1)) / (2 * mp.sinh(w1 * r * x) * mp.sinh(2 * eta * x))
                - mp.sinh(2 * x * (1j * z + h * w2)) / (2 * mp.sinh(w2 * r * x) * mp.sinh(2 * eta * x))) / x

    return mp.exp(kernel_integral(f))


def phi_rm_product(z, m, r, w1, w2):
    z, w1, w2 = c(z), c(w1), c(w2)
    eta = (w1 + w2) / 2
    M = m % r
    om = mp.exp(1j * mp.pi / r)
    q = mp.exp(1j * mp.pi * w1 / (w2 * r))
    qt = mp.exp(-1j * mp.pi * w2 / (w1 * r))
    B = b22(1j * z + w1 * M + eta, r * w1, 2 * eta) + b22(1j * z + w2 * (r - M) + eta, r * w2, 2 * eta)
    out = mp.exp(1j * mp.pi / 2 * B)
    for j in range(r):
        out *= qpoch(mp.exp(2 * mp.pi * (z + 1j * w2 * M) / (w2 * r)) * (q * om)**(2 * j + 1), q**(2 * r))
        out /= qpoch(mp.exp(2 * mp.pi * (z - 1j * w1 * M) / (w1 * r)) * (qt / om)**(2 * j + 1), qt**(2 * r))
    return out


def kappa_h_integral(alpha, r, w1, w2):
    alpha, w1, w2 = c(alpha), c(w1), c(w2)
    eta = (w1 + w2) / 2

    def f(x):
        if x == 0:
            return mp.mpc(0)
        return (-alpha / (r * w1 * w2 * x)
                + mp.sinh(4 * alpha * x) * mp.sinh(2 * r * eta * x)
                / (2 * mp.sinh(w1 * r * x) * mp.sinh(w2 * r * x) * mp.sinh(4 * eta * x))) / x

    return mp.exp(kernel_integral(f))


def gamma_h1_integral(z, w1, w2):
    z, w1, w2 = c(z), c(w1), c(w2)
    v = 2 * z - w1 - w2

    def f(x):
        if x == 0:
            return mp.mpc(0)
        return (v / (mp.pi * w1 * w2 * x) - mp.sin(mp.pi * v * x) / (mp.sin(mp.pi * w1 * x) * mp.sin(mp.pi * w2 * x))) / x

    return mp.exp(0.5j * kernel_integral(f))


def lens_gamma_h_factors(z, m, r, W1, W2):
    """Gamma_h(z, m) with Im(W) > 0 through the two Gamma_{h,1} factors."""
    W1, W2, z = c(W1), c(W2), c(z)
    M = m % r
    g = gamma_h1_integral(z + W1 * M, r * W1, W1 + W2) * gamma_h1_integral(z + W2 * (r - M), r * W2, W1 + W2)
    return mp.exp(2j * mp.pi * R2_half(M, r)) * g


def lens_gamma_h_phi(z, m, r, W1, W2):
    """Gamma_h(z, m) with Im(W) > 0 through phi_{r,m}; product form when it converges."""
    W1, W2, z = c(W1), c(W2), c(z)
    M = m % r
    phi = phi_rm_product if mp.im(W1 / W2) > 0 else phi_rm_integral
    return mp.exp(2j * mp.pi * R2_half(M, r)) * phi(-z + (W1 + W2) / 2, M, r, -1j * W1, -1j * W2)


# ---- identities

def lambda_e(r, sigma, tau):
    P, Q = mp.exp(2j * mp.pi * r * c(sigma)), mp.exp(2j * mp.pi * r * c(tau))
    return qpoch(P, P) * qpoch(Q, Q) / 2


def eps_y(y, r):
    return 1 if y == 0 or 2 * y == r else 2


def elliptic_integrand(z, y, t, u, r, sigma, tau):
    G = lambda x, m: lens_gamma_e(x, m, r, sigma, tau)
    try:
        v = 1 / (G(2 * z, 2 * y) * G(-2 * z, -2 * y))
    except ZeroDivisionError:
        return mp.mpc(0)  # the denominator has a pole here
    for ti, ui in zip(t, u):
        v *= G(c(ti) + z, ui + y) * G(c(ti) - z, ui - y)
    return v


def trapezoid(f, a, n, even):
    # periodic rule on a + k/n; an even integrand needs only half the nodes
    if not even:
        return sum(f(a + mp.mpf(k) / n) for k in range(n)) / n
    vals = {}
    total = mp.mpc(0)
    for k in range(n):
        j = min(k, (-k - 2 * int(a * n)) % n)
        if j not in vals:
            vals[j] = f(a + mp.mpf(j) / n)
        total += vals[j]
    return total / n


def elliptic_sum_integral(t, u, r, sigma, tau, folded, n):
    ys = range(r // 2 + 1) if folded else range(r)
    a = mp.mpf(-0.5) if folded else mp.mpf(0)
    total = mp.mpc(0)
    for y in ys:
        w = eps_y(y, r) if folded else 1
        total += w * trapezoid(lambda z: elliptic_integrand(z, y, t, u, r, sigma, tau), a, n, y == 0)
    return lambda_e(r, sigma, tau) * total


def converged(f, n1, n2, rel):
    a, b = f(n1), f(n2)
    err = abs(a - b) / abs(b)
    if err > rel:
        raise RuntimeError("oracle quadrature did not settle: %s" % mp.nstr(err, 5))
    return b


def elliptic_pairs(t, u, r, sigma, tau, idx):
    v = mp.mpc(1)
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            v *= lens_gamma_e(c(t[i]) + c(t[j]), u[i] + u[j], r, sigma, tau)
    return v


def hyperbolic_integrand(z, y, t, u, r, W1, W2):
    G = lambda x, m: lens_gamma_h_phi(x, m, r, W1, W2)
    v = 1 / (G(2 * z, 2 * y) * G(-2 * z, -2 * y))
    for ti, ui in zip(t, u):
        v *= G(c(ti) + z, ui + y) * G(c(ti) - z, ui - y)
    return v


def line_trapezoid(f, h, cutoff, even):
    n = int(mp.ceil(cutoff / h))
    if even:
        return h * (f(mp.mpf(0)) + 2 * sum(f(k * h) for k in range(1, n + 1)))
    return h * sum(f(k * h) for k in range(-n, n + 1))


def hyperbolic_lhs(t, u, r, W1, W2, cutoff, h):
    total = mp.mpc(0)
    for y in range(r // 2 + 1):
        f = lambda z: hyperbolic_integrand(z, y, t, u, r, W1, W2)
        edge = max(abs(f(mp.mpf(cutoff))), abs(f(-mp.mpf(cutoff))))
        if edge > mp.mpf(10)**-45:
            raise RuntimeError("hyperbolic integrand not negligible at the cutoff: %s" % mp.nstr(edge, 5))
        total += eps_y(y, r) * line_trapezoid(f, h, cutoff, y == 0)
    return total / (2 * r * mp.sqrt(-c(W1) * c(W2)))


def hyperbolic_rhs(t, u, r, W1, W2):
    v = mp.mpc(1)
    for i in range(6):
        for j in range(i + 1, 6):
            v *= lens_gamma_h_phi(c(t[i]) + c(t[j]), u[i] + u[j], r, W1, W2)
    return v


def dyadic(z):
    # multiples of 1/1024, so the balancing sums below are exact in binary
    z = complex(z)
    return complex(round(z.real * 1024) / 1024, round(z.imag * 1024) / 1024)


def balanced(parts, target):
    parts = [dyadic(x) for x in parts]
    last = dyadic(target) - sum(parts)
    assert sum(parts) + last == dyadic(target)
    return parts + [last]


# ---- the corpus

def special_records(check):
    out = []
    add = lambda name, params, value, tol: out.append(record(name, params, value, tol))

    for x, q in [(0.5, 0.25), (0.5, 0.5), (0.3 + 0.2j, 0.4j)]:
        add("q-pochhammer", {"x": cj(x), "q": cj(q)}, qpoch(x, q), 1e-14)
    for z, p in [(0.0, 0.3), (0.2 + 0.1j, 0.25 + 0.1j)]:
        add("theta4", {"z": cj(z), "p": cj(p)}, theta4(z, p), 1e-14)
    add("theta", {"z": cj(0.13 + 0.07j), "sigma": cj(0.4j)}, theta_small(0.13 + 0.07j, 0.4j), 1e-14)

    for z, m, s, t, r in [(0.0, 0, 0.3j, 0.4j, 1), (0.1 + 0.2j, 1, 0.05 + 0.3j, -0.02 + 0.35j, 3)]:
        v = R2(z, m, s, t, r)
        check(v, R2_def(c(z), m, c(s), c(t), r), "R2 closed form")
        add("r2", {"z": cj(z), "m": m, "sigma": cj(s), "tau": cj(t), "r_hat": r}, v, 1e-14)

    add("elliptic-gamma-phi", {"z": cj(0.2 + 0.1j), "p": cj(0.15), "q": cj(0.2)}, egf_phi(0.2 + 0.1j, 0.15, 0.2), 1e-13)
    s3 = (0.05 + 0.4j, -0.03 + 0.35j)
    for z, m, r in [(0.3, 1, 2), (0.1 - 0.2j, 2, 3)]:
        add("lens-elliptic-gamma-phi", {"z": cj(z), "m": m, "r": r, "sigma": cj(s3[0]), "tau": cj(s3[1])},
            legf_phi(z, m, r, *s3), 1e-13)

    add("elliptic-gamma", {"z": cj(0.1 + 0.05j), "sigma": cj(0.3j), "tau": cj(0.02 + 0.25j)},
        gamma_e1(0.1 + 0.05j, 0.3j, 0.02 + 0.25j), 1e-13)
    ab = (0.02 + 0.2561j, -0.01 + 0.2561j)
    for z, m, r in [(0.1 + 0.05j, 1, 2), (-0.2 + 0.08j, 2, 3), (0.15 + 0.1j, -1, 3)]:
        v = lens_gamma_e(z, m, r, *ab)
        # bridge to the e^{i pi sigma} product at the same sigma, tau
        M = m % r
        zp = mp.pi * ((c(ab[0]) + c(ab[1])) / 2 - c(z))
        phase = 2j * mp.pi * (R2(z, 0, ab[0], ab[1], r) + R2_half(M, r) - R2(z, M, ab[0], ab[1], r))
        check(v, mp.exp(phase) * legf_phi(zp, m, r, *ab), "Gamma_e vs Phi_{r,m}")
        add("lens-elliptic-gamma", {"z": cj(z), "m": m, "r": r, "sigma": cj(ab[0]), "tau": cj(ab[1])}, v, 1e-13)

    im = math.log(5.0) / math.pi
    for alpha_frac, r, sig in [(0.1, 2, (im * 1j, im * 1j)), (0.3 + 0.1j, 3, (0.02 + im * 1j, -0.02 + im * 1j))]:
        eta = -1j * math.pi * (sig[0] + sig[1]) / 2
        alpha = alpha_frac * eta
        add("kappa-e", {"alpha": cj(alpha), "r": r, "sigma": cj(sig[0]), "tau": cj(sig[1])},
            kappa_e(alpha, r, *sig), 1e-13)

    for z, m, r, w1, w2 in [(0.3, 1, 2, 1.0, 1.0), (0.3, 0, 1, 1.0, 1.0),
                            (0.2 + 0.3j, 2, 3, 1 + 0.3j, 0.8 - 0.2j), (-0.4 - 0.5j, 1, 4, 0.9 + 0.25j, 1.1 - 0.1j)]:
        v = phi_rm_integral(z, m, r, w1, w2)
        if (complex(w1) / complex(w2)).imag > 0:
            check(v, phi_rm_product(z, m, r, w1, w2), "phi integral vs product")
        add("phi-rm", {"z": cj(z), "m": m, "r": r, "omega1": cj(w1), "omega2": cj(w2)}, v, 1e-12)

    for alpha, r, w1, w2 in [(0.1 + 0.05j, 2, 1 + 0.2j, 1 - 0.1j), (0.2, 3, 1.0, 1.0), (0.3 - 0.1j, 1, 0.9 + 0.4j, 1.1 - 0.3j)]:
        v = kappa_h_integral(alpha, r, w1, w2)
        eta = (c(w1) + c(w2)) / 2
        al = c(alpha)
        check(kappa_h_integral(eta - alpha, r, w1, w2) / v, phi_rm_integral(1j * (eta - 2 * al), 0, r, w1, w2),
              "kappa^h crossing")
        add("kappa-h", {"alpha": cj(alpha), "r": r, "omega1": cj(w1), "omega2": cj(w2)}, v, 1e-12)

    for z, w1, w2 in [(0.3 + 0.5j, 1j, 1j), (0.2 + 0.7j, 0.3 + 1.1j, -0.2 + 0.8j)]:
        add("hyperbolic-gamma", {"z": cj(z), "omega1": cj(w1), "omega2": cj(w2)}, gamma_h1_integral(z, w1, w2), 1e-12)

    for z, m, r, W1, W2 in [(0.2 + 0.3j, 1, 3, 0.1 + 1.0j, -0.05 + 0.9j), (-0.3 + 0.4j, 1, 2, 0.1 + 1.0j, -0.05 + 0.9j)]:
        v = lens_gamma_h_factors(z, m, r, W1, W2)
        check(v, lens_gamma_h_phi(z, m, r, W1, W2), "Gamma_h factors vs phi")
        add("lens-hyperbolic-gamma", {"z": cj(z), "m": m, "r": r, "omega1": cj(W1), "omega2": cj(W2)}, v, 1e-12)
    return out


def identity_records(check):
    out = []
    add = lambda name, params, value, tol: out.append(record(name, params, value, tol))
    sigma, tau = dyadic(0.02 + 0.2561j), dyadic(-0.01 + 0.2561j)
    S = sigma + tau
    t = balanced([0.11 + 0.085j, -0.07 + 0.08j, 0.2 + 0.09j, 0.03 + 0.086j, -0.15 + 0.084j], S)
    for r, u in [(1, [0] * 6), (2, [1, -1, 0, 0, 1, -1])]:
        base = {"r": r, "sigma": cj(sigma), "tau": cj(tau), "t": [cj(x) for x in t], "u": u}
        z0 = 0.1
        add("elliptic-beta-integrand", dict(base, z=z0, y=0),
            elliptic_integrand(mp.mpf(z0), 0, t, u, r, sigma, tau), 1e-12)
        rhs = elliptic_pairs(t, u, r, sigma, tau, list(range(6)))
        lhs = converged(lambda n: elliptic_sum_integral(t, u, r, sigma, tau, True, n), 176, 224, 1e-32)
        check(lhs, rhs, "elliptic beta identity r=%d" % r)
        add("elliptic-beta-lhs", base, lhs, 1e-10)
        add("elliptic-beta-rhs", base, rhs, 1e-12)

    # V at a u = 0 point and at its E7 image
    t8 = balanced([0.12 + 0.11j, -0.05 + 0.12j, 0.08 + 0.13j, -0.1 + 0.14j, 0.15 + 0.13j, 0.02 + 0.12j, -0.09 + 0.14j],
                  2 * S)
    eps = (S - sum(t8[:4])) / 2
    tt = [x + eps for x in t8[:4]] + [x - eps for x in t8[4:]]
    for tv in (t8, tt):
        v = converged(lambda n: elliptic_sum_integral(tv, [0] * 8, 1, sigma, tau, False, n), 176, 224, 1e-32)
        add("v-function", {"r": 1, "sigma": cj(sigma), "tau": cj(tau), "t": [cj(x) for x in tv], "u": [0] * 8}, v,
            1e-10)
        if tv is t8:
            v_t = v
        else:
            v_tt = v
    pre = elliptic_pairs(t8, [0] * 8, 1, sigma, tau, [0, 1, 2, 3]) * elliptic_pairs(t8, [0] * 8, 1, sigma, tau,
                                                                                      [4, 5, 6, 7])
    check(v_t, v_tt * pre, "E7 reflection")

    W1, W2 = dyadic(-0.1 + 0.9j), dyadic(0.2 + 1.0j)
    T = W1 + W2
    th = balanced([0.3 + 0.3j, -0.2 + 0.31j, 0.5 + 0.32j, -0.45 + 0.3j, 0.1 + 0.33j], T)
    for r, u in [(1, [0] * 6), (2, [1, -1, 0, 0, 1, -1])]:
        base = {"r": r, "omega1": cj(W1), "omega2": cj(W2), "t": [cj(x) for x in th], "u": u}
        add("hyperbolic-beta-integrand", dict(base, z=0.3, y=0),
            hyperbolic_integrand(mp.mpf(0.3), 0, th, u, r, W1, W2), 1e-11)
        rhs = hyperbolic_rhs(th, u, r, W1, W2)
        lhs = converged(lambda h: hyperbolic_lhs(th, u, r, W1, W2, 18, h), mp.mpf(1) / 48, mp.mpf(1) / 56, 1e-32)
        check(lhs, rhs, "hyperbolic beta identity r=%d" % r)
        add("hyperbolic-beta-lhs", base, lhs, 1e-8)
        add("hyperbolic-beta-rhs", base, rhs, 1e-11)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[2] / "fixtures"))
    ap.add_argument("--only", choices=["special", "identities"], default=None)
    args = ap.parse_args()
    mp.mp.dps = DPS

    worst = {}

    def check(a, b, what):
        e = abs(mp.mpc(a) - mp.mpc(b)) / abs(mp.mpc(b))
        worst[what] = max(worst.get(what, 0), e)
        if e > mp.mpf(10)**-28:
            raise RuntimeError("%s: oracle paths disagree by %s" % (what, mp.nstr(e, 5)))

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    jobs = [("special", special_records), ("identities", identity_records)]
    for name, fn in jobs:
        if args.only and args.only != name:
            continue
        t0 = time.time()
        lines = fn(check)
        (out / (name + ".tsv")).write_text("\n".join(lines) + "\n")
        print("%s: %d records in %.1fs" % (name, len(lines), time.time() - t0), file=sys.stderr)
    for what, e in sorted(worst.items()):
        print("  %-36s %s" % (what, mp.nstr(e, 3)), file=sys.stderr)


if __name__ == "__main__":
    main()

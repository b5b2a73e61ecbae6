#pragma once

#include <vector>

#include "lensbeta/core/complex.hpp"

namespace lensbeta {

enum class BernoulliKind { B11, B22, B33 };

inline void require_nonzero(cplx w)
{
    if (w == cplx(0.0)) fail(Errc::domain, "Bernoulli period must be nonzero");
}

inline cplx bernoulli_11(cplx z, cplx w1)
{
    require_nonzero(w1);
    return z / w1 - 0.5;
}

inline cplx bernoulli_22(cplx z, cplx w1, cplx w2)
{
    require_nonzero(w1);
    require_nonzero(w2);
    const cplx p = w1 * w2;
    return z * z / p - (w1 + w2) * z / p + (w1 * w1 + w2 * w2 + 3.0 * p) / (6.0 * p);
}

inline cplx bernoulli_33(cplx z, cplx w1, cplx w2, cplx w3)
{
    require_nonzero(w1);
    require_nonzero(w2);
    require_nonzero(w3);
    const cplx p = w1 * w2 * w3;
    const cplx s1 = w1 + w2 + w3;
    const cplx s2 = w1 * w2 + w2 * w3 + w3 * w1;
    return z * z * z / p - 3.0 * s1 * z * z / (2.0 * p) +
           (w1 * w1 + w2 * w2 + w3 * w3 + 3.0 * s2) * z / (2.0 * p) - s1 * s2 / (4.0 * p);
}

inline cplx bernoulli_poly(BernoulliKind kind, cplx z, const std::vector<cplx>& w)
{
    const std::size_t need = kind == BernoulliKind::B11 ? 1 : kind == BernoulliKind::B22 ? 2 : 3;
    if (w.size() != need) fail(Errc::invalid_input, "wrong number of periods for Bernoulli polynomial");
    switch (kind) {
    case BernoulliKind::B11: return bernoulli_11(z, w[0]);
    case BernoulliKind::B22: return bernoulli_22(z, w[0], w[1]);
    case BernoulliKind::B33: return bernoulli_33(z, w[0], w[1], w[2]);
    }
    return {};
}

// R(z; sigma, tau) from two B33 terms.
inline cplx poly_R(cplx z, cplx sigma, cplx tau)
{
    return (bernoulli_33(z, sigma, tau, -1.0) + bernoulli_33(z - 1.0, sigma, tau, -1.0)) / 12.0;
}

// R2 from its definition as a sum of two R terms.
inline cplx poly_R2_definition(cplx z, double m, cplx sigma, cplx tau, double r_hat)
{
    return poly_R(z + m * sigma, r_hat * sigma, sigma + tau) +
           poly_R(z + (r_hat - m) * tau, r_hat * tau, sigma + tau);
}

// Expanded closed form; well defined at sigma = -tau.
inline cplx poly_R2(cplx z, double m, cplx sigma, cplx tau, double r_hat)
{
    if (r_hat == 0.0) fail(Errc::domain, "r_hat must be nonzero");
    if (sigma == cplx(0.0) || tau == cplx(0.0)) fail(Errc::domain, "sigma and tau must be nonzero");
    const cplx s = sigma + tau, st = sigma * tau;
    return (s - 2.0 * z) * (2.0 * z * z - 2.0 * z * s + st * (r_hat * r_hat + 6.0 * (m - r_hat) * m) + 1.0) /
               (24.0 * r_hat * st) -
           (sigma - tau) * (2.0 * m - r_hat) * (m - r_hat) * m / (12.0 * r_hat);
}

// R2(0, m; 1/2, -1/2) in closed form.
inline double poly_R2_half(double m, double r_hat) { return -(2.0 * m - r_hat) * (m - r_hat) * m / (12.0 * r_hat); }

// Exponent of the elliptic normalisation factor.
inline cplx phi_e(cplx z, double m, cplx sigma, cplx tau, double r_hat)
{
    return 2.0 * pi * I *
           (poly_R2(z, 0.0, sigma, tau, r_hat) + poly_R2_half(m, r_hat) - poly_R2(z, m, sigma, tau, r_hat));
}

// Exponent of the hyperbolic normalisation factor.
inline cplx phi_h(double m, int r) { return 2.0 * pi * I * poly_R2_half(m, r); }

} // namespace lensbeta

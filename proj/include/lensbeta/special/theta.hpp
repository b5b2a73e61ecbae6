#pragma once

#include "lensbeta/core/series.hpp"
#include "lensbeta/special/params.hpp"

namespace lensbeta {

// (x; q)_inf
inline cplx q_pochhammer(cplx x, cplx q, const SeriesSpec& spec = {})
{
    if (!is_finite(x) || !is_finite(q)) fail(Errc::invalid_input, "non-finite Pochhammer argument");
    if (!(std::abs(q) < 1.0)) fail(Errc::domain, "|q| must be < 1");
    if (x == cplx(0.0)) return 1.0;
    if (q == cplx(0.0)) return 1.0 - x;
    cplx power = x;
    return truncated_product(
               [&](long) {
                   const cplx t = 1.0 - power;
                   power *= q;
                   return t;
               },
               spec)
        .value;
}

// Jacobi theta_4(z | p) in product form.
inline cplx jacobi_theta4(cplx z, cplx p, const SeriesSpec& spec = {})
{
    if (!(std::abs(p) < 1.0)) fail(Errc::domain, "|p| must be < 1");
    if (p == cplx(0.0)) return 1.0;
    const cplx e = std::exp(2.0 * I * z), ei = std::exp(-2.0 * I * z);
    const cplx p2 = p * p;
    cplx power = p;
    const cplx tail = truncated_product(
                          [&](long) {
                              const cplx t = (1.0 - e * power) * (1.0 - ei * power);
                              power *= p2;
                              return t;
                          },
                          spec)
                          .value;
    return q_pochhammer(p2, p2, spec) * tail;
}

// theta(z; sigma) = (e^{2 pi i z}; p)(e^{-2 pi i z} p; p), p = e^{2 pi i sigma}.
inline cplx theta_small(cplx z, cplx sigma, const SeriesSpec& spec = {})
{
    if (!(sigma.imag() > 0.0)) fail(Errc::domain, "Im(sigma) must be positive");
    const cplx p = std::exp(two_pi * I * sigma);
    return q_pochhammer(std::exp(two_pi * I * z), p, spec) * q_pochhammer(std::exp(-two_pi * I * z) * p, p, spec);
}

// Multiplicity of the holonomy y once the sum is folded to 0..floor(r/2).
inline int eps_y(int y, int r)
{
    if (y < 0 || 2 * y > r) fail(Errc::domain, "y must lie in 0..floor(r/2)");
    return (y == 0 || 2 * y == r) ? 1 : 2;
}

// Vertex factor of the one-spin weights: 1/2 on self-conjugate holonomies.
inline double eps_spin(long m, int r)
{
    const long mm = mod_r(m, r);
    return (mm == 0 || mm == mod_r(r - m, r)) ? 0.5 : 1.0;
}

struct LambdaEps {
    cplx lambda;
    int eps;
};

// lambda = (p^r; p^r)(q^r; q^r)/2 together with eps(y).
inline LambdaEps lambda_and_eps(const EllipticParams& params, int y, const SeriesSpec& spec = {})
{
    params.validate();
    const int e = eps_y(y, params.r);
    const cplx pr = std::exp(static_cast<double>(params.r) * params.log_p());
    const cplx qr = std::exp(static_cast<double>(params.r) * params.log_q());
    return {q_pochhammer(pr, pr, spec) * q_pochhammer(qr, qr, spec) * 0.5, e};
}

} // namespace lensbeta

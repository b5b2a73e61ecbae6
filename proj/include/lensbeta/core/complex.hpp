#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "lensbeta/core/error.hpp"

namespace lensbeta {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// A value together with an absolute error estimate.
struct Estimate {
    cplx value{};
    double error = 0.0;
};

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// e^z - 1 without cancellation for small |z|.
inline cplx expm1(cplx z)
{
    const double x = z.real(), y = z.imag();
    const double s = std::sin(0.5 * y);
    const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
    const double im = std::exp(x) * std::sin(y);
    return {re, im};
}

inline cplx one_minus_exp(cplx z) { return -expm1(z); }

// Some logarithm of 1 - e^u. The branch is arbitrary; callers only exponentiate sums of these.
inline cplx log_one_minus_exp(cplx u)
{
    if (u.real() > 30.0) {
        // 1 - e^u = -e^u (1 - e^{-u})
        return u + cplx(0.0, pi) + std::log(one_minus_exp(-u));
    }
    return std::log(one_minus_exp(u));
}

// Some logarithm of sinh(z), safe for large |Re z|.
inline cplx log_sinh(cplx z)
{
    if (z.real() < 0.0) return log_sinh(-z) + cplx(0.0, pi);
    // sinh z = e^z (1 - e^{-2z}) / 2
    return z + std::log(one_minus_exp(-2.0 * z)) - std::numbers::ln2;
}

inline cplx csinh(cplx z) { return std::sinh(z); }

// log(sinh(u)/u) for small |u|, accurate to ~1e-16 when |u| <= 0.2.
inline cplx log_sinhc_series(cplx u)
{
    const cplx u2 = u * u;
    return u2 * (1.0 / 6.0 +
                 u2 * (-1.0 / 180.0 + u2 * (1.0 / 2835.0 + u2 * (-1.0 / 37800.0 + u2 / 467775.0))));
}

// Representative of m modulo r in {0, ..., r-1}.
inline long mod_r(long m, long r)
{
    long v = m % r;
    return v < 0 ? v + r : v;
}

// [[m]]_+- := [[m]] [[-m]]
inline long mod_pm(long m, long r) { return mod_r(m, r) * mod_r(-m, r); }

inline double relative_distance(cplx a, cplx b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

} // namespace lensbeta

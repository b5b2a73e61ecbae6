#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "lensbeta/special/params.hpp"
#include "lensbeta/verify/report.hpp"

namespace lensbeta {

inline constexpr double balance_tolerance = 1e-12;
inline constexpr int max_sample_attempts = 100;

// t_i, u_i of the elliptic identities; params use the appendix_b nomes.
struct EllipticFugacities {
    std::vector<cplx> t;
    std::vector<long> u;
    EllipticParams params;
};

// t_i, u_i of the hyperbolic identities; params use Im(omega) > 0.
struct HyperbolicFugacities {
    std::vector<cplx> t;
    std::vector<long> u;
    HyperbolicParams params;
};

namespace detail {

inline void check_sizes(const std::vector<cplx>& t, const std::vector<long>& u, std::size_t n)
{
    if (t.size() != n || u.size() != n) fail(Errc::invalid_input, "expected " + std::to_string(n) + " fugacities");
}

inline void check_balance(const std::vector<cplx>& t, const std::vector<long>& u, cplx target)
{
    cplx s = 0.0;
    long su = 0;
    for (cplx x : t) {
        if (!is_finite(x)) fail(Errc::invalid_input, "non-finite fugacity");
        s += x;
    }
    for (long m : u) su += m;
    if (std::abs(s - target) > balance_tolerance * std::max(1.0, std::abs(target)))
        fail(Errc::unbalanced, "sum of t differs from the balancing value");
    if (su != 0) fail(Errc::unbalanced, "sum of u must vanish");
}

inline void check_margin(const std::vector<cplx>& t, double margin)
{
    for (cplx x : t)
        if (!(x.imag() >= margin)) fail(Errc::pole_pinch, "a fugacity lies within the pole margin of the contour");
}

} // namespace detail

inline double pole_margin(const EllipticParams& p, double fraction)
{
    return fraction * std::min(p.sigma.imag(), p.tau.imag());
}

inline double pole_margin(const HyperbolicParams& p, double fraction)
{
    return fraction * std::min(p.omega1.imag(), p.omega2.imag());
}

// balance_multiple is 1 for six fugacities and 2 for the eight-parameter V function.
inline void validate(const EllipticFugacities& f, std::size_t n, int balance_multiple, double margin_fraction)
{
    f.params.validate();
    if (f.params.convention != NomeConvention::appendix_b)
        fail(Errc::invalid_input, "fugacities use the appendix_b nome convention");
    detail::check_sizes(f.t, f.u, n);
    detail::check_balance(f.t, f.u, static_cast<double>(balance_multiple) * (f.params.sigma + f.params.tau));
    detail::check_margin(f.t, pole_margin(f.params, margin_fraction));
}

inline void validate(const HyperbolicFugacities& f, double margin_fraction)
{
    f.params.validate();
    if (f.params.orientation != Orientation::upper_half)
        fail(Errc::invalid_input, "fugacities use the Im(omega) > 0 orientation");
    detail::check_sizes(f.t, f.u, 6);
    detail::check_balance(f.t, f.u, f.params.omega1 + f.params.omega2);
    detail::check_margin(f.t, pole_margin(f.params, margin_fraction));
}

inline json fugacity_json(const std::vector<cplx>& t, const std::vector<long>& u)
{
    json jt = json::array();
    for (cplx x : t) jt.push_back(complex_json(x));
    return {{"t", jt}, {"u", u}};
}

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

// Holonomies in conjugate pairs (u, -u) with u in {-r+1, ..., r-1}.
inline std::vector<long> sample_holonomies(Rng& rng, std::size_t n, int r)
{
    std::vector<long> u(n, 0);
    std::uniform_int_distribution<long> d(-(r - 1), r - 1);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        u[i] = d(rng);
        u[i + 1] = -u[i];
    }
    return u;
}

// n points with Im-fractions in [0.1, 0.4] rescaled to Im(target), last real part from balancing.
inline std::vector<cplx> sample_balanced(Rng& rng, std::size_t n, cplx target, double real_spread)
{
    std::vector<double> frac(n);
    double total = 0.0;
    for (double& f : frac) total += (f = uniform(rng, 0.1, 0.4));
    std::vector<cplx> t(n);
    double re = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = i + 1 < n ? uniform(rng, -real_spread, real_spread) : target.real() - re;
        re += x;
        t[i] = {x, frac[i] / total * target.imag()};
    }
    return t;
}

// sigma, tau with |p| = |q| = nome (appendix_b nomes) and small random real parts.
inline EllipticParams sample_elliptic_params(Rng& rng, int r, double nome)
{
    const double im = -std::log(nome) / two_pi;
    return {cplx(uniform(rng, -0.2, 0.2), im), cplx(uniform(rng, -0.2, 0.2), im), r, NomeConvention::appendix_b};
}

inline EllipticFugacities sample_elliptic_fugacities(Rng& rng, const EllipticParams& params, std::size_t n,
                                                     int balance_multiple, bool holonomies, double margin_fraction)
{
    const cplx target = static_cast<double>(balance_multiple) * (params.sigma + params.tau);
    for (int attempt = 0; attempt < max_sample_attempts; ++attempt) {
        EllipticFugacities f{sample_balanced(rng, n, target, 0.5),
                             holonomies ? sample_holonomies(rng, n, params.r) : std::vector<long>(n, 0), params};
        try {
            validate(f, n, balance_multiple, margin_fraction);
            return f;
        } catch (const Error& e) {
            if (e.code() != Errc::pole_pinch) throw;
        }
    }
    fail(Errc::pole_pinch, "could not sample a point outside the pole margin");
}

inline HyperbolicFugacities sample_hyperbolic_fugacities(Rng& rng, const HyperbolicParams& params, bool holonomies,
                                                         double margin_fraction)
{
    const cplx target = params.omega1 + params.omega2;
    const double spread = 0.3 * std::min(std::abs(params.omega1), std::abs(params.omega2));
    for (int attempt = 0; attempt < max_sample_attempts; ++attempt) {
        HyperbolicFugacities f{sample_balanced(rng, 6, target, spread),
                               holonomies ? sample_holonomies(rng, 6, params.r) : std::vector<long>(6, 0), params};
        try {
            validate(f, margin_fraction);
            return f;
        } catch (const Error& e) {
            if (e.code() != Errc::pole_pinch) throw;
        }
    }
    fail(Errc::pole_pinch, "could not sample a point outside the pole margin");
}

} // namespace lensbeta

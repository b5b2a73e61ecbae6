#pragma once

#include "lensbeta/core/series.hpp"
#include "lensbeta/special/bernoulli.hpp"
#include "lensbeta/special/params.hpp"

namespace lensbeta {

inline constexpr double pole_tolerance = 1e-14;

inline void require_convention(const EllipticParams& params, NomeConvention c)
{
    params.validate();
    if (params.convention != c) fail(Errc::invalid_input, "elliptic parameters use the wrong nome convention");
}

// Gamma_{e,1}(z; sigma, tau) with p = e^{2 pi i sigma}, q = e^{2 pi i tau}.
inline cplx gamma_e1(cplx z, cplx sigma, cplx tau, const SeriesSpec& spec = {})
{
    if (!(sigma.imag() > 0.0) || !(tau.imag() > 0.0)) fail(Errc::domain, "Im(sigma), Im(tau) must be positive");
    const cplx a = two_pi * I * sigma, b = two_pi * I * tau;
    const cplx den = double_product_exp(two_pi * I * z, a, b, spec, pole_tolerance);
    const cplx num = double_product_exp(-two_pi * I * z + a + b, a, b, spec);
    return num / den;
}

inline cplx elliptic_gamma_std(cplx z, const EllipticParams& params, const SeriesSpec& spec = {})
{
    require_convention(params, NomeConvention::appendix_b);
    return gamma_e1(z, params.sigma, params.tau, spec);
}

// Phi(z; p, q) as the double product over odd powers.
inline cplx elliptic_gamma_phi(cplx z, cplx p, cplx q, const SeriesSpec& spec = {})
{
    if (!(std::abs(p) < 1.0) || !(std::abs(q) < 1.0)) fail(Errc::domain, "|p|, |q| must be < 1");
    if (p == cplx(0.0) || q == cplx(0.0)) return 1.0;
    const cplx lp = std::log(p), lq = std::log(q);
    const cplx den = double_product_exp(-2.0 * I * z + lp + lq, 2.0 * lp, 2.0 * lq, spec, pole_tolerance);
    const cplx num = double_product_exp(2.0 * I * z + lp + lq, 2.0 * lp, 2.0 * lq, spec);
    return num / den;
}

// Lens elliptic gamma function Phi_{r,m}(z) from its explicit double product.
inline cplx lens_elliptic_gamma_phi(cplx z, long m, const EllipticParams& params, const SeriesSpec& spec = {})
{
    require_convention(params, NomeConvention::section3);
    const double r = params.r;
    const double M = static_cast<double>(mod_r(m, params.r));
    const cplx lp = params.log_p(), lq = params.log_q();
    const cplx s = lp + lq, a = 2.0 * s;
    const cplx den1 = double_product_exp(-2.0 * I * z + 2.0 * M * lp + s, a, 2.0 * r * lp, spec, pole_tolerance);
    const cplx den2 =
        double_product_exp(-2.0 * I * z - 2.0 * M * lq + s + 2.0 * r * lq, a, 2.0 * r * lq, spec, pole_tolerance);
    const cplx num1 = double_product_exp(2.0 * I * z - 2.0 * M * lp + s + 2.0 * r * lp, a, 2.0 * r * lp, spec);
    const cplx num2 = double_product_exp(2.0 * I * z + 2.0 * M * lq + s, a, 2.0 * r * lq, spec);
    return num1 * num2 / (den1 * den2);
}

// Same function through the two-Phi factorisation.
inline cplx lens_elliptic_gamma_phi_factorized(cplx z, long m, const EllipticParams& params,
                                               const SeriesSpec& spec = {})
{
    require_convention(params, NomeConvention::section3);
    const double shift = 0.5 * params.r - static_cast<double>(mod_r(m, params.r));
    const cplx p = params.p(), q = params.q();
    const cplx pr = std::exp(static_cast<double>(params.r) * params.log_p());
    const cplx qr = std::exp(static_cast<double>(params.r) * params.log_q());
    return elliptic_gamma_phi(z + shift * pi * params.sigma, p * q, pr, spec) *
           elliptic_gamma_phi(z - shift * pi * params.tau, p * q, qr, spec);
}

// gamma_e(z, m) for the integer m exactly as given.
inline cplx gamma_e_little(cplx z, long m, const EllipticParams& params, const SeriesSpec& spec = {})
{
    require_convention(params, NomeConvention::appendix_b);
    const double r = params.r, md = static_cast<double>(m);
    const cplx s = params.sigma + params.tau;
    return gamma_e1(z + md * params.sigma, r * params.sigma, s, spec) *
           gamma_e1(z + (r - md) * params.tau, r * params.tau, s, spec);
}

struct LensGammaOptions {
    int r_hat = 0; // 0 means r_hat = r
    ResidueMode mode = ResidueMode::reduced;
    bool include_phase = true;
};

// Gamma_e(z, m; sigma, tau) = e^{phi_e} gamma_e.
inline cplx lens_elliptic_gamma(cplx z, long m, const EllipticParams& params, const LensGammaOptions& opt = {},
                                const SeriesSpec& spec = {})
{
    require_convention(params, NomeConvention::appendix_b);
    const int r_hat = opt.r_hat == 0 ? params.r : opt.r_hat;
    const long mm = opt.mode == ResidueMode::reduced ? mod_r(m, params.r) : m;
    const cplx g = gamma_e_little(z, mm, params, spec);
    if (!opt.include_phase) return g;
    return std::exp(phi_e(z, static_cast<double>(mm), params.sigma, params.tau, r_hat)) * g;
}

// Phi_{r,m}(pi((sigma+tau)/2 - z)) with nomes e^{i pi sigma}, e^{i pi tau} built from the same sigma, tau;
// equals gamma_e(z, [[m]]) with nomes e^{2 pi i sigma}, e^{2 pi i tau}.
inline cplx lens_phi_from_appendix_b(cplx z, long m, const EllipticParams& params, const SeriesSpec& spec = {})
{
    require_convention(params, NomeConvention::appendix_b);
    const EllipticParams s3 = params.with_convention(NomeConvention::section3);
    return lens_elliptic_gamma_phi(pi * ((params.sigma + params.tau) * 0.5 - z), m, s3, spec);
}

} // namespace lensbeta

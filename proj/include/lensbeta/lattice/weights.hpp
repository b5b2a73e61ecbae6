#pragma once

#include "lensbeta/special/kappa.hpp"
#include "lensbeta/special/theta.hpp"

namespace lensbeta {

// sigma_j = (x_j, m_j)
struct Spin {
    double x = 0.0;
    long m = 0;
};

struct SpectralTriple {
    double alpha_i = 0.0, alpha_j = 0.0, alpha_k = 0.0;

    void validate(double eta) const
    {
        for (double a : {alpha_i, alpha_j, alpha_k})
            if (!(a > 0.0 && a < eta)) fail(Errc::invalid_input, "spectral parameter outside (0, eta)");
        if (std::abs(alpha_i + alpha_j + alpha_k - eta) > 1e-12 * std::max(1.0, eta))
            fail(Errc::invalid_input, "spectral parameters must sum to eta");
    }
};

inline void validate_spin(const Spin& s, int r, bool elliptic)
{
    if (!std::isfinite(s.x) || s.x < 0.0 || (elliptic && !(s.x < pi)))
        fail(Errc::invalid_input, "continuous spin component out of range");
    if (s.m < 0 || 2 * s.m > r) fail(Errc::invalid_input, "discrete spin component must lie in 0..floor(r/2)");
}

// W-bar_alpha = W_{eta - alpha}
inline double crossing(double alpha, double eta)
{
    if (!(alpha >= 0.0 && alpha <= eta)) fail(Errc::domain, "crossing needs 0 <= alpha <= eta");
    return eta - alpha;
}

// Two-spin weight of the elliptic model (nomes e^{i pi sigma}, e^{i pi tau}).
inline cplx weight_W_elliptic(double alpha, const Spin& si, const Spin& sj, const EllipticParams& params,
                              const SeriesSpec& spec = {})
{
    require_convention(params, NomeConvention::section3);
    const int r = params.r;
    const long md = si.m - sj.m, ms = si.m + sj.m;
    const double xd = si.x - sj.x, xs = si.x + sj.x;
    const cplx ia = I * alpha;
    const double pm = static_cast<double>(mod_pm(md, r) + mod_pm(ms, r));
    const cplx num = lens_elliptic_gamma_phi(xd + ia, md, params, spec) * lens_elliptic_gamma_phi(xs + ia, ms, params, spec);
    const cplx den = lens_elliptic_gamma_phi(xd - ia, md, params, spec) * lens_elliptic_gamma_phi(xs - ia, ms, params, spec);
    return std::exp(-2.0 * alpha / r * pm - kappa_e_log(alpha, params, spec).value) * num / den;
}

enum class OneSpinForm { gamma, theta_or_sinh };

// One-spin weight of the elliptic model in either of its two forms.
inline cplx weight_S_elliptic(const Spin& s, const EllipticParams& params, OneSpinForm form = OneSpinForm::gamma,
                              const SeriesSpec& spec = {})
{
    require_convention(params, NomeConvention::section3);
    const int r = params.r;
    const double eps = eps_spin(s.m, r);
    const cplx eta = params.eta();
    const cplx pref = eps / pi * std::exp(2.0 * eta * static_cast<double>(mod_pm(2 * s.m, r)) / static_cast<double>(r));
    if (form == OneSpinForm::gamma) {
        const cplx p2r = std::exp(2.0 * r * params.log_p()), q2r = std::exp(2.0 * r * params.log_q());
        return pref * q_pochhammer(p2r, p2r, spec) * q_pochhammer(q2r, q2r, spec) *
               lens_elliptic_gamma_phi(-2.0 * s.x - I * eta, -2 * s.m, params, spec) *
               lens_elliptic_gamma_phi(2.0 * s.x - I * eta, 2 * s.m, params, spec);
    }
    const double h = 0.5 * r - static_cast<double>(mod_r(2 * s.m, r));
    const cplx pr = std::exp(static_cast<double>(r) * params.log_p()), qr = std::exp(static_cast<double>(r) * params.log_q());
    return pref * jacobi_theta4(2.0 * s.x + h * pi * params.sigma, pr, spec) *
           jacobi_theta4(2.0 * s.x - h * pi * params.tau, qr, spec);
}

struct HyperbolicEval {
    PhiPath phi = PhiPath::automatic;
    KappaPath kappa = KappaPath::automatic;
    QuadratureSpec quad{};
    SeriesSpec series{};
};

// Logarithm of the hyperbolic two-spin weight.
inline cplx log_weight_W_hyperbolic(double alpha, const Spin& si, const Spin& sj, const HyperbolicParams& params,
                                    const HyperbolicEval& ev = {})
{
    const long md = si.m - sj.m, ms = si.m + sj.m;
    const double xd = si.x - sj.x, xs = si.x + sj.x;
    const cplx ia = I * alpha;
    auto lp = [&](cplx z, long m) { return phi_rm_log(z, m, params, ev.phi, ev.quad, ev.series).value; };
    return lp(xs + ia, ms) + lp(xd + ia, md) - lp(xs - ia, ms) - lp(xd - ia, md) -
           kappa_h_log(alpha, params, ev.kappa, ev.quad, ev.series).value;
}

inline cplx weight_W_hyperbolic(double alpha, const Spin& si, const Spin& sj, const HyperbolicParams& params,
                                const HyperbolicEval& ev = {})
{
    return std::exp(log_weight_W_hyperbolic(alpha, si, sj, params, ev));
}

// One-spin weight of the hyperbolic model in either of its two forms.
inline cplx weight_S_hyperbolic(const Spin& s, const HyperbolicParams& params, OneSpinForm form = OneSpinForm::gamma,
                                const HyperbolicEval& ev = {})
{
    params.validate();
    const cplx w1 = params.omega1, w2 = params.omega2, eta = params.eta();
    const double r = params.r, md = static_cast<double>(s.m);
    const cplx pref = eps_spin(s.m, params.r) / (r * std::sqrt(w1 * w2));
    if (form == OneSpinForm::theta_or_sinh)
        return 4.0 * pref * std::sinh(2.0 * pi / (w1 * r) * (s.x - I * w1 * md)) *
               std::sinh(2.0 * pi / (w2 * r) * (s.x + I * w2 * md));
    try {
        return pref * std::exp(phi_rm_log(-2.0 * s.x - I * eta, -2 * s.m, params, ev.phi, ev.quad, ev.series).value +
                               phi_rm_log(2.0 * s.x - I * eta, 2 * s.m, params, ev.phi, ev.quad, ev.series).value);
    } catch (const Error& e) {
        if (e.code() == Errc::zero) return 0.0;
        throw;
    }
}

} // namespace lensbeta

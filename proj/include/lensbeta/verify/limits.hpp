#pragma once

#include <algorithm>
#include <string>

#include "lensbeta/special/kappa.hpp"
#include "lensbeta/special/theta.hpp"
#include "lensbeta/verify/report.hpp"

namespace lensbeta {

struct LimitOptions {
    double tol = 5e-2;            // closeness at the smallest epsilon
    double alpha_fraction = 0.2;  // kappa channel at alpha = fraction * eta
    std::vector<std::string> channels{}; // empty: phi, kappa, lambda, pochhammer, gamma
    QuadratureSpec quad{};
    SeriesSpec series{50.0 * std::numeric_limits<double>::epsilon(), 20000000};
};

struct LimitChannel {
    std::string name;
    std::vector<double> errors;
    double slope = 0.0;
    bool decreasing = false;
    cplx last_value{};
    cplx target{};
};

namespace detail {

// Least-squares slope of log(error) against 1/epsilon.
inline double log_error_slope(const std::vector<double>& eps, const std::vector<double>& err)
{
    const std::size_t n = eps.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = 1.0 / eps[i], y = std::log(std::max(err[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

template <class F>
LimitChannel limit_channel(std::string name, const std::vector<double>& eps, cplx target, F&& rescaled)
{
    LimitChannel c;
    c.name = std::move(name);
    c.target = target;
    for (double e : eps) {
        c.last_value = rescaled(e);
        c.errors.push_back(relative_distance(c.last_value, target));
    }
    c.decreasing = true;
    for (std::size_t i = 1; i < c.errors.size(); ++i) c.decreasing = c.decreasing && c.errors[i] < c.errors[i - 1];
    c.slope = log_error_slope(eps, c.errors);
    return c;
}

} // namespace detail

// Elliptic quantities at nomes e^{-omega epsilon}, rescaled, against their hyperbolic limits.
inline std::vector<LimitChannel> hyperbolic_limit_channels(cplx z, long m, const HyperbolicParams& params,
                                                           const std::vector<double>& eps, const LimitOptions& opt = {})
{
    params.validate();
    if (params.orientation != Orientation::right_half) fail(Errc::invalid_input, "limit uses Re(omega) > 0");
    if (eps.size() < 2) fail(Errc::invalid_input, "need at least two epsilon values");
    for (std::size_t i = 0; i < eps.size(); ++i)
        if (!(eps[i] > 0.0) || (i > 0 && !(eps[i] < eps[i - 1])))
            fail(Errc::invalid_input, "epsilon schedule must be positive and strictly decreasing");
    const cplx w1 = params.omega1, w2 = params.omega2;
    const int r = params.r;
    const double rd = r;
    auto s3 = [&](double e) { return EllipticParams{I * w1 * e / pi, I * w2 * e / pi, r, NomeConvention::section3}; };

    std::vector<LimitChannel> out;
    out.push_back(detail::limit_channel("phi", eps, phi_rm(z, m, params, PhiPath::automatic, opt.quad, opt.series),
                                        [&](double e) {
                                            return std::exp(I * pi * pi * z / (6.0 * rd * w1 * w2 * e)) *
                                                   lens_elliptic_gamma_phi(z * e, m, s3(e), opt.series);
                                        }));

    const cplx alpha = opt.alpha_fraction * params.eta();
    out.push_back(detail::limit_channel(
        "kappa", eps, kappa_h(alpha, params, KappaPath::automatic, opt.quad, opt.series), [&](double e) {
            return std::exp(-pi * pi * alpha / (6.0 * rd * w1 * w2 * e) + kappa_e_log(alpha * e, s3(e), opt.series).value);
        }));

    // lambda prefactor, written with the upper-half periods W = i omega.
    const cplx W1 = I * w1, W2 = I * w2;
    out.push_back(detail::limit_channel("lambda", eps, 1.0, [&](double e) {
        const cplx pr = std::exp(two_pi * I * W1 * e * rd), qr = std::exp(two_pi * I * W2 * e * rd);
        return rd * e * std::sqrt(-W1 * W2) * std::exp(two_pi * I * poly_R2(0.0, 0.0, e * W1, e * W2, rd)) *
               q_pochhammer(pr, pr, opt.series) * q_pochhammer(qr, qr, opt.series);
    }));

    out.push_back(detail::limit_channel("pochhammer", eps, 1.0, [&](double e) {
        const cplx p2 = std::exp(-2.0 * rd * w1 * e), q2 = std::exp(-2.0 * rd * w2 * e);
        return std::exp(pi * pi * (w1 + w2) / (12.0 * rd * w1 * w2 * e)) * q_pochhammer(p2, p2, opt.series) *
               q_pochhammer(q2, q2, opt.series) * rd * e * std::sqrt(w1 * w2) / pi;
    }));

    // Gamma_e -> Gamma_h with nomes e^{2 pi i sigma}, at the point i z of the upper-half picture.
    const HyperbolicParams up = params.to_upper_half();
    const cplx zu = I * z;
    out.push_back(detail::limit_channel(
        "gamma", eps, lens_hyperbolic_gamma(zu, m, up, {}, opt.quad, opt.series), [&](double e) {
            const EllipticParams ab{e * W1, e * W2, r, NomeConvention::appendix_b};
            return std::exp(-two_pi * I * poly_R2(e * zu, 0.0, e * W1, e * W2, rd)) *
                   lens_elliptic_gamma(e * zu, m, ab, {}, opt.series);
        }));
    return out;
}

inline VerificationReport verify_hyperbolic_limit(cplx z, long m, const HyperbolicParams& params,
                                                  const std::vector<double>& eps, const LimitOptions& opt = {})
{
    params.validate();
    return run_verifier("hyperbolic-limit", opt.tol, [&](VerificationReport& rep) {
        rep.params = params_json(params);
        rep.params["z"] = complex_json(z);
        rep.params["m"] = m;
        rep.params["epsilon"] = eps;
        const std::vector<LimitChannel> ch = hyperbolic_limit_channels(z, m, params, eps, opt);
        bool ok = true;
        const LimitChannel* first = nullptr;
        for (const LimitChannel& c : ch) {
            if (!opt.channels.empty() &&
                std::find(opt.channels.begin(), opt.channels.end(), c.name) == opt.channels.end())
                continue;
            if (!first) first = &c;
            rep.diagnostics[c.name] = {{"errors", c.errors}, {"slope", c.slope}, {"decreasing", c.decreasing}};
            ok = ok && c.decreasing && c.slope < 0.0;
        }
        if (!first) fail(Errc::invalid_input, "no known limit channel selected");
        // The report compares the first selected channel at the smallest epsilon.
        rep.lhs = first->last_value;
        rep.rhs = first->target;
        rep.subchecks_pass = ok;
    });
}

} // namespace lensbeta

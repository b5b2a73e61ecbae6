#pragma once

#include "lensbeta/core/quadrature.hpp"
#include "lensbeta/special/elliptic_gamma.hpp"
#include "lensbeta/special/hyperbolic_gamma.hpp"
#include "lensbeta/special/theta.hpp"
#include "lensbeta/verify/fugacity.hpp"

namespace lensbeta {

struct EllipticBetaOptions {
    double tol = 1e-8;
    double margin = 0.02;
    int r_hat = 0; // 0 means r
    ResidueMode mode = ResidueMode::reduced;
    QuadratureSpec quad{};
    SeriesSpec series{};
};

namespace detail {

inline LensGammaOptions gamma_options(const EllipticBetaOptions& opt) { return {opt.r_hat, opt.mode, true}; }

// prod_i Gamma_e(t_i +- z, u_i +- y) / Gamma_e(+-2z, +-2y).
inline cplx elliptic_integrand(const EllipticFugacities& f, double z, long y, const EllipticBetaOptions& opt)
{
    const LensGammaOptions g = gamma_options(opt);
    auto G = [&](cplx x, long m) { return lens_elliptic_gamma(x, m, f.params, g, opt.series); };
    cplx v = 1.0 / (G(2.0 * z, 2 * y) * G(-2.0 * z, -2 * y));
    for (std::size_t i = 0; i < f.t.size(); ++i) v *= G(f.t[i] + z, f.u[i] + y) * G(f.t[i] - z, f.u[i] - y);
    return v;
}

// lambda * sum over y of the z-integrals. folded: y = 0..floor(r/2) weighted by eps(y)
// over [-1/2, 1/2); otherwise y = 0..r-1 over [0, 1).
inline cplx elliptic_sum_integral(const EllipticFugacities& f, bool folded, const EllipticBetaOptions& opt,
                                  json* diag)
{
    const int r = f.params.r;
    const cplx lambda = lambda_and_eps(f.params, 0, opt.series).lambda;
    const int ymax = folded ? r / 2 : r - 1;
    cplx sum = 0.0;
    json nodes = json::array();
    double err = 0.0;
    for (int y = 0; y <= ymax; ++y) {
        QuadratureInfo info;
        const Estimate e = integrate_periodic([&](double z) { return elliptic_integrand(f, z, y, opt); },
                                              folded ? -0.5 : 0.0, 1.0, opt.quad, &info);
        const double w = folded ? eps_y(y, r) : 1.0;
        sum += w * e.value;
        err += w * e.error;
        nodes.push_back(info.nodes);
    }
    if (diag) {
        (*diag)["nodes"] = nodes;
        (*diag)["quadrature_error"] = std::abs(lambda) * err;
    }
    return lambda * sum;
}

inline cplx elliptic_pair_product(const std::vector<cplx>& t, const std::vector<long>& u, std::size_t lo,
                                  std::size_t hi, const EllipticParams& params, const LensGammaOptions& g,
                                  const SeriesSpec& spec)
{
    cplx v = 1.0;
    for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = i + 1; j < hi; ++j) v *= lens_elliptic_gamma(t[i] + t[j], u[i] + u[j], params, g, spec);
    return v;
}

} // namespace detail

inline cplx elliptic_beta_lhs(const EllipticFugacities& f, const EllipticBetaOptions& opt = {}, json* diag = nullptr)
{
    validate(f, 6, 1, opt.margin);
    return detail::elliptic_sum_integral(f, true, opt, diag);
}

inline cplx elliptic_beta_rhs(const EllipticFugacities& f, const EllipticBetaOptions& opt = {})
{
    validate(f, 6, 1, opt.margin);
    return detail::elliptic_pair_product(f.t, f.u, 0, 6, f.params, detail::gamma_options(opt), opt.series);
}

inline VerificationReport verify_elliptic_beta(const EllipticFugacities& f, const EllipticBetaOptions& opt = {})
{
    validate(f, 6, 1, opt.margin);
    return run_verifier("elliptic-beta", opt.tol, [&](VerificationReport& rep) {
        rep.params = params_json(f.params);
        rep.params["fugacities"] = fugacity_json(f.t, f.u);
        rep.params["r_hat"] = opt.r_hat == 0 ? f.params.r : opt.r_hat;
        rep.params["mode"] = opt.mode == ResidueMode::reduced ? "reduced" : "raw";
        rep.lhs = detail::elliptic_sum_integral(f, true, opt, &rep.diagnostics);
        rep.rhs = elliptic_beta_rhs(f, opt);
    });
}

// Eight-parameter sum/integral with sum t = 2(sigma + tau).
inline cplx v_function(const EllipticFugacities& f, const EllipticBetaOptions& opt = {}, json* diag = nullptr)
{
    validate(f, 8, 2, opt.margin);
    return detail::elliptic_sum_integral(f, false, opt, diag);
}

// t~ of the E7 reflection.
inline std::vector<cplx> e7_transform(const std::vector<cplx>& t, const EllipticParams& params)
{
    if (t.size() != 8) fail(Errc::invalid_input, "E7 reflection needs eight fugacities");
    const cplx e = 0.5 * (params.sigma + params.tau - t[0] - t[1] - t[2] - t[3]);
    std::vector<cplx> out(8);
    for (int i = 0; i < 8; ++i) out[i] = i < 4 ? t[i] + e : t[i] - e;
    return out;
}

inline VerificationReport verify_E7(const EllipticFugacities& f, const EllipticBetaOptions& opt = {})
{
    validate(f, 8, 2, opt.margin);
    for (long m : f.u)
        if (m != 0) fail(Errc::invalid_input, "the E7 reflection is implemented for u = 0 only");
    const EllipticFugacities g{e7_transform(f.t, f.params), f.u, f.params};
    validate(g, 8, 2, opt.margin);
    return run_verifier("e7", opt.tol, [&](VerificationReport& rep) {
        rep.params = params_json(f.params);
        rep.params["fugacities"] = fugacity_json(f.t, f.u);
        json da, db;
        rep.lhs = v_function(f, opt, &da);
        const LensGammaOptions go = detail::gamma_options(opt);
        rep.rhs = v_function(g, opt, &db) * detail::elliptic_pair_product(f.t, f.u, 0, 4, f.params, go, opt.series) *
                  detail::elliptic_pair_product(f.t, f.u, 4, 8, f.params, go, opt.series);
        rep.diagnostics["original"] = da;
        rep.diagnostics["transformed"] = db;
        rep.diagnostics["shift"] = complex_json(g.t[0] - f.t[0]);
    });
}

// Version of the elliptic identity written with gamma_e and the combined normalisation beta.
inline cplx elliptic_beta_reduced_lhs(const EllipticFugacities& f, const EllipticBetaOptions& opt = {})
{
    validate(f, 6, 1, opt.margin);
    const EllipticParams& p = f.params;
    const int r = p.r;
    double su2 = 0.0;
    cplx tu = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
        tu += f.t[i] * static_cast<double>(f.u[i]);
        su2 += static_cast<double>(f.u[i] * f.u[i]);
    }
    auto g = [&](cplx x, long m) { return gamma_e_little(x, m, p, opt.series); };
    cplx sum = 0.0;
    for (int y = 0; y <= r / 2; ++y) {
        const double yd = y;
        const cplx beta = std::exp(two_pi * I * (tu - (p.sigma - p.tau) * (yd * yd - 0.5 * su2)));
        auto integrand = [&](double z) {
            cplx v = std::exp(-4.0 * pi * I * z * yd) / (g(2.0 * z, 2 * y) * g(-2.0 * z, -2 * y));
            for (std::size_t i = 0; i < 6; ++i) v *= g(f.t[i] + z, f.u[i] + y) * g(f.t[i] - z, f.u[i] - y);
            return v;
        };
        sum += static_cast<double>(eps_y(y, r)) * beta * integrate_periodic(integrand, 0.0, 1.0, opt.quad).value;
    }
    return lambda_and_eps(p, 0, opt.series).lambda * sum;
}

inline cplx elliptic_beta_reduced_rhs(const EllipticFugacities& f, const EllipticBetaOptions& opt = {})
{
    validate(f, 6, 1, opt.margin);
    return detail::elliptic_pair_product(f.t, f.u, 0, 6, f.params, {0, ResidueMode::raw, false}, opt.series);
}

struct ModrOptions {
    double tol = 1e-12;      // hat-r comparison and periodicity
    double identity_tol = 1e-8;
    EllipticBetaOptions beta{};
};

// hat-r independence, r-periodicity and the gamma_e form of the elliptic identity.
inline VerificationReport verify_modr_equivalence(const EllipticFugacities& f, int r_hat_a, int r_hat_b,
                                                  const ModrOptions& opt = {})
{
    validate(f, 6, 1, opt.beta.margin);
    if (r_hat_a == 0 || r_hat_b == 0) fail(Errc::invalid_input, "r_hat must be non-zero");
    return run_verifier("modr", opt.tol, [&](VerificationReport& rep) {
        const EllipticParams& p = f.params;
        rep.params = params_json(p);
        rep.params["fugacities"] = fugacity_json(f.t, f.u);
        rep.params["r_hat"] = {r_hat_a, r_hat_b};
        json& d = rep.diagnostics;

        double period_err = 0.0;
        for (std::size_t i = 0; i < 6; ++i) {
            const cplx base = lens_elliptic_gamma(f.t[i], f.u[i], p, {}, opt.beta.series);
            for (int k = -2; k <= 2; ++k) {
                const cplx s = lens_elliptic_gamma(f.t[i], f.u[i] + k * p.r, p, {0, ResidueMode::raw, true}, opt.beta.series);
                period_err = std::max(period_err, std::abs(s / base - 1.0));
            }
        }
        d["periodicity_error"] = period_err;

        EllipticBetaOptions a = opt.beta, b = opt.beta;
        a.mode = b.mode = ResidueMode::raw;
        a.r_hat = r_hat_a;
        b.r_hat = r_hat_b;
        json da;
        const cplx lhs_a = detail::elliptic_sum_integral(f, true, a, &da);
        const cplx lhs_b = detail::elliptic_sum_integral(f, true, b, nullptr);
        const cplx rhs_a = elliptic_beta_rhs(f, a), rhs_b = elliptic_beta_rhs(f, b);
        const double rhs_diff = relative_distance(rhs_a, rhs_b);
        const double ratio_diff = relative_distance(lhs_a / rhs_a, lhs_b / rhs_b);
        d["quadrature"] = da;
        d["rhs_phase_change"] = rhs_diff;
        d["lhs_phase_change"] = relative_distance(lhs_a, lhs_b);
        d["ratio_difference"] = ratio_diff;
        d["identity_error"] = relative_distance(lhs_a, rhs_a);

        const cplx lhs3 = elliptic_beta_reduced_lhs(f, opt.beta);
        const cplx rhs3 = elliptic_beta_reduced_rhs(f, opt.beta);
        const double reduced_err = relative_distance(lhs3, rhs3);
        // Both forms differ only by the phases of the right-hand side.
        const double form_err = relative_distance(lhs3 * (rhs_a / rhs3), lhs_a);
        d["reduced_identity_error"] = reduced_err;
        d["reduced_form_difference"] = form_err;

        // Each side picks up the same r_hat-dependent phase; the ratio is what stays fixed.
        rep.lhs = lhs_a / rhs_a;
        rep.rhs = lhs_b / rhs_b;
        rep.subchecks_pass = period_err <= opt.tol && ratio_diff <= opt.tol &&
                             relative_distance(lhs_a, rhs_a) <= opt.identity_tol && reduced_err <= opt.identity_tol &&
                             form_err <= opt.identity_tol;
    });
}

struct HyperbolicBetaOptions {
    double tol = 1e-6;
    double margin = 0.02;
    bool include_phase = true;
    LensHyperbolicPath path = LensHyperbolicPath::phi;
    PhiPath phi_path = PhiPath::automatic;
    QuadratureSpec quad{};
    SeriesSpec series{};
};

namespace detail {

inline LensHyperbolicOptions hyperbolic_options(const HyperbolicBetaOptions& opt)
{
    return {opt.include_phase, ResidueMode::reduced, opt.path, opt.phi_path};
}

// Exponential decay rate of the integrand along the real line.
inline double hyperbolic_decay(const HyperbolicParams& p)
{
    return -two_pi * (1.0 / p.omega1 + 1.0 / p.omega2).imag() / p.r;
}

} // namespace detail

namespace detail {

// prod_i Gamma_h(t_i +- z, u_i +- y) / Gamma_h(+-2z, +-2y).
inline cplx hyperbolic_integrand(const HyperbolicFugacities& f, double z, long y, const HyperbolicBetaOptions& opt)
{
    const LensHyperbolicOptions go = hyperbolic_options(opt);
    auto L = [&](cplx x, long m) { return lens_hyperbolic_gamma_log(x, m, f.params, go, opt.quad, opt.series).value; };
    cplx den;
    try {
        den = L(2.0 * z, 2 * y) + L(-2.0 * z, -2 * y);
    } catch (const Error& e) {
        // Gamma_h(2z) has a pole at the origin where the integrand vanishes.
        if (e.code() == Errc::pole && std::abs(z) < 1e-5) return 0.0;
        throw;
    }
    cplx s = -den;
    for (std::size_t i = 0; i < 6; ++i) s += L(f.t[i] + z, f.u[i] + y) + L(f.t[i] - z, f.u[i] - y);
    return std::exp(s);
}

} // namespace detail

inline cplx hyperbolic_beta_lhs(const HyperbolicFugacities& f, const HyperbolicBetaOptions& opt = {},
                                json* diag = nullptr)
{
    validate(f, opt.margin);
    const HyperbolicParams& p = f.params;
    const int r = p.r;
    cplx sum = 0.0;
    double err = 0.0;
    json cut = json::array();
    for (int y = 0; y <= r / 2; ++y) {
        QuadratureInfo info;
        const Estimate e = integrate_real_line([&](double z) { return detail::hyperbolic_integrand(f, z, y, opt); },
                                               detail::hyperbolic_decay(p), opt.quad, &info);
        sum += static_cast<double>(eps_y(y, r)) * e.value;
        err += eps_y(y, r) * e.error;
        cut.push_back(info.cutoff);
    }
    const cplx pref = 1.0 / (2.0 * r * std::sqrt(-p.omega1 * p.omega2));
    if (diag) {
        (*diag)["cutoff"] = cut;
        (*diag)["quadrature_error"] = std::abs(pref) * err;
        (*diag)["decay_rate"] = detail::hyperbolic_decay(p);
    }
    return pref * sum;
}

inline cplx hyperbolic_beta_rhs(const HyperbolicFugacities& f, const HyperbolicBetaOptions& opt = {})
{
    validate(f, opt.margin);
    const LensHyperbolicOptions go = detail::hyperbolic_options(opt);
    cplx s = 0.0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            s += lens_hyperbolic_gamma_log(f.t[i] + f.t[j], f.u[i] + f.u[j], f.params, go, opt.quad, opt.series).value;
    return std::exp(s);
}

inline VerificationReport verify_hyperbolic_beta(const HyperbolicFugacities& f, const HyperbolicBetaOptions& opt = {})
{
    validate(f, opt.margin);
    return run_verifier("hyperbolic-beta", opt.tol, [&](VerificationReport& rep) {
        rep.params = params_json(f.params);
        rep.params["fugacities"] = fugacity_json(f.t, f.u);
        rep.params["include_phase"] = opt.include_phase;
        rep.lhs = hyperbolic_beta_lhs(f, opt, &rep.diagnostics);
        rep.rhs = hyperbolic_beta_rhs(f, opt);
    });
}

} // namespace lensbeta

#pragma once

#include <array>

#include "lensbeta/lattice/weights.hpp"
#include "lensbeta/verify/beta.hpp"

namespace lensbeta {

using SpinTriple = std::array<Spin, 3>;

inline json spins_json(const SpinTriple& s)
{
    json j = json::array();
    for (const Spin& x : s) j.push_back({x.x, x.m});
    return j;
}

inline json triple_json(const SpectralTriple& a) { return {a.alpha_i, a.alpha_j, a.alpha_k}; }

namespace detail {

inline double real_eta(cplx eta)
{
    if (std::abs(eta.imag()) > 1e-12 * std::abs(eta))
        fail(Errc::invalid_input, "star-triangle checks need a real crossing parameter");
    return eta.real();
}

// Fugacities (i alpha_a -+ x_a) * scale and holonomies (+-m_a) of the beta identity
// that contains the star-triangle relation.
inline void star_fugacities(const SpectralTriple& a, const SpinTriple& s, double scale, std::vector<cplx>& t,
                            std::vector<long>& u)
{
    const std::array<double, 3> al{a.alpha_i, a.alpha_j, a.alpha_k};
    t.clear();
    u.clear();
    for (int k = 0; k < 3; ++k) {
        t.push_back((I * al[k] - s[k].x) * scale);
        t.push_back((I * al[k] + s[k].x) * scale);
        u.push_back(s[k].m);
        u.push_back(-s[k].m);
    }
}

} // namespace detail

struct EllipticStarOptions {
    double tol = 1e-6;
    bool cross_check = true; // also run the beta identity at the substituted point
    QuadratureSpec quad{};
    SeriesSpec series{};
};

inline VerificationReport verify_str_elliptic(const SpectralTriple& a, const SpinTriple& s, const EllipticParams& params,
                                              const EllipticStarOptions& opt = {})
{
    params.validate();
    require_convention(params, NomeConvention::section3);
    a.validate(detail::real_eta(params.eta()));
    for (const Spin& x : s) validate_spin(x, params.r, true);
    const double eta = params.eta().real();
    return run_verifier("str-elliptic", opt.tol, [&](VerificationReport& rep) {
        rep.params = params_json(params);
        rep.params["alpha"] = triple_json(a);
        rep.params["spins"] = spins_json(s);
        const std::array<double, 3> al{a.alpha_i, a.alpha_j, a.alpha_k};
        cplx lhs = 0.0;
        json nodes = json::array();
        for (long m0 = 0; 2 * m0 <= params.r; ++m0) {
            auto integrand = [&](double x0) {
                const Spin s0{x0, m0};
                cplx v = weight_S_elliptic(s0, params, OneSpinForm::gamma, opt.series);
                for (int k = 0; k < 3; ++k) v *= weight_W_elliptic(eta - al[k], s[k], s0, params, opt.series);
                return v;
            };
            QuadratureInfo info;
            lhs += integrate_periodic(integrand, 0.0, pi, opt.quad, &info).value;
            nodes.push_back(info.nodes);
        }
        rep.diagnostics["nodes"] = nodes;
        rep.lhs = lhs;
        rep.rhs = weight_W_elliptic(a.alpha_i, s[1], s[2], params, opt.series) *
                  weight_W_elliptic(a.alpha_j, s[0], s[2], params, opt.series) *
                  weight_W_elliptic(a.alpha_k, s[1], s[0], params, opt.series);
        if (opt.cross_check) {
            EllipticFugacities f{{}, {}, params.with_convention(NomeConvention::appendix_b)};
            detail::star_fugacities(a, s, 1.0 / pi, f.t, f.u);
            EllipticBetaOptions bo;
            bo.tol = opt.tol;
            bo.quad = opt.quad;
            bo.series = opt.series;
            const VerificationReport sub = verify_elliptic_beta(f, bo);
            rep.diagnostics["substitution"] = {{"pass", sub.pass}, {"rel_err", sub.rel_err}};
            const bool direct = relative_distance(rep.lhs, rep.rhs) <= opt.tol;
            rep.subchecks_pass = sub.pass == direct;
        }
    });
}

enum class StarPath { direct, substitution };

struct HyperbolicStarOptions {
    double tol = 1e-6;
    StarPath path = StarPath::direct;
    PhiPath phi_path = PhiPath::automatic;
    KappaPath kappa_path = KappaPath::automatic;
    QuadratureSpec quad{};
    SeriesSpec series{};
};

// Left-hand side of the hyperbolic star-triangle relation. The x0 integral runs over the
// real line (folded onto [0, inf) on the direct path).
inline Estimate hyperbolic_star_lhs(const SpectralTriple& a, const SpinTriple& s, const HyperbolicParams& params,
                                    const HyperbolicStarOptions& opt, json* diag = nullptr)
{
    const double eta = params.eta().real();
    const std::array<double, 3> al{a.alpha_i, a.alpha_j, a.alpha_k};
    cplx log_kappa = 0.0;
    for (double x : al) log_kappa += kappa_h_log(eta - x, params, opt.kappa_path, opt.quad, opt.series).value;

    if (opt.path == StarPath::substitution) {
        HyperbolicFugacities f{{}, {}, params.to_upper_half()};
        detail::star_fugacities(a, s, 1.0, f.t, f.u);
        HyperbolicBetaOptions bo;
        bo.include_phase = false;
        bo.phi_path = opt.phi_path;
        bo.quad = opt.quad;
        bo.series = opt.series;
        json d;
        const cplx v = hyperbolic_beta_lhs(f, bo, &d) * std::exp(-log_kappa);
        if (diag) (*diag)["beta"] = d;
        return {v, d["quadrature_error"].get<double>() * std::abs(v)};
    }

    auto lp = [&](cplx z, long m) { return phi_rm_log(z, m, params, opt.phi_path, opt.quad, opt.series).value; };
    const cplx w1 = params.omega1, w2 = params.omega2;
    const double r = params.r;
    auto point = [&](double x0, long m0) -> cplx {
        const double md = static_cast<double>(m0);
        // One-spin weight in its sinh form, which vanishes cleanly at x0 = m0 = 0.
        const cplx sv = 4.0 * eps_spin(m0, params.r) / (r * std::sqrt(w1 * w2)) *
                        std::sinh(2.0 * pi / (w1 * r) * (x0 - I * w1 * md)) *
                        std::sinh(2.0 * pi / (w2 * r) * (x0 + I * w2 * md));
        cplx l = -log_kappa;
        for (int k = 0; k < 3; ++k) {
            const cplx ia = I * (eta - al[k]);
            const long ms = s[k].m + m0, mdiff = s[k].m - m0;
            const double xs = s[k].x + x0, xd = s[k].x - x0;
            l += lp(xs + ia, ms) + lp(xd + ia, mdiff) - lp(xs - ia, ms) - lp(xd - ia, mdiff);
        }
        return sv * std::exp(l);
    };
    const double decay = detail::hyperbolic_decay(params.to_upper_half());
    cplx sum = 0.0;
    double err = 0.0;
    json cut = json::array();
    for (long m0 = 0; 2 * m0 <= params.r; ++m0) {
        QuadratureInfo info;
        const Estimate e = integrate_semi_infinite([&](double x) { return point(x, m0) + point(-x, m0); }, decay,
                                                   opt.quad, &info);
        sum += e.value;
        err += e.error;
        cut.push_back(info.cutoff);
    }
    if (diag) {
        (*diag)["cutoff"] = cut;
        (*diag)["decay_rate"] = decay;
    }
    return {sum, err};
}

inline VerificationReport verify_str_hyperbolic(const SpectralTriple& a, const SpinTriple& s,
                                                const HyperbolicParams& params, const HyperbolicStarOptions& opt = {})
{
    params.validate();
    if (params.orientation != Orientation::right_half)
        fail(Errc::invalid_input, "star-triangle weights use Re(omega) > 0");
    a.validate(detail::real_eta(params.eta()));
    for (const Spin& x : s) validate_spin(x, params.r, false);
    const char* name = opt.path == StarPath::direct ? "str-hyperbolic-direct" : "str-hyperbolic-substitution";
    return run_verifier(name, opt.tol, [&](VerificationReport& rep) {
        rep.params = params_json(params);
        rep.params["alpha"] = triple_json(a);
        rep.params["spins"] = spins_json(s);
        const Estimate lhs = hyperbolic_star_lhs(a, s, params, opt, &rep.diagnostics);
        rep.diagnostics["lhs_error"] = lhs.error;
        HyperbolicEval ev{opt.phi_path, opt.kappa_path, opt.quad, opt.series};
        rep.lhs = lhs.value;
        rep.rhs = std::exp(log_weight_W_hyperbolic(a.alpha_i, s[1], s[2], params, ev) +
                           log_weight_W_hyperbolic(a.alpha_j, s[0], s[2], params, ev) +
                           log_weight_W_hyperbolic(a.alpha_k, s[1], s[0], params, ev));
    });
}

struct LensDualityOptions {
    double tol = 1e-6;
    double margin = 0.02;
    bool sign_factors = true;
    PhiPath phi_path = PhiPath::automatic;
    QuadratureSpec quad{};
    SeriesSpec series{};
};

// Equality of the lens partition functions built from the improved double sine.
inline VerificationReport verify_lens_duality(const std::vector<cplx>& x, const std::vector<long>& m,
                                              const HyperbolicParams& params, const LensDualityOptions& opt = {})
{
    params.validate();
    if (params.orientation != Orientation::right_half) fail(Errc::invalid_input, "lens duality uses Re(omega) > 0");
    const cplx Q = params.omega1 + params.omega2;
    // The same point as a set of beta-identity fugacities t = -x, u = m.
    HyperbolicFugacities f{{}, m, params.to_upper_half()};
    if (x.size() == 6)
        for (cplx v : x) f.t.push_back(-v);
    validate(f, opt.margin);
    return run_verifier("lens-duality", opt.tol, [&](VerificationReport& rep) {
        rep.params = params_json(params);
        rep.params["x"] = fugacity_json(x, m)["t"];
        rep.params["m"] = m;
        rep.params["sign_factors"] = opt.sign_factors;
        const int r = params.r;
        const double rd = r;
        const cplx w1 = params.omega1, w2 = params.omega2, iq2 = 0.5 * I * Q;
        auto ls = [&](cplx z, long mm) {
            cplx v = phi_rm_log(z, mm, params, opt.phi_path, opt.quad, opt.series).value;
            if (opt.sign_factors) v += std::log(sign_factor(mm, r));
            return v;
        };
        cplx lhs = 0.0;
        json cut = json::array();
        const double decay = detail::hyperbolic_decay(f.params);
        for (long m0 = 0; m0 < r; ++m0) {
            const double md = static_cast<double>(m0);
            auto integrand = [&](double x0) {
                cplx l = 0.0;
                for (int k = 0; k < 6; ++k) l += ls(x0 + x[k] + iq2, m0 + m[k]) - ls(x0 - x[k] - iq2, m0 - m[k]);
                return 2.0 / (rd * std::sqrt(w1 * w2)) * std::sinh(2.0 * pi / (rd * w1) * (x0 - I * w1 * md)) *
                       std::sinh(2.0 * pi / (rd * w2) * (x0 + I * w2 * md)) * std::exp(l);
            };
            QuadratureInfo info;
            lhs += integrate_real_line(integrand, decay, opt.quad, &info).value;
            cut.push_back(info.cutoff);
        }
        cplx l = 0.0;
        for (int j = 0; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) l += ls(x[j] + x[k] + iq2, m[j] + m[k]);
        rep.diagnostics["cutoff"] = cut;
        // Sign factors in the integrand relative to the right-hand side, per holonomy m0.
        json phases = json::array();
        for (long m0 = 0; m0 < r; ++m0) {
            cplx ph = 1.0;
            for (int k = 0; k < 6; ++k) ph *= sign_factor(m0 + m[k], r) / sign_factor(m0 - m[k], r);
            for (int j = 0; j < 6; ++j)
                for (int k = j + 1; k < 6; ++k) ph /= sign_factor(m[j] + m[k], r);
            phases.push_back(complex_json(ph));
        }
        rep.diagnostics["sign_factor_ratio"] = phases;
        rep.lhs = lhs;
        rep.rhs = std::exp(l);
    });
}

} // namespace lensbeta

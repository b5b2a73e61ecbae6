#pragma once

#include "lensbeta/core/series.hpp"
#include "lensbeta/special/bernoulli.hpp"
#include "lensbeta/special/params.hpp"
#include "lensbeta/special/sinh_kernel.hpp"

namespace lensbeta {

enum class PhiPath { integral, product, factorized, automatic };

inline constexpr double lattice_distance = 1e-6;
inline constexpr int max_strip_moves = 50;

namespace detail {

inline std::vector<SinhTerm> phi_terms(cplx z, long M, cplx w1, cplx w2, int r)
{
    const cplx eta = 0.5 * (w1 + w2);
    const double h = 0.5 * r - static_cast<double>(M);
    SinhTerm t1{-0.5, {2.0 * (I * z - h * w1)}, 1, {w1 * static_cast<double>(r), 2.0 * eta}, 2};
    SinhTerm t2{-0.5, {2.0 * (I * z + h * w2)}, 1, {w2 * static_cast<double>(r), 2.0 * eta}, 2};
    return {t1, t2};
}

// Fraction of the best attainable decay rate; 1 at the centre of the strip, 0 on its edge.
inline double phi_quality(cplx z, long M, cplx w1, cplx w2, int r)
{
    double q = 1.0;
    for (const auto& t : phi_terms(z, M, w1, w2, r)) {
        double best = 0.0;
        for (int j = 0; j < t.nb; ++j) best += std::abs(t.b[j].real());
        q = std::min(q, t.decay() / best);
    }
    return q;
}

inline SinhTerm phi10_term(cplx z, cplx w1, cplx w2) { return {-0.5, {2.0 * I * z}, 1, {w1, w2}, 2}; }

inline double phi10_quality(cplx z, cplx w1, cplx w2)
{
    const SinhTerm t = phi10_term(z, w1, w2);
    return t.decay() / (w1.real() + w2.real());
}

struct StripMove {
    cplx z;
    long M;
    cplx log_factor;
};

// The four shifts of the difference equations, as phi_M(z) = phi_{M'}(z') * factor.
inline std::array<StripMove, 4> strip_moves(cplx z, long M, cplx w1, cplx w2, int r)
{
    const cplx eta = 0.5 * (w1 + w2);
    const double rd = r;
    const long Mp = mod_r(M + 1, r), Mm = mod_r(M - 1, r);
    const double Md = static_cast<double>(M), Mmd = static_cast<double>(Mm);
    const cplx s_up1 = pi / (w2 * rd) * (z + I * (eta + w2 * Md));
    const cplx s_dn1 = pi / (w2 * rd) * (z - I * w1 + I * (eta + w2 * Mmd));
    const cplx s_dn2 = pi / (w1 * rd) * (z - I * (eta + w1 * Md));
    const cplx s_up2 = pi / (w1 * rd) * (z + I * w2 - I * (eta + w1 * Mmd));
    const cplx log_i = I * (pi / 2.0), log2 = std::numbers::ln2;
    return {{
        {z + I * w1, Mp, log2 + log_sinh(s_up1) - log_i},
        {z - I * w1, Mm, log_i - log2 - log_sinh(s_dn1)},
        {z - I * w2, Mp, -(log2 + log_i + log_sinh(s_dn2))},
        {z + I * w2, Mm, log2 + log_i + log_sinh(s_up2)},
    }};
}

// Walk z into the strip greedily, then integrate there.
template <class Quality, class Core>
Estimate extend_and_integrate(cplx z, long M, cplx w1, cplx w2, int r, Quality quality, Core core)
{
    cplx acc = 0.0;
    double q = quality(z, M);
    for (int moves = 0; q < 0.5; ++moves) {
        if (moves >= max_strip_moves) fail(Errc::domain, "argument not reachable by strip shifts");
        double best_q = q;
        StripMove best{};
        bool found = false;
        for (const auto& mv : strip_moves(z, M, w1, w2, r)) {
            if (!is_finite(mv.log_factor) || mv.log_factor.real() < -30.0 || mv.log_factor.real() > 700.0) continue;
            const double nq = quality(mv.z, mv.M);
            if (nq > best_q + 1e-12) {
                best_q = nq;
                best = mv;
                found = true;
            }
        }
        if (!found) {
            if (q > 0.0) break;
            fail(Errc::domain, "argument outside the strip and no admissible shift");
        }
        z = best.z;
        M = best.M;
        acc += best.log_factor;
        q = best_q;
    }
    Estimate e = core(z, M);
    e.value += acc;
    return e;
}

inline void check_phi_lattice(cplx z, long m, cplx w1, cplx w2, int r)
{
    const cplx eta = 0.5 * (w1 + w2);
    const double span = std::abs(z) + std::abs(eta) + 1.0;
    const long jmax = static_cast<long>(span / std::min(w1.real(), w2.real())) + 2;
    const long kmax = static_cast<long>(span / (r * std::min(w1.real(), w2.real()))) + 2;
    for (long j = 0; j <= jmax; ++j) {
        const double jd = static_cast<double>(j);
        for (long k = 0; k <= kmax; ++k) {
            const double n = static_cast<double>(r * k + mod_r(m + j, r));
            const cplx pole = I * eta + I * w2 * jd + I * w1 * n;
            const cplx zero = -I * eta - I * w1 * jd - I * w2 * n;
            if (std::abs(z - pole) < lattice_distance) fail(Errc::pole, "phi_{r,m} evaluated at a pole");
            if (std::abs(z - zero) < lattice_distance) fail(Errc::zero, "phi_{r,m} evaluated at a zero");
        }
    }
}

inline Estimate phi_integral_log(cplx z, long m, cplx w1, cplx w2, int r, const QuadratureSpec& spec)
{
    return extend_and_integrate(
        z, mod_r(m, r), w1, w2, r, [&](cplx zz, long MM) { return phi_quality(zz, MM, w1, w2, r); },
        [&](cplx zz, long MM) { return sinh_kernel_integral(phi_terms(zz, MM, w1, w2, r), spec); });
}

// log phi_{1,0}(z; W1, W2) through its single-kernel representation.
inline Estimate phi10_log(cplx z, cplx W1, cplx W2, const QuadratureSpec& spec)
{
    return extend_and_integrate(
        z, 0, W1, W2, 1, [&](cplx zz, long) { return phi10_quality(zz, W1, W2); },
        [&](cplx zz, long) { return sinh_kernel_integral({phi10_term(zz, W1, W2)}, spec); });
}

inline cplx b_phi(cplx z, long m, cplx w1, cplx w2, int r)
{
    const cplx eta = 0.5 * (w1 + w2);
    const double M = static_cast<double>(mod_r(m, r));
    return bernoulli_22(I * z + w1 * M + eta, static_cast<double>(r) * w1, 2.0 * eta) +
           bernoulli_22(I * z + w2 * (r - M) + eta, static_cast<double>(r) * w2, 2.0 * eta);
}

inline void require_product_domain(cplx w1, cplx w2)
{
    if (!((w1 / w2).imag() > 0.0)) fail(Errc::domain, "product representation needs Im(omega1/omega2) > 0");
}

inline cplx phi_product_log(cplx z, long m, cplx w1, cplx w2, int r, const SeriesSpec& spec)
{
    require_product_domain(w1, w2);
    const double rd = r, M = static_cast<double>(mod_r(m, r));
    const cplx lq = I * pi * w1 / (w2 * rd), lqt = -I * pi * w2 / (w1 * rd), lw = I * pi / rd;
    const cplx un = 2.0 * pi * (z + I * w2 * M) / (w2 * rd);
    const cplx ud = 2.0 * pi * (z - I * w1 * M) / (w1 * rd);
    cplx acc = I * pi * 0.5 * b_phi(z, m, w1, w2, r);
    for (int j = 0; j < r; ++j) {
        const double k = 2.0 * j + 1.0;
        acc += log_pochhammer_exp(un + k * (lq + lw), 2.0 * rd * lq, spec);
        acc -= log_pochhammer_exp(ud + k * (lqt - lw), 2.0 * rd * lqt, spec);
    }
    return acc;
}

} // namespace detail

inline PhiPath resolve_path(PhiPath path, cplx w1, cplx w2)
{
    if (path != PhiPath::automatic) return path;
    return (w1 / w2).imag() > 0.05 * std::abs(w1 / w2) ? PhiPath::product : PhiPath::integral;
}

// Some logarithm of phi_{r,m}(z) with an error estimate on that logarithm.
inline Estimate phi_rm_log(cplx z, long m, const HyperbolicParams& params, PhiPath path = PhiPath::automatic,
                           const QuadratureSpec& qspec = {}, const SeriesSpec& sspec = {})
{
    params.validate();
    if (params.orientation != Orientation::right_half) fail(Errc::invalid_input, "phi_{r,m} needs Re(omega) > 0");
    if (!is_finite(z)) fail(Errc::invalid_input, "non-finite argument");
    const cplx w1 = params.omega1, w2 = params.omega2;
    const int r = params.r;
    detail::check_phi_lattice(z, m, w1, w2, r);
    // phi_{r,m}(z) phi_{r,-m}(-z) = 1 fixes the value here exactly.
    if (z == cplx(0.0) && mod_r(m, r) == 0) return {0.0, 0.0};
    switch (resolve_path(path, w1, w2)) {
    case PhiPath::product:
        return {detail::phi_product_log(z, m, w1, w2, r, sspec), 1e-14 * (1.0 + std::abs(z))};
    case PhiPath::factorized: {
        const double M = static_cast<double>(mod_r(m, r));
        const cplx eta = params.eta();
        const Estimate a = detail::phi10_log(z + I * w1 * (r - 2.0 * M) * 0.5, w1 * static_cast<double>(r),
                                             2.0 * eta, qspec);
        const Estimate b = detail::phi10_log(z - I * w2 * (r - 2.0 * M) * 0.5, w2 * static_cast<double>(r),
                                             2.0 * eta, qspec);
        return {a.value + b.value, a.error + b.error};
    }
    default: return detail::phi_integral_log(z, m, w1, w2, r, qspec);
    }
}

inline Estimate phi_rm_estimate(cplx z, long m, const HyperbolicParams& params, PhiPath path = PhiPath::automatic,
                                const QuadratureSpec& qspec = {}, const SeriesSpec& sspec = {})
{
    const Estimate l = phi_rm_log(z, m, params, path, qspec, sspec);
    const cplx v = std::exp(l.value);
    return {v, std::abs(v) * l.error};
}

inline cplx phi_rm(cplx z, long m, const HyperbolicParams& params, PhiPath path = PhiPath::automatic,
                   const QuadratureSpec& qspec = {}, const SeriesSpec& sspec = {})
{
    return std::exp(phi_rm_log(z, m, params, path, qspec, sspec).value);
}

inline cplx b_phi(cplx z, long m, const HyperbolicParams& params)
{
    return detail::b_phi(z, m, params.omega1, params.omega2, params.r);
}

// The double-sine form: phi_{r,m}(i(z - eta)) as a prefactored product.
inline cplx double_sine_product(cplx z, long m, const HyperbolicParams& params, const SeriesSpec& spec = {})
{
    params.validate();
    const cplx w1 = params.omega1, w2 = params.omega2;
    detail::require_product_domain(w1, w2);
    const int r = params.r;
    const double rd = r, M = static_cast<double>(mod_r(m, r));
    const cplx lq = I * pi * w1 / (w2 * rd), lqt = -I * pi * w2 / (w1 * rd), lw = I * pi / rd;
    const cplx un = 2.0 * pi * I * (z + w2 * M) / (w2 * rd);
    const cplx ud = 2.0 * pi * I * (z - w1 * M) / (w1 * rd);
    cplx acc = I * pi * 0.5 * detail::b_phi(I * (z - params.eta()), m, w1, w2, r);
    for (int j = 0; j < r; ++j) {
        acc += log_pochhammer_exp(un + 2.0 * j * (lq + lw), 2.0 * rd * lq, spec);
        acc -= log_pochhammer_exp(ud + (2.0 * j + 2.0) * (lqt - lw), 2.0 * rd * lqt, spec);
    }
    return std::exp(acc);
}

// sigma(m) = e^{(i pi / 2r)([[m]](r - [[m]]) - (r-1) m^2)}; the exponent is reduced mod 4r.
inline cplx sign_factor(long m, int r)
{
    const long long M = mod_r(m, r), R = r, period = 4LL * r;
    const long long mm = mod_r(m, static_cast<long>(period));
    long long e = (M * (R - M) - (R - 1) * ((mm * mm) % period)) % period;
    if (e < 0) e += period;
    return std::exp(I * pi * static_cast<double>(e) / (2.0 * r));
}

// s_{b,-m}(x) = sigma(m) phi_{r,m}(x)
inline cplx improved_double_sine(cplx x, long m, const HyperbolicParams& params, PhiPath path = PhiPath::automatic,
                                 bool with_sign = true, const QuadratureSpec& qspec = {},
                                 const SeriesSpec& sspec = {})
{
    const cplx s = with_sign ? sign_factor(m, params.r) : cplx(1.0);
    return s * phi_rm(x, m, params, path, qspec, sspec);
}

// Product form used in gauge-theory partition functions; bases are q^{2r}, qt^{2r}.
inline cplx improved_double_sine_product(cplx x, long m, const HyperbolicParams& params, const SeriesSpec& spec = {})
{
    params.validate();
    return sign_factor(m, params.r) *
           std::exp(detail::phi_product_log(x, m, params.omega1, params.omega2, params.r, spec));
}

namespace detail {

inline SinhTerm gamma_h1_term(cplx z, cplx w1, cplx w2)
{
    const cplx v = 2.0 * z - w1 - w2;
    return {0.5, {I * pi * v}, 1, {-I * pi * w1, -I * pi * w2}, 2};
}

inline double gamma_h1_quality(cplx z, cplx w1, cplx w2)
{
    return gamma_h1_term(z, w1, w2).decay() / (pi * (w1 + w2).imag());
}

inline void check_gamma_h1_lattice(cplx z, cplx w1, cplx w2)
{
    const double span = std::abs(z) + std::abs(w1) + std::abs(w2) + 1.0;
    const long n = static_cast<long>(span / std::min(w1.imag(), w2.imag())) + 2;
    for (long j = 0; j <= n; ++j)
        for (long k = 0; k <= n; ++k) {
            const double jd = static_cast<double>(j), kd = static_cast<double>(k);
            if (std::abs(z + jd * w2 + kd * w1) < lattice_distance) fail(Errc::pole, "Gamma_h1 at a pole");
            if (std::abs(z - (w1 + w2) - jd * w1 - kd * w2) < lattice_distance) fail(Errc::zero, "Gamma_h1 at a zero");
        }
}

} // namespace detail

// Some logarithm of Gamma_{h,1}(z; w1, w2), Im(w) > 0.
inline Estimate gamma_h1_log(cplx z, cplx w1, cplx w2, const QuadratureSpec& spec = {})
{
    if (!(w1.imag() > 0.0) || !(w2.imag() > 0.0)) fail(Errc::domain, "Gamma_h1 needs Im(omega) > 0");
    detail::check_gamma_h1_lattice(z, w1, w2);
    cplx acc = 0.0;
    double q = detail::gamma_h1_quality(z, w1, w2);
    for (int moves = 0; q < 0.5; ++moves) {
        if (moves >= max_strip_moves) fail(Errc::domain, "argument not reachable by strip shifts");
        // Gamma(z) = Gamma(z + w) / (2 sin(pi z / w')) and Gamma(z) = Gamma(z - w) 2 sin(pi (z - w) / w').
        const std::array<std::pair<cplx, cplx>, 4> cand = {{
            {z + w1, -(std::numbers::ln2 + std::log(std::sin(pi * z / w2)))},
            {z - w1, std::numbers::ln2 + std::log(std::sin(pi * (z - w1) / w2))},
            {z + w2, -(std::numbers::ln2 + std::log(std::sin(pi * z / w1)))},
            {z - w2, std::numbers::ln2 + std::log(std::sin(pi * (z - w2) / w1))},
        }};
        double best_q = q;
        int best = -1;
        for (int i = 0; i < 4; ++i) {
            if (!is_finite(cand[i].second)) continue;
            const double nq = detail::gamma_h1_quality(cand[i].first, w1, w2);
            if (nq > best_q + 1e-12) {
                best_q = nq;
                best = i;
            }
        }
        if (best < 0) {
            if (q > 0.0) break;
            fail(Errc::domain, "argument outside the strip and no admissible shift");
        }
        z = cand[best].first;
        acc += cand[best].second;
        q = best_q;
    }
    Estimate e = sinh_kernel_integral({detail::gamma_h1_term(z, w1, w2)}, spec);
    e.value += acc;
    return e;
}

inline cplx hyperbolic_gamma_std(cplx z, cplx w1, cplx w2, const QuadratureSpec& spec = {})
{
    return std::exp(gamma_h1_log(z, w1, w2, spec).value);
}

enum class LensHyperbolicPath { phi, gamma_factors };

struct LensHyperbolicOptions {
    bool include_phase = true;
    ResidueMode mode = ResidueMode::reduced;
    LensHyperbolicPath path = LensHyperbolicPath::phi;
    PhiPath phi_path = PhiPath::automatic;
};

// gamma_h(z, m) = Gamma_h1(z + w1 m; r w1, w1 + w2) Gamma_h1(z + w2 (r - m); r w2, w1 + w2), log form.
inline Estimate gamma_h_little_log(cplx z, long m, const HyperbolicParams& params, const QuadratureSpec& spec = {})
{
    params.validate();
    if (params.orientation != Orientation::upper_half) fail(Errc::invalid_input, "gamma_h needs Im(omega) > 0");
    const cplx w1 = params.omega1, w2 = params.omega2;
    const double rd = params.r, md = static_cast<double>(m);
    const Estimate a = gamma_h1_log(z + w1 * md, rd * w1, w1 + w2, spec);
    const Estimate b = gamma_h1_log(z + w2 * (rd - md), rd * w2, w1 + w2, spec);
    return {a.value + b.value, a.error + b.error};
}

// Some logarithm of Gamma_h(z, m; w1, w2) with Im(w) > 0.
inline Estimate lens_hyperbolic_gamma_log(cplx z, long m, const HyperbolicParams& params,
                                          const LensHyperbolicOptions& opt = {}, const QuadratureSpec& qspec = {},
                                          const SeriesSpec& sspec = {})
{
    params.validate();
    if (params.orientation != Orientation::upper_half)
        fail(Errc::invalid_input, "lens hyperbolic gamma uses the Im(omega) > 0 orientation");
    const long mm = opt.mode == ResidueMode::reduced ? mod_r(m, params.r) : m;
    Estimate g;
    if (opt.path == LensHyperbolicPath::gamma_factors || opt.mode == ResidueMode::raw) {
        g = gamma_h_little_log(z, mm, params, qspec);
    } else {
        g = phi_rm_log(-z + params.eta(), mm, params.to_right_half(), opt.phi_path, qspec, sspec);
    }
    if (opt.include_phase) g.value += phi_h(static_cast<double>(mm), params.r);
    return g;
}

inline cplx lens_hyperbolic_gamma(cplx z, long m, const HyperbolicParams& params,
                                  const LensHyperbolicOptions& opt = {}, const QuadratureSpec& qspec = {},
                                  const SeriesSpec& sspec = {})
{
    return std::exp(lens_hyperbolic_gamma_log(z, m, params, opt, qspec, sspec).value);
}

} // namespace lensbeta

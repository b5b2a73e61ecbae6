#pragma once

#include "lensbeta/special/elliptic_gamma.hpp"
#include "lensbeta/special/hyperbolic_gamma.hpp"

namespace lensbeta {

// log kappa^e(alpha), summed as sum_{n != 0} with each term rewritten in powers of |pq| < 1.
inline Estimate kappa_e_log(cplx alpha, const EllipticParams& params, const SeriesSpec& spec = {})
{
    require_convention(params, NomeConvention::section3);
    const cplx lp = params.log_p(), lq = params.log_q(), lpq = lp + lq;
    const double r = params.r;
    if (!(std::abs(alpha.real()) < params.eta().real()))
        fail(Errc::domain, "kappa^e series needs |Re alpha| < Re eta");
    auto h = [&](long n) {
        const double nd = static_cast<double>(n);
        const cplx num = one_minus_exp(2.0 * r * nd * lpq);
        const cplx den = nd * one_minus_exp(4.0 * nd * lpq) * one_minus_exp(2.0 * r * nd * lp) *
                         one_minus_exp(2.0 * r * nd * lq);
        return std::exp(nd * 2.0 * lpq) * num / den;
    };
    auto term = [&](long n) {
        const long k = n < 0 ? -n : n;
        const cplx hv = n < 0 ? -h(k) : h(k);
        return std::exp(4.0 * alpha * static_cast<double>(n)) * hv;
    };
    return truncated_sum(term, IndexSet::symmetric_nonzero, spec);
}

inline cplx kappa_e(cplx alpha, const EllipticParams& params, const SeriesSpec& spec = {})
{
    return std::exp(kappa_e_log(alpha, params, spec).value);
}

enum class KappaPath { integral, product, automatic };

namespace detail {

inline void check_kappa_lattice(cplx alpha, cplx w1, cplx w2, int r)
{
    const cplx eta = 0.5 * (w1 + w2);
    const double rd = r;
    const long kmax = static_cast<long>((std::abs(alpha) + std::abs(eta) * 2.0 * r) /
                                        (0.5 * rd * std::min(w1.real(), w2.real()))) + 2;
    const int jmax = r % 2 == 1 ? r : r / 2;
    for (int j = 0; j < jmax; ++j)
        for (long k1 = 0; k1 <= kmax; ++k1)
            for (long k2 = 0; k2 <= kmax; ++k2) {
                if (r % 2 == 1 && std::min(k1, k2) % 2 != 0) continue;
                const cplx pt = eta * (2.0 * j + 1.0) + 0.5 * rd * (static_cast<double>(k1) * w1 +
                                                                     static_cast<double>(k2) * w2);
                if (std::abs(alpha - pt) < lattice_distance) fail(Errc::pole, "kappa^h evaluated at a pole");
                if (std::abs(alpha + pt) < lattice_distance) fail(Errc::zero, "kappa^h evaluated at a zero");
            }
}

inline cplx b_kappa(cplx alpha, cplx w1, cplx w2, int r)
{
    const cplx eta = 0.5 * (w1 + w2);
    return bernoulli_22(2.0 * (eta + alpha), static_cast<double>(r) * w1, 4.0 * eta) +
           bernoulli_22(2.0 * (eta - alpha), static_cast<double>(r) * w2, 4.0 * eta);
}

inline cplx kappa_h_product_log(cplx alpha, cplx w1, cplx w2, int r, const SeriesSpec& spec)
{
    require_product_domain(w1, w2);
    const cplx eta = 0.5 * (w1 + w2);
    const double rd = r;
    const cplx lq = I * pi * w1 / (w2 * rd), lqt = -I * pi * w2 / (w1 * rd), lw = I * pi / rd;
    const cplx un = 4.0 * I * pi * alpha / (w2 * rd), ud = 4.0 * I * pi * alpha / (w1 * rd);
    cplx acc = I * pi * 0.5 * b_kappa(alpha, w1, w2, r);
    if (r % 2 == 1) {
        const cplx lqb = -I * pi * rd * w2 / (2.0 * eta);
        const cplx u = I * pi * alpha / eta + lqb;
        acc += log_pochhammer_exp(u, 2.0 * lqb, spec) - log_pochhammer_exp(u + I * pi, 2.0 * lqb, spec);
        for (int j = 0; j < r; ++j) {
            const double k = 4.0 * j + 2.0;
            acc += log_pochhammer_exp(un + k * (lq + lw), 4.0 * rd * lq, spec);
            acc -= log_pochhammer_exp(ud + k * (lqt - lw), 4.0 * rd * lqt, spec);
        }
    } else {
        for (int j = 0; j < r / 2; ++j) {
            const double k = 4.0 * j + 2.0;
            acc += log_pochhammer_exp(un + k * (lq + lw), 2.0 * rd * lq, spec);
            acc -= log_pochhammer_exp(ud + k * (lqt - lw), 2.0 * rd * lqt, spec);
        }
    }
    return acc;
}

} // namespace detail

inline Estimate kappa_h_log(cplx alpha, const HyperbolicParams& params, KappaPath path = KappaPath::automatic,
                            const QuadratureSpec& qspec = {}, const SeriesSpec& sspec = {})
{
    params.validate();
    if (params.orientation != Orientation::right_half) fail(Errc::invalid_input, "kappa^h needs Re(omega) > 0");
    const cplx w1 = params.omega1, w2 = params.omega2, eta = params.eta();
    const int r = params.r;
    detail::check_kappa_lattice(alpha, w1, w2, r);
    if (alpha == cplx(0.0)) return {0.0, 0.0};
    if (path == KappaPath::automatic)
        path = resolve_path(PhiPath::automatic, w1, w2) == PhiPath::product ? KappaPath::product : KappaPath::integral;
    if (path == KappaPath::product) return {detail::kappa_h_product_log(alpha, w1, w2, r, sspec), 1e-14};
    if (!(std::abs(alpha.real()) < eta.real())) fail(Errc::domain, "kappa^h integral needs |Re alpha| < Re eta");
    const double rd = r;
    const SinhTerm t{0.5, {4.0 * alpha, 2.0 * rd * eta}, 2, {rd * w1, rd * w2, 4.0 * eta}, 3};
    return sinh_kernel_integral({t}, qspec);
}

inline cplx kappa_h(cplx alpha, const HyperbolicParams& params, KappaPath path = KappaPath::automatic,
                    const QuadratureSpec& qspec = {}, const SeriesSpec& sspec = {})
{
    return std::exp(kappa_h_log(alpha, params, path, qspec, sspec).value);
}

} // namespace lensbeta

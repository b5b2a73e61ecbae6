#pragma once

#include <array>
#include <vector>

#include "lensbeta/core/quadrature.hpp"

namespace lensbeta {

// w * prod_i sinh(a_i x) / prod_j sinh(b_j x) with one more sinh below than above,
// so that the term behaves like lead / x at the origin.
struct SinhTerm {
    cplx weight;
    std::array<cplx, 2> a{};
    int na = 0;
    std::array<cplx, 3> b{};
    int nb = 0;

    cplx lead() const
    {
        cplx v = weight;
        for (int i = 0; i < na; ++i) v *= a[i];
        for (int j = 0; j < nb; ++j) v /= b[j];
        return v;
    }

    bool vanishes() const
    {
        if (weight == cplx(0.0)) return true;
        for (int i = 0; i < na; ++i)
            if (a[i] == cplx(0.0)) return true;
        return false;
    }

    // Exponential decay rate of the term for x -> inf.
    double decay() const
    {
        double d = 0.0;
        for (int j = 0; j < nb; ++j) d += std::abs(b[j].real());
        for (int i = 0; i < na; ++i) d -= std::abs(a[i].real());
        return d;
    }

    // (term - lead/x) evaluated without cancellation near the origin.
    cplx regular_part(double x) const
    {
        double umax = 0.0;
        for (int i = 0; i < na; ++i) umax = std::max(umax, std::abs(a[i]) * x);
        for (int j = 0; j < nb; ++j) umax = std::max(umax, std::abs(b[j]) * x);
        const cplx l = lead();
        if (umax <= 0.2) {
            cplx s = 0.0;
            for (int i = 0; i < na; ++i) s += log_sinhc_series(a[i] * x);
            for (int j = 0; j < nb; ++j) s -= log_sinhc_series(b[j] * x);
            return l / x * expm1(s);
        }
        cplx s = 0.0;
        for (int i = 0; i < na; ++i) s += log_sinh(a[i] * x);
        for (int j = 0; j < nb; ++j) s -= log_sinh(b[j] * x);
        return weight * std::exp(s) - l / x;
    }

    // Bound on int_X^inf |term| dx / x.
    double tail_bound(double X) const
    {
        const double d = decay();
        double den = 1.0;
        for (int j = 0; j < nb; ++j) den *= -std::expm1(-2.0 * std::abs(b[j].real()) * X);
        return std::abs(weight) * std::pow(2.0, nb) * std::exp(-d * X) / (d * X * den);
    }
};

// int_0^inf dx/x * sum_t (term_t(x) - lead_t/x); the 1/x^2 pieces cancel against
// explicit terms in the callers and are integrated exactly on the tail.
inline Estimate sinh_kernel_integral(const std::vector<SinhTerm>& raw, const QuadratureSpec& spec,
                                     QuadratureInfo* info = nullptr)
{
    std::vector<SinhTerm> terms;
    for (const auto& t : raw)
        if (!t.vanishes()) terms.push_back(t);
    if (terms.empty()) return {0.0, 0.0};
    double decay = std::numeric_limits<double>::infinity();
    for (const auto& t : terms) decay = std::min(decay, t.decay());
    if (!(decay > 0.0)) fail(Errc::domain, "argument outside the strip of the integral representation");
    auto f = [&](double x) {
        cplx s = 0.0;
        for (const auto& t : terms) s += t.regular_part(x);
        return s / x;
    };
    TailModel tail;
    tail.bound = [&](double X) {
        double b = 0.0;
        for (const auto& t : terms) b += t.tail_bound(X);
        return b;
    };
    tail.correction = [&](double X) {
        cplx l = 0.0;
        for (const auto& t : terms) l += t.lead();
        return -l / X;
    };
    return integrate_semi_infinite(f, decay, tail, spec, info);
}

} // namespace lensbeta

#pragma once

#include <cmath>
#include <limits>

#include "lensbeta/core/complex.hpp"

namespace lensbeta {

struct SeriesSpec {
    double tail_tol = 1e-16;
    long max_terms = 2000000;

    void validate() const
    {
        if (!(tail_tol > 0.0) || max_terms < 1) fail(Errc::invalid_input, "SeriesSpec out of range");
    }
};

enum class IndexSet { symmetric_nonzero, nonnegative };

namespace detail {

// Tracks |d_j| for geometric tail certification: stops once the observed ratio
// is < 1 and d_j * rho / (1 - rho) is below tol.
struct GeometricTail {
    double prev = -1.0;
    int quiet = 0;

    bool done(double d, double tol)
    {
        bool ok = false;
        if (d == 0.0) {
            ok = ++quiet >= 3;
        } else {
            quiet = 0;
            if (prev > 0.0 && d < tol) {
                const double rho = d / prev;
                ok = rho < 1.0 && d * rho / (1.0 - rho) < tol;
            }
        }
        prev = d;
        return ok;
    }
};

} // namespace detail

// prod_{j>=0} term(j) with a certified geometric tail.
template <class T>
Estimate truncated_product(T&& term, const SeriesSpec& spec)
{
    spec.validate();
    cplx prod = 1.0;
    detail::GeometricTail tail;
    for (long j = 0; j < spec.max_terms; ++j) {
        const cplx t = term(j);
        prod *= t;
        const double d = std::abs(t - 1.0);
        if (tail.done(d, spec.tail_tol)) return {prod, std::abs(prod) * 2.0 * spec.tail_tol};
    }
    fail(Errc::nonconvergent, "product did not converge within max_terms");
}

// Sum over n >= 0 or over n != 0 (paired as term(n) + term(-n)).
template <class T>
Estimate truncated_sum(T&& term, IndexSet set, const SeriesSpec& spec)
{
    spec.validate();
    cplx sum = 0.0;
    detail::GeometricTail tail;
    const long start = set == IndexSet::nonnegative ? 0 : 1;
    for (long n = start; n < spec.max_terms; ++n) {
        const cplx t = set == IndexSet::nonnegative ? term(n) : term(n) + term(-n);
        sum += t;
        if (tail.done(std::abs(t), spec.tail_tol)) return {sum, 2.0 * spec.tail_tol};
    }
    fail(Errc::nonconvergent, "sum did not converge within max_terms");
}

// Number of terms J so that |e^{u}| * sum_{j>=J} |e^{a}|^j < tol.
inline long geometric_cutoff(double log_lead, double log_ratio, double tol, long max_terms)
{
    if (!(log_ratio < 0.0)) fail(Errc::domain, "series ratio is not inside the unit disc");
    const double r = std::exp(log_ratio);
    const double need = std::log(tol * (1.0 - r)) - log_lead;
    long n = need >= 0.0 ? 1 : static_cast<long>(std::ceil(need / log_ratio)) + 1;
    n = std::max(n, 1L);
    if (n > max_terms) fail(Errc::nonconvergent, "required truncation exceeds max_terms");
    return n;
}

// Some logarithm of (e^u; e^a)_inf = prod_{j>=0} (1 - e^{u + j a}), Re a < 0.
inline cplx log_pochhammer_exp(cplx u, cplx a, const SeriesSpec& spec)
{
    const long n = geometric_cutoff(u.real(), a.real(), spec.tail_tol * 0.25, spec.max_terms);
    cplx acc = 0.0;
    for (long j = 0; j < n; ++j) {
        const cplx w = u + static_cast<double>(j) * a;
        const cplx f = one_minus_exp(w);
        if (std::abs(f) < 1e-300) fail(Errc::zero, "Pochhammer factor vanishes");
        acc += w.real() > 30.0 ? log_one_minus_exp(w) : std::log(f);
    }
    return acc;
}

// prod_{j,k>=0} (1 - e^{u + j a + k b}) for Re a, Re b < 0, truncated on a
// rectangle whose complement carries sum |e^{...}| < tol/2.
inline cplx double_product_exp(cplx u, cplx a, cplx b, const SeriesSpec& spec, double pole_tol = -1.0)
{
    const double ra = std::exp(a.real()), rb = std::exp(b.real());
    if (!(ra < 1.0) || !(rb < 1.0)) fail(Errc::domain, "double product nome outside unit disc");
    const double denom = (1.0 - ra) * (1.0 - rb);
    const double tol = spec.tail_tol * 0.25;
    auto cut = [&](double log_r) {
        const double need = std::log(tol * denom) - u.real();
        long n = need >= 0.0 ? 1 : static_cast<long>(std::ceil(need / log_r)) + 1;
        n = std::max(n, 1L);
        if (n > spec.max_terms) fail(Errc::nonconvergent, "double product truncation too large");
        return n;
    };
    const long nj = cut(a.real()), nk = cut(b.real());
    const cplx eb = std::exp(b);
    cplx prod = 1.0;
    for (long j = 0; j < nj; ++j) {
        const cplx row = u + static_cast<double>(j) * a;
        // Skip the row once even its leading term is negligible.
        if (row.real() < std::log(tol) - 2.0 && j > 0) break;
        cplx x = std::exp(row);
        for (long k = 0; k < nk; ++k) {
            cplx f = 1.0 - x;
            if (std::abs(f) < 0.5) f = one_minus_exp(row + static_cast<double>(k) * b);
            if (pole_tol >= 0.0 && std::abs(f) <= pole_tol)
                fail(Errc::pole, "double product factor vanishes");
            prod *= f;
            x *= eb;
            if (std::abs(x) < tol * 1e-3) break;
        }
    }
    return prod;
}

} // namespace lensbeta

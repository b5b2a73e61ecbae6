#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "lensbeta/core/complex.hpp"

namespace lensbeta {

struct QuadratureSpec {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
    // Factor applied to analytic tail bounds when truncating infinite domains.
    double truncation_margin = 10.0;

    void validate() const
    {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1 ||
            !(truncation_margin >= 1.0))
            fail(Errc::invalid_input, "QuadratureSpec out of range");
    }

    double tolerance(cplx value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }
};

// Diagnostics filled by the integrators when a pointer is supplied.
struct QuadratureInfo {
    long evaluations = 0;
    long subdivisions = 0;
    long nodes = 0;
    double cutoff = 0.0;
    double tail_bound = 0.0;
};

// Tail treatment for [X, inf): a certified bound on what is dropped plus an
// optional analytically integrated piece added back in.
struct TailModel {
    std::function<double(double)> bound;
    std::function<cplx(double)> correction;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair (QUADPACK qk15 abscissae and weights).
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    cplx value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const cplx fc = f(c);
    cplx k = wgk[7] * fc, g = wg[3] * fc;
    double absk = wgk[7] * std::abs(fc);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * xgk[i];
        const cplx f1 = f(c - dx), f2 = f(c + dx);
        k += wgk[i] * (f1 + f2);
        absk += wgk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) g += wg[i / 2] * (f1 + f2);
    }
    k *= h;
    g *= h;
    absk *= std::abs(h);
    const double err = std::max(std::abs(k - g), 50.0 * std::numeric_limits<double>::epsilon() * absk);
    if (!is_finite(k)) fail(Errc::nonconvergent, "non-finite integrand value");
    return {a, b, k, err};
}

} // namespace detail

// Globally adaptive Gauss-Kronrod over consecutive panels given by breakpoints.
template <class F>
Estimate integrate_adaptive(F&& f, const std::vector<double>& breaks, const QuadratureSpec& spec,
                            QuadratureInfo* info = nullptr)
{
    spec.validate();
    if (breaks.size() < 2) fail(Errc::invalid_input, "need at least one panel");
    std::priority_queue<detail::Panel> heap;
    std::vector<detail::Panel> frozen;
    long evals = 0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        heap.push(detail::gk15(f, breaks[i], breaks[i + 1]));
        evals += 15;
    }

    auto totals = [&](cplx& v, double& e) {
        v = 0.0;
        e = 0.0;
        auto copy = heap;
        while (!copy.empty()) {
            v += copy.top().value;
            e += copy.top().error;
            copy.pop();
        }
        for (const auto& p : frozen) {
            v += p.value;
            e += p.error;
        }
    };

    cplx value;
    double err;
    totals(value, err);
    cplx checkpoint = value;
    long next_checkpoint = static_cast<long>(heap.size()) * 2;
    long panels = static_cast<long>(heap.size());

    while (err > spec.tolerance(value)) {
        if (heap.empty() || panels >= spec.max_subdivisions) {
            // Noisy plateau: accept if the last two refinement levels agree.
            const double diff = std::abs(value - checkpoint);
            if (diff <= 2.0 * spec.tolerance(value)) {
                err = std::max(err, diff);
                break;
            }
            fail(Errc::nonconvergent, "adaptive quadrature did not reach tolerance");
        }
        detail::Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            std::abs(worst.b - worst.a) < 1e-13 * (1.0 + std::abs(worst.a))) {
            frozen.push_back(worst);
            continue;
        }
        const detail::Panel left = detail::gk15(f, worst.a, mid);
        const detail::Panel right = detail::gk15(f, mid, worst.b);
        evals += 30;
        value += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
        if (panels >= next_checkpoint) {
            totals(value, err);
            checkpoint = value;
            next_checkpoint *= 2;
        }
    }
    totals(value, err);
    if (info) {
        info->evaluations += evals;
        info->subdivisions += panels;
    }
    return {value, err};
}

template <class F>
Estimate integrate_interval(F&& f, double a, double b, const QuadratureSpec& spec,
                            QuadratureInfo* info = nullptr)
{
    std::vector<double> br;
    for (int i = 0; i <= 4; ++i) br.push_back(a + (b - a) * i / 4.0);
    return integrate_adaptive(f, br, spec, info);
}

namespace detail {

inline std::vector<double> graded_breaks(double lo, double hi, int n)
{
    std::vector<double> br;
    for (int i = 0; i <= n; ++i) br.push_back(lo + (hi - lo) * i / n);
    return br;
}

// Envelope estimate of the tail when only the decay rate is known.
template <class F>
double sampled_tail(F& f, double x, double decay)
{
    double env = 0.0;
    for (double s : {1.0, 1.25, 1.5, 2.0}) {
        const double v = std::abs(f(s * x)) * std::exp(decay * (s - 1.0) * x);
        if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
        env = std::max(env, v);
    }
    return env / decay;
}

} // namespace detail

// Integral over [0, inf) with a caller-supplied tail model.
template <class F>
Estimate integrate_semi_infinite(F&& f, double decay_rate, const TailModel& tail,
                                 const QuadratureSpec& spec, QuadratureInfo* info = nullptr)
{
    spec.validate();
    if (!(decay_rate > 0.0) || !std::isfinite(decay_rate))
        fail(Errc::invalid_decay, "decay rate must be positive");
    const double target = spec.abs_tol / spec.truncation_margin;
    double x = 1.0 / decay_rate;
    double bound = tail.bound(x);
    int guard = 0;
    while (!(bound <= target)) {
        x *= 1.25;
        bound = tail.bound(x);
        if (++guard > 400) fail(Errc::nonconvergent, "tail bound never fell below tolerance");
    }
    QuadratureSpec inner = spec;
    inner.abs_tol = spec.abs_tol * 0.5;
    Estimate r = integrate_adaptive(f, detail::graded_breaks(0.0, x, 8), inner, info);
    if (tail.correction) r.value += tail.correction(x);
    r.error += bound;
    if (info) {
        info->cutoff = x;
        info->tail_bound = bound;
    }
    return r;
}

// Integral over [0, inf) knowing only |f(x)| <= C e^{-decay x}; C is estimated from samples.
template <class F>
Estimate integrate_semi_infinite(F&& f, double decay_rate, const QuadratureSpec& spec,
                                 QuadratureInfo* info = nullptr)
{
    if (!(decay_rate > 0.0) || !std::isfinite(decay_rate))
        fail(Errc::invalid_decay, "decay rate must be positive");
    TailModel tail{[&](double x) { return detail::sampled_tail(f, x, decay_rate); }, {}};
    return integrate_semi_infinite(f, decay_rate, tail, spec, info);
}

// Integral over the real line for |f(x)| <= C e^{-decay |x|}.
template <class F>
Estimate integrate_real_line(F&& f, double decay_rate, const QuadratureSpec& spec,
                             QuadratureInfo* info = nullptr)
{
    spec.validate();
    if (!(decay_rate > 0.0) || !std::isfinite(decay_rate))
        fail(Errc::invalid_decay, "decay rate must be positive");
    auto g = [&](double x) { return f(-x); };
    const double target = spec.abs_tol / spec.truncation_margin;
    double z = 1.0 / decay_rate;
    double bound = 0.0;
    int guard = 0;
    for (;;) {
        bound = detail::sampled_tail(f, z, decay_rate) + detail::sampled_tail(g, z, decay_rate);
        if (bound <= target) break;
        z *= 1.25;
        if (++guard > 400) fail(Errc::nonconvergent, "tail bound never fell below tolerance");
    }
    QuadratureSpec inner = spec;
    inner.abs_tol = spec.abs_tol * 0.5;
    // Split at the origin so that no node sits at x = 0.
    Estimate r = integrate_adaptive(f, detail::graded_breaks(-z, z, 16), inner, info);
    r.error += bound;
    if (info) {
        info->cutoff = z;
        info->tail_bound = bound;
    }
    return r;
}

// Equispaced rule for an analytic L-periodic integrand, doubling nodes until stable.
template <class F>
Estimate integrate_periodic(F&& f, double a, double period, const QuadratureSpec& spec,
                            QuadratureInfo* info = nullptr, long min_nodes = 32)
{
    spec.validate();
    // Offset keeps nodes away from the period endpoints and the midpoint.
    const double offset = period * 0.0096584;
    const long max_nodes = std::max(64L, 16L * spec.max_subdivisions);
    long n = 16;
    cplx sum = 0.0;
    for (long k = 0; k < n; ++k) sum += f(a + offset + period * k / n);
    long evals = n;
    cplx prev = sum * (period / n);
    for (;;) {
        cplx add = 0.0;
        for (long k = 0; k < n; ++k) add += f(a + offset + period * (k + 0.5) / n);
        evals += n;
        sum += add;
        n *= 2;
        const cplx cur = sum * (period / n);
        if (!is_finite(cur)) fail(Errc::nonconvergent, "non-finite periodic integrand");
        const double diff = std::abs(cur - prev);
        if (n >= min_nodes && diff <= spec.tolerance(cur)) {
            if (info) {
                info->evaluations += evals;
                info->nodes = n;
            }
            return {cur, diff};
        }
        if (n >= max_nodes) {
            if (diff <= 2.0 * spec.tolerance(cur)) {
                if (info) {
                    info->evaluations += evals;
                    info->nodes = n;
                }
                return {cur, diff};
            }
            fail(Errc::nonconvergent, "periodic rule did not converge");
        }
        prev = cur;
    }
}

} // namespace lensbeta

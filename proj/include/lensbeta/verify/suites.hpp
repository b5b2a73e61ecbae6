#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "lensbeta/verify/limits.hpp"
#include "lensbeta/verify/star_triangle.hpp"

namespace lensbeta {

struct SuiteOptions {
    int points = 50;
    std::uint64_t seed = 7;
    double tol = 1e-10;
    std::vector<int> r_values{1, 2, 3, 4};
    QuadratureSpec quad{};
    SeriesSpec series{};
};

namespace detail {

inline VerificationReport check(std::string name, json params, double tol, const std::function<void(cplx&, cplx&)>& f)
{
    return run_verifier(std::move(name), tol, [&](VerificationReport& rep) {
        rep.params = std::move(params);
        f(rep.lhs, rep.rhs);
    });
}

// Periods with Re > 0; twisted ones have Im(w1/w2) bounded away from zero.
inline HyperbolicParams sample_periods(Rng& rng, int r, bool twisted)
{
    const double a1 = twisted ? uniform(rng, 0.1, 0.45) : uniform(rng, -0.4, 0.4);
    const double a2 = twisted ? uniform(rng, -0.45, -0.1) : uniform(rng, -0.4, 0.4);
    return {std::polar(uniform(rng, 0.7, 1.3), a1), std::polar(uniform(rng, 0.7, 1.3), a2), r};
}

// Point strictly inside the strip on which the integral defining phi_{r,m} converges.
inline cplx sample_phi_point(Rng& rng, long m, const HyperbolicParams& p)
{
    const double r = p.r, M = static_cast<double>(mod_r(m, p.r));
    const double e = p.eta().real(), a = p.omega1.real(), b = p.omega2.real();
    const double lo = -e - std::min(a * (r - M), b * M), hi = e + std::min(a * M, b * (r - M));
    return {uniform(rng, -1.0, 1.0), lo + (hi - lo) * uniform(rng, 0.1, 0.9)};
}

inline json point_json(const HyperbolicParams& p, cplx z, long m)
{
    json j = params_json(p);
    j["z"] = complex_json(z);
    j["m"] = m;
    return j;
}

// sigma, tau (nomes e^{i pi sigma}, e^{i pi tau}) with |p|, |q| in [0.1, nome_max].
inline EllipticParams sample_section3(Rng& rng, int r, double nome_max)
{
    auto im = [&] { return -std::log(uniform(rng, 0.1, nome_max)) / pi; };
    return {cplx(uniform(rng, -0.3, 0.3), im()), cplx(uniform(rng, -0.3, 0.3), im()), r, NomeConvention::section3};
}

} // namespace detail

// Functional equations of phi_{r,m}, kappa_e and kappa_h on the integral paths.
inline std::vector<VerificationReport> functional_equation_suite(const SuiteOptions& opt = {})
{
    std::vector<VerificationReport> out;
    Rng rng(opt.seed);
    const auto& qs = opt.quad;
    const auto& ss = opt.series;
    for (int r : opt.r_values) {
        std::uniform_int_distribution<long> md(-2 * r, 2 * r);
        for (int k = 0; k < opt.points; ++k) {
            const HyperbolicParams p = detail::sample_periods(rng, r, false);
            const long m = md(rng);
            const cplx z = detail::sample_phi_point(rng, m, p);
            auto phi = [&](cplx x, long mm) { return phi_rm(x, mm, p, PhiPath::integral, qs, ss); };
            const double rd = r, M = static_cast<double>(mod_r(m, r));
            const cplx eta = p.eta(), w1 = p.omega1, w2 = p.omega2;
            const json pj = detail::point_json(p, z, m);
            out.push_back(detail::check("phi-inversion", pj, opt.tol, [&](cplx& l, cplx& rr) {
                l = phi(z, m) * phi(-z, -m);
                rr = 1.0;
            }));
            out.push_back(detail::check("phi-shift-omega1", pj, opt.tol, [&](cplx& l, cplx& rr) {
                l = phi(z + I * w1, m + 1) / phi(z, m);
                rr = I / (2.0 * std::sinh(pi / (w2 * rd) * (z + I * (eta + w2 * M))));
            }));
            out.push_back(detail::check("phi-shift-omega2", pj, opt.tol, [&](cplx& l, cplx& rr) {
                l = phi(z - I * w2, m + 1) / phi(z, m);
                rr = 2.0 * I * std::sinh(pi / (w1 * rd) * (z - I * (eta + w1 * M)));
            }));

            const cplx alpha = uniform(rng, -0.9, 0.9) * eta.real() + I * uniform(rng, -0.5, 0.5);
            json kj = params_json(p);
            kj["alpha"] = complex_json(alpha);
            auto kh = [&](cplx a) { return kappa_h(a, p, KappaPath::integral, qs, ss); };
            out.push_back(detail::check("kappa-h-inversion", kj, opt.tol, [&](cplx& l, cplx& rr) {
                l = kh(alpha) * kh(-alpha);
                rr = 1.0;
            }));
            const cplx ah = 0.5 * eta.real() * uniform(rng, 0.1, 1.9);
            kj["alpha"] = complex_json(ah);
            out.push_back(detail::check("kappa-h-crossing", kj, opt.tol, [&](cplx& l, cplx& rr) {
                l = kh(eta - ah) / kh(ah);
                rr = phi(I * (eta - 2.0 * ah), 0);
            }));

            const EllipticParams e = detail::sample_section3(rng, r, 0.3);
            const cplx ee = e.eta();
            const cplx ae = ee * uniform(rng, 0.05, 0.95);
            json ej = params_json(e);
            ej["alpha"] = complex_json(ae);
            out.push_back(detail::check("kappa-e-inversion", ej, opt.tol, [&](cplx& l, cplx& rr) {
                l = kappa_e(ae, e, ss) * kappa_e(-ae, e, ss);
                rr = 1.0;
            }));
            out.push_back(detail::check("kappa-e-crossing", ej, opt.tol, [&](cplx& l, cplx& rr) {
                l = kappa_e(ee - ae, e, ss) / kappa_e(ae, e, ss);
                rr = lens_elliptic_gamma_phi(I * (ee - 2.0 * ae), 0, e, ss);
            }));
        }
    }
    return out;
}

// Independent evaluation paths of the same quantity.
inline std::vector<VerificationReport> representation_suite(const SuiteOptions& opt = {})
{
    std::vector<VerificationReport> out;
    Rng rng(opt.seed);
    const auto& qs = opt.quad;
    const auto& ss = opt.series;
    for (int r : opt.r_values) {
        std::uniform_int_distribution<long> md(0, r - 1);
        std::uniform_int_distribution<long> sd(0, r / 2);
        for (int k = 0; k < opt.points; ++k) {
            const HyperbolicParams p = detail::sample_periods(rng, r, true);
            const long m = md(rng);
            const cplx z = detail::sample_phi_point(rng, m, p);
            const json pj = detail::point_json(p, z, m);
            const cplx integral = phi_rm(z, m, p, PhiPath::integral, qs, ss);
            out.push_back(detail::check("phi-integral-vs-product", pj, opt.tol, [&](cplx& l, cplx& rr) {
                l = integral;
                rr = phi_rm(z, m, p, PhiPath::product, qs, ss);
            }));
            out.push_back(detail::check("phi-integral-vs-factorized", pj, opt.tol, [&](cplx& l, cplx& rr) {
                l = integral;
                rr = phi_rm(z, m, p, PhiPath::factorized, qs, ss);
            }));
            out.push_back(detail::check("phi-double-sine", pj, opt.tol, [&](cplx& l, cplx& rr) {
                const cplx y = z / I + p.eta();
                l = phi_rm(I * (y - p.eta()), m, p, PhiPath::integral, qs, ss);
                rr = double_sine_product(y, m, p, ss);
            }));
            out.push_back(detail::check("improved-double-sine", pj, opt.tol, [&](cplx& l, cplx& rr) {
                l = improved_double_sine(z, m, p, PhiPath::integral, true, qs, ss);
                rr = improved_double_sine_product(z, m, p, ss);
            }));

            const cplx alpha = p.eta().real() * uniform(rng, -0.9, 0.9) + I * uniform(rng, -0.3, 0.3);
            json kj = params_json(p);
            kj["alpha"] = complex_json(alpha);
            out.push_back(detail::check(r % 2 ? "kappa-h-odd-r" : "kappa-h-even-r", kj, opt.tol,
                                        [&](cplx& l, cplx& rr) {
                                            l = kappa_h(alpha, p, KappaPath::integral, qs, ss);
                                            rr = kappa_h(alpha, p, KappaPath::product, qs, ss);
                                        }));

            const Spin s{uniform(rng, 0.05, 1.5), sd(rng)};
            json sj = params_json(p);
            sj["spin"] = {s.x, s.m};
            out.push_back(detail::check("one-spin-hyperbolic", sj, opt.tol, [&](cplx& l, cplx& rr) {
                l = weight_S_hyperbolic(s, p, OneSpinForm::gamma, {PhiPath::integral, KappaPath::integral, qs, ss});
                rr = weight_S_hyperbolic(s, p, OneSpinForm::theta_or_sinh);
            }));

            const EllipticParams e = detail::sample_section3(rng, r, 0.3);
            const Spin se{uniform(rng, 0.05, pi - 0.05), sd(rng)};
            json ej = params_json(e);
            ej["spin"] = {se.x, se.m};
            out.push_back(detail::check("one-spin-elliptic", ej, opt.tol, [&](cplx& l, cplx& rr) {
                l = weight_S_elliptic(se, e, OneSpinForm::gamma, ss);
                rr = weight_S_elliptic(se, e, OneSpinForm::theta_or_sinh, ss);
            }));
            const cplx ze(uniform(rng, -1.0, 1.0), uniform(rng, -0.3, 0.3));
            ej["z"] = complex_json(ze);
            ej["m"] = m;
            out.push_back(detail::check("lens-elliptic-gamma-factorized", ej, opt.tol, [&](cplx& l, cplx& rr) {
                l = lens_elliptic_gamma_phi(ze, m, e, ss);
                rr = lens_elliptic_gamma_phi_factorized(ze, m, e, ss);
            }));
            out.push_back(detail::check("lens-elliptic-gamma-conventions", ej, opt.tol, [&](cplx& l, cplx& rr) {
                const EllipticParams b = e.with_convention(NomeConvention::appendix_b);
                const cplx x = 0.5 * (e.sigma + e.tau) - ze / pi;
                l = lens_elliptic_gamma_phi(ze, m, e, ss);
                rr = gamma_e_little(x, mod_r(m, r), b, ss);
            }));

            const HyperbolicParams up = p.to_upper_half();
            const cplx zh(uniform(rng, -1.0, 1.0), uniform(rng, 0.1, 0.9) * (up.omega1 + up.omega2).imag());
            json hj = params_json(up);
            hj["z"] = complex_json(zh);
            hj["m"] = m;
            out.push_back(detail::check("lens-hyperbolic-gamma-paths", hj, opt.tol, [&](cplx& l, cplx& rr) {
                l = lens_hyperbolic_gamma(zh, m, up, {true, ResidueMode::reduced, LensHyperbolicPath::phi}, qs, ss);
                rr = lens_hyperbolic_gamma(zh, m, up, {true, ResidueMode::reduced, LensHyperbolicPath::gamma_factors},
                                           qs, ss);
            }));
        }
    }
    return out;
}

// Computes f(0..n-1) on `jobs` threads; results keep the index order and the first
// exception (by index) is rethrown after all workers finish.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int jobs, F&& f)
{
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    auto one = [&](std::size_t i) {
        try {
            out[i] = f(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) one(i);
            });
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

using Task = std::function<VerificationReport()>;

inline std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, int jobs = 1)
{
    return parallel_map<VerificationReport>(tasks.size(), jobs, [&](std::size_t i) { return tasks[i](); });
}

struct IdentitySuiteOptions {
    int points = 5;
    std::uint64_t seed = 7;
    double tol = 0.0;           // 0 keeps each verifier's default
    std::vector<int> r_values{}; // empty: the suite's default set
    double nome = 0.3;
    int jobs = 1;
};

namespace detail {

inline std::vector<int> r_set(const IdentitySuiteOptions& o, std::vector<int> fallback)
{
    return o.r_values.empty() ? fallback : o.r_values;
}

template <class Opt>
Opt with_tol(Opt o, const IdentitySuiteOptions& s)
{
    if (s.tol > 0.0) o.tol = s.tol;
    return o;
}

// Physical elliptic point: p = conj(q), so eta is real.
inline EllipticParams sample_physical_elliptic(Rng& rng, int r, double nome_max)
{
    const double b = -std::log(uniform(rng, 0.1, nome_max)) / pi, a = uniform(rng, -0.1, 0.1);
    return {cplx(a, b), cplx(-a, b), r, NomeConvention::section3};
}

// Physical hyperbolic point: omega1 = conj(omega2) with Re > 0.
inline HyperbolicParams sample_physical_hyperbolic(Rng& rng, int r)
{
    const cplx w = std::polar(uniform(rng, 0.8, 1.2), uniform(rng, 0.1, 0.5));
    return {w, std::conj(w), r};
}

inline SpectralTriple sample_triple(Rng& rng, double eta)
{
    const double f1 = uniform(rng, 0.15, 0.45), f2 = uniform(rng, 0.15, 0.45);
    return {f1 * eta, f2 * eta, (1.0 - f1 - f2) * eta};
}

inline SpinTriple sample_spins(Rng& rng, int r, double xmax)
{
    std::uniform_int_distribution<long> md(0, r / 2);
    SpinTriple s;
    for (Spin& x : s) x = {uniform(rng, 0.05, xmax), md(rng)};
    return s;
}

} // namespace detail

inline std::vector<VerificationReport> elliptic_beta_suite(const IdentitySuiteOptions& o = {})
{
    Rng rng(o.seed);
    std::vector<Task> tasks;
    const auto opt = detail::with_tol(EllipticBetaOptions{}, o);
    for (int r : detail::r_set(o, {1, 2, 3}))
        for (int k = 0; k < o.points; ++k) {
            const EllipticParams p = sample_elliptic_params(rng, r, o.nome);
            const EllipticFugacities f = sample_elliptic_fugacities(rng, p, 6, 1, true, opt.margin);
            tasks.push_back([f, opt] { return verify_elliptic_beta(f, opt); });
        }
    return run_tasks(tasks, o.jobs);
}

inline std::vector<VerificationReport> hyperbolic_beta_suite(const IdentitySuiteOptions& o = {})
{
    Rng rng(o.seed);
    std::vector<Task> tasks;
    const auto opt = detail::with_tol(HyperbolicBetaOptions{}, o);
    for (int r : detail::r_set(o, {1, 2, 3}))
        for (int k = 0; k < o.points; ++k) {
            const HyperbolicParams p = detail::sample_periods(rng, r, true).to_upper_half();
            const HyperbolicFugacities f = sample_hyperbolic_fugacities(rng, p, true, opt.margin);
            tasks.push_back([f, opt] { return verify_hyperbolic_beta(f, opt); });
        }
    return run_tasks(tasks, o.jobs);
}

inline std::vector<VerificationReport> lens_duality_suite(const IdentitySuiteOptions& o = {}, bool sign_factors = true)
{
    Rng rng(o.seed);
    std::vector<Task> tasks;
    auto opt = detail::with_tol(LensDualityOptions{}, o);
    opt.sign_factors = sign_factors;
    for (int r : detail::r_set(o, {1, 2, 3}))
        for (int k = 0; k < o.points; ++k) {
            const HyperbolicParams p = detail::sample_periods(rng, r, true);
            const HyperbolicFugacities f = sample_hyperbolic_fugacities(rng, p.to_upper_half(), true, opt.margin);
            std::vector<cplx> x;
            for (cplx t : f.t) x.push_back(-t);
            tasks.push_back([x, u = f.u, p, opt] { return verify_lens_duality(x, u, p, opt); });
        }
    return run_tasks(tasks, o.jobs);
}

inline std::vector<VerificationReport> str_elliptic_suite(const IdentitySuiteOptions& o = {})
{
    Rng rng(o.seed);
    std::vector<Task> tasks;
    const auto opt = detail::with_tol(EllipticStarOptions{}, o);
    for (int r : detail::r_set(o, {1, 2, 3}))
        for (int k = 0; k < o.points; ++k) {
            const EllipticParams p = detail::sample_physical_elliptic(rng, r, o.nome);
            const SpectralTriple a = detail::sample_triple(rng, p.eta().real());
            const SpinTriple s = detail::sample_spins(rng, r, pi - 0.05);
            tasks.push_back([a, s, p, opt] { return verify_str_elliptic(a, s, p, opt); });
        }
    return run_tasks(tasks, o.jobs);
}

// Both evaluation paths at every point; the substitution report also checks that the
// two left-hand sides agree.
inline std::vector<VerificationReport> str_hyperbolic_suite(const IdentitySuiteOptions& o = {})
{
    Rng rng(o.seed);
    std::vector<Task> tasks;
    const auto opt = detail::with_tol(HyperbolicStarOptions{}, o);
    for (int r : detail::r_set(o, {1, 2, 3}))
        for (int k = 0; k < o.points; ++k) {
            const HyperbolicParams p = detail::sample_physical_hyperbolic(rng, r);
            const SpectralTriple a = detail::sample_triple(rng, p.eta().real());
            const SpinTriple s = detail::sample_spins(rng, r, 1.5);
            tasks.push_back([a, s, p, opt] { return verify_str_hyperbolic(a, s, p, opt); });
            tasks.push_back([a, s, p, opt] {
                auto sub = opt;
                sub.path = StarPath::substitution;
                VerificationReport rep = verify_str_hyperbolic(a, s, p, sub);
                if (rep.error.empty()) {
                    const VerificationReport dir = verify_str_hyperbolic(a, s, p, opt);
                    const double d = relative_distance(rep.lhs, dir.lhs);
                    rep.diagnostics["direct_lhs_difference"] = d;
                    rep.subchecks_pass = rep.subchecks_pass && dir.error.empty() && d <= rep.tol;
                    rep.finish(rep.tol);
                }
                return rep;
            });
        }
    return run_tasks(tasks, o.jobs);
}

// E7 reflection at random u = 0 points, plus one point with t1+..+t4 = sigma+tau where the
// reflection is the identity.
inline std::vector<VerificationReport> e7_suite(const IdentitySuiteOptions& o = {})
{
    Rng rng(o.seed);
    std::vector<Task> tasks;
    const auto opt = detail::with_tol(EllipticBetaOptions{}, o);
    const std::vector<int> rs = detail::r_set(o, {1, 2});
    for (int r : rs)
        for (int k = 0; k < o.points; ++k) {
            const EllipticParams p = sample_elliptic_params(rng, r, o.nome);
            for (int attempt = 0;; ++attempt) {
                const EllipticFugacities f = sample_elliptic_fugacities(rng, p, 8, 2, false, opt.margin);
                try {
                    EllipticFugacities g = f;
                    g.t = e7_transform(f.t, p);
                    validate(g, 8, 2, opt.margin);
                } catch (const Error& e) {
                    if (e.code() != Errc::pole_pinch || attempt + 1 >= max_sample_attempts) throw;
                    continue;
                }
                tasks.push_back([f, opt] { return verify_E7(f, opt); });
                break;
            }
        }
    const EllipticParams p = sample_elliptic_params(rng, rs.front(), o.nome);
    const cplx s = p.sigma + p.tau;
    std::vector<cplx> t = sample_balanced(rng, 4, s, 0.5), t2 = sample_balanced(rng, 4, s, 0.5);
    t.insert(t.end(), t2.begin(), t2.end());
    const EllipticFugacities f{t, std::vector<long>(8, 0), p};
    tasks.push_back([f, opt] {
        VerificationReport rep = verify_E7(f, opt);
        rep.identity = "e7-trivial";
        return rep;
    });
    return run_tasks(tasks, o.jobs);
}

inline std::vector<VerificationReport> modr_suite(const IdentitySuiteOptions& o = {})
{
    Rng rng(o.seed);
    std::vector<Task> tasks;
    auto opt = ModrOptions{};
    if (o.tol > 0.0) opt.tol = o.tol;
    for (int r : detail::r_set(o, {1, 2, 3}))
        for (int k = 0; k < o.points; ++k) {
            const EllipticParams p = sample_elliptic_params(rng, r, o.nome);
            const EllipticFugacities f = sample_elliptic_fugacities(rng, p, 6, 1, true, opt.beta.margin);
            tasks.push_back([f, opt, r] { return verify_modr_equivalence(f, r, 1, opt); });
        }
    return run_tasks(tasks, o.jobs);
}

// Gamma_e and Gamma_h with the holonomy shifted by multiples of r, against the reduced index.
inline std::vector<VerificationReport> periodicity_suite(const IdentitySuiteOptions& o = {})
{
    Rng rng(o.seed);
    std::vector<VerificationReport> out;
    const double tol = o.tol > 0.0 ? o.tol : 1e-12;
    for (int r : detail::r_set(o, {1, 2, 3, 4}))
        for (int k = 0; k < o.points; ++k) {
            const EllipticParams e = sample_elliptic_params(rng, r, o.nome);
            const HyperbolicParams h = detail::sample_periods(rng, r, false).to_upper_half();
            std::uniform_int_distribution<long> md(0, r - 1);
            const long m = md(rng);
            const cplx ze(uniform(rng, -0.5, 0.5), uniform(rng, 0.05, 0.4) * (e.sigma + e.tau).imag());
            const cplx zh(uniform(rng, -0.5, 0.5), uniform(rng, 0.1, 0.9) * (h.omega1 + h.omega2).imag());
            for (long shift : {-2L, -1L, 1L, 2L}) {
                const long ms = m + shift * r;
                json pe = params_json(e);
                pe["z"] = complex_json(ze);
                pe["m"] = m;
                pe["shift"] = shift;
                out.push_back(detail::check("gamma-e-periodicity", pe, tol, [&](cplx& l, cplx& rr) {
                    l = lens_elliptic_gamma(ze, ms, e, {0, ResidueMode::raw, true});
                    rr = lens_elliptic_gamma(ze, m, e, {0, ResidueMode::raw, true});
                }));
                json ph = params_json(h);
                ph["z"] = complex_json(zh);
                ph["m"] = m;
                ph["shift"] = shift;
                out.push_back(detail::check("gamma-h-periodicity", ph, tol, [&](cplx& l, cplx& rr) {
                    l = lens_hyperbolic_gamma(zh, ms, h, {true, ResidueMode::raw});
                    rr = lens_hyperbolic_gamma(zh, m, h, {true, ResidueMode::raw});
                }));
            }
        }
    return out;
}

// The hyperbolic limit at the two configurations used for acceptance.
inline std::vector<VerificationReport> hyperbolic_limit_suite(const IdentitySuiteOptions& o = {})
{
    const std::vector<double> eps{0.2, 0.1, 0.05};
    LimitOptions a;
    a.channels = {"phi", "kappa", "pochhammer"};
    LimitOptions b;
    b.channels = {"lambda", "gamma"};
    if (o.tol > 0.0) a.tol = b.tol = o.tol;
    std::vector<Task> tasks{
        [=] { return verify_hyperbolic_limit(0.3, 0, {1.0, 1.0, 1}, eps, a); },
        [=] { return verify_hyperbolic_limit({0.3, 0.1}, 1, {2.0, 2.0, 3}, eps, b); },
    };
    return run_tasks(tasks, o.jobs);
}

// r = 1 anchors: the beta identities written with the ordinary elliptic and hyperbolic gamma
// functions, compared with the lens versions at the same point.
inline std::vector<VerificationReport> reduction_anchor_suite(const IdentitySuiteOptions& o = {})
{
    Rng rng(o.seed);
    std::vector<Task> tasks;
    const EllipticBetaOptions eopt = detail::with_tol(EllipticBetaOptions{}, o);
    const HyperbolicBetaOptions hopt = detail::with_tol(HyperbolicBetaOptions{}, o);
    for (int k = 0; k < o.points; ++k) {
        const EllipticParams p = sample_elliptic_params(rng, 1, o.nome);
        const EllipticFugacities f = sample_elliptic_fugacities(rng, p, 6, 1, false, eopt.margin);
        tasks.push_back([f, eopt] {
            return run_verifier("elliptic-beta-anchor", eopt.tol, [&](VerificationReport& rep) {
                const EllipticParams& p = f.params;
                rep.params = params_json(p);
                rep.params["fugacities"] = fugacity_json(f.t, f.u);
                auto G = [&](cplx x) { return gamma_e1(x, p.sigma, p.tau, eopt.series); };
                const Estimate in = integrate_periodic(
                    [&](double z) {
                        cplx v = 1.0 / (G(2.0 * z) * G(-2.0 * z));
                        for (cplx t : f.t) v *= G(t + z) * G(t - z);
                        return v;
                    },
                    0.0, 1.0, eopt.quad);
                const cplx P = std::exp(two_pi * I * p.sigma), Q = std::exp(two_pi * I * p.tau);
                rep.lhs = 0.5 * q_pochhammer(P, P, eopt.series) * q_pochhammer(Q, Q, eopt.series) * in.value;
                rep.rhs = 1.0;
                for (std::size_t i = 0; i < 6; ++i)
                    for (std::size_t j = i + 1; j < 6; ++j) rep.rhs *= G(f.t[i] + f.t[j]);
                const double d = relative_distance(rep.lhs, elliptic_beta_lhs(f, eopt));
                rep.diagnostics["lens_lhs_difference"] = d;
                rep.subchecks_pass = d <= eopt.tol;
            });
        });
    }
    for (int k = 0; k < o.points; ++k) {
        const HyperbolicParams p = detail::sample_periods(rng, 1, true).to_upper_half();
        const HyperbolicFugacities f = sample_hyperbolic_fugacities(rng, p, false, hopt.margin);
        tasks.push_back([f, hopt] {
            return run_verifier("hyperbolic-beta-anchor", hopt.tol, [&](VerificationReport& rep) {
                const HyperbolicParams& p = f.params;
                rep.params = params_json(p);
                rep.params["fugacities"] = fugacity_json(f.t, f.u);
                auto L = [&](cplx x) { return gamma_h1_log(x, p.omega1, p.omega2, hopt.quad).value; };
                const Estimate in = integrate_real_line(
                    [&](double z) {
                        if (std::abs(z) < 1e-5) return cplx(0.0);
                        cplx s = -L(2.0 * z) - L(-2.0 * z);
                        for (cplx t : f.t) s += L(t + z) + L(t - z);
                        return std::exp(s);
                    },
                    detail::hyperbolic_decay(p), hopt.quad);
                rep.lhs = in.value / (2.0 * std::sqrt(-p.omega1 * p.omega2));
                cplx s = 0.0;
                for (std::size_t i = 0; i < 6; ++i)
                    for (std::size_t j = i + 1; j < 6; ++j) s += L(f.t[i] + f.t[j]);
                rep.rhs = std::exp(s);
                const double d = relative_distance(rep.lhs, hyperbolic_beta_lhs(f, hopt));
                rep.diagnostics["lens_lhs_difference"] = d;
                rep.subchecks_pass = d <= hopt.tol;
            });
        });
    }
    return run_tasks(tasks, o.jobs);
}

} // namespace lensbeta

#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lensbeta/verify/suites.hpp"

namespace lensbeta::harness {

// Complex literal "<float>[+|-]<float>i", or a plain real "<float>", or "<float>i".
// No whitespace; the decimal point is always '.'.
inline cplx parse_complex(std::string_view s)
{
    auto bad = [&] { fail(Errc::invalid_input, "malformed complex literal '" + std::string(s) + "'"); };
    auto number = [&](std::string_view t) {
        double v = 0.0;
        if (t.empty() || t.front() == '+') bad();
        const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
        if (res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v)) bad();
        return v;
    };
    if (s.empty()) bad();
    if (s.back() != 'i') return {number(s), 0.0};
    const std::string_view body = s.substr(0, s.size() - 1);
    // The split is the last sign that does not start the literal or follow an exponent marker.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    if (split == std::string_view::npos) return {0.0, number(body)};
    const double re = number(body.substr(0, split));
    std::string_view im = body.substr(split);
    if (im.front() == '+') im.remove_prefix(1);
    return {re, number(im)};
}

inline std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// Parameters of an evaluation: JSON numbers, [re, im] pairs or literal strings.
class Params {
public:
    Params() = default;
    explicit Params(json j) : j_(std::move(j))
    {
        if (!j_.is_object()) fail(Errc::invalid_input, "parameters must be an object");
    }

    const json& raw() const { return j_; }
    bool has(const std::string& k) const { return j_.contains(k); }

    cplx complex(const std::string& k) const { return to_complex(at(k), k); }

    double real(const std::string& k) const
    {
        const cplx v = complex(k);
        if (v.imag() != 0.0) fail(Errc::invalid_input, "parameter '" + k + "' must be real");
        return v.real();
    }

    long integer(const std::string& k) const
    {
        const json& v = at(k);
        if (v.is_number_integer()) return v.get<long>();
        if (v.is_string()) {
            const std::string s = v.get<std::string>();
            long out = 0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
            if (res.ec == std::errc() && res.ptr == s.data() + s.size()) return out;
        }
        fail(Errc::invalid_input, "parameter '" + k + "' must be an integer");
    }

    std::vector<cplx> complex_list(const std::string& k) const
    {
        std::vector<cplx> out;
        for (const json& v : list(k)) out.push_back(to_complex(v, k));
        return out;
    }

    std::vector<long> integer_list(const std::string& k) const
    {
        std::vector<long> out;
        for (const json& v : list(k)) out.push_back(Params(json{{"v", v}}).integer("v"));
        return out;
    }

private:
    const json& at(const std::string& k) const
    {
        if (!j_.contains(k)) fail(Errc::invalid_input, "missing parameter '" + k + "'");
        return j_.at(k);
    }

    json list(const std::string& k) const
    {
        const json& v = at(k);
        if (v.is_array()) return v;
        if (v.is_string()) {
            json out = json::array();
            for (const std::string& s : split_list(v.get<std::string>())) out.push_back(s);
            return out;
        }
        fail(Errc::invalid_input, "parameter '" + k + "' must be a list");
    }

    static cplx to_complex(const json& v, const std::string& k)
    {
        if (v.is_number()) return {v.get<double>(), 0.0};
        if (v.is_string()) return parse_complex(v.get<std::string>());
        if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
            return {v[0].get<double>(), v[1].get<double>()};
        fail(Errc::invalid_input, "parameter '" + k + "' is not a complex number");
    }

    json j_ = json::object();
};

struct Target {
    std::string summary;
    std::vector<std::string> required;
    std::vector<std::string> optional;
    std::function<Estimate(const Params&)> eval;
};

namespace detail {

inline int rank(const Params& p) { return static_cast<int>(p.integer("r")); }

inline EllipticParams elliptic(const Params& p, NomeConvention c)
{
    return {p.complex("sigma"), p.complex("tau"), rank(p), c};
}

inline HyperbolicParams hyperbolic(const Params& p, Orientation o)
{
    return {p.complex("omega1"), p.complex("omega2"), rank(p), o};
}

inline Estimate exact(cplx v) { return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v)}; }

inline PhiPath phi_path(const Params& p)
{
    if (!p.has("path")) return PhiPath::automatic;
    const json& v = p.raw().at("path");
    if (!v.is_string()) fail(Errc::invalid_input, "path must be a string");
    const std::string s = v.get<std::string>();
    if (s == "integral") return PhiPath::integral;
    if (s == "product") return PhiPath::product;
    if (s == "factorized") return PhiPath::factorized;
    if (s == "automatic") return PhiPath::automatic;
    fail(Errc::invalid_input, "unknown path '" + s + "'");
}

inline KappaPath kappa_path(const Params& p)
{
    switch (phi_path(p)) {
    case PhiPath::integral: return KappaPath::integral;
    case PhiPath::product: return KappaPath::product;
    case PhiPath::automatic: return KappaPath::automatic;
    default: fail(Errc::invalid_input, "kappa-h has no factorized path");
    }
}

inline Estimate exp_estimate(const Estimate& l)
{
    const cplx v = std::exp(l.value);
    return {v, std::abs(v) * l.error};
}

inline EllipticFugacities elliptic_fugacities(const Params& p)
{
    return {p.complex_list("t"), p.integer_list("u"), elliptic(p, NomeConvention::appendix_b)};
}

inline HyperbolicFugacities hyperbolic_fugacities(const Params& p)
{
    return {p.complex_list("t"), p.integer_list("u"), hyperbolic(p, Orientation::upper_half)};
}

inline Spin spin(const Params& p, const std::string& x, const std::string& m) { return {p.real(x), p.integer(m)}; }

template <class F>
Estimate integral_with_error(F&& f)
{
    json d;
    const cplx v = f(&d);
    return {v, d.contains("quadrature_error") ? d["quadrature_error"].get<double>() : 0.0};
}

} // namespace detail

inline const std::map<std::string, Target>& targets()
{
    using detail::exact;
    static const std::map<std::string, Target> t = {
        {"q-pochhammer", {"(x; q)_inf", {"x", "q"}, {}, [](const Params& p) {
             return exact(q_pochhammer(p.complex("x"), p.complex("q")));
         }}},
        {"theta4", {"Jacobi theta_4(z | p)", {"z", "p"}, {}, [](const Params& p) {
             return exact(jacobi_theta4(p.complex("z"), p.complex("p")));
         }}},
        {"theta", {"theta(z; sigma) = (e^{2 pi i z}; p)(p e^{-2 pi i z}; p)", {"z", "sigma"}, {},
                   [](const Params& p) { return exact(theta_small(p.complex("z"), p.complex("sigma"))); }}},
        {"r2", {"R2(z, m; sigma, tau) with r_hat", {"z", "m", "sigma", "tau", "r_hat"}, {}, [](const Params& p) {
             return exact(poly_R2(p.complex("z"), static_cast<double>(p.integer("m")), p.complex("sigma"),
                                  p.complex("tau"), static_cast<double>(p.integer("r_hat"))));
         }}},
        {"elliptic-gamma-phi", {"Phi(z; p, q), odd-power double product", {"z", "p", "q"}, {}, [](const Params& p) {
             return exact(elliptic_gamma_phi(p.complex("z"), p.complex("p"), p.complex("q")));
         }}},
        {"lens-elliptic-gamma-phi", {"Phi_{r,m}(z), p = e^{i pi sigma}", {"z", "m", "r", "sigma", "tau"}, {},
                                     [](const Params& p) {
                                         return exact(lens_elliptic_gamma_phi(
                                             p.complex("z"), p.integer("m"),
                                             detail::elliptic(p, NomeConvention::section3)));
                                     }}},
        {"elliptic-gamma", {"Gamma_{e,1}(z; sigma, tau), p = e^{2 pi i sigma}", {"z", "sigma", "tau"}, {},
                            [](const Params& p) {
                                return exact(gamma_e1(p.complex("z"), p.complex("sigma"), p.complex("tau")));
                            }}},
        {"lens-elliptic-gamma", {"Gamma_e(z, m; sigma, tau), p = e^{2 pi i sigma}", {"z", "m", "r", "sigma", "tau"},
                                 {"r_hat"}, [](const Params& p) {
                                     LensGammaOptions o;
                                     if (p.has("r_hat")) o.r_hat = static_cast<int>(p.integer("r_hat"));
                                     return exact(lens_elliptic_gamma(p.complex("z"), p.integer("m"),
                                                                      detail::elliptic(p, NomeConvention::appendix_b),
                                                                      o));
                                 }}},
        {"kappa-e", {"kappa^e(alpha), p = e^{i pi sigma}", {"alpha", "r", "sigma", "tau"}, {}, [](const Params& p) {
             return detail::exp_estimate(
                 kappa_e_log(p.complex("alpha"), detail::elliptic(p, NomeConvention::section3)));
         }}},
        {"phi-rm", {"phi_{r,m}(z; omega1, omega2), Re(omega) > 0", {"z", "m", "r", "omega1", "omega2"}, {"path"},
                    [](const Params& p) {
                        return phi_rm_estimate(p.complex("z"), p.integer("m"),
                                               detail::hyperbolic(p, Orientation::right_half), detail::phi_path(p));
                    }}},
        {"kappa-h", {"kappa^h(alpha), Re(omega) > 0", {"alpha", "r", "omega1", "omega2"}, {"path"},
                     [](const Params& p) {
                         return detail::exp_estimate(kappa_h_log(p.complex("alpha"),
                                                                 detail::hyperbolic(p, Orientation::right_half),
                                                                 detail::kappa_path(p)));
                     }}},
        {"hyperbolic-gamma", {"Gamma_{h,1}(z; omega1, omega2), Im(omega) > 0", {"z", "omega1", "omega2"}, {},
                              [](const Params& p) {
                                  return detail::exp_estimate(
                                      gamma_h1_log(p.complex("z"), p.complex("omega1"), p.complex("omega2")));
                              }}},
        {"lens-hyperbolic-gamma", {"Gamma_h(z, m; omega1, omega2), Im(omega) > 0", {"z", "m", "r", "omega1", "omega2"},
                                   {}, [](const Params& p) {
                                       return detail::exp_estimate(lens_hyperbolic_gamma_log(
                                           p.complex("z"), p.integer("m"),
                                           detail::hyperbolic(p, Orientation::upper_half)));
                                   }}},
        {"improved-double-sine", {"sign(m) phi_{r,m}(z), Re(omega) > 0", {"z", "m", "r", "omega1", "omega2"},
                                  {"path"}, [](const Params& p) {
                                      const HyperbolicParams h = detail::hyperbolic(p, Orientation::right_half);
                                      const Estimate e = phi_rm_estimate(p.complex("z"), p.integer("m"), h,
                                                                         detail::phi_path(p));
                                      const cplx s = sign_factor(p.integer("m"), h.r);
                                      return Estimate{s * e.value, e.error};
                                  }}},
        {"weight-w-elliptic", {"W_alpha(sigma_i, sigma_j), elliptic model",
                               {"alpha", "xi", "mi", "xj", "mj", "r", "sigma", "tau"}, {}, [](const Params& p) {
                                   return exact(weight_W_elliptic(p.real("alpha"), detail::spin(p, "xi", "mi"),
                                                                  detail::spin(p, "xj", "mj"),
                                                                  detail::elliptic(p, NomeConvention::section3)));
                               }}},
        {"weight-s-elliptic", {"S(sigma_i), elliptic model", {"x", "m", "r", "sigma", "tau"}, {}, [](const Params& p) {
             return exact(weight_S_elliptic(detail::spin(p, "x", "m"), detail::elliptic(p, NomeConvention::section3)));
         }}},
        {"weight-w-hyperbolic", {"W_alpha(sigma_i, sigma_j), hyperbolic model",
                                 {"alpha", "xi", "mi", "xj", "mj", "r", "omega1", "omega2"}, {}, [](const Params& p) {
                                     return exact(weight_W_hyperbolic(p.real("alpha"), detail::spin(p, "xi", "mi"),
                                                                      detail::spin(p, "xj", "mj"),
                                                                      detail::hyperbolic(p, Orientation::right_half)));
                                 }}},
        {"weight-s-hyperbolic", {"S(sigma_i), hyperbolic model", {"x", "m", "r", "omega1", "omega2"}, {},
                                 [](const Params& p) {
                                     return exact(weight_S_hyperbolic(detail::spin(p, "x", "m"),
                                                                      detail::hyperbolic(p, Orientation::right_half)));
                                 }}},
        {"elliptic-beta-integrand", {"integrand of the elliptic beta identity", {"r", "sigma", "tau", "t", "u", "z", "y"},
                                     {}, [](const Params& p) {
                                         const EllipticFugacities f = detail::elliptic_fugacities(p);
                                         validate(f, 6, 1, 0.0);
                                         return exact(lensbeta::detail::elliptic_integrand(f, p.real("z"),
                                                                                          p.integer("y"), {}));
                                     }}},
        {"elliptic-beta-lhs", {"sum/integral side of the elliptic beta identity", {"r", "sigma", "tau", "t", "u"}, {},
                               [](const Params& p) {
                                   return detail::integral_with_error([&](json* d) {
                                       return elliptic_beta_lhs(detail::elliptic_fugacities(p), {}, d);
                                   });
                               }}},
        {"elliptic-beta-rhs", {"product side of the elliptic beta identity", {"r", "sigma", "tau", "t", "u"}, {},
                               [](const Params& p) { return exact(elliptic_beta_rhs(detail::elliptic_fugacities(p))); }}},
        {"v-function", {"eight-parameter sum/integral V", {"r", "sigma", "tau", "t", "u"}, {}, [](const Params& p) {
             return detail::integral_with_error(
                 [&](json* d) { return v_function(detail::elliptic_fugacities(p), {}, d); });
         }}},
        {"hyperbolic-beta-integrand", {"integrand of the hyperbolic beta identity",
                                       {"r", "omega1", "omega2", "t", "u", "z", "y"}, {}, [](const Params& p) {
                                           const HyperbolicFugacities f = detail::hyperbolic_fugacities(p);
                                           validate(f, 0.0);
                                           return exact(lensbeta::detail::hyperbolic_integrand(
                                               f, p.real("z"), p.integer("y"), {}));
                                       }}},
        {"hyperbolic-beta-lhs", {"sum/integral side of the hyperbolic beta identity",
                                 {"r", "omega1", "omega2", "t", "u"}, {}, [](const Params& p) {
                                     return detail::integral_with_error([&](json* d) {
                                         return hyperbolic_beta_lhs(detail::hyperbolic_fugacities(p), {}, d);
                                     });
                                 }}},
        {"hyperbolic-beta-rhs", {"product side of the hyperbolic beta identity", {"r", "omega1", "omega2", "t", "u"},
                                 {}, [](const Params& p) {
                                     return exact(hyperbolic_beta_rhs(detail::hyperbolic_fugacities(p)));
                                 }}},
    };
    return t;
}

inline const Target& find_target(const std::string& name)
{
    const auto& t = targets();
    const auto it = t.find(name);
    if (it == t.end()) fail(Errc::invalid_input, "unknown target '" + name + "'");
    return it->second;
}

// Rejects missing and unknown keys before anything is evaluated.
inline void check_keys(const Target& t, const Params& p)
{
    for (const std::string& k : t.required)
        if (!p.has(k)) fail(Errc::invalid_input, "missing parameter '" + k + "'");
    for (auto it = p.raw().begin(); it != p.raw().end(); ++it) {
        const bool known = std::find(t.required.begin(), t.required.end(), it.key()) != t.required.end() ||
                           std::find(t.optional.begin(), t.optional.end(), it.key()) != t.optional.end();
        if (!known) fail(Errc::invalid_input, "unknown parameter '" + it.key() + "'");
    }
}

// Parses every value once by the type its key implies, so malformed literals are rejected
// before any computation.
inline void check_values(const Params& p)
{
    static const std::set<std::string> integers{"m", "r", "r_hat", "y", "mi", "mj"};
    for (auto it = p.raw().begin(); it != p.raw().end(); ++it) {
        const std::string& k = it.key();
        if (integers.count(k)) {
            p.integer(k);
        } else if (k == "u") {
            p.integer_list(k);
        } else if (k == "t") {
            p.complex_list(k);
        } else if (k == "path") {
            if (!it.value().is_string()) fail(Errc::invalid_input, "path must be a string");
            detail::phi_path(p);
        } else {
            p.complex(k);
        }
    }
    if (p.has("r")) {
        const long r = p.integer("r");
        if (r < 1 || r > 1000) fail(Errc::invalid_input, "r must be in 1..1000");
    }
    if (p.has("r_hat") && p.integer("r_hat") < 1) fail(Errc::invalid_input, "r_hat must be >= 1");
}

inline void check_invocation(const std::string& name, const Params& p)
{
    check_keys(find_target(name), p);
    check_values(p);
}

inline Estimate evaluate(const std::string& name, const Params& p)
{
    check_invocation(name, p);
    return find_target(name).eval(p);
}

// ---- fixtures

struct FixtureRecord {
    std::string name;
    json params;
    cplx value;
    double tol = 0.0;
    std::string source;
};

struct FixtureResult {
    FixtureRecord record;
    cplx computed{};
    double deviation = 0.0; // relative, or absolute when the reference is zero
    bool pass = false;
    std::string error;
};

inline std::vector<FixtureRecord> read_fixtures(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_input, "cannot open fixture file " + path);
    std::vector<FixtureRecord> out;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, '\t')) f.push_back(cell);
        if (f.size() != 5) fail(Errc::invalid_input, path + ":" + std::to_string(n) + ": expected 5 fields");
        try {
            out.push_back({f[0], json::parse(f[1]), {std::stod(f[2]), std::stod(f[3])}, std::stod(f[4]),
                           path + ":" + std::to_string(n)});
        } catch (const std::exception& e) {
            fail(Errc::invalid_input, path + ":" + std::to_string(n) + ": " + e.what());
        }
    }
    return out;
}

// A fixture passes when the library reproduces it within `factor` times its stored tolerance.
inline FixtureResult check_fixture(const FixtureRecord& r, double factor = 10.0)
{
    FixtureResult res;
    res.record = r;
    try {
        res.computed = evaluate(r.name, Params(r.params)).value;
        const double scale = std::abs(r.value);
        res.deviation = std::abs(res.computed - r.value) / (scale > 0.0 ? scale : 1.0);
        res.pass = std::isfinite(res.deviation) && res.deviation <= factor * r.tol;
    } catch (const Error& e) {
        res.error = e.what();
    }
    return res;
}

} // namespace lensbeta::harness

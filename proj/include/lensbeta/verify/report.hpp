#pragma once

#include <chrono>
#include <string>

#include "json.hpp"

#include "lensbeta/core/complex.hpp"
#include "lensbeta/special/params.hpp"

namespace lensbeta {

using json = nlohmann::ordered_json;

struct VerificationReport {
    std::string identity;
    json params = json::object();
    cplx lhs{};
    cplx rhs{};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    double wall_time = 0.0;
    json diagnostics = json::object();
    std::string error;         // set when evaluation threw
    bool subchecks_pass = true; // secondary checks recorded in diagnostics

    void finish(double tolerance)
    {
        tol = tolerance;
        abs_err = std::abs(lhs - rhs);
        const double scale = std::max(std::abs(lhs), std::abs(rhs));
        rel_err = scale > 0.0 ? abs_err / scale : 0.0;
        pass = error.empty() && subchecks_pass && is_finite(lhs) && is_finite(rhs) && (abs_err <= tol || rel_err <= tol);
    }
};

inline json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const VerificationReport& r)
{
    json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["lhs"] = complex_json(r.lhs);
    j["rhs"] = complex_json(r.rhs);
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["wall_time_s"] = r.wall_time;
    j["diagnostics"] = r.diagnostics;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

inline json params_json(const EllipticParams& p)
{
    return {{"sigma", complex_json(p.sigma)},
            {"tau", complex_json(p.tau)},
            {"r", p.r},
            {"convention", p.convention == NomeConvention::section3 ? "section3" : "appendix_b"}};
}

inline json params_json(const HyperbolicParams& p)
{
    return {{"omega1", complex_json(p.omega1)},
            {"omega2", complex_json(p.omega2)},
            {"r", p.r},
            {"orientation", p.orientation == Orientation::right_half ? "right_half" : "upper_half"}};
}

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs body(report), converting numerical failures into a failed report.
// Input errors propagate to the caller.
template <class Body>
VerificationReport run_verifier(std::string name, double tol, Body&& body)
{
    Stopwatch clock;
    VerificationReport rep;
    rep.identity = std::move(name);
    try {
        body(rep);
    } catch (const Error& e) {
        if (e.is_input_error()) throw;
        rep.error = e.what();
        rep.diagnostics["error_code"] = errc_name(e.code());
    }
    rep.finish(tol);
    rep.wall_time = clock.seconds();
    return rep;
}

} // namespace lensbeta

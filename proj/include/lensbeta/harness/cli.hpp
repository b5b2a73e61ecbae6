#pragma once

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"

#include "lensbeta/harness/registry.hpp"

#ifndef LENSBETA_FIXTURE_DIR
#define LENSBETA_FIXTURE_DIR "fixtures"
#endif

namespace lensbeta::harness {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_input = 2 };

struct Invocation {
    std::string command; // eval | verify | sweep | fixtures | help
    std::string target;
    json params = json::object();
    std::uint64_t seed = 7;
    int points = 0;   // 0: the command's default
    double tol = 0.0; // 0: the command's default
    std::vector<int> r_values;
    int jobs = 1;
    std::string output;
    std::string filter;
    std::string fixture_dir = LENSBETA_FIXTURE_DIR;
    std::vector<std::string> vary;
    bool timing = false;
    bool dry_run = false;
    std::string help;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> s{"functional-equations", "representations", "elliptic-beta",
                                            "hyperbolic-beta",      "lens-duality",    "str-elliptic",
                                            "str-hyperbolic",       "e7",              "modr",
                                            "periodicity",          "hyperbolic-limit"};
    return s;
}

namespace detail {

[[noreturn]] inline void bad_input(const std::string& what) { fail(Errc::invalid_input, what); }

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T parse_int(const std::string& s, T lo, T hi, const std::string& what)
{
    T v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || v < lo || v > hi)
        bad_input(what + " must be an integer in " + std::to_string(lo) + ".." + std::to_string(hi));
    return v;
}

inline double parse_positive(const std::string& s, const std::string& what)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v) || !(v > 0.0))
        bad_input(what + " must be a positive number");
    return v;
}

inline bool valid_key(const std::string& k)
{
    return !k.empty() && std::all_of(k.begin(), k.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

inline std::pair<std::string, std::string> split_assignment(const std::string& s)
{
    const auto eq = s.find('=');
    if (eq == std::string::npos) bad_input("expected key=value, got '" + s + "'");
    std::string k = trim(s.substr(0, eq)), v = trim(s.substr(eq + 1));
    if (!valid_key(k)) bad_input("invalid key in '" + s + "'");
    if (v.empty()) bad_input("empty value for '" + k + "'");
    return {k, v};
}

// The flags that may also be set from a config file.
struct RawFlags {
    std::map<std::string, std::string> values;
};

inline const std::set<std::string>& flag_keys()
{
    static const std::set<std::string> k{"seed", "points", "tol", "r", "jobs", "output", "filter", "fixtures",
                                         "timing"};
    return k;
}

inline void read_config(const std::string& path, RawFlags& flags, json& params)
{
    std::ifstream in(path);
    if (!in) bad_input("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#' || t.front() == ';') continue;
        const auto [k, v] = split_assignment(t);
        if (flag_keys().count(k)) {
            flags.values.emplace(k, v); // explicit flags win
        } else if (!params.contains(k)) {
            params[k] = v;
        }
    }
}

// A varied parameter "key=lo:hi"; integer bounds sample integers.
struct Range {
    std::string key;
    bool integer = false;
    long ilo = 0, ihi = 0;
    cplx lo{}, hi{};
};

inline Range parse_range(const std::string& s)
{
    const auto [k, v] = split_assignment(s);
    const auto colon = v.find(':');
    if (colon == std::string::npos || v.find(':', colon + 1) != std::string::npos)
        bad_input("--vary expects key=lo:hi, got '" + s + "'");
    const std::string a = v.substr(0, colon), b = v.substr(colon + 1);
    Range r{k};
    const auto is_int = [](const std::string& x) {
        long tmp = 0;
        const auto res = std::from_chars(x.data(), x.data() + x.size(), tmp);
        return !x.empty() && res.ec == std::errc() && res.ptr == x.data() + x.size();
    };
    if (is_int(a) && is_int(b)) {
        r.integer = true;
        r.ilo = parse_int<long>(a, -1000000, 1000000, "range bound");
        r.ihi = parse_int<long>(b, -1000000, 1000000, "range bound");
        if (r.ilo > r.ihi) bad_input("empty range in '" + s + "'");
    } else {
        r.lo = parse_complex(a);
        r.hi = parse_complex(b);
    }
    return r;
}

inline json sample(const Range& r, Rng& rng)
{
    if (r.integer) return std::uniform_int_distribution<long>(r.ilo, r.ihi)(rng);
    const double re = r.lo.real() == r.hi.real() ? r.lo.real() : uniform(rng, std::min(r.lo.real(), r.hi.real()),
                                                                          std::max(r.lo.real(), r.hi.real()));
    const double im = r.lo.imag() == r.hi.imag() ? r.lo.imag() : uniform(rng, std::min(r.lo.imag(), r.hi.imag()),
                                                                          std::max(r.lo.imag(), r.hi.imag()));
    return complex_json({re, im});
}

inline bool explicit_point_suite(const std::string& s) { return s == "elliptic-beta" || s == "hyperbolic-beta"; }

inline EllipticFugacities explicit_elliptic(const Params& p)
{
    for (const char* k : {"r", "sigma", "tau", "t", "u"})
        if (!p.has(k)) bad_input(std::string("missing parameter '") + k + "'");
    check_keys({"", {"r", "sigma", "tau", "t", "u"}, {}, {}}, p);
    check_values(p);
    EllipticFugacities f = detail::elliptic_fugacities(p);
    validate(f, 6, 1, EllipticBetaOptions{}.margin);
    return f;
}

inline HyperbolicFugacities explicit_hyperbolic(const Params& p)
{
    check_keys({"", {"r", "omega1", "omega2", "t", "u"}, {}, {}}, p);
    check_values(p);
    HyperbolicFugacities f = detail::hyperbolic_fugacities(p);
    validate(f, HyperbolicBetaOptions{}.margin);
    return f;
}

} // namespace detail

// Parses and validates an invocation without evaluating anything. Throws Error(invalid_input,
// unbalanced, ...) on bad input.
inline Invocation parse_invocation(const std::vector<std::string>& args)
{
    Invocation inv;
    CLI::App app{"Lens elliptic/hyperbolic gamma functions and their identities", "lensbeta"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for all commands");

    std::map<std::string, std::string> given;
    std::vector<std::string> positional, vary;
    std::string config;
    bool timing = false, dry_run = false;

    auto common = [&](CLI::App* s) {
        for (const std::string k : {"seed", "points", "tol", "r", "jobs", "output"}) {
            const std::string desc = k == "r" ? "rank r, or a comma list" : k;
            s->add_option_function<std::string>(
                "--" + k, [&given, k](const std::string& v) { given[k] = v; }, desc);
        }
        s->add_option("--config", config, "flat key = value file merged under explicit flags");
        s->add_flag("--timing", timing, "report wall times (output is then not reproducible)");
        s->add_flag("--dry-run", dry_run, "validate the invocation and exit");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a function: eval <target> key=value ...");
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite: verify <suite>|all");
    CLI::App* sweep = app.add_subcommand("sweep", "evaluate at random points: sweep <target> --vary key=lo:hi");
    CLI::App* fixtures = app.add_subcommand("fixtures", "check or list the oracle fixtures");
    for (CLI::App* s : {eval, verify, sweep, fixtures}) {
        common(s);
        s->add_option("target", inv.target, "target")->required();
    }
    for (CLI::App* s : {eval, verify, sweep}) s->add_option("params", positional, "key=value parameters");
    sweep->add_option("--vary", vary, "key=lo:hi, sampled uniformly (repeatable)");
    fixtures->add_option_function<std::string>(
        "--filter", [&given](const std::string& v) { given["filter"] = v; }, "comma list of fixture names");
    fixtures->add_option_function<std::string>(
        "--fixtures", [&given](const std::string& v) { given["fixtures"] = v; }, "fixture directory");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        inv.command = "help";
        inv.help = app.help();
        return inv;
    } catch (const CLI::CallForAllHelp&) {
        inv.command = "help";
        inv.help = app.help("", CLI::AppFormatMode::All);
        return inv;
    } catch (const CLI::ParseError& e) {
        detail::bad_input(e.what());
    }
    for (CLI::App* s : {eval, verify, sweep, fixtures})
        if (s->parsed()) inv.command = s->get_name();
    if (inv.command.empty()) detail::bad_input("no command given");

    for (const std::string& a : positional) {
        const auto [k, v] = detail::split_assignment(a);
        if (inv.params.contains(k)) detail::bad_input("duplicate parameter '" + k + "'");
        inv.params[k] = v;
    }
    detail::RawFlags flags{given};
    if (timing) flags.values["timing"] = "true";
    if (!config.empty()) detail::read_config(config, flags, inv.params);

    const auto& f = flags.values;
    if (f.count("seed")) inv.seed = detail::parse_int<std::uint64_t>(f.at("seed"), 0, UINT64_MAX, "--seed");
    if (f.count("points")) inv.points = detail::parse_int<int>(f.at("points"), 1, 100000, "--points");
    if (f.count("tol")) inv.tol = detail::parse_positive(f.at("tol"), "--tol");
    if (f.count("jobs")) inv.jobs = detail::parse_int<int>(f.at("jobs"), 1, 256, "--jobs");
    if (f.count("r"))
        for (const std::string& x : split_list(f.at("r")))
            inv.r_values.push_back(detail::parse_int<int>(detail::trim(x), 1, 1000, "--r"));
    if (f.count("output")) inv.output = f.at("output");
    if (f.count("filter")) inv.filter = f.at("filter");
    if (f.count("fixtures")) inv.fixture_dir = f.at("fixtures");
    if (f.count("timing")) {
        const std::string t = f.at("timing");
        if (t != "true" && t != "false" && t != "1" && t != "0") detail::bad_input("timing must be true or false");
        inv.timing = t == "true" || t == "1";
    }
    inv.dry_run = dry_run;
    inv.vary = vary;

    if (inv.command == "eval" || inv.command == "sweep") {
        find_target(inv.target);
        if (!inv.r_values.empty() && !inv.params.contains("r")) {
            if (inv.r_values.size() != 1) detail::bad_input("eval takes a single --r");
            inv.params["r"] = inv.r_values.front();
        }
        if (inv.command == "eval") {
            check_invocation(inv.target, Params(inv.params));
        } else {
            json probe = inv.params;
            for (const std::string& v : inv.vary) {
                const detail::Range r = detail::parse_range(v);
                if (probe.contains(r.key)) detail::bad_input("parameter '" + r.key + "' is both fixed and varied");
                probe[r.key] = r.integer ? json(r.ilo) : complex_json(r.lo);
            }
            check_keys(find_target(inv.target), Params(probe));
            check_values(Params(probe));
        }
    } else if (inv.command == "verify") {
        const auto& s = suite_names();
        if (inv.target != "all" && inv.target != "pfidentity" && std::find(s.begin(), s.end(), inv.target) == s.end())
            detail::bad_input("unknown suite '" + inv.target + "'");
        if (!inv.params.empty()) {
            if (!detail::explicit_point_suite(inv.target))
                detail::bad_input("suite '" + inv.target + "' does not take an explicit point");
            if (inv.target == "elliptic-beta")
                detail::explicit_elliptic(Params(inv.params));
            else
                detail::explicit_hyperbolic(Params(inv.params));
        }
    } else if (inv.command == "fixtures") {
        if (inv.target != "check" && inv.target != "list") detail::bad_input("fixtures mode is check or list");
    }
    if (inv.command != "sweep" && !inv.vary.empty()) detail::bad_input("--vary is only used by sweep");
    return inv;
}

// ---- commands

namespace detail {

inline json error_json(const Error& e)
{
    return {{"error", e.what()}, {"error_code", errc_name(e.code())}};
}

inline int severity(const Error& e) { return e.is_input_error() ? exit_input : exit_fail; }

inline void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

inline json report_json(const VerificationReport& r, bool timing)
{
    json j = to_json(r);
    if (!timing) j["wall_time_s"] = nullptr;
    return j;
}

inline json value_record(const std::string& target, const json& params, int& code)
{
    json rec{{"target", target}, {"params", params}};
    try {
        const Estimate e = evaluate(target, Params(params));
        if (!is_finite(e.value)) fail(Errc::nonconvergent, "non-finite value");
        rec["value"] = complex_json(e.value);
        rec["est_error"] = e.error;
    } catch (const Error& e) {
        rec.update(error_json(e));
        code = std::max(code, severity(e));
    }
    return rec;
}

inline std::vector<VerificationReport> run_suite(const std::string& name, const Invocation& inv)
{
    if (name == "functional-equations" || name == "representations") {
        SuiteOptions o;
        o.points = inv.points > 0 ? inv.points : (name == "representations" ? 20 : 50);
        o.seed = inv.seed;
        if (inv.tol > 0.0) o.tol = inv.tol;
        else if (name == "representations") o.tol = 1e-8;
        if (!inv.r_values.empty()) o.r_values = inv.r_values;
        return name == "representations" ? representation_suite(o) : functional_equation_suite(o);
    }
    if (name == "elliptic-beta" && !inv.params.empty()) {
        EllipticBetaOptions opt;
        if (inv.tol > 0.0) opt.tol = inv.tol;
        return {verify_elliptic_beta(explicit_elliptic(Params(inv.params)), opt)};
    }
    if (name == "hyperbolic-beta" && !inv.params.empty()) {
        HyperbolicBetaOptions opt;
        if (inv.tol > 0.0) opt.tol = inv.tol;
        return {verify_hyperbolic_beta(explicit_hyperbolic(Params(inv.params)), opt)};
    }
    IdentitySuiteOptions o;
    if (inv.points > 0) o.points = inv.points;
    o.seed = inv.seed;
    o.tol = inv.tol;
    o.r_values = inv.r_values;
    o.jobs = inv.jobs;
    if (name == "elliptic-beta") return elliptic_beta_suite(o);
    if (name == "hyperbolic-beta") return hyperbolic_beta_suite(o);
    if (name == "lens-duality" || name == "pfidentity") return lens_duality_suite(o);
    if (name == "str-elliptic") return str_elliptic_suite(o);
    if (name == "str-hyperbolic") return str_hyperbolic_suite(o);
    if (name == "e7") return e7_suite(o);
    if (name == "modr") return modr_suite(o);
    if (name == "periodicity") return periodicity_suite(o);
    if (name == "hyperbolic-limit") return hyperbolic_limit_suite(o);
    bad_input("unknown suite '" + name + "'");
}

inline int cmd_eval(const Invocation& inv, std::ostream& out)
{
    int code = exit_pass;
    emit(out, value_record(inv.target, inv.params, code));
    return code;
}

inline int cmd_sweep(const Invocation& inv, std::ostream& out)
{
    std::vector<Range> ranges;
    for (const std::string& v : inv.vary) ranges.push_back(parse_range(v));
    Rng rng(inv.seed);
    const int n = inv.points > 0 ? inv.points : 10;
    std::vector<json> points(n, inv.params);
    for (json& p : points)
        for (const Range& r : ranges) p[r.key] = sample(r, rng);
    std::vector<int> codes(n, exit_pass);
    const std::vector<json> recs = parallel_map<json>(n, inv.jobs, [&](std::size_t i) {
        json rec = value_record(inv.target, points[i], codes[i]);
        rec["point"] = i;
        return rec;
    });
    for (const json& r : recs) emit(out, r);
    return *std::max_element(codes.begin(), codes.end());
}

inline int cmd_verify(const Invocation& inv, std::ostream& out)
{
    const std::vector<std::string> names =
        inv.target == "all" ? suite_names() : std::vector<std::string>{inv.target};
    bool all_pass = true;
    std::size_t total = 0, passed = 0;
    for (const std::string& name : names) {
        const std::vector<VerificationReport> reps = run_suite(name, inv);
        std::size_t ok = 0;
        for (const VerificationReport& r : reps) {
            emit(out, report_json(r, inv.timing));
            ok += r.pass;
        }
        emit(out, {{"suite", name}, {"reports", reps.size()}, {"passed", ok}, {"pass", ok == reps.size()}});
        all_pass = all_pass && ok == reps.size();
        total += reps.size();
        passed += ok;
    }
    if (names.size() > 1) emit(out, {{"suite", "all"}, {"reports", total}, {"passed", passed}, {"pass", all_pass}});
    return all_pass ? exit_pass : exit_fail;
}

inline std::vector<FixtureRecord> load_fixtures(const Invocation& inv)
{
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    std::error_code ec;
    if (fs::is_regular_file(inv.fixture_dir, ec)) {
        files.push_back(inv.fixture_dir);
    } else if (fs::is_directory(inv.fixture_dir, ec)) {
        for (const auto& e : fs::directory_iterator(inv.fixture_dir, ec))
            if (e.path().extension() == ".tsv") files.push_back(e.path().string());
    } else {
        bad_input("no fixture file or directory at " + inv.fixture_dir);
    }
    std::sort(files.begin(), files.end());
    std::vector<FixtureRecord> out;
    std::set<std::string> wanted;
    if (!inv.filter.empty())
        for (const std::string& s : split_list(inv.filter)) wanted.insert(trim(s));
    for (const std::string& f : files)
        for (FixtureRecord& r : read_fixtures(f))
            if (wanted.empty() || wanted.count(r.name)) out.push_back(std::move(r));
    if (out.empty()) bad_input("no fixture records selected");
    return out;
}

inline int cmd_fixtures(const Invocation& inv, std::ostream& out)
{
    const std::vector<FixtureRecord> recs = load_fixtures(inv);
    if (inv.target == "list") {
        std::vector<std::pair<std::string, int>> counts;
        for (const FixtureRecord& r : recs) {
            auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == r.name; });
            if (it == counts.end()) counts.emplace_back(r.name, 1);
            else ++it->second;
        }
        for (const auto& [name, n] : counts) emit(out, {{"name", name}, {"records", n}});
        emit(out, {{"names", counts.size()}, {"records", recs.size()}});
        return exit_pass;
    }
    const std::vector<FixtureResult> res =
        parallel_map<FixtureResult>(recs.size(), inv.jobs, [&](std::size_t i) { return check_fixture(recs[i]); });
    double worst = 0.0, worst_ratio = 0.0;
    std::size_t failed = 0;
    for (const FixtureResult& r : res) {
        json j{{"name", r.record.name},     {"source", r.record.source},      {"params", r.record.params},
               {"reference", complex_json(r.record.value)}, {"value", complex_json(r.computed)},
               {"deviation", r.deviation}, {"tol", r.record.tol},            {"pass", r.pass}};
        if (!r.error.empty()) j["error"] = r.error;
        emit(out, j);
        failed += !r.pass;
        if (r.error.empty()) {
            worst = std::max(worst, r.deviation);
            worst_ratio = std::max(worst_ratio, r.deviation / r.record.tol);
        }
    }
    emit(out, {{"fixtures", "check"},
               {"records", res.size()},
               {"failed", failed},
               {"max_deviation", worst},
               {"max_deviation_over_tol", worst_ratio},
               {"pass", failed == 0}});
    return failed == 0 ? exit_pass : exit_fail;
}

} // namespace detail

// Runs the command line (without the program name). Never throws.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::ostream* sink = &out;
    std::ofstream file;
    try {
        const Invocation inv = parse_invocation(args);
        if (inv.command == "help") {
            out << inv.help;
            return exit_pass;
        }
        if (inv.dry_run) return exit_pass;
        if (!inv.output.empty()) {
            file.open(inv.output, std::ios::trunc);
            if (!file) detail::bad_input("cannot write " + inv.output);
            sink = &file;
        }
        if (inv.command == "eval") return detail::cmd_eval(inv, *sink);
        if (inv.command == "sweep") return detail::cmd_sweep(inv, *sink);
        if (inv.command == "verify") return detail::cmd_verify(inv, *sink);
        return detail::cmd_fixtures(inv, *sink);
    } catch (const Error& e) {
        detail::emit(*sink, detail::error_json(e));
        err << "lensbeta: " << e.what() << '\n';
        return detail::severity(e);
    } catch (const json::exception& e) {
        detail::emit(*sink, {{"error", e.what()}, {"error_code", "INVALID_INPUT"}});
        err << "lensbeta: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        detail::emit(*sink, {{"error", e.what()}, {"error_code", "INTERNAL"}});
        err << "lensbeta: " << e.what() << '\n';
        return exit_fail;
    }
}

} // namespace lensbeta::harness

#include <gtest/gtest.h>

#include <cstdio>
#include <random>
#include <sstream>

#include "lensbeta/harness/cli.hpp"

using namespace lensbeta;
using harness::run_cli;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json first_line(const std::string& s) { return json::parse(s.substr(0, s.find('\n'))); }

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("lensbeta_" + name)).string();
}

} // namespace

TEST(Eval, PhiAtTheOriginIsOne)
{
    const CliRun r = cli({"eval", "phi-rm", "r=1", "m=0", "z=0+0i", "omega1=1+0.5i", "omega2=0.8+0.3i"});
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = first_line(r.out);
    EXPECT_EQ(j["target"], "phi-rm");
    EXPECT_EQ(j["value"], json::array({1.0, 0.0}));
    EXPECT_TRUE(j.contains("est_error"));
}

TEST(Eval, KappaAtZeroIsOne)
{
    const CliRun r = cli({"eval", "kappa-h", "r=2", "alpha=0", "omega1=1+0.2i", "omega2=1-0.1i"});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(first_line(r.out)["value"], json::array({1.0, 0.0}));
}

TEST(Eval, HolonomyPeriodicityIsBitForBit)
{
    const std::vector<std::string> base{"eval", "lens-elliptic-gamma", "r=2", "z=0.1+0.05i", "sigma=0.02+0.2561i",
                                        "tau=-0.01+0.2561i"};
    auto with_m = [&](const std::string& m) {
        std::vector<std::string> a = base;
        a.push_back("m=" + m);
        return first_line(cli(a).out)["value"].dump();
    };
    EXPECT_EQ(with_m("3"), with_m("1"));
    EXPECT_EQ(with_m("-1"), with_m("1"));
}

TEST(Eval, PoleExitsWithNumericalFailure)
{
    const CliRun r = cli({"eval", "lens-hyperbolic-gamma", "r=1", "m=0", "z=0", "omega1=1i", "omega2=1i"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(first_line(r.out)["error_code"], "POLE");
}

TEST(Eval, InvalidInputIsRejectedBeforeComputation)
{
    EXPECT_EQ(cli({"eval", "no-such-function"}).code, 2);
    EXPECT_EQ(cli({"eval", "phi-rm", "r=1", "m=0", "z=0+0i", "omega1=1+0.5i"}).code, 2);
    EXPECT_EQ(cli({"eval", "phi-rm", "r=1", "m=0", "z=1 + 2i", "omega1=1", "omega2=1"}).code, 2);
    EXPECT_EQ(cli({"eval", "phi-rm", "r=1", "m=0.5", "z=0", "omega1=1", "omega2=1"}).code, 2);
    EXPECT_EQ(cli({"eval", "phi-rm", "r=1", "m=0", "z=0", "omega1=1", "omega2=1", "bogus=1"}).code, 2);
    EXPECT_EQ(cli({"eval", "phi-rm", "r=0", "m=0", "z=0", "omega1=1", "omega2=1"}).code, 2);
    EXPECT_EQ(cli({"eval", "phi-rm", "r=1", "r=2", "m=0", "z=0", "omega1=1", "omega2=1"}).code, 2);
}

TEST(Verify, UnbalancedPointExitsTwo)
{
    const CliRun r = cli({"verify", "elliptic-beta", "r=1", "sigma=0.2i", "tau=0.2i", "t=0.1i,0.1i,0.1i,0.1i,0.1i,0.1i",
                       "u=0,0,0,0,0,0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(first_line(r.out)["error_code"], "UNBALANCED");
}

TEST(Verify, ExplicitBalancedPointPasses)
{
    // sigma + tau = 0.4i split evenly
    const CliRun r = cli({"verify", "elliptic-beta", "r=2", "sigma=0.2i", "tau=0.2i",
                       "t=0.1+0.0667i,-0.1+0.0667i,0.2+0.0666i,-0.2+0.0666i,0.05+0.0667i,-0.05+0.0667i",
                       "u=1,-1,0,0,1,-1"});
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Verify, ReportsAreByteIdenticalAcrossRunsAndJobs)
{
    const std::vector<std::string> a{"verify", "str-elliptic", "--r", "2", "--points", "2", "--seed", "5"};
    std::vector<std::string> b = a;
    b.insert(b.end(), {"--jobs", "2"});
    const CliRun x = cli(a), y = cli(a), z = cli(b);
    EXPECT_EQ(x.code, 0) << x.out;
    EXPECT_EQ(x.out, y.out);
    EXPECT_EQ(x.out, z.out);
    EXPECT_NE(x.out.find("\"wall_time_s\":null"), std::string::npos);
}

TEST(Verify, UnknownSuiteExitsTwo)
{
    EXPECT_EQ(cli({"verify", "everything"}).code, 2);
    EXPECT_EQ(cli({"verify", "modr", "r=1"}).code, 2);
}

TEST(Sweep, SeededAndOrdered)
{
    const std::vector<std::string> a{"sweep", "q-pochhammer", "q=0.3", "--vary", "x=-0.5-0.5i:0.5+0.5i",
                                     "--points", "6", "--seed", "9"};
    std::vector<std::string> b = a;
    b.insert(b.end(), {"--jobs", "3"});
    const CliRun x = cli(a), y = cli(b);
    ASSERT_EQ(x.code, 0) << x.out;
    EXPECT_EQ(x.out, y.out);
    std::istringstream in(x.out);
    std::string line;
    int k = 0;
    while (std::getline(in, line)) EXPECT_EQ(json::parse(line)["point"], k++);
    EXPECT_EQ(k, 6);
}

TEST(Sweep, IntegerRangesAndBadRanges)
{
    EXPECT_EQ(cli({"sweep", "lens-elliptic-gamma", "r=3", "z=0.1+0.05i", "sigma=0.3i", "tau=0.25i", "--vary", "m=-5:5",
                   "--points", "4"})
                  .code,
              0);
    EXPECT_EQ(cli({"sweep", "q-pochhammer", "q=0.3", "--vary", "x=1:0:2"}).code, 2);
    EXPECT_EQ(cli({"sweep", "q-pochhammer", "q=0.3", "--vary", "q=0:1"}).code, 2);
    EXPECT_EQ(cli({"sweep", "q-pochhammer", "q=0.3", "--vary", "y=0:1"}).code, 2);
}

TEST(Fixtures, CheckListAndFilter)
{
    const CliRun check = cli({"fixtures", "check", "--filter", "phi-rm"});
    EXPECT_EQ(check.code, 0) << check.out;
    EXPECT_NE(check.out.find("max_deviation"), std::string::npos);
    std::istringstream in(check.out);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        const json j = json::parse(line);
        if (!j.contains("name")) continue;
        EXPECT_EQ(j["name"], "phi-rm");
        ++n;
    }
    EXPECT_GT(n, 0);

    const CliRun list = cli({"fixtures", "list"});
    EXPECT_EQ(list.code, 0);
    EXPECT_NE(list.out.find("\"name\":\"q-pochhammer\""), std::string::npos);
    EXPECT_EQ(cli({"fixtures", "check", "--filter", "nothing-by-this-name"}).code, 2);
    EXPECT_EQ(cli({"fixtures", "rebuild"}).code, 2);
}

TEST(Fixtures, DeviationBeyondTenTimesToleranceFails)
{
    const std::string path = temp_path("bad.tsv");
    {
        std::ofstream f(path);
        f << "q-pochhammer\t{\"x\": [0.5, 0], \"q\": [0.25, 0]}\t0.5\t0\t1e-14\n";
    }
    const CliRun r = cli({"fixtures", "check", "--fixtures", path});
    EXPECT_EQ(r.code, 1);
    std::remove(path.c_str());
}

TEST(Config, FileMergesUnderExplicitFlags)
{
    const std::string path = temp_path("config.txt");
    {
        std::ofstream f(path);
        f << "# point\nr = 1\nm = 0\nz = 0.2+0.1i\nomega1 = 1+0.5i\nomega2 = 0.8+0.3i\noutput = " << temp_path("never")
          << "\n";
    }
    const std::string out = temp_path("eval.jsonl");
    const CliRun r = cli({"eval", "phi-rm", "z=0+0i", "--config", path, "--output", out});
    EXPECT_EQ(r.code, 0) << r.out;
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    const json j = json::parse(line);
    EXPECT_EQ(j["params"]["z"], "0+0i");
    EXPECT_EQ(j["params"]["omega1"], "1+0.5i");
    EXPECT_FALSE(std::filesystem::exists(temp_path("never")));
    std::remove(path.c_str());
    std::remove(out.c_str());
    EXPECT_EQ(cli({"eval", "phi-rm", "--config", temp_path("missing.txt")}).code, 2);
}

TEST(Help, PrintsUsage)
{
    const CliRun r = cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("eval"), std::string::npos);
    EXPECT_EQ(cli({}).code, 2);
}

// 10^5 random command lines through the parser and validator: every one must end in a
// clean exit code, with only library errors thrown along the way.
TEST(Fuzz, ParserNeverAborts)
{
    const std::vector<std::string> words{
        "eval", "verify", "sweep", "fixtures", "check", "list", "all", "phi-rm", "kappa-h", "kappa-e",
        "lens-elliptic-gamma", "elliptic-beta", "hyperbolic-beta", "e7", "modr", "q-pochhammer", "theta4",
        "--r", "--seed", "--points", "--tol", "--jobs", "--output", "--config", "--filter", "--vary", "--help",
        "--timing", "--dry-run", "-", "--", "=", "r=2", "m=1", "z=0+0i", "z=1e308+1e308i", "alpha=nan",
        "omega1=1+0.5i", "omega2=0.8+0.3i", "t=0.1i,0.2i", "u=0,0", "x=0.3", "q=0.5", "sigma=0.3i",
        "tau=0.2i", "-1", "0", "1e999", "18446744073709551616", "1,2,3", "x=0:1", "m=-3:3", "path=product",
        "path=[1]", "{\"a\":1}", "\xff\xfe", "r=", "=1", "z=+1", "z=1+2ii", "m=99999999999999999999"};
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1), len(0, 7), byte(1, 255), mode(0, 9);
    int clean = 0;
    for (int i = 0; i < 100000; ++i) {
        std::vector<std::string> args;
        const std::size_t n = len(rng);
        for (std::size_t k = 0; k < n; ++k) {
            if (mode(rng) == 0) {
                std::string s(len(rng) + 1, ' ');
                for (char& c : s) c = static_cast<char>(byte(rng));
                args.push_back(s);
            } else {
                args.push_back(words[pick(rng)]);
            }
        }
        try {
            const harness::Invocation inv = harness::parse_invocation(args);
            ++clean;
            (void)inv;
        } catch (const Error& e) {
            ASSERT_TRUE(e.is_input_error()) << e.what();
        } catch (const std::exception& e) {
            FAIL() << "unexpected exception " << e.what();
        }
    }
    EXPECT_GT(clean, 0);
}

TEST(Fuzz, DryRunsExitCleanly)
{
    std::mt19937_64 rng(7);
    const std::vector<std::string> keys{"r", "m", "z", "omega1", "omega2", "alpha", "x", "q", "path"};
    const std::vector<std::string> values{"1", "2", "-1", "0.5", "1+0.5i", "0.8-0.3i", "abc", "", "1e-400", "3i"};
    std::uniform_int_distribution<std::size_t> k(0, keys.size() - 1), v(0, values.size() - 1), n(0, 6);
    for (int i = 0; i < 2000; ++i) {
        std::vector<std::string> args{"eval", i % 2 ? "phi-rm" : "q-pochhammer", "--dry-run"};
        for (std::size_t j = n(rng); j > 0; --j) args.push_back(keys[k(rng)] + "=" + values[v(rng)]);
        const CliRun r = cli(args);
        ASSERT_TRUE(r.code == 0 || r.code == 2) << r.out;
    }
}

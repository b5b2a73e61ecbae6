#include <gtest/gtest.h>

#include "lensbeta/harness/registry.hpp"

using namespace lensbeta;

namespace {

IdentitySuiteOptions one_point(std::vector<int> rs, std::uint64_t seed = 11)
{
    IdentitySuiteOptions o;
    o.points = 1;
    o.seed = seed;
    o.r_values = std::move(rs);
    return o;
}

void expect_all_pass(const std::vector<VerificationReport>& reps)
{
    ASSERT_FALSE(reps.empty());
    for (const VerificationReport& r : reps) EXPECT_TRUE(r.pass) << to_json(r).dump();
}

EllipticFugacities six(int r, std::vector<long> u)
{
    const EllipticParams p{{0.02, 0.2561}, {-0.01, 0.2561}, r, NomeConvention::appendix_b};
    std::vector<cplx> t{{0.11, 0.085}, {-0.07, 0.08}, {0.2, 0.09}, {0.03, 0.086}, {-0.15, 0.084}};
    cplx s = 0.0;
    for (cplx x : t) s += x;
    t.push_back(p.sigma + p.tau - s);
    return {t, std::move(u), p};
}

} // namespace

TEST(FunctionalEquations, SmallSuitePasses)
{
    SuiteOptions o;
    o.points = 4;
    expect_all_pass(functional_equation_suite(o));
}

TEST(Representations, SmallSuitePasses)
{
    SuiteOptions o;
    o.points = 2;
    o.tol = 1e-8;
    expect_all_pass(representation_suite(o));
}

TEST(EllipticBeta, RankTwoWithHolonomies)
{
    const VerificationReport rep = verify_elliptic_beta(six(2, {1, -1, 0, 0, 1, -1}));
    EXPECT_TRUE(rep.pass) << to_json(rep).dump();
    EXPECT_LT(rep.rel_err, 1e-12);
}

TEST(EllipticBeta, RHatChoiceDoesNotChangeTheRatio)
{
    const EllipticFugacities f = six(3, {1, -1, 2, 0, 1, -3});
    // Holonomies enter unreduced; reducing them mod r would itself depend on r_hat.
    EllipticBetaOptions a, b;
    a.mode = b.mode = ResidueMode::raw;
    b.r_hat = 1;
    const cplx ra = elliptic_beta_lhs(f, a) / elliptic_beta_rhs(f, a);
    const cplx rb = elliptic_beta_lhs(f, b) / elliptic_beta_rhs(f, b);
    EXPECT_LT(std::abs(ra - rb), 1e-12);
}

TEST(EllipticBeta, UnbalancedInputIsRejected)
{
    EllipticFugacities f = six(1, std::vector<long>(6, 0));
    f.t[0] += 0.01;
    try {
        verify_elliptic_beta(f);
        FAIL() << "expected UNBALANCED";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unbalanced);
    }
}

TEST(EllipticBeta, PinchedContourIsRejected)
{
    EllipticFugacities f = six(1, std::vector<long>(6, 0));
    f.t[0] = {0.11, 0.001};
    f.t[5] += cplx(0.11, 0.085) - f.t[0];
    try {
        verify_elliptic_beta(f);
        FAIL() << "expected POLE_PINCH";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::pole_pinch);
    }
}

TEST(Suites, OnePointEach)
{
    expect_all_pass(elliptic_beta_suite(one_point({3})));
    expect_all_pass(hyperbolic_beta_suite(one_point({2})));
    expect_all_pass(lens_duality_suite(one_point({3})));
    expect_all_pass(str_elliptic_suite(one_point({2})));
    expect_all_pass(str_hyperbolic_suite(one_point({2})));
    expect_all_pass(e7_suite(one_point({1})));
    expect_all_pass(modr_suite(one_point({2})));
    expect_all_pass(periodicity_suite(one_point({1, 3})));
    expect_all_pass(reduction_anchor_suite(one_point({})));
}

TEST(Suites, SignFactorsCancelInTheDuality)
{
    const auto with = lens_duality_suite(one_point({2, 3}, 5), true);
    const auto without = lens_duality_suite(one_point({2, 3}, 5), false);
    ASSERT_EQ(with.size(), without.size());
    for (std::size_t i = 0; i < with.size(); ++i) {
        EXPECT_EQ(with[i].pass, without[i].pass);
        EXPECT_LT(relative_distance(with[i].lhs / with[i].rhs, without[i].lhs / without[i].rhs), 1e-12);
    }
}

TEST(Suites, SeedDeterminesTheReports)
{
    const auto a = str_elliptic_suite(one_point({2}, 3));
    const auto b = str_elliptic_suite(one_point({2}, 3));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].lhs, b[i].lhs);
        EXPECT_EQ(a[i].params, b[i].params);
    }
}

TEST(Suites, JobsDoNotChangeResults)
{
    IdentitySuiteOptions o = one_point({1, 2}, 4);
    o.points = 2;
    const auto a = str_elliptic_suite(o);
    o.jobs = 3;
    const auto b = str_elliptic_suite(o);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].lhs, b[i].lhs);
}

TEST(HyperbolicLimit, ErrorsDecrease)
{
    const auto reps = hyperbolic_limit_suite();
    expect_all_pass(reps);
    for (const VerificationReport& r : reps)
        for (auto it = r.diagnostics.begin(); it != r.diagnostics.end(); ++it) {
            if (!it.value().is_object() || !it.value().contains("errors")) continue;
            const auto& e = it.value()["errors"];
            EXPECT_GT(e[0].get<double>(), e[1].get<double>()) << it.key();
            EXPECT_GT(e[1].get<double>(), e[2].get<double>()) << it.key();
            EXPECT_LT(it.value()["slope"].get<double>(), 0.0) << it.key();
        }
}

TEST(HyperbolicLimit, RejectsBadSchedules)
{
    const HyperbolicParams p{1.0, 1.0, 1, Orientation::right_half};
    EXPECT_THROW(verify_hyperbolic_limit(0.3, 0, p, {0.1, 0.2}), Error);
    EXPECT_THROW(verify_hyperbolic_limit(0.3, 0, p, {0.1}), Error);
}

TEST(Fixtures, IdentitiesReproduceOracle)
{
    const std::string path = LENSBETA_FIXTURE_DIR "/identities.tsv";
    const auto recs = harness::read_fixtures(path);
    ASSERT_FALSE(recs.empty());
    for (const auto& r : recs) {
        const auto res = harness::check_fixture(r, 10.0);
        EXPECT_TRUE(res.pass) << r.source << " " << r.name << " deviation " << res.deviation << " " << res.error;
    }
}

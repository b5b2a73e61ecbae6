#include <gtest/gtest.h>

#include "lensbeta/harness/registry.hpp"

using namespace lensbeta;

namespace {

constexpr double tight = 1e-12;

double rel(cplx a, cplx b) { return relative_distance(a, b); }

const EllipticParams s3{{0.05, 0.4}, {-0.03, 0.35}, 3, NomeConvention::section3};
const EllipticParams ab{{0.02, 0.2561}, {-0.01, 0.2561}, 2, NomeConvention::appendix_b};

} // namespace

TEST(Pochhammer, TrivialValues)
{
    EXPECT_EQ(q_pochhammer(0.0, 0.5), cplx(1.0));
    EXPECT_EQ(q_pochhammer(0.3, 0.0), cplx(0.7));
    // (x; q) = (1 - x)(qx; q)
    const cplx x{0.3, 0.2}, q{0.1, 0.4};
    EXPECT_LT(rel(q_pochhammer(x, q), (1.0 - x) * q_pochhammer(q * x, q)), tight);
}

TEST(Bernoulli, TrivialValues)
{
    EXPECT_EQ(bernoulli_poly(BernoulliKind::B11, 0.0, {1.0}), cplx(-0.5));
    EXPECT_EQ(bernoulli_poly(BernoulliKind::B22, 0.0, {1.0, 1.0}), cplx(5.0 / 6.0));
    EXPECT_EQ(bernoulli_poly(BernoulliKind::B33, 0.0, {1.0, 1.0, 1.0}), cplx(-9.0 / 4.0));
    EXPECT_THROW(bernoulli_poly(BernoulliKind::B22, 0.0, {1.0}), Error);
    EXPECT_THROW(bernoulli_11(0.3, 0.0), Error);
}

TEST(Theta, QuasiPeriodicity)
{
    const cplx sigma{0.1, 0.4}, z{0.13, 0.07};
    EXPECT_LT(rel(theta_small(z + 1.0, sigma), theta_small(z, sigma)), tight);
    // theta(z + sigma) = -e^{-2 pi i z} theta(z)
    EXPECT_LT(rel(theta_small(z + sigma, sigma), -std::exp(-two_pi * I * z) * theta_small(z, sigma)), tight);
}

TEST(LensEllipticGamma, HolonomyPeriodIsBitExact)
{
    const cplx z{0.1, 0.05};
    for (long m = -4; m <= 4; ++m) {
        const cplx a = lens_elliptic_gamma(z, m, ab), b = lens_elliptic_gamma(z, m + 2 * ab.r, ab);
        EXPECT_EQ(a, b) << "m = " << m;
    }
}

TEST(LensEllipticGamma, InversionOfPhi)
{
    // Phi_{r,m}(z) Phi_{r,-m}(-z) = 1
    for (long m = 0; m < s3.r; ++m) {
        const cplx z{0.31, -0.12};
        EXPECT_LT(std::abs(lens_elliptic_gamma_phi(z, m, s3) * lens_elliptic_gamma_phi(-z, -m, s3) - 1.0), tight);
    }
}

TEST(PhiRm, TrivialPointIsExactlyOne)
{
    const HyperbolicParams p{{1.0, 0.5}, {0.8, 0.3}, 1, Orientation::right_half};
    EXPECT_EQ(phi_rm(0.0, 0, p), cplx(1.0));
    EXPECT_EQ(kappa_h(0.0, {{1.0, 0.2}, {1.0, -0.1}, 2, Orientation::right_half}), cplx(1.0));
}

TEST(PhiRm, PathsAgree)
{
    const HyperbolicParams p{{1.0, 0.3}, {0.9, 0.1}, 3, Orientation::right_half};
    for (long m = 0; m < 3; ++m) {
        const cplx z{0.2, 0.3};
        const cplx a = phi_rm(z, m, p, PhiPath::integral), b = phi_rm(z, m, p, PhiPath::product),
                   c = phi_rm(z, m, p, PhiPath::factorized);
        EXPECT_LT(rel(a, b), 1e-10) << m;
        EXPECT_LT(rel(a, c), 1e-10) << m;
    }
}

TEST(PhiRm, PoleIsReported)
{
    const HyperbolicParams p{{1.0, 0.0}, {1.0, 0.0}, 1, Orientation::upper_half};
    try {
        lens_hyperbolic_gamma(0.0, 0, {I, I, 1, Orientation::upper_half});
        FAIL() << "expected a pole";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::pole);
    }
    EXPECT_THROW(phi_rm(0.0, 0, p), Error); // wrong orientation
}

TEST(KappaE, InversionAndNormalisation)
{
    const cplx eta = s3.eta();
    const cplx a = 0.2 * eta;
    EXPECT_LT(std::abs(std::exp(kappa_e_log(a, s3).value + kappa_e_log(-a, s3).value) - 1.0), tight);
    EXPECT_LT(std::abs(kappa_e_log(0.0, s3).value), tight);
}

TEST(ParseComplex, Grammar)
{
    using harness::parse_complex;
    EXPECT_EQ(parse_complex("1+0.5i"), cplx(1.0, 0.5));
    EXPECT_EQ(parse_complex("1-0.5i"), cplx(1.0, -0.5));
    EXPECT_EQ(parse_complex("-1e-3+2E+1i"), cplx(-1e-3, 20.0));
    EXPECT_EQ(parse_complex("0"), cplx(0.0));
    EXPECT_EQ(parse_complex("-2.5i"), cplx(0.0, -2.5));
    EXPECT_EQ(parse_complex("3.25"), cplx(3.25, 0.0));
    for (const char* bad : {"", "i", "+1", "1+i", "1 + 2i", "1,5", "1+2j", "nan", "inf+1i", "1++2i", "1e400", "0x1p3",
                            "1-+2i", "1+2ii", "--1"})
        EXPECT_THROW(parse_complex(bad), Error) << bad;
}

// ---- oracle fixtures

TEST(Fixtures, SpecialFunctionsReproduceOracle)
{
    const auto recs = harness::read_fixtures(LENSBETA_FIXTURE_DIR "/special.tsv");
    ASSERT_FALSE(recs.empty());
    for (const auto& r : recs) {
        const auto res = harness::check_fixture(r, 10.0);
        EXPECT_TRUE(res.pass) << r.source << " " << r.name << " deviation " << res.deviation << " " << res.error;
        // The tight double paths should sit far below the stored tolerance.
        if (res.pass) {
            EXPECT_LE(res.deviation, r.tol) << r.source;
        }
    }
}

// ---- lattice weights

namespace {

const EllipticParams phys_e{{0.04, 0.45}, {-0.04, 0.45}, 3, NomeConvention::section3};
const HyperbolicParams phys_h{{1.0, 0.3}, {1.0, -0.3}, 3, Orientation::right_half};

} // namespace

TEST(Weights, SpinExchangeSymmetry)
{
    const Spin a{0.7, 1}, b{1.9, 0};
    const double alpha = 0.3 * phys_e.eta().real();
    EXPECT_LT(rel(weight_W_elliptic(alpha, a, b, phys_e), weight_W_elliptic(alpha, b, a, phys_e)), 1e-11);
    const double ah = 0.3 * phys_h.eta().real();
    EXPECT_LT(rel(weight_W_hyperbolic(ah, a, b, phys_h), weight_W_hyperbolic(ah, b, a, phys_h)), 1e-10);
}

TEST(Weights, InversionRelation)
{
    const Spin a{0.4, 1}, b{1.1, 1};
    const double alpha = 0.27 * phys_e.eta().real();
    EXPECT_LT(std::abs(weight_W_elliptic(alpha, a, b, phys_e) * weight_W_elliptic(-alpha, a, b, phys_e) - 1.0), 1e-11);
    const double ah = 0.27 * phys_h.eta().real();
    EXPECT_LT(std::abs(weight_W_hyperbolic(ah, a, b, phys_h) * weight_W_hyperbolic(-ah, a, b, phys_h) - 1.0), 1e-10);
}

TEST(Weights, PhysicalRegimeIsRealPositive)
{
    const double alpha = 0.35 * phys_e.eta().real();
    for (long mi = 0; mi <= 1; ++mi)
        for (double x : {0.3, 1.2, 2.5}) {
            const cplx w = weight_W_elliptic(alpha, {x, mi}, {0.9, 0}, phys_e);
            EXPECT_GT(w.real(), 0.0);
            EXPECT_LT(std::abs(w.imag()), 1e-10 * std::abs(w));
        }
    const double ah = 0.35 * phys_h.eta().real();
    for (double x : {0.2, 0.8, 1.7}) {
        const cplx w = weight_W_hyperbolic(ah, {x, 1}, {0.5, 0}, phys_h);
        EXPECT_GT(w.real(), 0.0);
        EXPECT_LT(std::abs(w.imag()), 1e-10 * std::abs(w));
    }
}

TEST(Weights, EllipticSpinIsPiPeriodic)
{
    const double alpha = 0.2 * phys_e.eta().real();
    const Spin b{0.9, 1};
    EXPECT_LT(rel(weight_W_elliptic(alpha, {0.4, 0}, b, phys_e), weight_W_elliptic(alpha, {0.4 + pi, 0}, b, phys_e)),
              1e-11);
}

TEST(Weights, OneSpinFormsAgree)
{
    for (long m = 0; m <= 1; ++m) {
        const Spin s{0.8, m};
        EXPECT_LT(rel(weight_S_elliptic(s, phys_e, OneSpinForm::gamma),
                      weight_S_elliptic(s, phys_e, OneSpinForm::theta_or_sinh)),
                  1e-11);
        EXPECT_LT(rel(weight_S_hyperbolic(s, phys_h, OneSpinForm::gamma),
                      weight_S_hyperbolic(s, phys_h, OneSpinForm::theta_or_sinh)),
                  1e-9);
    }
}

TEST(Weights, CrossingRejectsOutOfRange)
{
    EXPECT_DOUBLE_EQ(crossing(0.25, 1.0), 0.75);
    EXPECT_THROW(crossing(1.5, 1.0), Error);
    EXPECT_THROW((SpectralTriple{0.5, 0.5, 0.5}.validate(1.0)), Error);
}

TEST(Weights, PhysicalPeriodsGiveUnimodularPhi)
{
    const cplx v = phi_rm(0.4, 0, phys_h);
    EXPECT_LT(std::abs(std::abs(v) - 1.0), 1e-12);
}

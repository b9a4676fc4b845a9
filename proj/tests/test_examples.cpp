#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracwos/examples.hpp"
#include "fracwos/wos.hpp"
#include "oracles.hpp"

using namespace fracwos;
constexpr double pi = std::numbers::pi;

TEST(Registry, ResolvesEveryName) {
    FieldParams p;
    p.n = 2;
    p.s = 0.5;
    p.c = 2.0;
    p.x_prime = Point{3.0, 0.0};
    for (const auto& name : registered_field_names()) {
        const NamedField f = make_field(name, p);
        EXPECT_TRUE(std::isfinite(f(Point{0.1, 0.2}))) << name;
    }
    EXPECT_THROW(make_field("nope", p), DomainError);
    FieldParams bare;
    bare.n = 2;
    bare.s = 0.5;
    EXPECT_THROW(make_field("constant", bare), DomainError);
    EXPECT_THROW(make_field("example1_g", bare), DomainError);
    bare.x_prime = Point{1.0, 2.0, 3.0};
    EXPECT_THROW(make_field("example2_g", bare), DomainError);
}

TEST(Registry, ZeroAndConstant) {
    EXPECT_TRUE(make_field("zero", FieldParams{}).zero);
    FieldParams p;
    p.c = 0.0;
    EXPECT_TRUE(make_field("constant", p).zero);
    p.c = 1.5;
    EXPECT_EQ(make_field("constant", p)(Point{9.0}), 1.5);
}

TEST(Example1, Gaussian) {
    const NamedField g = example1_g(Point{3.0, 0.0});
    EXPECT_EQ(g(Point{3.0, 0.0}), 1.0);
    EXPECT_NEAR(g(Point{1.0, 0.0}), std::exp(-4.0), 1e-16);
}

TEST(Example2, FundamentalSolution) {
    const NamedField g = example2_g(2, 0.5, Point{std::sqrt(2.0), std::sqrt(2.0)});
    EXPECT_NEAR(g(Point{0.6, 0.6}), oracle::frozen::example2_2d_exact, 1e-14);
    EXPECT_NEAR(constants(2, 0.5).a_ns, 1.0 / (2.0 * pi), 1e-15);
    const NamedField g1 = example2_g(1, 0.5, Point{2.0});
    EXPECT_NEAR(g1(Point{0.5}), std::log(1.5) / pi, 1e-15);
}

TEST(Example3, ExactSolutionVanishesOutsideAndMatchesValues) {
    std::mt19937_64 gen(1);
    std::normal_distribution<double> nd;
    for (int n : {1, 2, 3, 10}) {
        const NamedField u = example3_exact(n, 0.5);
        for (int it = 0; it < 500; ++it) {
            Point y(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) y[k] = nd(gen);
            y *= (1.0 + std::fabs(nd(gen))) / y.norm();
            ASSERT_LE(std::fabs(u(y)), 1e-12);
        }
    }
    EXPECT_NEAR(example3_exact(10, 0.5)(Point(10, 0.1)), oracle::frozen::example3_10d_exact, 1e-14);
    EXPECT_NEAR(example3_exact(3, 0.75)(Point{0.5, 0.5, 0.5}), std::pow(0.25, 1.75), 1e-15);
    EXPECT_NEAR(example3_exact(1, 0.25)(Point{0.5}), 0.5 * std::pow(0.75, 0.25), 1e-15);
}

TEST(Example3, SourceConstants) {
    // n = 1: 2^{2s} Γ(1+s) Γ(s+3/2)/Γ(3/2) x.
    EXPECT_NEAR(example3_f(1, 0.5)(Point{0.3}), 0.6, 1e-14);
    EXPECT_NEAR(example3_f(1, 0.25)(Point{1.0}), 1.3293403881791, 1e-12);
    // n >= 2 at the center: 2^{2s} Γ(2+s) Γ(n/2+s)/Γ(n/2).
    EXPECT_NEAR(example3_f(2, 0.5)(Point{0.0, 0.0}), 2.0 * std::tgamma(2.5) * std::tgamma(1.5), 1e-13);
    // zero set at |x|² = n/(n+2s)
    EXPECT_NEAR(example3_f(3, 0.5)(Point{std::sqrt(0.75), 0.0, 0.0}), 0.0, 1e-13);
}

TEST(Example4, UnitSource) { EXPECT_EQ(example4_f()(Point(10, 0.3)), 1.0); }

// With f = 1 the solution on the cube dominates the solution on any inscribed
// ball; at the ball center that is r^{2s} Γ(n/2) / (2^{2s} Γ(1+s) Γ(n/2+s)).
TEST(Example4, NearCornerValueDominatesTheInscribedBall) {
    for (double s : {0.25, 0.5, 0.75}) {
        ProblemSpec p;
        p.n = 10;
        p.s = s;
        p.domain = Domain::box(Point(10, 0.0), Point(10, 1.0));
        p.source = example4_f();
        const Point x(10, 0.001);
        const double ball = std::pow(0.001, 2.0 * s) * boost::math::tgamma(5.0) /
                            (std::pow(2.0, 2.0 * s) * boost::math::tgamma(1.0 + s) * boost::math::tgamma(5.0 + s));
        EXPECT_NEAR(exit_mass_a(make_ball_context(x, 0.001, constants(10, s))), ball, 1e-12 * ball) << s;
        const EstimatorSummary e = estimate(p, x, 20000, 9);
        EXPECT_GT(e.estimate - 4.0 * e.std_error, ball) << s;
    }
}

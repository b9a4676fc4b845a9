#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracwos/kernels.hpp"
#include "fracwos/theory.hpp"
#include "oracles.hpp"

using namespace fracwos;
constexpr double pi = std::numbers::pi;

namespace {

BallContext unit_ctx(int n, double s) {
    return make_ball_context(Point(static_cast<std::size_t>(n)), 1.0, constants(n, s));
}

Point random_in_ball(std::mt19937_64& gen, int n, double r = 1.0) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Point p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = g(gen);
    p *= r * std::pow(u(gen), 1.0 / n) / p.norm();
    return p;
}

Point on_axis(int n, double t) {
    Point p(static_cast<std::size_t>(n));
    p[0] = t;
    return p;
}

}  // namespace

TEST(Constants, SpecExamples) {
    const FracConstants c2 = constants(2, 0.5);
    EXPECT_NEAR(c2.alpha, 1.0 / (pi * pi), 1e-15);
    EXPECT_NEAR(c2.kappa, 1.0 / (2.0 * pi * pi), 1e-15);
    EXPECT_NEAR(c2.omega, 2.0 * pi, 1e-14);
    EXPECT_NEAR(constants(1, 0.5).C, 1.0 / pi, 1e-15);
    EXPECT_NEAR(constants(3, 0.5).omega, 4.0 * pi, 1e-13);
}

TEST(Constants, OneDimensionalKappaAtOneHalf) {
    // The general formula gives 1/(2π); the log-form Green function on the
    // line carries 1/π = 2κ.
    EXPECT_NEAR(constants(1, 0.5).kappa, 1.0 / (2.0 * pi), 1e-15);
}

TEST(Constants, PositivityAndLimits) {
    for (int n = 1; n <= 12; ++n)
        for (double s = 0.05; s < 0.99; s += 0.05) {
            const FracConstants c = constants(n, s);
            EXPECT_GT(c.C, 0.0);
            EXPECT_GT(c.alpha, 0.0);
            EXPECT_GT(c.kappa, 0.0);
            EXPECT_GT(c.omega, 0.0);
            if (n >= 2) {
                EXPECT_GT(c.a_ns, 0.0);
            }
        }
    EXPECT_LT(constants(3, 1e-9).alpha, 1e-8);
    EXPECT_LT(constants(3, 1.0 - 1e-9).alpha, 1e-8);
    EXPECT_THROW(constants(0, 0.5), DomainError);
    EXPECT_THROW(constants(2, 1.0), DomainError);
    EXPECT_THROW(constants(2, 0.0), DomainError);
}

TEST(PoissonKernel, Examples) {
    const BallContext ctx = unit_ctx(2, 0.5);
    EXPECT_NEAR(poisson_kernel(ctx, Point{0.0, 0.0}, Point{0.0, 2.0}), 1.0 / (pi * pi) * std::sqrt(1.0 / 3.0) / 4.0, 1e-15);
    EXPECT_LT(poisson_kernel(ctx, Point{0.0, 0.0}, Point{0.0, 1e6}), 1e-18);
    EXPECT_LT(poisson_kernel(ctx, Point{0.0, 1.0 - 1e-12}, Point{0.0, 3.0}), 1e-6);
    EXPECT_THROW(poisson_kernel(ctx, Point{1.5, 0.0}, Point{3.0, 0.0}), DomainError);
    EXPECT_THROW(poisson_kernel(ctx, Point{0.0, 0.0}, Point{0.5, 0.0}), DomainError);
}

TEST(PoissonKernel, RadialMarginalIsTheExitLaw) {
    // Center kernel Γ(n/2) sin(πs) π^{-n/2-1} r^{2s} (|y|² - r²)^{-s} |y|^{-n},
    // written in l = |y| - r so the shell integral keeps the mass next to
    // the sphere. Pointwise against the library first, then integrated:
    // the mass in r < |y| < ρ0 is 1 - I(r²/ρ0²; s, 1-s).
    const double r = 1.3;
    for (int n : {2, 3, 5})
        for (double s : {0.25, 0.5, 0.75}) {
            const BallContext ctx = make_ball_context(Point(static_cast<std::size_t>(n)), r, constants(n, s));
            const double k = std::tgamma(0.5 * n) * std::sin(pi * s) * std::pow(pi, -0.5 * n - 1.0) * std::pow(r, 2.0 * s);
            auto kernel = [&](double l) { return k * std::pow(l * (2.0 * r + l), -s) * std::pow(r + l, -static_cast<double>(n)); };
            for (double l : {1e-6, 0.01, 0.7, 9.0}) {
                const double la = (r + l) - r;  // the offset the point actually carries
                ASSERT_NEAR(poisson_kernel(ctx, ctx.center, on_axis(n, r + l)), kernel(la), 1e-12 * kernel(la)) << n << " " << s << " " << l;
            }
            const double omega = 2.0 * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n);
            auto shell = [&](double l) { return omega * std::pow(r + l, n - 1.0) * kernel(l); };
            for (double rho0 : {1.31, 1.5, 2.6, 13.0}) {
                const double mass = oracle::integrate(shell, 0.0, rho0 - r, 1e-13);
                EXPECT_NEAR(mass, 1.0 - reg_inc_beta(r * r / (rho0 * rho0), s, 1.0 - s), 1e-10) << n << " " << s << " " << rho0;
            }
        }
}

TEST(GreenFunction, ClosedFormExample) {
    const BallContext ctx = unit_ctx(2, 0.5);
    EXPECT_NEAR(green_function(ctx, Point{0.0, 0.0}, Point{0.5, 0.0}), 2.0 / (3.0 * pi), 1e-14);
}

TEST(GreenFunction, SingularAndBoundaryBehaviour) {
    const BallContext ctx = unit_ctx(3, 0.5);
    EXPECT_THROW(green_function(ctx, Point{0.1, 0.0, 0.0}, Point{0.1, 0.0, 0.0}), DomainError);
    EXPECT_GT(green_function(ctx, Point{0.1, 0.0, 0.0}, Point{0.1, 1e-9, 0.0}), 1e7);
    EXPECT_LT(green_function(ctx, Point{0.1, 0.0, 0.0}, Point{0.0, 0.0, 1.0 - 1e-12}), 1e-5);
    EXPECT_THROW(green_function(ctx, Point{0.1, 0.0, 0.0}, Point{2.0, 0.0, 0.0}), DomainError);
}

TEST(GreenFunction, MatchesTheIntegralDefinition) {
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> us(0.05, 0.95);
    for (int it = 0; it < 300; ++it) {
        const int n = 2 + it % 5;
        const double s = us(gen);
        const double r = 0.5 + us(gen);
        const BallContext ctx = make_ball_context(Point(static_cast<std::size_t>(n)), r, constants(n, s));
        const Point x = random_in_ball(gen, n, r);
        const Point y = random_in_ball(gen, n, r);
        const double d = distance(x, y);
        const double rstar = (r * r - x.norm2()) * (r * r - y.norm2()) / (r * r * d * d);
        auto f = [&](double t) { return std::pow(t, s - 1.0) * std::pow(1.0 + t, -0.5 * n); };
        const double inner = rstar <= 1.0 ? oracle::integrate(f, 0.0, rstar) : oracle::integrate(f, 0.0, 1.0) + oracle::integrate(f, 1.0, rstar);
        const double ref = ctx.constants.kappa * std::pow(d, 2.0 * s - n) * inner;
        ASSERT_NEAR(green_function(ctx, x, y), ref, 1e-10 * ref) << n << " " << s;
    }
}

TEST(GreenFunction, OneDimensionalLogForm) {
    const BallContext ctx = unit_ctx(1, 0.5);
    // (1/π) ln((1 - xy + √((1-x²)(1-y²))) / |x - y|)
    const double x = 0.2, y = -0.5;
    const double ref = std::log((1.0 - x * y + std::sqrt((1.0 - x * x) * (1.0 - y * y))) / std::fabs(x - y)) / pi;
    EXPECT_NEAR(green_function(ctx, Point{x}, Point{y}), ref, 1e-15);
    EXPECT_THROW(green_function(unit_ctx(1, 0.3), Point{x}, Point{y}), UnsupportedError);
}

TEST(ExitMass, ExamplesAndHomogeneity) {
    EXPECT_NEAR(exit_mass_a(unit_ctx(2, 0.5)), 2.0 / pi, 1e-14);
    // κ(3,½) B(½,3/2) 4π = (1/(4π²)) (π/2) 4π = 1/2.
    EXPECT_NEAR(exit_mass_a(unit_ctx(3, 0.5)), 0.5, 1e-14);
    for (double s : {0.2, 0.7}) {
        const FracConstants c = constants(4, s);
        const double a1 = exit_mass_a(make_ball_context(Point(4), 1.0, c));
        const double a2 = exit_mass_a(make_ball_context(Point(4), 2.0, c));
        EXPECT_NEAR(a2 / a1, std::pow(2.0, 2.0 * s), 1e-13);
    }
}

TEST(ExitMass, EqualsIntegralOfGreenFunctionFromTheCenter) {
    for (int n : {2, 3})
        for (double s : {0.25, 0.5, 0.75}) {
            const BallContext ctx = unit_ctx(n, s);
            auto shell = [&](double t) {
                // t^{2s-n} overflows near 1e-120; below 1e-100 the shell mass is ~t^{2s}/(2s) < 1e-49.
                if (t < 1e-100) return 0.0;
                return ctx.constants.omega * std::pow(t, n - 1.0) * green_function(ctx, ctx.center, on_axis(n, t));
            };
            const double ref = oracle::integrate(shell, 0.0, 1.0, 1e-13);
            EXPECT_NEAR(exit_mass_a(ctx), ref, 1e-8) << n << " " << s;
        }
}

TEST(GreenMass, ExamplesAndQuadrature) {
    EXPECT_NEAR(green_mass_b(unit_ctx(2, 0.5)), 1.0, 1e-14);
    const FracConstants c = constants(3, 0.25);
    const BallContext ctx = make_ball_context(Point(3), 1.0, c);
    const double vol = oracle::integrate([&](double t) { return c.omega * std::pow(t, 2.0 * 0.25 - 1.0); }, 0.0, 1.0);
    EXPECT_NEAR(green_mass_b(ctx), c.kappa * oracle::integrate_ends([](double u, double v) { return std::pow(u, 0.25) * std::pow(v, -0.75); }, 0.0, 1.0) * vol, 1e-10);
    const double b2 = green_mass_b(make_ball_context(Point(3), 2.0, c));
    EXPECT_NEAR(b2 / green_mass_b(ctx), std::pow(2.0, 0.5), 1e-13);
    EXPECT_THROW(green_mass_b(unit_ctx(1, 0.5)), UnsupportedError);
    EXPECT_NO_THROW(green_mass_b(unit_ctx(1, 0.3)));
}

TEST(InteriorWeight, Examples) {
    const BallContext ctx = unit_ctx(2, 0.5);
    EXPECT_NEAR(interior_weight(ctx, Point{0.0, 0.0}), green_mass_b(ctx), 1e-15);
    EXPECT_NEAR(interior_weight(ctx, Point{0.0, 1.0 - 1e-15}), 0.0, 1e-6);
    EXPECT_NEAR(interior_weight(ctx, Point{0.5, 0.0}), 2.0 / 3.0, 1e-14);
    EXPECT_THROW(interior_weight(ctx, Point{1.0, 0.0}), DomainError);
}

TEST(InteriorWeight, KernelWeightIdentity) {
    std::mt19937_64 gen(33);
    std::uniform_real_distribution<double> us(0.02, 0.98), ur(0.1, 3.0);
    std::uniform_int_distribution<int> un(2, 10);
    for (int it = 0; it < 10000; ++it) {
        const int n = un(gen);
        const double s = us(gen);
        const double r = ur(gen);
        Point c(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) c[k] = us(gen) - 0.5;
        const BallContext ctx = make_ball_context(c, r, constants(n, s));
        const Point y = c + random_in_ball(gen, n, r);
        if (distance(y, c) == 0.0) continue;
        const double g = green_function(ctx, c, y);
        const double w = interior_weight(ctx, y) * interior_density(ctx, y);
        ASSERT_NEAR(w, g, 1e-10 * g) << n << " " << s << " " << r;
    }
}

TEST(InteriorWeight, PrintedSecondParameterFailsTheIdentity) {
    // Using 1 - s in place of s as the second beta parameter does not
    // reproduce the Green function.
    const int n = 3;
    const double s = 0.3;
    const BallContext ctx = unit_ctx(n, s);
    const Point y = on_axis(n, 0.4);
    const double g = green_function(ctx, ctx.center, y);
    const double printed = green_mass_b(ctx) * (1.0 - reg_inc_beta(0.16, 0.5 * n - s, 1.0 - s)) * interior_density(ctx, y);
    EXPECT_GT(std::fabs(printed - g), 1e-3 * g);
}

TEST(ClassicalLimit, Examples) {
    EXPECT_NEAR(classical_green_limit(unit_ctx(2, 0.5), Point{0.0, 0.0}, Point{0.5, 0.0}), std::log(2.0) / (2.0 * pi), 1e-15);
    EXPECT_NEAR(classical_green_limit(unit_ctx(3, 0.5), Point{0.0, 0.0, 0.0}, Point{0.5, 0.0, 0.0}), 1.0 / (4.0 * pi), 1e-15);
    EXPECT_THROW(classical_green_limit(unit_ctx(2, 0.5), Point{0.1, 0.1}, Point{0.1, 0.1}), DomainError);
}

TEST(ClassicalLimit, FractionalGreenFunctionApproachesIt) {
    std::mt19937_64 gen(4);
    for (int n : {2, 3, 4}) {
        const BallContext near1 = unit_ctx(n, 1.0 - 1e-4);
        for (int it = 0; it < 50; ++it) {
            const Point x = random_in_ball(gen, n);
            const Point y = random_in_ball(gen, n);
            const double lim = classical_green_limit(near1, x, y);
            EXPECT_NEAR(green_function(near1, x, y), lim, 1e-2 * lim) << n;
        }
    }
}

TEST(GreenBounds, InequalitiesOnRandomPairs) {
    std::mt19937_64 gen(8);
    for (int n : {2, 3, 5})
        for (double s : {0.25, 0.5, 0.75}) {
            const BallContext ctx = unit_ctx(n, s);
            const GreenBoundConstants k = green_bound_constants(n, s);
            const double s1 = (s <= 1.0 / 3.0) ? s : 0.5 * (1.0 - s);
            for (int it = 0; it < 1200; ++it) {
                const Point x = random_in_ball(gen, n);
                const Point y = random_in_ball(gen, n);
                const double d = distance(x, y);
                const double dx = 1.0 - x.norm(), dy = 1.0 - y.norm();
                const double g = green_function(ctx, x, y);
                const double slack = 1e-12 * g;
                ASSERT_LE(g, k.C1 * std::pow(dx * dy, s) / std::pow(d, n) + slack);
                ASSERT_LE(g, k.C3 * std::pow(dx, s) / (std::pow(dy, s) * std::pow(d, n - 2.0 * s)) + slack);
                ASSERT_LE(g, k.C4 * std::pow(dx, s) * std::pow(dy, s - s1) / std::pow(d, n - s1) + slack);
                // The other s1 branch, whenever it lies in (0, 2s].
                const double alt = (s <= 1.0 / 3.0) ? 0.5 * (1.0 - s) : s;
                if (alt <= 2.0 * s) {
                    ASSERT_LE(g, k.C4 * std::pow(dx, s) * std::pow(dy, s - alt) / std::pow(d, n - alt) + slack);
                }
            }
        }
}

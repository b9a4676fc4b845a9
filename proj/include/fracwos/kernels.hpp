#pragma once

// Constants and closed-form kernels of the ball representation formula.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fracwos/geometry.hpp"
#include "fracwos/specfun.hpp"

namespace fracwos {

struct FracConstants {
    int n = 0;
    double s = 0.0;
    double C = 0.0;      ///< normalization of the singular-integral definition
    double alpha = 0.0;  ///< Poisson kernel constant
    double kappa = 0.0;  ///< Green function constant Γ(n/2)/(2^{2s} π^{n/2} Γ(s)²)
    double a_ns = std::numeric_limits<double>::quiet_NaN();  ///< fundamental solution constant, n/2 > s only
    double omega = 0.0;  ///< surface measure of S^{n-1}
};

inline FracConstants constants(int n, double s) {
    detail::require(n >= 1, "constants: n must be >= 1");
    detail::require(s > 0.0 && s < 1.0, "constants: s must lie in (0, 1)");
    constexpr double pi = std::numbers::pi;
    const double h = 0.5 * n;
    const double log_pi_h = h * std::log(pi);
    const double log4s = 2.0 * s * std::log(2.0);
    FracConstants c;
    c.n = n;
    c.s = s;
    c.C = s * std::exp(log4s + log_gamma(h + s) - log_pi_h - log_gamma(1.0 - s));
    c.alpha = std::exp(log_gamma(h) - log_pi_h) * std::sin(pi * s) / pi;
    c.kappa = std::exp(log_gamma(h) - log4s - log_pi_h - 2.0 * log_gamma(s));
    if (h > s) c.a_ns = std::exp(log_gamma(h - s) - log4s - log_pi_h - log_gamma(s));
    c.omega = 2.0 * std::exp(log_pi_h - log_gamma(h));
    return c;
}

struct BallContext {
    Point center;
    double radius;
    FracConstants constants;
};

inline BallContext make_ball_context(Point center, double radius, const FracConstants& c) {
    detail::require(std::isfinite(radius) && radius > 0.0, "ball context: radius must be positive");
    detail::require(center.dim() == c.n, "ball context: center dimension differs from n");
    return BallContext{std::move(center), radius, c};
}

/// P_r(x, y) for x inside and y outside the ball.
inline double poisson_kernel(const BallContext& ctx, const Point& x, const Point& y) {
    const double r2 = ctx.radius * ctx.radius;
    const double dx2 = (x - ctx.center).norm2();
    const double dy2 = (y - ctx.center).norm2();
    detail::require(dx2 < r2, "poisson_kernel: x must be inside the ball");
    detail::require(dy2 > r2, "poisson_kernel: y must be outside the ball");
    const auto& c = ctx.constants;
    const double r = ctx.radius;
    const double ax = std::sqrt(dx2), ay = std::sqrt(dy2);
    return c.alpha * std::pow((r - ax) * (r + ax) / ((ay - r) * (ay + r)), c.s) / std::pow(distance(x, y), c.n);
}

/// Green function of the ball. For n >= 2 the inner integral
/// ∫_0^{r*} t^{s-1}(1+t)^{-n/2} dt is B(s, n/2-s) I(r*/(1+r*); s, n/2-s).
/// For n = 1 only s = 1/2 is available, in logarithmic form.
inline double green_function(const BallContext& ctx, const Point& x, const Point& y) {
    const auto& c = ctx.constants;
    const double r = ctx.radius;
    const double r2 = r * r;
    const Point xr = x - ctx.center;
    const Point yr = y - ctx.center;
    const double dx2 = xr.norm2();
    const double dy2 = yr.norm2();
    detail::require(dx2 < r2 && dy2 < r2, "green_function: points must be inside the ball");
    const double d = distance(x, y);
    if (d == 0.0) throw DomainError("green_function: singular at x = y");
    if (c.n == 1) {
        if (c.s != 0.5) throw UnsupportedError("green_function: n = 1 requires s = 1/2");
        const double num = r2 - xr[0] * yr[0] + std::sqrt((r2 - dx2) * (r2 - dy2));
        return std::log(num / (r * d)) / std::numbers::pi;
    }
    const double h = 0.5 * c.n;
    const double prod = (r2 - dx2) * (r2 - dy2);
    const double z = prod / (prod + r2 * d * d);
    return c.kappa * std::pow(d, 2.0 * c.s - c.n) * beta_fn(c.s, h - c.s) * reg_inc_beta(z, c.s, h - c.s);
}

/// a(x0) = κ B(s, n/2) ω r^{2s} / (2s).
inline double exit_mass_a(const BallContext& ctx) {
    const auto& c = ctx.constants;
    return c.kappa * beta_fn(c.s, 0.5 * c.n) * c.omega * std::pow(ctx.radius, 2.0 * c.s) / (2.0 * c.s);
}

/// b(x0) = κ B(n/2-s, s) r^{2s} π^{n/2} / (s Γ(n/2)).
inline double green_mass_b(const BallContext& ctx) {
    const auto& c = ctx.constants;
    const double h = 0.5 * c.n;
    if (!(h > c.s)) throw UnsupportedError("green_mass_b: requires n/2 > s");
    return c.kappa * beta_fn(h - c.s, c.s) * std::pow(ctx.radius, 2.0 * c.s) *
           std::exp(h * std::log(std::numbers::pi) - log_gamma(h)) / c.s;
}

/// Density of the interior sample, proportional to |y - c|^{2s-n} on the ball.
inline double interior_density(const BallContext& ctx, const Point& y) {
    const auto& c = ctx.constants;
    const double h = 0.5 * c.n;
    return c.s * std::exp(log_gamma(h) - h * std::log(std::numbers::pi)) /
           std::pow(ctx.radius, 2.0 * c.s) * std::pow(distance(y, ctx.center), 2.0 * c.s - c.n);
}

namespace detail {

inline double interior_weight_at(const BallContext& ctx, double b, double rho) {
    const auto& c = ctx.constants;
    const double q = std::min(1.0, (rho * rho) / (ctx.radius * ctx.radius));
    return b * (1.0 - reg_inc_beta(q, 0.5 * c.n - c.s, c.s));
}

}  // namespace detail

/// Weight b(x0)(1 - I(|y-c|²/r²; n/2-s, s)) attached to an interior sample y,
/// so that G(c, y) = interior_weight(y) * interior_density(y).
inline double interior_weight(const BallContext& ctx, const Point& y) {
    const double rho = distance(y, ctx.center);
    detail::require(rho < ctx.radius, "interior_weight: y must be inside the ball");
    return detail::interior_weight_at(ctx, green_mass_b(ctx), rho);
}

/// Green function of the classical Laplacian on the ball (the s -> 1 limit).
inline double classical_green_limit(const BallContext& ctx, const Point& x, const Point& y) {
    const int n = ctx.constants.n;
    detail::require(n >= 2, "classical_green_limit: n must be >= 2");
    const double r2 = ctx.radius * ctx.radius;
    const Point xr = x - ctx.center;
    const Point yr = y - ctx.center;
    const double d = distance(x, y);
    if (d == 0.0) throw DomainError("classical_green_limit: singular at x = y");
    // |x| |y - x*| with x* the inversion of x in the sphere.
    const double image = std::sqrt(xr.norm2() * yr.norm2() / r2 - 2.0 * dot(xr, yr) + r2);
    constexpr double pi = std::numbers::pi;
    if (n == 2) return std::log(image / d) / (2.0 * pi);
    const double omega = 2.0 * std::exp(0.5 * n * std::log(pi) - log_gamma(0.5 * n));
    return (std::pow(d, 2.0 - n) - std::pow(image, 2.0 - n)) / ((n - 2.0) * omega);
}

}  // namespace fracwos

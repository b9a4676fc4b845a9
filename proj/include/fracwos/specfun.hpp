#pragma once

// Scalar special functions: log-gamma, beta, the regularized incomplete beta
// function and its inverse, Gauss 2F1 on the negative axis, sin-power
// integrals and erf.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "fracwos/detail/integrate.hpp"
#include "fracwos/errors.hpp"

namespace fracwos {

/// ln Γ(z) for z > 0.
inline double log_gamma(double z) {
    detail::require(std::isfinite(z) && z > 0.0, "log_gamma: z must be positive and finite");
#if defined(__GLIBC__) || defined(__APPLE__)
    int sign = 0;
    return ::lgamma_r(z, &sign);  // reentrant: std::lgamma writes the global signgam
#else
    return std::lgamma(z);
#endif
}

inline double gamma_fn(double z) { return std::exp(log_gamma(z)); }

inline double log_beta(double z, double w) {
    return log_gamma(z) + log_gamma(w) - log_gamma(z + w);
}

/// Complete beta function B(z, w).
inline double beta_fn(double z, double w) {
    detail::require(z > 0.0 && w > 0.0, "beta: parameters must be positive");
    return std::exp(log_beta(z, w));
}

inline double erf(double x) { return std::erf(x); }

namespace detail {

// Continued fraction for I(x; a, b) (modified Lentz), without the
// x^a (1-x)^b / (a B(a,b)) prefactor.
inline double inc_beta_cf(double x, double a, double b) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 1000; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

}  // namespace detail

/// Regularized incomplete beta I(x; z, w).
inline double reg_inc_beta(double x, double z, double w) {
    detail::require(z > 0.0 && w > 0.0 && std::isfinite(z) && std::isfinite(w),
                    "reg_inc_beta: parameters must be positive");
    detail::require(x >= 0.0 && x <= 1.0, "reg_inc_beta: x must lie in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_front = z * std::log(x) + w * std::log1p(-x) - log_beta(z, w);
    if (x < z / (z + w)) return std::exp(log_front) * detail::inc_beta_cf(x, z, w) / z;
    return 1.0 - std::exp(log_front) * detail::inc_beta_cf(1.0 - x, w, z) / w;
}

namespace detail {

// Solves I(x; z, w) = p for p <= I(mean): Newton inside a shrinking bracket,
// bisecting (geometrically across decades) when a step leaves it.
inline double inv_reg_inc_beta_lower(double p, double z, double w, double lb, double mean) {
    double x = mean;
    // Deep in the tail the mean is a poor start; the leading power law is not.
    const double log_tail = (std::log(p) + std::log(z) + lb) / z;
    if (log_tail < std::log(std::numeric_limits<double>::denorm_min())) return 0.0;
    const double tail = std::exp(log_tail);
    if (tail < mean) x = tail;

    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double f = reg_inc_beta(x, z, w) - p;
        if (f == 0.0) return x;
        if (f < 0.0)
            lo = x;
        else
            hi = x;
        const double dens = std::exp((z - 1.0) * std::log(x) + (w - 1.0) * std::log1p(-x) - lb);
        double next = x - f / dens;
        if (!std::isfinite(next) || next <= lo || next >= hi) {
            if (lo > 0.0 && hi / lo > 1e3)
                next = std::sqrt(lo * hi);
            else if (lo == 0.0)
                next = 1e-3 * hi;
            else
                next = 0.5 * (lo + hi);
        }
        if (std::fabs(next - x) <= 1e-15 * x || next == x) return next;
        x = next;
        if (hi - lo <= 1e-16 * hi) return x;
    }
    return x;
}

}  // namespace detail

/// Inverse of x -> I(x; z, w). Above I(mean) the complement 1 - x is
/// solved for instead, so both tails keep full relative precision.
inline double inv_reg_inc_beta(double p, double z, double w) {
    detail::require(z > 0.0 && w > 0.0, "inv_reg_inc_beta: parameters must be positive");
    detail::require(p >= 0.0 && p <= 1.0, "inv_reg_inc_beta: p must lie in [0, 1]");
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    const double lb = log_beta(z, w);
    const double mean = z / (z + w);
    if (p <= reg_inc_beta(mean, z, w)) return detail::inv_reg_inc_beta_lower(p, z, w, lb, mean);
    return 1.0 - detail::inv_reg_inc_beta_lower(1.0 - p, w, z, lb, w / (z + w));
}

/// Gauss hypergeometric 2F1(a, b; c; x) for x <= 0 and c > b > 0.
/// Power series for |x| <= 0.9, Euler's integral otherwise.
inline double gauss_2f1(double a, double b, double c, double x) {
    detail::require(x <= 0.0 && std::isfinite(x), "gauss_2f1: x must be finite and <= 0");
    detail::require(c > b && b > 0.0, "gauss_2f1: requires c > b > 0");
    if (x == 0.0) return 1.0;
    if (std::fabs(x) <= 0.9) {
        double term = 1.0;
        double sum = 1.0;
        for (int k = 0; k < 5000; ++k) {
            term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
            sum += term;
            if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
        }
        return sum;
    }
    // Split [0,1] at 1/2; t = v^{1/b} on the left and 1 - t = u^{1/(c-b)} on
    // the right absorb the endpoint singularities of t^{b-1}(1-t)^{c-b-1}.
    const double cb = c - b;
    auto left = [&](double v) {
        const double t = std::pow(v, 1.0 / b);
        return std::pow(1.0 - t, cb - 1.0) * std::pow(1.0 - t * x, -a) / b;
    };
    auto right = [&](double u) {
        const double t = 1.0 - std::pow(u, 1.0 / cb);
        return std::pow(t, b - 1.0) * std::pow(1.0 - t * x, -a) / cb;
    };
    const double il = detail::integrate_adaptive(left, 0.0, std::pow(0.5, b), 0.0, 1e-14);
    const double ir = detail::integrate_adaptive(right, 0.0, std::pow(0.5, cb), 0.0, 1e-14);
    return (il + ir) / beta_fn(b, cb);
}

/// With phi absent: I_m = ∫_0^π sin^m. With phi given: the normalized CDF
/// (1/I_m) ∫_0^phi sin^m.
inline double sin_power(int m, std::optional<double> phi = std::nullopt) {
    detail::require(m >= 0, "sin_power: m must be non-negative");
    constexpr double pi = std::numbers::pi;
    // I_m by the two-step recursion from I_0 = π, I_1 = 2.
    double total = (m % 2 == 0) ? pi : 2.0;
    for (int k = (m % 2 == 0) ? 2 : 3; k <= m; k += 2) total *= (k - 1.0) / k;
    if (!phi) return total;

    const double p = *phi;
    detail::require(p >= 0.0 && p <= pi, "sin_power: phi must lie in [0, pi]");
    const double sp = std::sin(p);
    const double cp = std::cos(p);
    double partial = (m % 2 == 0) ? p : 1.0 - cp;
    for (int k = (m % 2 == 0) ? 2 : 3; k <= m; k += 2)
        partial = -std::pow(sp, k - 1) * cp / k + (k - 1.0) / k * partial;
    return std::clamp(partial / total, 0.0, 1.0);
}

}  // namespace fracwos

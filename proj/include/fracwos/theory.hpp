#pragma once

// Upper bound on the expected number of walk steps in a ball and the
// constants of the pointwise Green-function bounds it rests on.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracwos/specfun.hpp"
#include "fracwos/wos.hpp"

namespace fracwos {

struct StepBoundInputs {
    int n = 2;
    double s = 0.5;
    double r = 1.0;
    double x0_norm = 0.0;
    double s1 = 0.0;   ///< s on (0, 1/3], (1-s)/2 above
    double a_s = 0.0;  ///< minus the exponent e of the |y| integral
    double rho = 0.0;  ///< x0_norm / r
};

inline StepBoundInputs make_step_bound_inputs(int n, double s, double r, double x0_norm) {
    detail::require(n >= 2, "step bound: n must be >= 2");
    detail::require(s > 0.0 && s < 1.0, "step bound: s must lie in (0, 1)");
    detail::require(r > 0.0, "step bound: r must be positive");
    detail::require(x0_norm >= 0.0 && x0_norm < r, "step bound: |x0| must lie in [0, r)");
    StepBoundInputs in;
    in.n = n;
    in.s = s;
    in.r = r;
    in.x0_norm = x0_norm;
    in.s1 = (s <= 1.0 / 3.0) ? s : 0.5 * (1.0 - s);
    const double q = 1.0 + in.s1 + s;
    in.a_s = -(q * (in.s1 - n) / (1.0 - in.s1 - s) + n);
    in.rho = x0_norm / r;
    return in;
}

struct GreenBoundConstants {
    double C1, C2, C3, C4, C5, C6;
};

inline GreenBoundConstants green_bound_constants(int n, double s) {
    detail::require(n >= 2, "green bound constants: n must be >= 2");
    detail::require(s > 0.0 && s < 1.0, "green bound constants: s must lie in (0, 1)");
    constexpr double pi = std::numbers::pi;
    const double h = 0.5 * n;
    const double pih = std::pow(pi, -h);
    GreenBoundConstants k;
    k.C1 = pih * gamma_fn(h) / (gamma_fn(s) * gamma_fn(s + 1.0));
    k.C2 = std::pow(2.0, -2.0 * s) * pih * gamma_fn(h - s) / gamma_fn(s);
    k.C3 = std::pow(2.0, 2.0 * s) * std::max(k.C1, k.C2);
    k.C4 = pih / gamma_fn(s) * std::max(std::pow(2.0, 2.0 * s) * gamma_fn(h) / gamma_fn(1.0 + s), gamma_fn(h - s));
    k.C5 = std::pow(2.0, 6.0 * s + 1.0) / beta_fn(s, h);
    k.C6 = std::pow(2.0, 4.0 * s + 1.0) * s * gamma_fn(s + h) * gamma_fn(h - s) / (gamma_fn(h) * gamma_fn(h));
    return k;
}

/// Closed-form upper bound on E[number of steps] from x0 in B_r. Evaluated
/// in logarithms: the |y|-integral term overflows doubles in high dimension.
inline double expected_steps_bound(const StepBoundInputs& in) {
    detail::require(in.x0_norm >= 0.0 && in.x0_norm < in.r, "expected_steps_bound: |x0| must lie in [0, r)");
    constexpr double pi = std::numbers::pi;
    const int n = in.n;
    const double s = in.s;
    const double s1 = in.s1;
    const double r = in.r;
    const double h = 0.5 * n;
    const double q = 1.0 + s1 + s;
    const double e = -in.a_s;

    const double log_pre = (4.0 * s + 1.0) * std::log(2.0) + h * std::log(pi) + log_gamma(s + h) +
                           log_gamma(s + 1.0) - 2.0 * log_gamma(h) + std::log(green_bound_constants(n, s).C4);

    const double first = std::pow(2.0, s) / s1;

    const double d = r - in.x0_norm;
    // (1/e)[(r+|x0|)^e - (d/2)^e], positive for either sign of e.
    const double la = e * std::log(r + in.x0_norm);
    const double lb = e * std::log(0.5 * d);
    const double hi = std::max(la, lb);
    const double lo = std::min(la, lb);
    const double log_bracket = hi + std::log1p(-std::exp(lo - hi)) - std::log(std::fabs(e));
    const double log_second = s * std::log(d) +
                              2.0 * (s1 + s) / q * ((n - 0.5 * q) * std::log(r) + log_beta(1.0 - 0.5 * q, n)) +
                              (1.0 - s1 - s) / q * log_bracket;
    return std::exp(log_pre) * (first + std::exp(log_second));
}

struct StepCheck {
    double mean_steps;
    double std_error;
    double bound;
    bool pass;
};

/// Mean step count of walks from x0 in B_r(0) against the bound.
inline StepCheck empirical_step_check(int n, double s, double r, const Point& x0, std::uint64_t N,
                                      std::uint64_t seed = 1, int parallelism = 1) {
    ProblemSpec p;
    p.n = n;
    p.s = s;
    p.domain = Domain::ball(Point(static_cast<std::size_t>(n)), r);
    const EstimatorSummary est = estimate(p, x0, N, seed, parallelism);
    const double bound = expected_steps_bound(make_step_bound_inputs(n, s, r, x0.norm()));
    return StepCheck{est.avg_steps, est.steps_std_error, bound, est.avg_steps + 3.0 * est.steps_std_error <= bound};
}

}  // namespace fracwos

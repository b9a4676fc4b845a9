#pragma once

// Named scalar fields for the benchmark problems, resolvable by name.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "fracwos/geometry.hpp"
#include "fracwos/kernels.hpp"
#include "fracwos/specfun.hpp"
#include "fracwos/wos.hpp"

namespace fracwos {

inline NamedField constant_field(double c) {
    return NamedField{"constant(" + std::to_string(c) + ")", [c](const Point&) { return c; }, c == 0.0};
}

/// exp(-|x - x'|²).
inline NamedField example1_g(Point x_prime) {
    return NamedField{"example1_g", [xp = std::move(x_prime)](const Point& x) {
                          const double d = distance(x, xp);
                          return std::exp(-d * d);
                      }};
}

/// The fundamental solution centered at x': a(n,s)|x - x'|^{2s-n} for n >= 2,
/// and (1/π) log|x - x'| on the line. The 1D form is s-harmonic only at s = 1/2.
inline NamedField example2_g(int n, double s, Point x_prime) {
    if (n == 1) {
        return NamedField{"example2_g", [xp = std::move(x_prime)](const Point& x) {
                              return std::log(std::fabs(x[0] - xp[0])) / std::numbers::pi;
                          }};
    }
    const double a = constants(n, s).a_ns;
    return NamedField{"example2_g", [a, s, n, xp = std::move(x_prime)](const Point& x) {
                          return a * std::pow(distance(x, xp), 2.0 * s - n);
                      }};
}

/// Source for the exact solution example3_exact on the unit ball.
inline NamedField example3_f(int n, double s) {
    detail::require(n >= 1, "example3_f: n must be >= 1");
    if (n == 1) {
        // (-Δ)^s [x (1-x²)_+^s] = 2^{2s} Γ(1+s) Γ(s+3/2) / Γ(3/2) · x on (-1, 1).
        const double k = std::exp(2.0 * s * std::log(2.0) + log_gamma(1.0 + s) + log_gamma(s + 1.5) - log_gamma(1.5));
        return NamedField{"example3_f", [k](const Point& x) { return k * x[0]; }};
    }
    const double h = 0.5 * n;
    const double k = std::exp(2.0 * s * std::log(2.0) + log_gamma(2.0 + s) + log_gamma(h + s) - log_gamma(h));
    const double q = 1.0 + 2.0 * s / n;
    return NamedField{"example3_f", [k, q](const Point& x) { return k * (1.0 - q * x.norm2()); }};
}

/// (1 - |x|²)_+^{1+s} for n >= 2, x (1 - x²)_+^s for n = 1.
inline NamedField example3_exact(int n, double s) {
    if (n == 1) {
        return NamedField{"example3_exact", [s](const Point& x) {
                              const double v = 1.0 - x[0] * x[0];
                              return v > 0.0 ? x[0] * std::pow(v, s) : 0.0;
                          }};
    }
    return NamedField{"example3_exact", [s](const Point& x) {
                          const double v = 1.0 - x.norm2();
                          return v > 0.0 ? std::pow(v, 1.0 + s) : 0.0;
                      }};
}

inline NamedField example4_f() {
    return NamedField{"example4_f", [](const Point&) { return 1.0; }};
}

struct FieldParams {
    int n = 0;
    double s = 0.0;
    std::optional<double> c;        ///< constant(c)
    std::optional<Point> x_prime;  ///< example1_g / example2_g center
};

inline const std::vector<std::string>& registered_field_names() {
    static const std::vector<std::string> names = {"zero",           "constant",   "example1_g", "example2_g",
                                                   "example3_f",     "example3_exact", "example4_f"};
    return names;
}

/// Resolves a registry name. Throws DomainError for unknown names or missing
/// parameters.
inline NamedField make_field(const std::string& name, const FieldParams& p) {
    if (name == "zero") return zero_field();
    if (name == "constant") {
        if (!p.c) throw DomainError("constant: parameter c is required");
        return constant_field(*p.c);
    }
    if (name == "example1_g" || name == "example2_g") {
        if (!p.x_prime) throw DomainError(name + ": parameter x_prime is required");
        if (p.x_prime->dim() != p.n) throw DomainError(name + ": x_prime dimension differs from n");
        return name == "example1_g" ? example1_g(*p.x_prime) : example2_g(p.n, p.s, *p.x_prime);
    }
    if (name == "example3_f") return example3_f(p.n, p.s);
    if (name == "example3_exact") return example3_exact(p.n, p.s);
    if (name == "example4_f") return example4_f();
    throw DomainError("unknown function name '" + name + "'");
}

}  // namespace fracwos

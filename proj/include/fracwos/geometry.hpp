#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "fracwos/errors.hpp"

namespace fracwos {

/// A point of R^n with finite coordinates.
class Point {
public:
    Point() = default;
    explicit Point(std::size_t n, double fill = 0.0) : coords_(n, fill) {}
    Point(std::initializer_list<double> c) : coords_(c) { check(); }
    explicit Point(std::vector<double> c) : coords_(std::move(c)) { check(); }

    std::size_t size() const { return coords_.size(); }
    int dim() const { return static_cast<int>(coords_.size()); }
    double& operator[](std::size_t i) { return coords_[i]; }
    double operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    double norm2() const {
        double acc = 0.0;
        for (double v : coords_) acc += v * v;
        return acc;
    }
    double norm() const { return std::sqrt(norm2()); }

    Point& operator+=(const Point& o) {
        for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Point& operator-=(const Point& o) {
        for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Point& operator*=(double a) {
        for (double& v : coords_) v *= a;
        return *this;
    }
    friend Point operator+(Point a, const Point& b) { return a += b; }
    friend Point operator-(Point a, const Point& b) { return a -= b; }
    friend Point operator*(double k, Point a) { return a *= k; }
    friend bool operator==(const Point&, const Point&) = default;

private:
    void check() const {
        for (double v : coords_)
            if (!std::isfinite(v)) throw DomainError("Point: coordinates must be finite");
    }
    std::vector<double> coords_;
};

inline double dot(const Point& a, const Point& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double distance(const Point& a, const Point& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

struct BallShape {
    Point center;
    double radius;
};

struct BoxShape {
    Point lo;
    Point hi;
};

/// User-supplied region: `distance` returns the distance to the boundary for
/// interior points and a value <= 0 outside.
struct GenericShape {
    std::function<double(const Point&)> distance;
    double scale = 1.0;
};

class Domain {
public:
    using Shape = std::variant<BallShape, BoxShape, GenericShape>;

    static Domain ball(Point center, double radius) {
        detail::require(std::isfinite(radius) && radius > 0.0, "ball: radius must be positive");
        const int n = center.dim();
        detail::require(n >= 1, "ball: dimension must be >= 1");
        return Domain(BallShape{std::move(center), radius}, n);
    }
    static Domain unit_ball(int n) { return ball(Point(static_cast<std::size_t>(n)), 1.0); }

    static Domain box(Point lo, Point hi) {
        detail::require(lo.size() == hi.size() && lo.size() >= 1, "box: corner dimensions differ");
        for (std::size_t i = 0; i < lo.size(); ++i)
            detail::require(lo[i] < hi[i], "box: lo must be below hi on every axis");
        const int n = lo.dim();
        return Domain(BoxShape{std::move(lo), std::move(hi)}, n);
    }

    static Domain generic(int n, std::function<double(const Point&)> distance, double scale = 1.0) {
        detail::require(n >= 1, "generic: dimension must be >= 1");
        detail::require(static_cast<bool>(distance), "generic: distance oracle required");
        detail::require(scale > 0.0, "generic: scale must be positive");
        return Domain(GenericShape{std::move(distance), scale}, n);
    }

    int dimension() const { return dim_; }
    const Shape& shape() const { return shape_; }

    /// Characteristic length: ball radius, longest box side, or the user scale.
    double scale() const {
        return std::visit(
            [](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, BallShape>) {
                    return s.radius;
                } else if constexpr (std::is_same_v<T, BoxShape>) {
                    double m = 0.0;
                    for (std::size_t i = 0; i < s.lo.size(); ++i) m = std::max(m, s.hi[i] - s.lo[i]);
                    return m;
                } else {
                    return s.scale;
                }
            },
            shape_);
    }

    /// Signed distance to the boundary: positive inside, <= 0 outside.
    double signed_distance(const Point& x) const {
        if (x.dim() != dim_) throw DomainError("dimension mismatch between point and domain");
        return std::visit(
            [&](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, BallShape>) {
                    return s.radius - distance(x, s.center);
                } else if constexpr (std::is_same_v<T, BoxShape>) {
                    double m = std::numeric_limits<double>::infinity();
                    for (std::size_t i = 0; i < x.size(); ++i)
                        m = std::min(m, std::min(x[i] - s.lo[i], s.hi[i] - x[i]));
                    return m;
                } else {
                    return s.distance(x);
                }
            },
            shape_);
    }

private:
    Domain(Shape s, int n) : shape_(std::move(s)), dim_(n) {}
    Shape shape_;
    int dim_;
};

inline bool contains(const Domain& d, const Point& x) { return d.signed_distance(x) > 0.0; }

inline double inscribed_radius(const Domain& d, const Point& x) {
    const double r = d.signed_distance(x);
    if (!(r > 0.0)) throw DomainError("inscribed_radius: point is not inside the domain");
    return r;
}

/// Hyperspherical coordinates: x_n = ρ cos φ1, x_{n-1} = ρ sin φ1 cos φ2, ...,
/// x_2 = ρ sin φ1 ... sin φ_{n-2} cos θ, x_1 = ρ sin φ1 ... sin φ_{n-2} sin θ.
/// For n = 2 this is (ρ sin θ, ρ cos θ).
inline Point unit_vector(double theta, std::span<const double> phis) {
    const std::size_t n = phis.size() + 2;
    Point u(n);
    double prod = 1.0;
    for (std::size_t j = 0; j < phis.size(); ++j) {
        u[n - 1 - j] = prod * std::cos(phis[j]);
        prod *= std::sin(phis[j]);
    }
    u[1] = prod * std::cos(theta);
    u[0] = prod * std::sin(theta);
    return u;
}

inline Point spherical_to_cartesian(const Point& center, double rho, double theta,
                                    std::span<const double> phis) {
    constexpr double pi = std::numbers::pi;
    detail::require(center.size() == phis.size() + 2, "spherical_to_cartesian: needs n-2 polar angles");
    detail::require(rho >= 0.0 && std::isfinite(rho), "spherical_to_cartesian: bad radius");
    detail::require(theta >= 0.0 && theta <= 2.0 * pi, "spherical_to_cartesian: theta out of [0, 2pi]");
    for (double p : phis)
        detail::require(p >= 0.0 && p <= pi, "spherical_to_cartesian: phi out of [0, pi]");
    Point y = unit_vector(theta, phis);
    y *= rho;
    y += center;
    return y;
}

}  // namespace fracwos

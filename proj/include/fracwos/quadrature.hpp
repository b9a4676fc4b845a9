#pragma once

// Scheme I: deterministic tensor-grid quadrature of the representation
// formula on a ball centered at the origin.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "fracwos/detail/summation.hpp"
#include "fracwos/geometry.hpp"
#include "fracwos/kernels.hpp"

namespace fracwos {

/// Uniform grid counts; each step is 1/N on the unit parameter interval.
struct GridSpec {
    int n_rho = 2;
    int n_theta = 2;
    std::vector<int> n_phi;  ///< one entry per polar angle (n - 2 of them)
    int n_t = 2;

    static GridSpec uniform(int N, int dim) {
        detail::require(N >= 2, "GridSpec: N must be >= 2");
        GridSpec g;
        g.n_rho = g.n_theta = g.n_t = N;
        g.n_phi.assign(static_cast<std::size_t>(std::max(0, dim - 2)), N);
        return g;
    }
    double h_rho() const { return 1.0 / n_rho; }
    double h_theta() const { return 1.0 / n_theta; }
    double h_t() const { return 1.0 / n_t; }
};

namespace scheme1 {

// Integrals of (ρ/2)^{2s-1} against the two linear hats of [ρ_{i-1}, ρ_i],
// ρ_i = i h (not divided by h).
inline double weight_A1(int i, double h, double s) {
    const double a = (i - 1) * h;
    const double b = i * h;
    return std::pow(2.0, 1.0 - 2.0 * s) *
           (b / (2.0 * s) * (std::pow(b, 2.0 * s) - std::pow(a, 2.0 * s)) -
            (std::pow(b, 2.0 * s + 1.0) - std::pow(a, 2.0 * s + 1.0)) / (2.0 * s + 1.0));
}

inline double weight_A2(int i, double h, double s) {
    const double a = (i - 1) * h;
    const double b = i * h;
    return std::pow(2.0, 1.0 - 2.0 * s) *
           ((std::pow(b, 2.0 * s + 1.0) - std::pow(a, 2.0 * s + 1.0)) / (2.0 * s + 1.0) -
            a / (2.0 * s) * (std::pow(b, 2.0 * s) - std::pow(a, 2.0 * s)));
}

// Same for the weight ((1-ρ)/2)^{-s}.
inline double weight_B1(int i, double h, double s) {
    const double wa = 1.0 - (i - 1) * h;  // 1 - ρ_{i-1}
    const double wb = 1.0 - i * h;        // 1 - ρ_i
    return std::pow(2.0, s) * ((std::pow(wa, 2.0 - s) - std::pow(wb, 2.0 - s)) / (2.0 - s) -
                               wb * (std::pow(wa, 1.0 - s) - std::pow(wb, 1.0 - s)) / (1.0 - s));
}

inline double weight_B2(int i, double h, double s) {
    const double wa = 1.0 - (i - 1) * h;
    const double wb = 1.0 - i * h;
    return std::pow(2.0, s) * (wa * (std::pow(wa, 1.0 - s) - std::pow(wb, 1.0 - s)) / (1.0 - s) -
                               (std::pow(wa, 2.0 - s) - std::pow(wb, 2.0 - s)) / (2.0 - s));
}

/// Product-midpoint weight of ∫ t^{s-1} over [t_{k-1}, t_k].
inline double weight_C(int k, double h, double s) {
    return (std::pow(k * h, s) - std::pow((k - 1) * h, s)) / s;
}

/// Householder reflection taking x/|x| to the last basis vector; applying it
/// maps the rotated frame back as well since it is an involution.
class AxisReflection {
public:
    explicit AxisReflection(const Point& x) : w_(x.size()) {
        const double xn = x.norm();
        if (xn == 0.0) return;
        for (std::size_t i = 0; i < x.size(); ++i) w_[i] = x[i] / xn;
        w_[x.size() - 1] -= 1.0;
        ww_ = w_.norm2();
    }
    Point apply(const Point& v) const {
        if (ww_ < 1e-300) return v;
        const double k = 2.0 * dot(w_, v) / ww_;
        Point out = v;
        for (std::size_t i = 0; i < v.size(); ++i) out[i] -= k * w_[i];
        return out;
    }

private:
    Point w_;
    double ww_ = 0.0;
};

}  // namespace scheme1

/// Scheme I for the exterior-data problem (f ≡ 0) on B_r(0), n = 2 or 3.
/// The radial variable ρ ∈ (0,1] parametrizes the exterior point at radius r/ρ.
inline double scheme1_homogeneous(int n, double s, double r, const std::function<double(const Point&)>& g,
                                  const Point& x, const GridSpec& grid) {
    if (n != 2 && n != 3) throw UnsupportedError("scheme1_homogeneous: n must be 2 or 3");
    detail::require(x.dim() == n, "scheme1_homogeneous: point dimension differs from n");
    detail::require(s > 0.0 && s < 1.0, "scheme1_homogeneous: s must lie in (0, 1)");
    detail::require(r > 0.0, "scheme1_homogeneous: radius must be positive");
    const double xn = x.norm();
    detail::require(xn < r, "scheme1_homogeneous: x must be inside the ball");
    detail::require(grid.n_rho >= 2 && grid.n_theta >= 2, "scheme1_homogeneous: grid too coarse");
    if (n == 3) detail::require(grid.n_phi.size() == 1 && grid.n_phi[0] >= 2, "scheme1_homogeneous: need one phi grid");

    constexpr double pi = std::numbers::pi;
    const FracConstants c = constants(n, s);
    const scheme1::AxisReflection reflect(x);
    const double far_radius = 1e150 * r;  // stands in for r/ρ at ρ = 0
    const int nr = grid.n_rho;
    const double hr = grid.h_rho();

    // Radial nodes in the actual variable ρ and their weights, including the
    // non-singular part of the radial integrand.
    struct RadialNode {
        double rho;
        double weight;
    };
    std::vector<RadialNode> radial;
    if (s < 0.5) {
        // ∫_0^{1/2} with ρ = ρ'/2 and ∫_{1/2}^1 with ρ = (ρ'+1)/2; both dρ = dρ'/2.
        for (int i = 0; i <= nr; ++i) {
            double w = 0.0;
            if (i >= 1) w += scheme1::weight_A2(i, hr, s);
            if (i < nr) w += scheme1::weight_A1(i + 1, hr, s);
            const double rho = 0.5 * i * hr;
            radial.push_back({rho, 0.5 * w / hr * std::pow(1.0 - rho * rho, -s)});
        }
        for (int i = 0; i <= nr; ++i) {
            double w = 0.0;
            if (i >= 1) w += scheme1::weight_B2(i, hr, s);
            if (i < nr) w += scheme1::weight_B1(i + 1, hr, s);
            const double rp = i * hr;
            const double rho = 0.5 * (rp + 1.0);
            radial.push_back({rho, 0.5 * w / hr * std::pow(0.5 * (3.0 + rp), -s) * std::pow(rho, 2.0 * s - 1.0)});
        }
    } else {
        for (int i = 0; i <= nr; ++i) {
            double w = 0.0;
            if (i >= 1) w += scheme1::weight_B2(i, hr, s);
            if (i < nr) w += scheme1::weight_B1(i + 1, hr, s);
            const double rho = i * hr;
            const double smooth = (rho == 0.0) ? (s == 0.5 ? 1.0 : 0.0)
                                               : std::pow(rho, 2.0 * s - 1.0) * std::pow(1.0 + rho, -s);
            radial.push_back({rho, std::pow(2.0, -s) * w / hr * smooth});
        }
    }

    // Angular nodes: unit direction (original frame), cosine of the angle to
    // x, and trapezoid weight times Jacobian.
    struct AngularNode {
        Point dir;
        double cos_to_x;
        double weight;
    };
    std::vector<AngularNode> angular;
    const int nt = grid.n_theta;
    auto trap = [](int j, int N) { return (j == 0 || j == N) ? 0.5 / N : 1.0 / N; };
    if (n == 2) {
        for (int j = 0; j <= nt; ++j) {
            const double th = 2.0 * pi * j / nt;
            const Point u{std::sin(th), std::cos(th)};
            angular.push_back({reflect.apply(u), std::cos(th), 2.0 * pi * trap(j, nt)});
        }
    } else {
        const int np = grid.n_phi[0];
        for (int k = 0; k <= np; ++k) {
            const double ph = pi * k / np;
            const double jac = std::sin(ph);
            if (jac == 0.0 && k != 0 && k != np) continue;
            for (int j = 0; j <= nt; ++j) {
                const double th = 2.0 * pi * j / nt;
                const Point u{std::sin(ph) * std::sin(th), std::sin(ph) * std::cos(th), std::cos(ph)};
                angular.push_back({reflect.apply(u), std::cos(ph), 2.0 * pi * trap(j, nt) * pi * trap(k, np) * jac});
            }
        }
    }

    detail::CompensatedSum total;
    for (const auto& a : angular) {
        if (a.weight == 0.0) continue;
        detail::CompensatedSum inner;
        for (const auto& rn : radial) {
            if (rn.weight == 0.0) continue;
            const double R = (rn.rho == 0.0) ? far_radius : r / rn.rho;
            const double gv = g(R * a.dir);
            if (gv == 0.0) continue;
            const double den = r * r + rn.rho * rn.rho * xn * xn - 2.0 * r * rn.rho * xn * a.cos_to_x;
            inner += rn.weight * gv / std::pow(den, 0.5 * n);
        }
        total += a.weight * inner.value();
    }
    return c.alpha * std::pow(r * r - xn * xn, s) * std::pow(r, n - 2.0 * s) * total.value();
}

/// Scheme I for the source term in 2D: u(x) = ∫_{B_r} G(x, y) f(y) dy with a
/// square of half-side h_excl around x removed, product-midpoint rules in
/// (ρ, θ) and in the Green-function parameter t.
inline double scheme1_source_2d(double s, double r, const std::function<double(const Point&)>& f,
                                const Point& x, const GridSpec& grid, double h_excl) {
    detail::require(x.dim() == 2, "scheme1_source_2d: point must be two-dimensional");
    detail::require(s > 0.0 && s < 1.0, "scheme1_source_2d: s must lie in (0, 1)");
    detail::require(r > 0.0, "scheme1_source_2d: radius must be positive");
    const double xn = x.norm();
    detail::require(xn < r, "scheme1_source_2d: x must be inside the ball");
    detail::require(grid.n_rho >= 1 && grid.n_theta >= 1 && grid.n_t >= 1, "scheme1_source_2d: empty grid");

    constexpr double pi = std::numbers::pi;
    const FracConstants c = constants(2, s);
    const double r2 = r * r;
    const double dx = r2 - xn * xn;

    std::vector<double> t_mid(static_cast<std::size_t>(grid.n_t));
    std::vector<double> t_w(static_cast<std::size_t>(grid.n_t));
    for (int k = 1; k <= grid.n_t; ++k) {
        t_mid[k - 1] = (k - 0.5) * grid.h_t();
        t_w[k - 1] = scheme1::weight_C(k, grid.h_t(), s);
    }

    // x sits on the first axis of the rotated frame.
    const double ex = xn > 0.0 ? x[0] / xn : 1.0;
    const double ey = xn > 0.0 ? x[1] / xn : 0.0;
    auto to_original = [&](double a, double b) { return Point{a * ex - b * ey, a * ey + b * ex}; };

    // Integrand at a rotated-frame point (a, b) without the area element.
    auto integrand = [&](double a, double b) {
        const double y2 = a * a + b * b;
        if (y2 >= r2) return 0.0;
        const double fv = f(to_original(a, b));
        if (fv == 0.0) return 0.0;
        const double dy = r2 - y2;
        const double A = dx * dy;
        const double B = r2 * ((a - xn) * (a - xn) + b * b);
        double tsum = 0.0;
        for (std::size_t k = 0; k < t_mid.size(); ++k) tsum += t_w[k] / (A * t_mid[k] + B);
        return std::pow(dy, s) * fv * tsum;
    };

    const int nr = grid.n_rho;
    const int nth = grid.n_theta;
    detail::CompensatedSum total;

    // Polar sweep about `origin` over angles [th0, th1] and radii [R0(θ), R1(θ)].
    auto sweep = [&](double ox, double oy, double th0, double th1, auto&& R0, auto&& R1) {
        const double dth = (th1 - th0) / nth;
        for (int j = 1; j <= nth; ++j) {
            const double th = th0 + (j - 0.5) * dth;
            const double lo = R0(th);
            const double hi = R1(th);
            const double drho = (hi - lo) / nr;
            const double ct = std::cos(th);
            const double st = std::sin(th);
            detail::CompensatedSum inner;
            for (int i = 1; i <= nr; ++i) {
                const double rho = lo + (i - 0.5) * drho;
                inner += rho * integrand(ox + rho * ct, oy + rho * st);
            }
            total += dth * drho * inner.value();
        }
    };

    if (xn == 0.0) {
        sweep(0.0, 0.0, 0.0, 2.0 * pi, [](double) { return 0.0; }, [&](double) { return r; });
    } else {
        const double he = h_excl;
        detail::require(he > 0.0 && he < xn, "scheme1_source_2d: h_excl must lie in (0, |x|)");
        const double phi = std::atan(he / (xn - he));
        detail::require((xn + he) / std::cos(phi) < r, "scheme1_source_2d: h_excl too large for this point");
        // Rays from the origin outside the cone through the near corners.
        sweep(0.0, 0.0, phi, 2.0 * pi - phi, [](double) { return 0.0; }, [&](double) { return r; });
        // Inside the cone: up to the near face, and from the far face to the sphere.
        sweep(0.0, 0.0, -phi, phi, [](double) { return 0.0; },
              [&](double th) { return (xn - he) / std::cos(th); });
        sweep(0.0, 0.0, -phi, phi, [&](double th) { return (xn + he) / std::cos(th); },
              [&](double) { return r; });
        // The two slivers between the square's sides and the cone, swept
        // from the near corners up to the far face.
        sweep(xn - he, he, 0.0, phi, [](double) { return 0.0; },
              [&](double th) { return 2.0 * he / std::cos(th); });
        sweep(xn - he, -he, -phi, 0.0, [](double) { return 0.0; },
              [&](double th) { return 2.0 * he / std::cos(th); });
    }
    return c.kappa * std::pow(r, 2.0 - 2.0 * s) * std::pow(dx, s) * total.value();
}

struct ConvergenceRow {
    double h;
    double value;
    double error;  ///< |u_{2h} - u_h|, NaN on the first row
    double rate;   ///< log2(E(2h)/E(h)), NaN on the first two rows
};

/// Runs op(N) at N0, 2 N0, ..., 2^halvings N0 (grid step h = 1/N).
inline std::vector<ConvergenceRow> convergence_study(const std::function<double(int)>& op, int n0, int halvings) {
    detail::require(halvings >= 2, "convergence_study: halvings must be >= 2");
    detail::require(n0 >= 2, "convergence_study: initial N must be >= 2");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ConvergenceRow> rows;
    for (int l = 0; l <= halvings; ++l) {
        const int N = n0 << l;
        ConvergenceRow row{1.0 / N, op(N), nan, nan};
        if (l >= 1) row.error = std::fabs(rows.back().value - row.value);
        if (l >= 2) row.rate = std::log2(rows.back().error / row.error);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace fracwos

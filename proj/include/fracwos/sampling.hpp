#pragma once

// Random streams and exact samplers for the exit and interior laws of a ball.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "fracwos/geometry.hpp"
#include "fracwos/kernels.hpp"
#include "fracwos/specfun.hpp"

namespace fracwos {

/// Philox4x32-10 block function (Salmon et al., Random123).
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
    constexpr std::uint64_t m0 = 0xD2511F53u;
    constexpr std::uint64_t m1 = 0xCD9E8D57u;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        const std::uint64_t p0 = m0 * ctr[0];
        const std::uint64_t p1 = m1 * ctr[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

/// One independent random stream per (master_seed, stream_index): the seed is
/// the Philox key, the stream index fills the upper counter words and a block
/// counter the lower ones.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : seed_(master_seed), stream_(stream_index) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        if (avail_ == 0) refill();
        return buf_[--avail_];
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
    /// Uniform on (0, 1).
    double uniform_open() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }
    double normal() { return normal_(*this); }

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_; }

private:
    void refill() {
        const std::array<std::uint32_t, 4> ctr = {
            static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
            static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
        const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                                  static_cast<std::uint32_t>(seed_ >> 32)};
        const auto out = philox4x32(ctr, key);
        ++block_;
        buf_[1] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
        buf_[0] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
        avail_ = 2;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buf_{};
    int avail_ = 0;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

// ---- radial laws ----------------------------------------------------------

/// Exit radius r (I^{-1}(1-u; s, 1-s))^{-1/2}; its CDF is 1 - I(r²/ρ²; s, 1-s).
inline double exit_radius(double r, double s, double u) {
    detail::require(u > 0.0 && u < 1.0, "exit_radius: u must lie in (0, 1)");
    u = std::min(u, 1.0 - 0x1.0p-53);
    const double q = inv_reg_inc_beta(1.0 - u, s, 1.0 - s);
    // q rounds to 1 when 1 - q is below half an ulp; keep the radius outside.
    return std::max(r / std::sqrt(q), std::nextafter(r, std::numeric_limits<double>::infinity()));
}

inline double sample_exit_radius(double r, double s, RngStream& rng) {
    for (;;) {
        const double rho = exit_radius(r, s, rng.uniform_open());
        if (std::isfinite(rho) && rho <= 1e30 * r) return rho;
    }
}

/// Interior radius r u^{1/(2s)}, CDF (ρ/r)^{2s}.
inline double interior_radius(double r, double s, double u) {
    detail::require(u > 0.0 && u < 1.0, "interior_radius: u must lie in (0, 1)");
    return r * std::pow(u, 1.0 / (2.0 * s));
}

inline double sample_interior_radius(double r, double s, RngStream& rng) {
    return interior_radius(r, s, rng.uniform_open());
}

// ---- angular laws ---------------------------------------------------------

/// Acceptance rate of the Gaussian-proposal rejection sampler for sin^m,
/// counting every Gaussian draw as a proposal.
inline double acceptance_rate(int m) {
    detail::require(m >= 1, "acceptance_rate: m must be >= 1");
    const double md = m;
    return sin_power(m) / (std::sqrt(2.0 * std::numbers::pi / md) * erf(std::sqrt(md / 2.0) * std::numbers::pi));
}

struct AngularLaw {
    int m;
    double alpha_m;
    double eta;
};

inline AngularLaw angular_law(int m) { return AngularLaw{m, 0.5 * m, acceptance_rate(m)}; }

/// The m = 1 law sin(φ)/2 by inversion.
inline double sin1_angle(double u) { return std::acos(1.0 - 2.0 * u); }

struct AngleDraw {
    double angle;
    int proposals;
};

/// Draw from the density sin^m(φ)/I_m on (0, π). For m >= 2 proposals come
/// from N(π/2, 1/m); draws outside (0, π) are discarded and counted.
inline AngleDraw draw_sin_power_angle(int m, RngStream& rng) {
    detail::require(m >= 1, "sample_sin_power_angle: m must be >= 1");
    constexpr double pi = std::numbers::pi;
    if (m == 1) return {sin1_angle(rng.uniform_open()), 1};
    const double sigma = 1.0 / std::sqrt(static_cast<double>(m));
    const double half_m = 0.5 * m;
    int proposals = 0;
    for (;;) {
        ++proposals;
        const double x = 0.5 * pi + sigma * rng.normal();
        if (!(x > 0.0 && x < pi)) continue;
        const double d = x - 0.5 * pi;
        const double ratio = std::pow(std::sin(x), m) * std::exp(half_m * d * d);
        if (rng.uniform() <= ratio) return {x, proposals};
    }
}

inline double sample_sin_power_angle(int m, RngStream& rng) { return draw_sin_power_angle(m, rng).angle; }

struct Direction {
    double theta;
    std::vector<double> phis;  ///< φ_1..φ_{n-2}
};

/// θ uniform on [0, 2π); φ_i with density sin^{n-1-i}/I_{n-1-i}.
inline Direction sample_direction(int n, RngStream& rng) {
    detail::require(n >= 2, "sample_direction: n must be >= 2");
    Direction d;
    d.theta = 2.0 * std::numbers::pi * rng.uniform();
    d.phis.resize(static_cast<std::size_t>(n - 2));
    for (int i = 1; i <= n - 2; ++i) d.phis[i - 1] = sample_sin_power_angle(n - 1 - i, rng);
    return d;
}

namespace detail {

inline Point offset_point(const Point& center, double rho, RngStream& rng) {
    if (center.dim() == 1) {
        Point y = center;
        y[0] += (rng.uniform() < 0.5) ? -rho : rho;
        return y;
    }
    const Direction d = sample_direction(center.dim(), rng);
    Point y = unit_vector(d.theta, d.phis);
    y *= rho;
    y += center;
    return y;
}

}  // namespace detail

/// Exit position of the ball walk from its center. A radius within a few
/// ulps of r can round back onto the closed ball; it is then raised by a
/// doubling increment until the point is strictly outside.
inline Point sample_exit_point(const BallContext& ctx, RngStream& rng) {
    double rho = sample_exit_radius(ctx.radius, ctx.constants.s, rng);
    Point u{1.0};
    if (ctx.center.dim() == 1) {
        if (rng.uniform() < 0.5) u[0] = -1.0;
    } else {
        const Direction d = sample_direction(ctx.center.dim(), rng);
        u = unit_vector(d.theta, d.phis);
    }
    double step = rho * std::numeric_limits<double>::epsilon();
    for (;;) {
        Point y = u;
        y *= rho;
        y += ctx.center;
        if (distance(y, ctx.center) > ctx.radius) return y;
        rho += step;
        step *= 2.0;
    }
}

/// Interior position with density interior_density(ctx, ·).
inline Point sample_interior_point(const BallContext& ctx, RngStream& rng) {
    const double rho = sample_interior_radius(ctx.radius, ctx.constants.s, rng);
    return detail::offset_point(ctx.center, rho, rng);
}

}  // namespace fracwos

#pragma once

// Walk-on-spheres for (-Δ)^s u = f in a domain with u = g outside it.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fracwos/geometry.hpp"
#include "fracwos/kernels.hpp"
#include "fracwos/sampling.hpp"
#include "fracwos/specfun.hpp"

namespace fracwos {

/// A scalar field with a name for reporting. `zero` marks f ≡ 0 so the walk
/// can skip interior draws.
struct NamedField {
    std::string name;
    std::function<double(const Point&)> eval;
    bool zero = false;

    double operator()(const Point& x) const { return zero ? 0.0 : eval(x); }
};

inline NamedField zero_field() {
    return NamedField{"zero", [](const Point&) { return 0.0; }, true};
}

struct ProblemSpec {
    int n = 0;
    double s = 0.0;
    Domain domain = Domain::unit_ball(1);
    NamedField source = zero_field();
    NamedField boundary = zero_field();
    std::optional<NamedField> exact;
    std::uint64_t max_steps = 1'000'000;
};

struct WalkResult {
    double score = 0.0;
    std::uint64_t steps = 0;
    bool capped = false;
};

struct EstimatorSummary {
    double estimate = 0.0;
    double sample_variance = 0.0;
    double std_error = 0.0;
    double avg_steps = 0.0;
    double steps_std_error = 0.0;
    std::uint64_t n_samples = 0;  ///< walks that exited (the ones averaged)
    std::uint64_t n_capped = 0;
    double wall_seconds = 0.0;
    std::optional<double> exact;
    std::optional<double> abs_error;
};

/// Relative size of the inscribed radius below which a walker counts as on the boundary.
inline constexpr double boundary_epsilon = 1e-12;

// ---- one-dimensional source term ------------------------------------------

/// ∫_0^b t^{s-1} (t + a)^{-1/2} dt through 2F1 at the negative argument -b/a.
inline double radial_integral_1d(double a, double b, double s) {
    detail::require(a >= 0.0 && b >= 0.0, "radial_integral_1d: need a >= 0, b >= 0");
    if (b == 0.0) return 0.0;
    if (a == 0.0) {
        detail::require(s > 0.5, "radial_integral_1d: diverges at a = 0 for s <= 1/2");
        return std::pow(b, s - 0.5) / (s - 0.5);
    }
    const double z = b / a;
    if (!(z < 1e16)) {
        // Small-a expansion b^e/e + a^e Γ(s)Γ(-e)/√π + O(a/b), e = s - 1/2,
        // rearranged so the two 1/e poles cancel analytically.
        const double e = s - 0.5;
        const double lz = std::log(b) - std::log(a);
        if (e == 0.0) return lz + 2.0 * std::numbers::ln2;
        const double d = log_gamma(s) + log_gamma(1.0 - e) - log_gamma(0.5);
        return std::exp(e * std::log(a)) * (std::expm1(e * lz) - std::expm1(d)) / e;
    }
    if (z > 1e4) {
        // The two-term form cancels catastrophically here; the single
        // function 2F1(1/2, s; s+1; -z) is the same integral.
        return std::pow(b, s) / (s * std::sqrt(a)) * gauss_2f1(0.5, s, s + 1.0, -z);
    }
    const double f1 = gauss_2f1(-0.5, s, s + 1.0, -z);
    const double f2 = gauss_2f1(0.5, s + 1.0, s + 2.0, -z);
    return std::pow(a, -1.5) * std::pow(b, s) / (s * (s + 1.0)) * (a * (s + 1.0) * f1 - b * s * f2);
}

/// Weight of an interior sample at distance rho from the center of a
/// 1D ball of radius r. The sampling law of rho is r u^{1/(2s)} for s < 1/2
/// and uniform on (0, r) otherwise.
inline double source_weight_1d(double r, double s, double rho) {
    detail::require(rho > 0.0 && rho <= r, "source_weight_1d: rho must lie in (0, r]");
    const FracConstants c = constants(1, s);
    if (s < 0.5) {
        const BallContext ctx{Point{0.0}, r, c};
        return detail::interior_weight_at(ctx, green_mass_b(ctx), rho);
    }
    if (s == 0.5) {
        if (rho >= r) return 0.0;
        // 2κ r ∫_0^{r²-ρ²} t^{-1/2}(t+ρ²)^{-1/2} dt with the integral in closed form.
        return 2.0 * c.kappa * r * 2.0 * std::log((r + std::sqrt(r * r - rho * rho)) / rho);
    }
    return 2.0 * c.kappa * r * radial_integral_1d(rho * rho, r * r - rho * rho, s);
}

/// One source sample for the 1D walk at x_k: weight(ρ) f(x_k ± ρ).
inline double source_contribution_1d(double xk, double rk, double s, const NamedField& f,
                                     RngStream& rng) {
    const double u = rng.uniform_open();
    const double rho = (s < 0.5) ? interior_radius(rk, s, u) : rk * u;
    const double y = (rng.uniform() < 0.5) ? xk - rho : xk + rho;
    return source_weight_1d(rk, s, rho) * f(Point{y});
}

// ---- walks ----------------------------------------------------------------

namespace detail {

struct WalkSetup {
    FracConstants c;
    double b_unit = 0.0;  // green_mass_b at r = 1, n >= 2
    double eps = 0.0;
};

inline WalkSetup make_setup(const ProblemSpec& p) {
    require(p.n >= 1 && p.domain.dimension() == p.n, "problem: dimension mismatch");
    require(p.s > 0.0 && p.s < 1.0, "problem: s must lie in (0, 1)");
    require(p.max_steps >= 1, "problem: max_steps must be >= 1");
    WalkSetup w;
    w.c = constants(p.n, p.s);
    if (p.n >= 2) w.b_unit = green_mass_b(BallContext{Point(static_cast<std::size_t>(p.n)), 1.0, w.c});
    w.eps = boundary_epsilon * p.domain.scale();
    return w;
}

inline WalkResult walk(const ProblemSpec& p, const WalkSetup& w, const Point& x0, RngStream& rng) {
    if (!contains(p.domain, x0)) throw DomainError("run_walk: starting point outside the domain");
    WalkResult res;
    Point x = x0;
    double score = 0.0;
    for (;;) {
        const double rk = p.domain.signed_distance(x);
        if (rk < w.eps) {
            ++res.steps;
            res.score = score + p.boundary(x);
            return res;
        }
        if (res.steps >= p.max_steps) {
            res.capped = true;
            res.score = score;
            return res;
        }
        const BallContext ctx{x, rk, w.c};
        Point next = sample_exit_point(ctx, rng);
        if (!p.source.zero) {
            if (p.n == 1) {
                score += source_contribution_1d(x[0], rk, p.s, p.source, rng);
            } else {
                const Point y = sample_interior_point(ctx, rng);
                const double b = w.b_unit * std::pow(rk, 2.0 * p.s);
                score += interior_weight_at(ctx, b, distance(y, x)) * p.source(y);
            }
        }
        ++res.steps;
        if (!contains(p.domain, next)) {
            res.score = score + p.boundary(next);
            return res;
        }
        x = std::move(next);
    }
}

struct BlockStats {
    std::uint64_t count = 0;
    std::uint64_t capped = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double steps_mean = 0.0;
    double steps_m2 = 0.0;

    void push(const WalkResult& r) {
        if (r.capped) {
            ++capped;
            return;
        }
        ++count;
        const double k = static_cast<double>(count);
        const double d = r.score - mean;
        mean += d / k;
        m2 += d * (r.score - mean);
        const double st = static_cast<double>(r.steps);
        const double ds = st - steps_mean;
        steps_mean += ds / k;
        steps_m2 += ds * (st - steps_mean);
    }
};

// Chan et al. pairwise combination of two partial moment sets.
inline BlockStats merge(const BlockStats& a, const BlockStats& b) {
    BlockStats out;
    out.capped = a.capped + b.capped;
    out.count = a.count + b.count;
    if (out.count == 0) return out;
    const double na = static_cast<double>(a.count);
    const double nb = static_cast<double>(b.count);
    const double n = na + nb;
    const double d = b.mean - a.mean;
    out.mean = a.mean + d * nb / n;
    out.m2 = a.m2 + b.m2 + d * d * na * nb / n;
    const double ds = b.steps_mean - a.steps_mean;
    out.steps_mean = a.steps_mean + ds * nb / n;
    out.steps_m2 = a.steps_m2 + b.steps_m2 + ds * ds * na * nb / n;
    return out;
}

inline BlockStats reduce_pairwise(const std::vector<BlockStats>& blocks, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return blocks[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return merge(reduce_pairwise(blocks, lo, mid), reduce_pairwise(blocks, mid, hi));
}

inline constexpr std::uint64_t block_size = 4096;

}  // namespace detail

inline WalkResult run_walk(const ProblemSpec& p, const Point& x0, RngStream& rng) {
    return detail::walk(p, detail::make_setup(p), x0, rng);
}

/// Thread count: explicit configuration first, then FRACWOS_THREADS, then the
/// hardware concurrency.
inline int resolve_parallelism(std::optional<int> configured) {
    if (configured && *configured > 0) return *configured;
    if (const char* env = std::getenv("FRACWOS_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Mean of n_samples walks from x0; walk i uses stream (master_seed, i).
/// Walks are grouped into fixed blocks whose moments are merged in a fixed
/// pairwise order, so the result does not depend on `parallelism`.
inline EstimatorSummary estimate(const ProblemSpec& p, const Point& x0, std::uint64_t n_samples,
                                 std::uint64_t master_seed, int parallelism = 1) {
    detail::require(n_samples >= 2, "estimate: n_samples must be >= 2");
    const auto t0 = std::chrono::steady_clock::now();
    const detail::WalkSetup setup = detail::make_setup(p);
    if (!contains(p.domain, x0)) throw DomainError("estimate: starting point outside the domain");

    const std::uint64_t n_blocks = (n_samples + detail::block_size - 1) / detail::block_size;
    std::vector<detail::BlockStats> blocks(n_blocks);
    std::atomic<std::uint64_t> next_block{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (;;) {
                const std::uint64_t b = next_block.fetch_add(1);
                if (b >= n_blocks) return;
                const std::uint64_t first = b * detail::block_size;
                const std::uint64_t last = std::min(n_samples, first + detail::block_size);
                detail::BlockStats st;
                for (std::uint64_t i = first; i < last; ++i) {
                    RngStream rng(master_seed, i);
                    st.push(detail::walk(p, setup, x0, rng));
                }
                blocks[b] = st;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next_block.store(n_blocks);
        }
    };

    const int threads = std::max(1, std::min<int>(parallelism, static_cast<int>(n_blocks)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    const detail::BlockStats total = detail::reduce_pairwise(blocks, 0, blocks.size());
    if (total.count == 0) throw EstimationError("estimate: every walk reached max_steps");

    EstimatorSummary out;
    out.n_samples = total.count;
    out.n_capped = total.capped;
    out.estimate = total.mean;
    const double nm1 = total.count > 1 ? static_cast<double>(total.count - 1) : 1.0;
    out.sample_variance = total.m2 / nm1;
    out.std_error = std::sqrt(out.sample_variance / static_cast<double>(total.count));
    out.avg_steps = total.steps_mean;
    out.steps_std_error = std::sqrt(total.steps_m2 / nm1 / static_cast<double>(total.count));
    if (p.exact) {
        out.exact = (*p.exact)(x0);
        out.abs_error = std::fabs(out.estimate - *out.exact);
    }
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace fracwos

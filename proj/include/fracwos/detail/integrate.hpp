#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace fracwos::detail {

struct GkEstimate {
    double value;
    double error;
};

// 15-point Kronrod rule with embedded 7-point Gauss rule on [a, b].
template <class F>
GkEstimate gauss_kronrod15(F&& f, double a, double b) {
    static constexpr std::array<double, 8> xgk = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    static constexpr std::array<double, 8> wgk = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static constexpr std::array<double, 4> wg = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * wgk[7];
    double gauss = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        kron += wgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
    }
    return {kron * h, std::fabs((kron - gauss) * h)};
}

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
/// Bisects the interval with the largest error estimate until the summed
/// estimate meets max(abs_tol, rel_tol * |I|) or max_intervals is reached.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol = 1e-15,
                          double rel_tol = 1e-13, int max_intervals = 2000) {
    if (a == b) return 0.0;
    struct Piece {
        double a, b, value, error;
    };
    std::vector<Piece> pieces;
    pieces.reserve(64);
    auto first = gauss_kronrod15(f, a, b);
    pieces.push_back({a, b, first.value, first.error});
    double total = first.value;
    double total_err = first.error;
    while (static_cast<int>(pieces.size()) < max_intervals) {
        if (total_err <= std::max(abs_tol, rel_tol * std::fabs(total))) break;
        std::size_t worst = 0;
        for (std::size_t i = 1; i < pieces.size(); ++i)
            if (pieces[i].error > pieces[worst].error) worst = i;
        const Piece p = pieces[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) break;
        const auto left = gauss_kronrod15(f, p.a, mid);
        const auto right = gauss_kronrod15(f, mid, p.b);
        pieces[worst] = {p.a, mid, left.value, left.error};
        pieces.push_back({mid, p.b, right.value, right.error});
        total = 0.0;
        total_err = 0.0;
        for (const auto& q : pieces) {
            total += q.value;
            total_err += q.error;
        }
    }
    return total;
}

}  // namespace fracwos::detail

#include "tables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracwos::cli {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::vector<double> fill(int n, double v) { return std::vector<double>(static_cast<std::size_t>(n), v); }

ReferenceCase hom(int n, double s, std::vector<double> x, std::vector<double> xp, int n0, std::vector<double> values,
                  std::vector<double> rates) {
    ReferenceCase c;
    c.method = Method::scheme1_homogeneous;
    c.example = 1;
    c.n = n;
    c.s = s;
    c.point = std::move(x);
    c.x_prime = std::move(xp);
    c.n0 = n0;
    c.level_values = std::move(values);
    c.level_rates = std::move(rates);
    return c;
}

ReferenceCase src(double s, std::vector<double> errors, std::vector<double> rates) {
    ReferenceCase c;
    c.method = Method::scheme1_source;
    c.example = 3;
    c.n = 2;
    c.s = s;
    c.point = {0.6, 0.6};
    c.n0 = 32;
    c.level_errors = std::move(errors);
    c.level_rates = std::move(rates);
    return c;
}

ReferenceCase walk(int example, int n, double s, std::vector<double> x, std::vector<double> xp,
                   std::optional<double> approx, std::optional<double> err, double steps,
                   std::optional<double> var = std::nullopt) {
    ReferenceCase c;
    c.method = Method::walk;
    c.example = example;
    c.n = n;
    c.s = s;
    c.point = std::move(x);
    c.x_prime = std::move(xp);
    c.approx = approx;
    c.abs_error = err;
    c.steps = steps;
    c.variance = var;
    return c;
}

std::vector<ReferenceTable> build() {
    std::vector<ReferenceTable> t;
    const std::vector<double> x2{0.6, 0.6}, x3{0.5, 0.5, 0.5};
    const std::vector<double> e1_2{3.0, 0.0}, e1_3{3.0, 0.0, 0.0};

    t.push_back({1, "Example 1, 2D, quadrature scheme I", {
        hom(2, 0.25, x2, e1_2, 32, {.0234077, .0234021, .0234012, .0234009, .0234009}, {nan, 2.6581, 2.0104, 1.9994, 1.9996}),
        hom(2, 0.50, x2, e1_2, 32, {.0187671, .0187558, .0187583, .0187582, .0187582}, {nan, 4.1559, 2.0612, 1.9863, 1.9905}),
        hom(2, 0.75, x2, e1_2, 32, {.0099238, .0099082, .0099079, .0099078, .0099077}, {nan, 5.3694, 2.1768, 1.9255, 1.9407}),
    }});
    t.push_back({2, "Example 1, 2D, walk-on-spheres", {
        walk(1, 2, 0.25, x2, e1_2, .0234345, std::nullopt, 1.7543, 8.4807e-3),
        walk(1, 2, 0.50, x2, e1_2, .0187276, std::nullopt, 3.0142, 5.7382e-3),
        walk(1, 2, 0.75, x2, e1_2, .0098974, std::nullopt, 6.1990, 1.7594e-3),
    }});
    t.push_back({3, "Example 1, 3D, quadrature scheme I", {
        hom(3, 0.25, x3, e1_3, 8, {.0084161, .0079807, .0080208, .0080298, .0080320}, {nan, 3.4423, 2.1448, 2.0779, 2.0155}),
        hom(3, 0.50, x3, e1_3, 8, {.0066376, .0065636, .0066594, .0066807, .0066856}, {nan, -.3725, 2.1684, 2.0957, 2.0195}),
        hom(3, 0.75, x3, e1_3, 8, {.0033824, .0036580, .0038143, .0038491, .0038572}, {nan, .8185, 2.1627, 2.1176, 2.0247}),
    }});
    t.push_back({4, "Example 1, 3D, walk-on-spheres", {
        walk(1, 3, 0.25, x3, e1_3, .0080475, std::nullopt, 1.9259, 1.8473e-3),
        walk(1, 3, 0.50, x3, e1_3, .0066647, std::nullopt, 3.8748, 1.2729e-3),
        walk(1, 3, 0.75, x3, e1_3, .0038088, std::nullopt, 10.110, 4.1431e-4),
    }});
    t.push_back({5, "Example 2, 1D, walk-on-spheres", {
        walk(2, 1, 0.25, {0.5}, {2.0}, std::nullopt, 8.4281e-4, 1.2915, .23637),
        walk(2, 1, 0.50, {0.5}, {2.0}, std::nullopt, 4.8992e-4, 1.5246, .26451),
        walk(2, 1, 0.75, {0.5}, {2.0}, std::nullopt, 2.8304e-5, 1.6879, .35764),
    }});
    const double r2 = std::sqrt(2.0);
    t.push_back({6, "Example 2, 2D, walk-on-spheres", {
        walk(2, 2, 0.25, x2, {r2, r2}, std::nullopt, 1.7565e-3, 1.7338, 1.2221e-2),
        walk(2, 2, 0.50, x2, {r2, r2}, std::nullopt, 7.8162e-5, 3.0004, 6.7842e-3),
        walk(2, 2, 0.75, x2, {r2, r2}, std::nullopt, 2.2905e-5, 6.2344, 2.9957e-2),
    }});
    t.push_back({7, "Example 3, 1D, walk-on-spheres", {
        walk(3, 1, 0.25, {0.5}, {}, std::nullopt, 4.6390e-4, 1.2879),
        walk(3, 1, 0.50, {0.5}, {}, std::nullopt, 2.0324e-4, 1.5281),
        walk(3, 1, 0.75, {0.5}, {}, std::nullopt, 4.2174e-4, 1.6838),
    }});
    t.push_back({8, "Example 3, 2D, walk-on-spheres", {
        walk(3, 2, 0.25, x2, {}, std::nullopt, 1.3496e-4, 1.7606),
        walk(3, 2, 0.50, x2, {}, std::nullopt, 1.3063e-4, 2.9997),
        walk(3, 2, 0.75, x2, {}, std::nullopt, 2.2905e-5, 6.1818),
    }});
    t.push_back({9, "Example 3, 2D, quadrature scheme I with source", {
        src(0.25, {3.4047e-2, 2.5291e-2, 1.9142e-2, 1.4927e-2, 1.2011e-2}, {nan, .5159, .5099, .5462, .5317}),
        src(0.50, {8.6860e-3, 4.7663e-3, 2.7036e-3, 1.6377e-3, 1.0602e-3}, {nan, .4627, .9262, .9524, .8392}),
        src(0.75, {1.1589e-2, 4.6710e-3, 1.8928e-3, 8.2243e-4, 3.9633e-4}, {nan, .9681, 1.3157, 1.3769, 1.3286}),
    }});

    const std::vector<double> x10 = fill(10, 0.1), xp10 = fill(10, std::sqrt(10.0) / 5.0);
    ReferenceTable t10{10, "Examples 2 and 3, 10D, walk-on-spheres", {}};
    const double e2_10[][3] = {{.25, 1.1617e-3, 1.4501}, {.5, 6.8564e-4, 3.6944}, {.6, 5.3812e-4, 6.4110},
                               {.7, 2.9153e-4, 12.266},  {.8, 2.4108e-4, 27.366}, {.9, 1.2341e-4, 80.842}};
    for (const auto& r : e2_10) t10.cases.push_back(walk(2, 10, r[0], x10, xp10, std::nullopt, r[1], r[2]));
    const double e3_10[][3] = {{.1, 2.1003e-4, 1.0953}, {.3, 1.6807e-3, 1.6611}, {.5, 6.3033e-3, 3.6920},
                               {.7, 2.8531e-3, 12.230}, {.9, 1.8440e-3, 80.954}};
    for (const auto& r : e3_10) t10.cases.push_back(walk(3, 10, r[0], x10, {}, std::nullopt, r[1], r[2]));
    t.push_back(std::move(t10));

    ReferenceTable t11{11, "Examples 2 and 3, 3D to 5D, walk-on-spheres", {}};
    const std::vector<double> xp3 = fill(3, 2.0 * std::sqrt(3.0) / 3.0);
    const double e2_3[][3] = {{.25, 3.9997e-4, 1.9544}, {.5, 2.4870e-5, 3.8930}, {.75, 3.6118e-5, 10.200}};
    for (const auto& r : e2_3) t11.cases.push_back(walk(2, 3, r[0], x3, xp3, std::nullopt, r[1], r[2]));
    const std::vector<double> x4 = fill(4, 0.25), xp4 = fill(4, 1.0);
    const double e2_4[][3] = {{.25, 1.1203e-2, 1.5387}, {.5, 2.0822e-3, 3.3463}, {.6, 1.4179e-3, 5.0610},
                              {.7, 6.4099e-4, 8.2784},  {.8, 3.4514e-4, 15.663}, {.9, 2.8155e-4, 38.629}};
    for (const auto& r : e2_4) t11.cases.push_back(walk(2, 4, r[0], x4, xp4, std::nullopt, r[1], r[2]));
    const std::vector<double> x5 = fill(5, 0.2), xp5 = fill(5, 2.0 * std::sqrt(5.0) / 5.0);
    const double e2_5[][3] = {{.25, 1.7871e-3, 1.5178}, {.5, 1.6622e-3, 3.4818}, {.6, 8.2384e-4, 5.4826},
                              {.7, 6.3443e-4, 9.4176},  {.8, 3.4322e-4, 18.598}, {.9, 2.9972e-4, 48.296}};
    for (const auto& r : e2_5) t11.cases.push_back(walk(2, 5, r[0], x5, xp5, std::nullopt, r[1], r[2]));
    const double e3_3[][3] = {{.25, 1.5456e-4, 1.9233}, {.5, 1.3108e-4, 3.9187}, {.75, 2.5671e-4, 10.132}};
    for (const auto& r : e3_3) t11.cases.push_back(walk(3, 3, r[0], x3, {}, std::nullopt, r[1], r[2]));
    const double e3_4[][3] = {{.2, 1.0203e-3, 1.3759}, {.4, 3.8298e-4, 2.3480}, {.6, 5.9519e-4, 5.0809}, {.8, 6.2239e-4, 15.702}};
    for (const auto& r : e3_4) t11.cases.push_back(walk(3, 4, r[0], x4, {}, std::nullopt, r[1], r[2]));
    const double e3_5[][3] = {{.2, 9.3904e-4, 1.3557}, {.4, 5.6123e-4, 2.3758}, {.6, 9.7228e-4, 5.4498}, {.8, 2.5286e-3, 18.684}};
    for (const auto& r : e3_5) t11.cases.push_back(walk(3, 5, r[0], x5, {}, std::nullopt, r[1], r[2]));
    t.push_back(std::move(t11));

    ReferenceTable t12{12, "Example 4, 10D unit cube, walk-on-spheres", {}};
    const double e4[][4] = {{.001, .25, 7.711e-3, 1.9009}, {.001, .5, 5.244e-5, 5.7405}, {.001, .75, 3.227e-7, 26.661},
                            {.1, .25, 2.430e-1, 1.8899},   {.1, .5, 5.250e-2, 5.7755},   {.1, .75, 1.023e-2, 26.781}};
    for (const auto& r : e4) {
        ReferenceCase c = walk(4, 10, r[1], fill(10, r[0]), {}, r[2], std::nullopt, r[3]);
        c.box = true;
        t12.cases.push_back(std::move(c));
    }
    t.push_back(std::move(t12));
    return t;
}

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = build();
    return tables;
}

const ReferenceTable& reference_table(int id) {
    for (const auto& t : reference_tables())
        if (t.id == id) return t;
    throw std::out_of_range("no reference table " + std::to_string(id));
}

}  // namespace fracwos::cli

#pragma once

// Published reference values for the twelve reproducible tables.

#include <optional>
#include <string>
#include <vector>

namespace fracwos::cli {

enum class Method { scheme1_homogeneous, scheme1_source, walk };

/// One row group of a published table: a single (n, s, x) configuration.
struct ReferenceCase {
    Method method = Method::walk;
    int example = 1;  ///< 1..4
    int n = 2;
    double s = 0.5;
    std::vector<double> point;
    std::vector<double> x_prime;  ///< examples 1 and 2
    bool box = false;             ///< example 4: unit cube instead of the unit ball

    // walk tables, at N = 1e5 samples
    std::optional<double> approx;
    std::optional<double> abs_error;
    std::optional<double> steps;
    std::optional<double> variance;

    // quadrature tables, one entry per grid level 1/h = n0, 2 n0, ...
    int n0 = 0;
    std::vector<double> level_values;  ///< approximation (homogeneous scheme)
    std::vector<double> level_errors;  ///< |u_h - u| (source scheme)
    std::vector<double> level_rates;   ///< first entry has no rate (NaN)
};

struct ReferenceTable {
    int id = 0;
    std::string title;
    std::vector<ReferenceCase> cases;
};

const std::vector<ReferenceTable>& reference_tables();
const ReferenceTable& reference_table(int id);

}  // namespace fracwos::cli

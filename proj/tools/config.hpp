#pragma once

// JSON run configuration for the command-line tool.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracwos/examples.hpp"
#include "fracwos/geometry.hpp"
#include "fracwos/wos.hpp"
#include "json.hpp"

namespace fracwos::cli {

/// Schema violation; `path` names the offending field, e.g. "domain.center[1]".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& msg)
        : std::runtime_error(path + ": " + msg), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

struct FieldSpec {
    std::string name = "zero";
    std::optional<double> c;
    std::optional<std::vector<double>> x_prime;
};

struct DomainSpec {
    std::string type = "ball";
    std::vector<double> center;  // ball
    double radius = 1.0;
    std::vector<double> lo, hi;  // box
};

struct RunConfig {
    int dimension = 0;
    double s = 0.0;
    DomainSpec domain;
    FieldSpec boundary;
    FieldSpec source;
    std::optional<FieldSpec> exact;
    std::vector<Point> points;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::uint64_t max_steps = 1'000'000;
    std::optional<int> threads;
    std::optional<std::string> output;
    int n0 = 8;  ///< coarsest quadrature grid, h0 = 1/n0
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

Domain make_domain(const RunConfig& cfg);
NamedField make_named_field(const FieldSpec& f, int n, double s);
/// Problem for order `s` (fields whose constants depend on s are rebuilt).
ProblemSpec make_problem(const RunConfig& cfg, double s);
inline ProblemSpec make_problem(const RunConfig& cfg) { return make_problem(cfg, cfg.s); }

/// Parses "1/512" or "0.001953125" into the grid count 512.
int parse_grid_count(const std::string& text);

}  // namespace fracwos::cli

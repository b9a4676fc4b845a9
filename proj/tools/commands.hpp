#pragma once

// Subcommands of the `fracwos` tool. Exit codes: 0 success, 1 invalid
// input, 2 numerical failure (estimation error, failed check or table row).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "fracwos/wos.hpp"

namespace fracwos::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_numerical = 2;

struct SolveRow {
    std::string case_id;
    int n = 0;
    double s = 0.0;
    Point point;
    EstimatorSummary summary;
};

std::vector<SolveRow> run_solve(const RunConfig& cfg);

/// Columns: case_id,n,s,point,estimate,std_error,variance,avg_steps,
/// n_samples,n_capped,wall_seconds,exact,abs_error. Points are
/// ';'-separated; reals use %.17g so the file round-trips exactly.
void write_csv(std::ostream& out, const std::vector<SolveRow>& rows);
void write_json(std::ostream& out, const std::vector<SolveRow>& rows);
std::vector<SolveRow> parse_csv(std::istream& in);

/// One line of a `reproduce` report.
struct ReproduceLine {
    std::string case_label;
    std::string quantity;
    std::optional<double> published;
    double run = 0.0;
    std::string criterion;  ///< empty for informational lines
    bool pass = true;
};

struct ReproduceOptions {
    bool full = false;  ///< 1e5 walks per case instead of 1e4
    std::uint64_t seed = 1;
    std::optional<int> threads;
};

std::vector<ReproduceLine> reproduce_table(int table, const ReproduceOptions& opt);
void print_report(std::ostream& out, int table, const std::vector<ReproduceLine>& lines);

/// Entry point; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracwos::cli

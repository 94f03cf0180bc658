#ifndef PROGO_HARNESS_HPP_
#define PROGO_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "progo/optimizer.hpp"
#include "progo/oracle.hpp"

namespace progo {

// Exit codes shared by the library-level runners and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitRunFailure = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

class config_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class csv_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string objective_name;
  std::size_t dim = 0;  // 0 = the objective's natural dimension
  std::size_t repeats = 10;
  std::uint64_t base_seed = 1;
  ProgoConfig progo;
  std::vector<std::string> baselines;  // only "random_search" is known
  std::string output_path = "trajectories.csv";

  void validate() const;  // registry lookup, repeats >= 1, baseline names
};

// Flat key-value text with one [section] per method; see README for the
// grammar. Errors carry the offending line number.
ExperimentConfig parse_config_text(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

struct TrajectoryRow {
  std::string method;
  std::uint64_t run_id = 0;
  std::uint64_t iter = 0;
  double k = std::numeric_limits<double>::quiet_NaN();  // NaN = empty field
  double best_f = 0.0;
  double r_f = 0.0;
  double r_m = 0.0;
  std::uint64_t cumulative_evals = 0;
  std::int64_t elapsed_ms = 0;
};

inline constexpr const char* kTrajectoryHeader =
    "method,run_id,iter,k,best_f,r_f,r_m,cumulative_evals,elapsed_ms";

std::string format_trajectory_row(const TrajectoryRow& row);
std::vector<TrajectoryRow> read_trajectory_csv(std::istream& in);
std::vector<TrajectoryRow> read_trajectory_csv_file(const std::string& path);

// Runs `repeats` seeded ProGO runs (seed_i = base_seed + run_id) plus any
// configured baselines at matched evaluation budgets, and writes one row
// per (method, run, iter) in deterministic order. Failed runs keep the rows
// of their completed stages and are listed in "<output>.failed". Returns an
// ExitCode.
int run_experiment(const ExperimentConfig& cfg, std::size_t jobs,
                   std::ostream& log);

struct SummaryRow {
  std::string method;
  std::size_t runs = 0;
  double mean_final_r_f = 0.0;
  double mean_final_r_m = 0.0;
  double mean_time_s = 0.0;
};

inline constexpr const char* kSummaryHeader =
    "method,runs,mean_final_r_f,mean_final_r_m,mean_time_s";

// Per-method means of the final-iteration regrets and wall time. Means are
// computed on extended reals: any -inf contribution makes the mean -inf.
std::vector<SummaryRow> summarize(const std::vector<TrajectoryRow>& rows);
// Re-summarizing an already-summarized CSV is the identity on its numeric
// fields; summarize_file dispatches on the header line.
std::vector<SummaryRow> summarize_file(const std::string& path);
void print_summary(const std::vector<SummaryRow>& rows, std::ostream& out);
void write_summary_csv(const std::vector<SummaryRow>& rows,
                       const std::string& path);

// Writes "<method>_r_f.dat" and "<method>_r_m.dat" under out_dir, each with
// columns "iter mean stderr" aggregated across runs.
int write_plot_data(const std::vector<TrajectoryRow>& rows,
                    const std::string& out_dir, std::ostream& log);

enum class ValidateLevel { kFast, kFull };

// The oracle check battery; one report per check. kFast covers the density
// identities and a uniform-target sampler check; kFull adds the
// sampler-versus-quadrature comparisons on the sharpened 1-D densities.
std::vector<CheckReport> validation_suite(ValidateLevel level);
int run_validation(ValidateLevel level, std::ostream& out);

// Extended-real helpers shared by summaries and the acceptance suite.
double extended_mean(const std::vector<double>& values);
// Least-squares slope of y against 1..n; -inf if any y is -inf (the curve
// has already collapsed onto the optimum inside the window).
double extended_slope(const std::vector<double>& y);

std::string format_double(double v);  // shortest round-trip decimal, "-inf"

}  // namespace progo

#endif  // PROGO_HARNESS_HPP_

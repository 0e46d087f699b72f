#pragma once

#include "psg/problems.hpp"
#include "psg/schedules.hpp"
#include "psg/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace psg {

enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitViolation = 2,
  kExitNumeric = 3,
};

struct ExperimentConfig {
  std::string problem = "l1-distance";  // l1-distance | linf-distance | pwl-max | l1-regression
  std::int64_t n = 10;
  std::int64_t m = 0;     // pwl-max pieces; 0 means 2n + 2
  std::int64_t rows = 0;  // l1-regression rows; 0 means 2n
  std::uint64_t seed = 0;
  std::string set = "box";  // box | ball | simplex
  double lo = -1.0;
  double hi = 1.0;
  double radius = 1.0;
  double scale = 1.0;
  double f_star = 0.0;  // pwl-max only

  std::string schedule = "sqrt-decay";  // sqrt-decay | constant | custom
  std::string schedule_file;
  std::int64_t horizon = 10000;
  std::vector<double> ks = {0.0};
  bool check_invariants = false;
  std::string stride = "auto";  // auto | all | positive integer
  std::string start = "origin";  // origin | random | comma-separated coordinates
};

/// Throws std::invalid_argument describing the first invalid field.
void validate(const ExperimentConfig& config);

FeasibleSet build_set(const ExperimentConfig& config);
ProblemInstance build_problem(const ExperimentConfig& config);
StepSchedule build_schedule(const ExperimentConfig& config, const ProblemInstance& problem);
RunOptions build_run_options(const ExperimentConfig& config, const ProblemInstance& problem);

/// Shortest round-trip decimal, used for k column labels ("-1", "0.5").
std::string format_label(double v);
/// 17 significant digits.
std::string format_value(double v);

void write_trace_csv(std::ostream& out, const ExperimentConfig& config,
                     const ProblemInstance& problem, const StepSchedule& schedule,
                     const SolverTrace& trace);
void write_summary(std::ostream& out, const SolverTrace& trace);

/// Builds, runs and reports one experiment. The CSV goes to `csv`, the
/// key=value summary (or an error=... line) to `summary`. Never throws for
/// config or numeric problems; the return value carries the exit status.
int run_experiment(const ExperimentConfig& config, std::ostream& csv, std::ostream& summary);

struct BoundComparisonRow {
  std::int64_t t = 0;
  double constant_step = 0.0;  // R L / sqrt(t)
  double sqrt_decay = 0.0;     // 3 R L / (2 sqrt(t))
  double weighted_k0 = 0.0;
  double weighted_km1 = 0.0;
  double log_factor = 0.0;
  double ratio_km1_over_k0 = 0.0;
};

/// All closed-form rates on the sqrt-decay schedule at each t of the grid,
/// in grid order; one incremental pass up to max(t_grid).
std::vector<BoundComparisonRow> compare_bounds(double R, double L,
                                               const std::vector<std::int64_t>& t_grid);

void write_bound_comparison_csv(std::ostream& out, double R, double L,
                                const std::vector<BoundComparisonRow>& rows);

/// Returns kExitOk or kExitViolation after printing a verdict to `out`;
/// file and argument errors yield kExitUsage with an error=... line.
int validate_schedule_file(const std::string& path, std::optional<std::int64_t> horizon,
                           std::ostream& out);

}  // namespace psg

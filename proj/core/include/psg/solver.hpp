#pragma once

#include "psg/averaging.hpp"
#include "psg/bounds.hpp"
#include "psg/problems.hpp"
#include "psg/schedules.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace psg {

struct SolverState {
  std::int64_t t = 1;  // index of x
  Vector x;
  Vector y_next;  // pre-projection point of the most recent step
  double min_value = std::numeric_limits<double>::infinity();
  Vector min_iterate;
  std::int64_t evaluations = 0;

  /// State holding x_1 = start.
  static SolverState starting_at(Vector start);
};

struct StepInfo {
  double f_x = 0.0;  // f(x_t) before the step
  Vector g;          // subgradient used at x_t
};

/// One projected subgradient step: x_{t+1} = P_X(x_t - eta g_t).
///
/// Also folds f(x_t) into the running minimum. Throws NumericError, naming
/// the iteration, when the objective or subgradient is not finite.
StepInfo psg_step(SolverState& state, const ProblemInstance& problem, double eta);

/// min_{s <= t} f(x_s) - f_star; throws std::logic_error before any step.
double min_iterate_gap(const SolverState& state, double f_star);

/// Which iterations end up in SolverTrace::rows. Invariants are checked on
/// every iteration regardless.
struct StridePolicy {
  std::int64_t dense_until = 1000;
  double growth = 1.01;
  /// When > 0, record s = 1, every multiple of `every`, and the last step.
  std::int64_t every = 0;

  static StridePolicy all() { return StridePolicy{std::numeric_limits<std::int64_t>::max(), 1.0, 0}; }
};

struct RunOptions {
  /// Defaults to the projection of the origin.
  std::optional<Vector> start;
  /// Checks the per-step descent inequality against x*.
  bool check_invariants = false;
  bool stop_on_violation = false;
  StridePolicy stride;

  double feasibility_tol = 1e-9;
  double bound_rel_tol = 1e-9;
  double inequality_rel_tol = 1e-9;
  double lipschitz_rel_tol = 1e-12;
  double min_gap_abs_tol = 1e-12;
};

/// Gap values are raw (possibly -1e-16-ish negative); writers clamp them.
struct TraceRow {
  std::int64_t s = 0;
  double eta = 0.0;
  double f_x = 0.0;
  double gap_min = 0.0;
  std::vector<double> gap_avg;  // aligned with SolverTrace::ks
  std::vector<double> bound;    // aligned with SolverTrace::ks
};

struct Violation {
  enum class Kind {
    kInfeasibleIterate,
    kSubgradientNorm,
    kGapAboveBound,
    kMeanGapAboveBound,
    kMinAboveMean,
    kStepInequality,
  };
  Kind kind;
  std::int64_t s = 0;
  std::optional<double> k;
  double lhs = 0.0;
  double rhs = 0.0;
};

std::string to_string(const Violation& v);

struct SolverTrace {
  std::vector<double> ks;
  std::int64_t horizon = 0;
  std::vector<TraceRow> rows;

  /// First violations, capped at kMaxStoredViolations; the count is exact.
  static constexpr std::size_t kMaxStoredViolations = 64;
  std::vector<Violation> violations;
  std::int64_t violation_count = 0;

  double max_bound_margin = -std::numeric_limits<double>::infinity();
  std::optional<double> max_inequality_residual;             // lhs - rhs
  std::optional<double> max_inequality_normalized_residual;  // (lhs - rhs) / (1 + |lhs|)

  std::vector<double> final_gap_avg;
  std::vector<double> final_bound;
  std::vector<double> final_mean_gap;  // weighted mean of f(x_s) - f* per k
  std::vector<Vector> final_average;
  double final_gap_min = 0.0;
  SolverState final_state;

  bool ok() const { return violation_count == 0; }
};

/// Runs `horizon` steps and tracks one weighted average per k.
///
/// Every iteration checks: x_s feasible, ||g_s|| <= L, f(avg_k) - f* and the
/// weighted mean of f(x_s) - f* below the weighted-average bound, and the
/// running minimum below that mean. With check_invariants, also
///
///   f(x_s) - f* <= (||x_s - x*||^2 - ||x_{s+1} - x*||^2) / (2 eta_s) + eta_s L^2 / 2.
///
/// Throws std::invalid_argument on an invalid schedule, k or start point, and
/// NumericError on oracle failure or weight overflow.
SolverTrace run(const ProblemInstance& problem, const StepSchedule& schedule,
                const std::vector<double>& ks, std::int64_t horizon,
                const RunOptions& options = {});

}  // namespace psg

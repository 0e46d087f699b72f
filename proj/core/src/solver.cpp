#include "psg/solver.hpp"

#include "psg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace psg {

SolverState SolverState::starting_at(Vector start) {
  SolverState state;
  state.x = std::move(start);
  return state;
}

StepInfo psg_step(SolverState& state, const ProblemInstance& problem, double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("psg_step: eta must be positive and finite");
  }
  StepInfo info;
  info.f_x = problem.value(state.x);
  if (!std::isfinite(info.f_x)) {
    throw NumericError("iteration " + std::to_string(state.t) + ": objective is not finite");
  }
  info.g = problem.subgradient(state.x);
  if (info.g.size() != state.x.size() || !info.g.allFinite()) {
    throw NumericError("iteration " + std::to_string(state.t) +
                       ": subgradient has a non-finite component or wrong dimension");
  }
  if (info.f_x < state.min_value) {
    state.min_value = info.f_x;
    state.min_iterate = state.x;
  }
  ++state.evaluations;

  state.y_next = state.x - eta * info.g;
  state.x = project(problem.feasible_set(), state.y_next);
  ++state.t;
  return info;
}

double min_iterate_gap(const SolverState& state, double f_star) {
  if (state.evaluations < 1) {
    throw std::logic_error("min_iterate_gap: no completed iteration");
  }
  return state.min_value - f_star;
}

std::string to_string(const Violation& v) {
  std::ostringstream out;
  out.precision(17);
  switch (v.kind) {
    case Violation::Kind::kInfeasibleIterate:
      out << "infeasible iterate";
      break;
    case Violation::Kind::kSubgradientNorm:
      out << "subgradient norm exceeds L";
      break;
    case Violation::Kind::kGapAboveBound:
      out << "average gap exceeds bound";
      break;
    case Violation::Kind::kMeanGapAboveBound:
      out << "weighted mean gap exceeds bound";
      break;
    case Violation::Kind::kMinAboveMean:
      out << "min-iterate gap exceeds weighted mean gap";
      break;
    case Violation::Kind::kStepInequality:
      out << "per-step descent inequality fails";
      break;
  }
  out << " at s=" << v.s;
  if (v.k) {
    out << " k=" << *v.k;
  }
  out << ": lhs=" << v.lhs << " rhs=" << v.rhs;
  return out.str();
}

namespace {

class Checkpoints {
 public:
  Checkpoints(const StridePolicy& policy, std::int64_t horizon)
      : policy_(policy), horizon_(horizon) {}

  bool record(std::int64_t s) {
    if (s == horizon_ || s == 1) {
      return true;
    }
    if (policy_.every > 0) {
      return s % policy_.every == 0;
    }
    if (s <= policy_.dense_until) {
      last_ = s;
      return true;
    }
    if (next_ == 0) {
      next_ = advance(std::max<std::int64_t>(last_, 1));
    }
    if (s == next_) {
      next_ = advance(s);
      return true;
    }
    return false;
  }

 private:
  std::int64_t advance(std::int64_t from) const {
    const double grown = std::ceil(static_cast<double>(from) * policy_.growth);
    return std::max<std::int64_t>(from + 1, static_cast<std::int64_t>(grown));
  }

  StridePolicy policy_;
  std::int64_t horizon_;
  std::int64_t last_ = 0;
  std::int64_t next_ = 0;
};

struct KTrack {
  WeightedAverage average;
  WeightedAverageBound bound;
  CompensatedSum weighted_gap;  // sum w_s (f(x_s) - f*)
};

}  // namespace

SolverTrace run(const ProblemInstance& problem, const StepSchedule& schedule,
                const std::vector<double>& ks, std::int64_t horizon,
                const RunOptions& options) {
  if (horizon < 1) {
    throw std::invalid_argument("run: horizon must be >= 1");
  }
  if (const auto violation = validate_schedule(schedule, horizon)) {
    throw std::invalid_argument("run: invalid step schedule: " + violation->message);
  }
  const FeasibleSet& set = problem.feasible_set();
  Vector start = options.start ? *options.start
                               : project(set, Vector::Zero(problem.dimension()));
  if (start.size() != problem.dimension() || !contains(set, start, options.feasibility_tol)) {
    throw std::invalid_argument("run: start point is not a member of the feasible set");
  }

  // The bound uses the problem's R and L: any positive non-increasing
  // schedule is covered, whatever constants built it.
  std::vector<KTrack> tracks;
  tracks.reserve(ks.size());
  for (double k : ks) {
    tracks.push_back(KTrack{WeightedAverage(k), WeightedAverageBound(problem.R(), problem.L(), k), {}});
  }

  SolverTrace trace;
  trace.ks = ks;
  trace.horizon = horizon;
  const double f_star = problem.f_star();
  const double L = problem.L();
  const Vector& x_star = problem.x_star();

  auto report = [&](Violation v) {
    ++trace.violation_count;
    if (trace.violations.size() < SolverTrace::kMaxStoredViolations) {
      trace.violations.push_back(v);
    }
  };

  Checkpoints checkpoints(options.stride, horizon);
  SolverState state = SolverState::starting_at(std::move(start));
  std::vector<double> gap_avg(ks.size());
  std::vector<double> bound(ks.size());
  std::vector<double> mean_gap(ks.size());

  for (std::int64_t s = 1; s <= horizon; ++s) {
    if (!contains(set, state.x, options.feasibility_tol)) {
      report({Violation::Kind::kInfeasibleIterate, s, std::nullopt, 0.0, options.feasibility_tol});
    }
    const double eta = schedule.eta(s);
    const Vector x_s = state.x;
    const double dist_before = options.check_invariants ? (x_s - x_star).squaredNorm() : 0.0;

    const StepInfo info = psg_step(state, problem, eta);
    const double gap_s = info.f_x - f_star;

    const double g_norm = info.g.norm();
    if (g_norm > L * (1.0 + options.lipschitz_rel_tol)) {
      report({Violation::Kind::kSubgradientNorm, s, std::nullopt, g_norm, L});
    }

    if (options.check_invariants) {
      const double dist_after = (state.x - x_star).squaredNorm();
      const double rhs = (dist_before - dist_after) / (2.0 * eta) + 0.5 * eta * L * L;
      const double residual = gap_s - rhs;
      const double normalized = residual / (1.0 + std::abs(gap_s));
      trace.max_inequality_residual =
          std::max(trace.max_inequality_residual.value_or(residual), residual);
      trace.max_inequality_normalized_residual =
          std::max(trace.max_inequality_normalized_residual.value_or(normalized), normalized);
      if (normalized > options.inequality_rel_tol) {
        report({Violation::Kind::kStepInequality, s, std::nullopt, gap_s, rhs});
      }
    }

    const double gap_min = min_iterate_gap(state, f_star);
    for (std::size_t i = 0; i < tracks.size(); ++i) {
      KTrack& track = tracks[i];
      track.average.update(x_s, eta);
      bound[i] = track.bound.push(eta);
      track.weighted_gap.add(averaging_weight(eta, ks[i]) * gap_s);
      mean_gap[i] = track.weighted_gap.value() / track.average.weight_sum();

      const double f_avg = problem.value(track.average.average());
      if (!std::isfinite(f_avg)) {
        throw NumericError("iteration " + std::to_string(s) +
                           ": objective at the weighted average is not finite");
      }
      gap_avg[i] = f_avg - f_star;

      const double slack = options.bound_rel_tol * std::abs(bound[i]);
      trace.max_bound_margin = std::max(trace.max_bound_margin, gap_avg[i] - bound[i]);
      if (gap_avg[i] > bound[i] + slack) {
        report({Violation::Kind::kGapAboveBound, s, ks[i], gap_avg[i], bound[i]});
      }
      if (mean_gap[i] > bound[i] + slack) {
        report({Violation::Kind::kMeanGapAboveBound, s, ks[i], mean_gap[i], bound[i]});
      }
      if (gap_min > mean_gap[i] + options.min_gap_abs_tol * (1.0 + std::abs(mean_gap[i]))) {
        report({Violation::Kind::kMinAboveMean, s, ks[i], gap_min, mean_gap[i]});
      }
    }

    if (checkpoints.record(s)) {
      trace.rows.push_back(TraceRow{s, eta, info.f_x, gap_min, gap_avg, bound});
    }
    if (options.stop_on_violation && trace.violation_count > 0) {
      break;
    }
  }

  trace.final_gap_avg = gap_avg;
  trace.final_bound = bound;
  trace.final_mean_gap = mean_gap;
  for (const auto& track : tracks) {
    trace.final_average.push_back(track.average.average());
  }
  trace.final_gap_min = min_iterate_gap(state, f_star);
  trace.final_state = std::move(state);
  return trace;
}

}  // namespace psg

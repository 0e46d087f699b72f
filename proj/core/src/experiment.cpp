#include "psg/experiment.hpp"

#include "psg/errors.hpp"
#include "psg/random.hpp"
#include "psg/version.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace psg {

namespace {

std::int64_t pieces(const ExperimentConfig& c) { return c.m > 0 ? c.m : 2 * c.n + 2; }
std::int64_t regression_rows(const ExperimentConfig& c) {
  return c.rows > 0 ? c.rows : 2 * c.n;
}

std::vector<double> parse_coordinates(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    double v = 0.0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw std::invalid_argument("start: not a number: '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace

void validate(const ExperimentConfig& c) {
  static const std::vector<std::string> problems = {"l1-distance", "linf-distance", "pwl-max",
                                                    "l1-regression"};
  if (std::find(problems.begin(), problems.end(), c.problem) == problems.end()) {
    throw std::invalid_argument("unknown problem '" + c.problem + "'");
  }
  if (c.n < 1) {
    throw std::invalid_argument("n must be >= 1");
  }
  if (c.m < 0 || c.rows < 0) {
    throw std::invalid_argument("m and rows must be >= 0 (0 selects the default)");
  }
  if (c.set != "box" && c.set != "ball" && c.set != "simplex") {
    throw std::invalid_argument("unknown set '" + c.set + "'");
  }
  if ((c.problem == "l1-distance" || c.problem == "linf-distance") && c.set != "box") {
    throw std::invalid_argument(c.problem + " is defined on a box only");
  }
  if (c.schedule != "sqrt-decay" && c.schedule != "constant" && c.schedule != "custom") {
    throw std::invalid_argument("unknown schedule '" + c.schedule + "'");
  }
  if (c.schedule == "custom" && c.schedule_file.empty()) {
    throw std::invalid_argument("custom schedule needs a schedule file");
  }
  if (c.horizon < 1) {
    throw std::invalid_argument("horizon must be >= 1");
  }
  if (c.ks.empty()) {
    throw std::invalid_argument("at least one averaging exponent k is required");
  }
  for (double k : c.ks) {
    if (!std::isfinite(k) || k < -1.0) {
      throw std::invalid_argument("every k must be finite and >= -1, got " + format_label(k));
    }
  }
  if (c.stride != "auto" && c.stride != "all") {
    std::int64_t every = 0;
    const auto [ptr, ec] =
        std::from_chars(c.stride.data(), c.stride.data() + c.stride.size(), every);
    if (ec != std::errc() || ptr != c.stride.data() + c.stride.size() || every < 1) {
      throw std::invalid_argument("stride must be auto, all or a positive integer");
    }
  }
}

FeasibleSet build_set(const ExperimentConfig& c) {
  if (c.set == "ball") {
    return FeasibleSet::ball(Vector::Zero(c.n), c.radius);
  }
  if (c.set == "simplex") {
    return FeasibleSet::simplex(c.n, c.scale);
  }
  return FeasibleSet::uniform_box(c.n, c.lo, c.hi);
}

ProblemInstance build_problem(const ExperimentConfig& c) {
  validate(c);
  const FeasibleSet set = build_set(c);
  if (c.problem == "l1-distance") {
    return make_l1_distance(c.n, set.center(), c.lo, c.hi);
  }
  if (c.problem == "linf-distance") {
    return make_linf_distance(c.n, set.center(), c.lo, c.hi);
  }
  if (c.problem == "pwl-max") {
    Rng rng(c.seed + 1);
    const Vector x_star = sample_interior(set, rng);
    return make_piecewise_linear_max(c.n, pieces(c), c.seed, x_star, c.f_star, set);
  }
  return make_l1_regression(regression_rows(c), c.n, c.seed, set);
}

StepSchedule build_schedule(const ExperimentConfig& c, const ProblemInstance& problem) {
  if (c.schedule == "constant") {
    return StepSchedule::constant(problem.R(), problem.L(), c.horizon);
  }
  if (c.schedule == "custom") {
    return StepSchedule::custom(read_schedule_file(c.schedule_file));
  }
  return StepSchedule::sqrt_decay(problem.R(), problem.L());
}

RunOptions build_run_options(const ExperimentConfig& c, const ProblemInstance& problem) {
  RunOptions options;
  options.check_invariants = c.check_invariants;
  if (c.stride == "all") {
    options.stride = StridePolicy::all();
  } else if (c.stride != "auto") {
    options.stride.every = std::stoll(c.stride);
  }
  if (c.start == "random") {
    Rng rng(c.seed + 2);
    options.start = sample_member(problem.feasible_set(), rng);
  } else if (c.start != "origin") {
    const auto coords = parse_coordinates(c.start);
    if (static_cast<Eigen::Index>(coords.size()) != problem.dimension()) {
      throw std::invalid_argument("start: expected " + std::to_string(problem.dimension()) +
                                  " coordinates");
    }
    options.start = Eigen::Map<const Vector>(coords.data(), problem.dimension());
  }
  return options;
}

std::string format_label(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trace_csv(std::ostream& out, const ExperimentConfig& config,
                     const ProblemInstance& problem, const StepSchedule& schedule,
                     const SolverTrace& trace) {
  out << "# psg trace\n";
  out << "# version=" << kVersion << "\n";
  out << "# problem=" << problem.descriptor() << "\n";
  out << "# seed=" << config.seed << "\n";
  out << "# rng=" << Rng::kAlgorithm << "\n";
  out << "# R=" << format_value(problem.R()) << "\n";
  out << "# L=" << format_value(problem.L()) << "\n";
  out << "# f_star=" << format_value(problem.f_star()) << "\n";
  out << "# schedule=" << schedule.describe() << "\n";
  out << "# horizon=" << trace.horizon << "\n";
  out << "# ks=";
  for (std::size_t i = 0; i < trace.ks.size(); ++i) {
    out << (i ? ";" : "") << format_label(trace.ks[i]);
  }
  out << "\n# start=" << config.start << "\n";
  out << "# check_invariants=" << (config.check_invariants ? "true" : "false") << "\n";
  out << "# stride=" << config.stride << "\n";

  out << "s,eta_s,f_xs,gap_min";
  for (double k : trace.ks) {
    out << ",gap_avg_" << format_label(k) << ",bound_" << format_label(k);
  }
  out << "\n";
  // Reported gaps are clamped at zero; checks use the raw values.
  auto gap = [](double g) { return format_value(std::max(g, 0.0)); };
  for (const TraceRow& row : trace.rows) {
    out << row.s << "," << format_value(row.eta) << "," << format_value(row.f_x) << ","
        << gap(row.gap_min);
    for (std::size_t i = 0; i < row.gap_avg.size(); ++i) {
      out << "," << gap(row.gap_avg[i]) << "," << format_value(row.bound[i]);
    }
    out << "\n";
  }
}

void write_summary(std::ostream& out, const SolverTrace& trace) {
  out << "status=" << (trace.ok() ? "ok" : "violation") << "\n";
  out << "iterations=" << trace.final_state.evaluations << "\n";
  out << "final_gap_min=" << format_value(trace.final_gap_min) << "\n";
  for (std::size_t i = 0; i < trace.ks.size(); ++i) {
    const std::string k = format_label(trace.ks[i]);
    out << "final_gap_avg_" << k << "=" << format_value(trace.final_gap_avg[i]) << "\n";
    out << "final_bound_" << k << "=" << format_value(trace.final_bound[i]) << "\n";
  }
  out << "max_bound_margin=" << format_value(trace.max_bound_margin) << "\n";
  if (trace.max_inequality_residual) {
    out << "max_inequality_residual=" << format_value(*trace.max_inequality_residual) << "\n";
    out << "max_inequality_normalized_residual="
        << format_value(*trace.max_inequality_normalized_residual) << "\n";
  }
  out << "violations=" << trace.violation_count << "\n";
  if (!trace.violations.empty()) {
    out << "first_violation_s=" << trace.violations.front().s << "\n";
    out << "first_violation=" << to_string(trace.violations.front()) << "\n";
  }
}

int run_experiment(const ExperimentConfig& config, std::ostream& csv, std::ostream& summary) {
  try {
    const ProblemInstance problem = build_problem(config);
    const StepSchedule schedule = build_schedule(config, problem);
    const RunOptions options = build_run_options(config, problem);
    const SolverTrace trace = run(problem, schedule, config.ks, config.horizon, options);
    write_trace_csv(csv, config, problem, schedule, trace);
    write_summary(summary, trace);
    return trace.ok() ? kExitOk : kExitViolation;
  } catch (const NumericError& e) {
    summary << "status=numeric-failure\nerror=" << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    summary << "status=usage-error\nerror=" << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    summary << "status=usage-error\nerror=" << e.what() << "\n";
    return kExitUsage;
  }
}

std::vector<BoundComparisonRow> compare_bounds(double R, double L,
                                               const std::vector<std::int64_t>& t_grid) {
  if (t_grid.empty()) {
    throw std::invalid_argument("compare_bounds: empty t grid");
  }
  for (std::int64_t t : t_grid) {
    if (t < 1) {
      throw std::invalid_argument("compare_bounds: every t must be >= 1");
    }
  }
  const std::int64_t t_max = *std::max_element(t_grid.begin(), t_grid.end());
  const StepSchedule schedule = StepSchedule::sqrt_decay(R, L);
  WeightedAverageBound k0(R, L, 0.0);
  WeightedAverageBound km1(R, L, -1.0);
  std::map<std::int64_t, std::pair<double, double>> at;
  for (std::int64_t t : t_grid) {
    at[t] = {0.0, 0.0};
  }
  auto next = at.begin();
  for (std::int64_t s = 1; s <= t_max; ++s) {
    const double eta = schedule.eta(s);
    const double b0 = k0.push(eta);
    const double bm1 = km1.push(eta);
    if (next != at.end() && next->first == s) {
      next->second = {b0, bm1};
      ++next;
    }
  }
  std::vector<BoundComparisonRow> rows;
  rows.reserve(t_grid.size());
  for (std::int64_t t : t_grid) {
    const auto [b0, bm1] = at.at(t);
    rows.push_back(BoundComparisonRow{t, constant_step_rate(R, L, t), sqrt_decay_rate(R, L, t),
                                      b0, bm1, log_factor_rate(R, L, t), bm1 / b0});
  }
  return rows;
}

void write_bound_comparison_csv(std::ostream& out, double R, double L,
                                const std::vector<BoundComparisonRow>& rows) {
  out << "# psg compare-bounds\n";
  out << "# version=" << kVersion << "\n";
  out << "# R=" << format_value(R) << "\n";
  out << "# L=" << format_value(L) << "\n";
  out << "# schedule=sqrt-decay\n";
  out << "t,Eq2,Thm1,Eq4_k0,Eq4_km1,Eq5,ratio_km1_over_k0\n";
  for (const auto& row : rows) {
    out << row.t << "," << format_value(row.constant_step) << ","
        << format_value(row.sqrt_decay) << "," << format_value(row.weighted_k0) << ","
        << format_value(row.weighted_km1) << "," << format_value(row.log_factor) << ","
        << format_value(row.ratio_km1_over_k0) << "\n";
  }
}

int validate_schedule_file(const std::string& path, std::optional<std::int64_t> horizon,
                           std::ostream& out) {
  try {
    auto values = read_schedule_file(path);
    const std::int64_t h = horizon.value_or(static_cast<std::int64_t>(values.size()));
    if (h < 1) {
      throw std::invalid_argument("horizon must be >= 1 (empty schedule file?)");
    }
    const auto schedule = StepSchedule::custom(std::move(values));
    if (const auto violation = validate_schedule(schedule, h)) {
      const char* reason = violation->reason == ScheduleViolation::Reason::kIncrease
                               ? "increase"
                               : violation->reason == ScheduleViolation::Reason::kNonPositive
                                     ? "non-positive"
                                     : "too-short";
      out << "status=violation\ns=" << violation->index << "\nreason=" << reason
          << "\nmessage=" << violation->message << "\n";
      return kExitViolation;
    }
    out << "status=ok\nhorizon=" << h << "\n";
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    out << "status=usage-error\nerror=" << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace psg

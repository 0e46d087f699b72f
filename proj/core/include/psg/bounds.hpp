#pragma once

#include "psg/summation.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace psg {

/// R L / sqrt(t): ergodic rate of the horizon-anchored constant step.
double constant_step_rate(double R, double L, std::int64_t t);

/// 3 R L / (2 sqrt(t)): plain-average rate of the R/(L sqrt(s)) schedule.
double sqrt_decay_rate(double R, double L, std::int64_t t);

/// (2 R L + R L ln t) / (4 (sqrt(t + 1) - 1)): closed-form rate of the
/// step-weighted (k = -1) average under R/(L sqrt(s)). Carries the log t factor.
double log_factor_rate(double R, double L, std::int64_t t);

/// Bound on f(weighted average) - f* for weights eta_s^{-k}, evaluated one
/// step at a time:
///
///   (R^2 eta_t^{-(k+1)} + L^2 sum_s eta_s^{-(k-1)}) / (2 sum_s eta_s^{-k})
///
/// Enforces the positive non-increasing step precondition on every push.
class WeightedAverageBound {
 public:
  WeightedAverageBound(double R, double L, double k);

  /// Appends eta_{t+1} and returns the bound at the new prefix length.
  /// Throws std::invalid_argument on a non-positive or increasing step.
  double push(double eta);

  std::int64_t length() const { return length_; }
  /// Bound at the current prefix; requires length() >= 1.
  double value() const;

  /// sum_s eta_s^{-k} over the current prefix.
  double weight_sum() const { return weight_sum_.value(); }

 private:
  double R_;
  double L_;
  double k_;
  std::int64_t length_ = 0;
  double last_eta_ = 0.0;
  double last_inverse_power_ = 0.0;  // eta_t^{-(k+1)}
  CompensatedSum weight_sum_;        // sum eta_s^{-k}
  CompensatedSum step_weight_sum_;   // sum eta_s^{-(k-1)}
};

/// Bound at t = etas.size().
double weighted_average_bound(double R, double L, std::span<const double> etas, double k);

/// Bound at every prefix length 1..etas.size().
std::vector<double> weighted_average_bound_prefixes(double R, double L,
                                                    std::span<const double> etas, double k);

}  // namespace psg

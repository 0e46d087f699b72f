#pragma once

#include "psg/projections.hpp"
#include "psg/summation.hpp"

namespace psg {

/// eta^{-k}; exactly 1 when k == 0.
double averaging_weight(double eta, double k);

/// Running average of iterates with weights eta_s^{-k}, k >= -1.
///
/// k = 0 is the plain ergodic mean, k = -1 weights by the step-size, and
/// k > 0 shifts mass towards recent iterates. Only the normalized average is
/// stored; weighted sums of iterates are never formed.
class WeightedAverage {
 public:
  explicit WeightedAverage(double k);

  double k() const { return k_; }
  long count() const { return count_; }
  double weight_sum() const { return weight_sum_.value(); }
  /// Undefined (empty vector) before the first update.
  const Vector& average() const { return average_; }

  /// Folds in x with weight eta^{-k}. Throws NumericError if the weight or
  /// weight sum is not finite.
  void update(const Vector& x, double eta);

 private:
  double k_;
  long count_ = 0;
  CompensatedSum weight_sum_;
  Vector average_;
};

}  // namespace psg

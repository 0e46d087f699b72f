#include "psg/bounds.hpp"

#include "psg/averaging.hpp"
#include "psg/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace psg {

namespace {

void require_rate_args(double R, double L, std::int64_t t, const char* what) {
  if (t < 1) {
    throw std::invalid_argument(std::string(what) + ": t must be >= 1");
  }
  if (!(R > 0.0) || !(L > 0.0) || !std::isfinite(R) || !std::isfinite(L)) {
    throw std::invalid_argument(std::string(what) + ": R and L must be positive and finite");
  }
}

}  // namespace

double constant_step_rate(double R, double L, std::int64_t t) {
  require_rate_args(R, L, t, "constant_step_rate");
  return R * L / std::sqrt(static_cast<double>(t));
}

double sqrt_decay_rate(double R, double L, std::int64_t t) {
  require_rate_args(R, L, t, "sqrt_decay_rate");
  return 3.0 * R * L / (2.0 * std::sqrt(static_cast<double>(t)));
}

double log_factor_rate(double R, double L, std::int64_t t) {
  require_rate_args(R, L, t, "log_factor_rate");
  const double td = static_cast<double>(t);
  return (2.0 * R * L + R * L * std::log(td)) / (4.0 * (std::sqrt(td + 1.0) - 1.0));
}

WeightedAverageBound::WeightedAverageBound(double R, double L, double k)
    : R_(R), L_(L), k_(k) {
  if (!(R > 0.0) || !(L > 0.0) || !std::isfinite(R) || !std::isfinite(L)) {
    throw std::invalid_argument("weighted average bound: R and L must be positive and finite");
  }
  if (!std::isfinite(k) || k < -1.0) {
    throw std::invalid_argument("weighted average bound: k must be finite and >= -1");
  }
}

double WeightedAverageBound::push(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("weighted average bound: eta_" + std::to_string(length_ + 1) +
                                " is not positive and finite");
  }
  if (length_ > 0 && eta > last_eta_) {
    throw std::invalid_argument("weighted average bound: eta_" + std::to_string(length_ + 1) +
                                " exceeds eta_" + std::to_string(length_));
  }
  // One power per step; the neighbouring exponents follow by one multiply
  // and one divide.
  const double w = averaging_weight(eta, k_);
  weight_sum_.add(w);
  step_weight_sum_.add(w * eta);
  last_inverse_power_ = w / eta;
  last_eta_ = eta;
  ++length_;
  const double bound = value();
  if (!std::isfinite(bound) || !std::isfinite(weight_sum_.value())) {
    throw NumericError("weighted average bound overflow at t=" + std::to_string(length_));
  }
  return bound;
}

double WeightedAverageBound::value() const {
  if (length_ < 1) {
    throw std::logic_error("weighted average bound: no steps pushed");
  }
  return (R_ * R_ * last_inverse_power_ + L_ * L_ * step_weight_sum_.value()) /
         (2.0 * weight_sum_.value());
}

double weighted_average_bound(double R, double L, std::span<const double> etas, double k) {
  if (etas.empty()) {
    throw std::invalid_argument("weighted_average_bound: need t >= 1 steps");
  }
  WeightedAverageBound bound(R, L, k);
  for (double eta : etas) {
    bound.push(eta);
  }
  return bound.value();
}

std::vector<double> weighted_average_bound_prefixes(double R, double L,
                                                    std::span<const double> etas, double k) {
  WeightedAverageBound bound(R, L, k);
  std::vector<double> out;
  out.reserve(etas.size());
  for (double eta : etas) {
    out.push_back(bound.push(eta));
  }
  return out;
}

}  // namespace psg

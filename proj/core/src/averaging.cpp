#include "psg/averaging.hpp"

#include "psg/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace psg {

double averaging_weight(double eta, double k) {
  if (k == 0.0) {
    return 1.0;
  }
  return std::pow(eta, -k);
}

WeightedAverage::WeightedAverage(double k) : k_(k) {
  if (!std::isfinite(k) || k < -1.0) {
    throw std::invalid_argument("averaging exponent k must be finite and >= -1");
  }
}

void WeightedAverage::update(const Vector& x, double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("averaging: step-size must be positive and finite");
  }
  if (count_ > 0 && x.size() != average_.size()) {
    throw std::invalid_argument("averaging: iterate dimension changed");
  }
  const double w = averaging_weight(eta, k_);
  weight_sum_.add(w);
  const double total = weight_sum_.value();
  if (!std::isfinite(w) || !std::isfinite(total) || !(w > 0.0)) {
    std::ostringstream msg;
    msg << "averaging weight overflow at update " << count_ + 1 << " (k=" << k_
        << ", eta=" << eta << "); use a smaller k or a shorter horizon";
    throw NumericError(msg.str());
  }
  ++count_;
  if (count_ == 1) {
    average_ = x;
    return;
  }
  average_ += (w / total) * (x - average_);
}

}  // namespace psg

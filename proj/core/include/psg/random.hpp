#pragma once

#include "psg/projections.hpp"

#include <cstdint>
#include <random>

namespace psg {

/// Seeded generator with platform-independent output.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// The std distributions are not, so the real-valued draws are done here.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller (one draw per call, no caching).
  double normal();

  Vector normal_vector(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
};

/// Uniformly distributed member of the set.
Vector sample_member(const FeasibleSet& set, Rng& rng);

/// Random point well inside the set: within the middle half of a box, the
/// inner half-radius of a ball, and componentwise >= scale/(2n) on a simplex.
Vector sample_interior(const FeasibleSet& set, Rng& rng);

}  // namespace psg

#include "psg/random.hpp"

#include <cmath>
#include <numbers>
#include <variant>

namespace psg {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  // 1 - u lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vector Rng::normal_vector(Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v[i] = normal();
  }
  return v;
}

namespace {

Vector uniform_direction(Eigen::Index n, Rng& rng) {
  Vector d;
  double norm = 0.0;
  do {
    d = rng.normal_vector(n);
    norm = d.norm();
  } while (norm == 0.0);
  return d / norm;
}

// Normalized exponential spacings: uniform on the unit simplex.
Vector uniform_simplex(Eigen::Index n, Rng& rng) {
  Vector e(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    e[i] = -std::log(1.0 - rng.uniform());
  }
  const double total = e.sum();
  if (total == 0.0) {
    return Vector::Constant(n, 1.0 / static_cast<double>(n));
  }
  return e / total;
}

}  // namespace

Vector sample_member(const FeasibleSet& set, Rng& rng) {
  const Eigen::Index n = set.dimension();
  if (const auto* box = std::get_if<Box>(&set.shape())) {
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      x[i] = rng.uniform(box->lo[i], box->hi[i]);
    }
    return x;
  }
  if (const auto* ball = std::get_if<Ball>(&set.shape())) {
    const double r = ball->radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
    return ball->center + r * uniform_direction(n, rng);
  }
  const auto& simplex = std::get<Simplex>(set.shape());
  // Projection cleans the rounding in the sum.
  return project(set, simplex.scale * uniform_simplex(n, rng));
}

Vector sample_interior(const FeasibleSet& set, Rng& rng) {
  const Eigen::Index n = set.dimension();
  if (const auto* box = std::get_if<Box>(&set.shape())) {
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double quarter = 0.25 * (box->hi[i] - box->lo[i]);
      x[i] = rng.uniform(box->lo[i] + quarter, box->hi[i] - quarter);
    }
    return x;
  }
  if (const auto* ball = std::get_if<Ball>(&set.shape())) {
    const double r =
        0.5 * ball->radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
    return ball->center + r * uniform_direction(n, rng);
  }
  const auto& simplex = std::get<Simplex>(set.shape());
  const double floor = simplex.scale / (2.0 * static_cast<double>(n));
  return Vector::Constant(n, floor) + 0.5 * simplex.scale * uniform_simplex(n, rng);
}

}  // namespace psg

#pragma once

#include <Eigen/Core>

#include <string>
#include <variant>

namespace psg {

using Vector = Eigen::VectorXd;

struct Ball {
  Vector center;
  double radius = 1.0;
};

struct Box {
  Vector lo;
  Vector hi;
};

/// Scaled probability simplex {x >= 0, sum(x) = scale}.
struct Simplex {
  Eigen::Index dimension = 1;
  double scale = 1.0;
};

/// Nonempty compact convex set with a closed-form Euclidean projection.
///
/// The constructors validate the shape parameters, so every FeasibleSet
/// instance is a valid X for the subgradient method.
class FeasibleSet {
 public:
  static FeasibleSet ball(Vector center, double radius);
  static FeasibleSet box(Vector lo, Vector hi);
  static FeasibleSet uniform_box(Eigen::Index n, double lo, double hi);
  static FeasibleSet simplex(Eigen::Index n, double scale);

  Eigen::Index dimension() const;

  const std::variant<Ball, Box, Simplex>& shape() const { return shape_; }

  /// "box", "ball" or "simplex".
  std::string kind() const;

  /// Compact textual form used in trace headers, e.g. "box[-1,1]^10".
  std::string describe() const;

  /// A canonical member: box midpoint, ball center, simplex barycenter.
  Vector center() const;

 private:
  explicit FeasibleSet(std::variant<Ball, Box, Simplex> shape)
      : shape_(std::move(shape)) {}

  std::variant<Ball, Box, Simplex> shape_;
};

/// Euclidean projection of y onto the set. Members are returned unchanged.
/// Throws std::invalid_argument on dimension mismatch or non-finite input.
Vector project(const FeasibleSet& set, const Vector& y);

/// True iff x violates no constraint of the set by more than tol.
bool contains(const FeasibleSet& set, const Vector& x, double tol);

/// max over x in the set of ||x - x_star||. x_star must be a member
/// (checked with tolerance 1e-9).
double radius_bound(const FeasibleSet& set, const Vector& x_star);

}  // namespace psg

#pragma once

#include "psg/projections.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace psg {

using Matrix = Eigen::MatrixXd;

/// Convex, Lipschitz objective on a compact convex set with a certified
/// minimizer.
///
/// R is always derived from the set and the designated x_star through
/// radius_bound, so X is contained in the ball B(x_star, R) by construction.
/// Oracles are pure and the instance is immutable, so one instance can be
/// shared by concurrent runs.
class ProblemInstance {
 public:
  using Objective = std::function<double(const Vector&)>;
  using Subgradient = std::function<Vector(const Vector&)>;
  using Parameters = std::vector<std::pair<std::string, std::string>>;

  ProblemInstance(std::string name, Parameters parameters, FeasibleSet set, Vector x_star,
                  double f_star, double lipschitz, Objective objective,
                  Subgradient subgradient);

  const std::string& name() const { return name_; }
  const Parameters& parameters() const { return parameters_; }
  Eigen::Index dimension() const { return set_.dimension(); }
  const FeasibleSet& feasible_set() const { return set_; }
  const Vector& x_star() const { return x_star_; }
  double f_star() const { return f_star_; }
  double L() const { return lipschitz_; }
  double R() const { return radius_; }

  double value(const Vector& x) const { return objective_(x); }
  Vector subgradient(const Vector& x) const { return subgradient_(x); }

  /// "name key=value key=value ..." for trace headers.
  std::string descriptor() const;

  /// Same instance with a different descriptor parameter list.
  ProblemInstance with_parameters(Parameters parameters) const;

 private:
  std::string name_;
  Parameters parameters_;
  FeasibleSet set_;
  Vector x_star_;
  double f_star_;
  double lipschitz_;
  double radius_;
  Objective objective_;
  Subgradient subgradient_;
};

/// f(x) = ||x - c||_1 on [box_lo, box_hi]^n; x* = c, f* = 0, L = sqrt(n).
/// Subgradient sign(x_i - c_i) with sign(0) = 0.
ProblemInstance make_l1_distance(Eigen::Index n, const Vector& c, double box_lo,
                                 double box_hi);

/// f(x) = ||x - c||_inf on [box_lo, box_hi]^n; x* = c, f* = 0, L = 1.
/// Subgradient is +-e_i at the lowest index attaining the max, zero at c.
ProblemInstance make_linf_distance(Eigen::Index n, const Vector& c, double box_lo,
                                   double box_hi);

/// f(x) = max_i a_i.(x - x_star) + f_star, with the rows of `pieces` as a_i.
///
/// The caller certifies 0 in conv{a_i}; together with every piece being
/// active at x_star this makes x_star a global minimizer. L = max_i ||a_i||.
/// Subgradient is the lowest maximizing a_i.
ProblemInstance make_piecewise_linear_max(const Matrix& pieces, const Vector& x_star,
                                          double f_star, const FeasibleSet& set);

/// Seeded variant: m - 1 Gaussian directions plus the negated mean of them,
/// so 0 is always a convex combination of the pieces. Requires m >= n + 1
/// and x_star interior to the set (relative interior for a simplex).
ProblemInstance make_piecewise_linear_max(Eigen::Index n, Eigen::Index m, std::uint64_t seed,
                                          const Vector& x_star, double f_star,
                                          const FeasibleSet& set);

/// f(x) = ||A (x - x_hat)||_1, i.e. ||Ax - b||_1 with b = A x_hat; f* = 0 at x_hat.
/// Subgradient A^T sign(A x - b), sign(0) = 0; L = sum of row norms of A.
ProblemInstance make_l1_regression(const Matrix& A, const Vector& x_hat,
                                   const FeasibleSet& set);

/// Seeded variant with Gaussian A. When x_hat is omitted it is drawn with
/// sample_interior from the same generator after A.
ProblemInstance make_l1_regression(Eigen::Index rows, Eigen::Index n, std::uint64_t seed,
                                   const FeasibleSet& set,
                                   std::optional<Vector> x_hat = std::nullopt);

/// True when x lies strictly inside the set (relative interior for a simplex).
bool is_interior(const FeasibleSet& set, const Vector& x);

}  // namespace psg

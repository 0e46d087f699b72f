#include "psg/problems.hpp"

#include "psg/random.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace psg {

namespace {

std::string format_real(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::string format_vector(const Vector& v) {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out << (i ? ";" : "") << v[i];
  }
  return out.str();
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void require_dimension(const Vector& v, Eigen::Index n, const char* what) {
  if (v.size() != n) {
    throw std::invalid_argument(std::string(what) + ": expected dimension " +
                                std::to_string(n) + ", got " + std::to_string(v.size()));
  }
}

FeasibleSet distance_box(Eigen::Index n, const Vector& c, double lo, double hi,
                         const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + ": dimension must be positive");
  }
  require_dimension(c, n, what);
  auto set = FeasibleSet::uniform_box(n, lo, hi);
  if (!contains(set, c, 0.0)) {
    throw std::invalid_argument(std::string(what) + ": center lies outside the box");
  }
  return set;
}

}  // namespace

ProblemInstance::ProblemInstance(std::string name, Parameters parameters, FeasibleSet set,
                                 Vector x_star, double f_star, double lipschitz,
                                 Objective objective, Subgradient subgradient)
    : name_(std::move(name)),
      parameters_(std::move(parameters)),
      set_(std::move(set)),
      x_star_(std::move(x_star)),
      f_star_(f_star),
      lipschitz_(lipschitz),
      radius_(0.0),
      objective_(std::move(objective)),
      subgradient_(std::move(subgradient)) {
  if (!std::isfinite(lipschitz_) || !(lipschitz_ > 0.0)) {
    throw std::invalid_argument(name_ + ": Lipschitz constant must be positive and finite");
  }
  if (!std::isfinite(f_star_)) {
    throw std::invalid_argument(name_ + ": optimal value must be finite");
  }
  radius_ = radius_bound(set_, x_star_);
  if (!(radius_ > 0.0)) {
    throw std::invalid_argument(name_ + ": feasible set is a single point");
  }
}

std::string ProblemInstance::descriptor() const {
  std::string out = name_;
  for (const auto& [key, value] : parameters_) {
    out += " " + key + "=" + value;
  }
  return out;
}

ProblemInstance ProblemInstance::with_parameters(Parameters parameters) const {
  ProblemInstance copy = *this;
  copy.parameters_ = std::move(parameters);
  return copy;
}

bool is_interior(const FeasibleSet& set, const Vector& x) {
  if (x.size() != set.dimension() || !x.allFinite()) {
    return false;
  }
  if (const auto* box = std::get_if<Box>(&set.shape())) {
    return (x.array() > box->lo.array()).all() && (x.array() < box->hi.array()).all();
  }
  if (const auto* ball = std::get_if<Ball>(&set.shape())) {
    return (x - ball->center).norm() < ball->radius;
  }
  const auto& simplex = std::get<Simplex>(set.shape());
  return (x.array() > 0.0).all() && std::abs(x.sum() - simplex.scale) <= 1e-9;
}

ProblemInstance make_l1_distance(Eigen::Index n, const Vector& c, double box_lo,
                                 double box_hi) {
  auto set = distance_box(n, c, box_lo, box_hi, "l1-distance");
  auto center = std::make_shared<const Vector>(c);
  return ProblemInstance(
      "l1-distance",
      {{"n", std::to_string(n)},
       {"c", format_vector(c)},
       {"lo", format_real(box_lo)},
       {"hi", format_real(box_hi)}},
      std::move(set), c, 0.0, std::sqrt(static_cast<double>(n)),
      [center](const Vector& x) { return (x - *center).lpNorm<1>(); },
      [center](const Vector& x) -> Vector {
        return (x - *center).unaryExpr([](double d) { return sign(d); });
      });
}

ProblemInstance make_linf_distance(Eigen::Index n, const Vector& c, double box_lo,
                                   double box_hi) {
  auto set = distance_box(n, c, box_lo, box_hi, "linf-distance");
  auto center = std::make_shared<const Vector>(c);
  return ProblemInstance(
      "linf-distance",
      {{"n", std::to_string(n)},
       {"c", format_vector(c)},
       {"lo", format_real(box_lo)},
       {"hi", format_real(box_hi)}},
      std::move(set), c, 0.0, 1.0,
      [center](const Vector& x) { return (x - *center).lpNorm<Eigen::Infinity>(); },
      [center](const Vector& x) -> Vector {
        const Vector d = x - *center;
        Vector g = Vector::Zero(d.size());
        Eigen::Index best = 0;
        for (Eigen::Index i = 1; i < d.size(); ++i) {
          if (std::abs(d[i]) > std::abs(d[best])) {
            best = i;
          }
        }
        g[best] = sign(d[best]);
        return g;
      });
}

ProblemInstance make_piecewise_linear_max(const Matrix& pieces, const Vector& x_star,
                                          double f_star, const FeasibleSet& set) {
  const Eigen::Index n = set.dimension();
  if (pieces.cols() != n || pieces.rows() < 1) {
    throw std::invalid_argument("piecewise-linear-max: pieces must be an m x n matrix");
  }
  if (!pieces.allFinite()) {
    throw std::invalid_argument("piecewise-linear-max: non-finite piece");
  }
  require_dimension(x_star, n, "piecewise-linear-max");
  if (!contains(set, x_star, 1e-9)) {
    throw std::invalid_argument("piecewise-linear-max: x_star is not a member of the set");
  }
  struct Data {
    Matrix pieces;
    Vector x_star;
    double f_star;
  };
  auto data = std::make_shared<const Data>(Data{pieces, x_star, f_star});
  const double lipschitz = pieces.rowwise().norm().maxCoeff();
  return ProblemInstance(
      "pwl-max",
      {{"n", std::to_string(n)}, {"m", std::to_string(pieces.rows())}, {"set", set.describe()},
       {"x_star", format_vector(x_star)}, {"f_star", format_real(f_star)}},
      set, x_star, f_star, lipschitz,
      [data](const Vector& x) {
        return (data->pieces * (x - data->x_star)).maxCoeff() + data->f_star;
      },
      [data](const Vector& x) -> Vector {
        const Vector values = data->pieces * (x - data->x_star);
        Eigen::Index best = 0;
        for (Eigen::Index i = 1; i < values.size(); ++i) {
          if (values[i] > values[best]) {
            best = i;
          }
        }
        return data->pieces.row(best).transpose();
      });
}

ProblemInstance make_piecewise_linear_max(Eigen::Index n, Eigen::Index m, std::uint64_t seed,
                                          const Vector& x_star, double f_star,
                                          const FeasibleSet& set) {
  if (n != set.dimension()) {
    throw std::invalid_argument("piecewise-linear-max: n does not match the set dimension");
  }
  if (m < n + 1) {
    throw std::invalid_argument("piecewise-linear-max: need m >= n + 1 pieces");
  }
  require_dimension(x_star, n, "piecewise-linear-max");
  if (!is_interior(set, x_star)) {
    throw std::invalid_argument("piecewise-linear-max: x_star must be interior to the set");
  }
  Rng rng(seed);
  Matrix pieces(m, n);
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    pieces.row(i) = rng.normal_vector(n).transpose();
  }
  pieces.row(m - 1) = -pieces.topRows(m - 1).colwise().mean();

  auto problem = make_piecewise_linear_max(pieces, x_star, f_star, set);
  auto parameters = problem.parameters();
  parameters.insert(parameters.begin() + 2, {"seed", std::to_string(seed)});
  parameters.insert(parameters.begin() + 3, {"rng", Rng::kAlgorithm});
  return problem.with_parameters(std::move(parameters));
}

ProblemInstance make_l1_regression(const Matrix& A, const Vector& x_hat,
                                   const FeasibleSet& set) {
  const Eigen::Index n = set.dimension();
  if (A.cols() != n || A.rows() < 1) {
    throw std::invalid_argument("l1-regression: A must be rows x n with rows >= 1");
  }
  if (!A.allFinite()) {
    throw std::invalid_argument("l1-regression: non-finite matrix entry");
  }
  require_dimension(x_hat, n, "l1-regression");
  if (!contains(set, x_hat, 1e-9)) {
    throw std::invalid_argument("l1-regression: x_hat is not a member of the set");
  }
  struct Data {
    Matrix A;
    Vector x_hat;
  };
  auto data = std::make_shared<const Data>(Data{A, x_hat});
  const double lipschitz = A.rowwise().norm().sum();
  if (!(lipschitz > 0.0)) {
    throw std::invalid_argument("l1-regression: A must be nonzero");
  }
  return ProblemInstance(
      "l1-regression",
      {{"rows", std::to_string(A.rows())}, {"n", std::to_string(n)}, {"set", set.describe()},
       {"x_hat", format_vector(x_hat)}},
      set, x_hat, 0.0, lipschitz,
      [data](const Vector& x) { return (data->A * (x - data->x_hat)).lpNorm<1>(); },
      [data](const Vector& x) -> Vector {
        const Vector residual = data->A * (x - data->x_hat);
        return data->A.transpose() * residual.unaryExpr([](double r) { return sign(r); });
      });
}

ProblemInstance make_l1_regression(Eigen::Index rows, Eigen::Index n, std::uint64_t seed,
                                   const FeasibleSet& set, std::optional<Vector> x_hat) {
  if (rows < 1) {
    throw std::invalid_argument("l1-regression: rows must be >= 1");
  }
  if (n != set.dimension()) {
    throw std::invalid_argument("l1-regression: n does not match the set dimension");
  }
  Rng rng(seed);
  Matrix A(rows, n);
  for (Eigen::Index i = 0; i < rows; ++i) {
    A.row(i) = rng.normal_vector(n).transpose();
  }
  const Vector designated = x_hat ? *x_hat : sample_interior(set, rng);
  auto problem = make_l1_regression(A, designated, set);
  auto parameters = problem.parameters();
  parameters.insert(parameters.begin() + 2, {"seed", std::to_string(seed)});
  parameters.insert(parameters.begin() + 3, {"rng", Rng::kAlgorithm});
  return problem.with_parameters(std::move(parameters));
}

}  // namespace psg

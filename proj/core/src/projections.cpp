#include "psg/projections.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace psg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_input(const FeasibleSet& set, const Vector& v, const char* what) {
  if (v.size() != set.dimension()) {
    std::ostringstream msg;
    msg << what << ": dimension " << v.size() << " does not match set dimension "
        << set.dimension();
    throw std::invalid_argument(msg.str());
  }
}

void require_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite component");
  }
}

Vector project_simplex(const Simplex& s, const Vector& y) {
  const Eigen::Index n = y.size();
  if ((y.array() >= 0.0).all() && y.sum() == s.scale) {
    return y;
  }
  // Sort descending; the threshold is fixed by the longest prefix whose
  // shifted entries stay positive.
  std::vector<double> u(y.data(), y.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double prefix = 0.0;
  double theta = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    prefix += u[j];
    const double candidate = (prefix - s.scale) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) {
      theta = candidate;
    }
  }
  return (y.array() - theta).max(0.0).matrix();
}

}  // namespace

FeasibleSet FeasibleSet::ball(Vector center, double radius) {
  if (center.size() < 1) {
    throw std::invalid_argument("ball: dimension must be positive");
  }
  if (!center.allFinite() || !std::isfinite(radius) || !(radius > 0.0)) {
    throw std::invalid_argument("ball: radius must be positive and finite");
  }
  return FeasibleSet(Ball{std::move(center), radius});
}

FeasibleSet FeasibleSet::box(Vector lo, Vector hi) {
  if (lo.size() < 1 || lo.size() != hi.size()) {
    throw std::invalid_argument("box: bounds must have equal positive dimension");
  }
  if (!lo.allFinite() || !hi.allFinite()) {
    throw std::invalid_argument("box: bounds must be finite");
  }
  if ((lo.array() > hi.array()).any()) {
    throw std::invalid_argument("box: lo must be <= hi componentwise");
  }
  return FeasibleSet(Box{std::move(lo), std::move(hi)});
}

FeasibleSet FeasibleSet::uniform_box(Eigen::Index n, double lo, double hi) {
  if (n < 1) {
    throw std::invalid_argument("box: dimension must be positive");
  }
  return box(Vector::Constant(n, lo), Vector::Constant(n, hi));
}

FeasibleSet FeasibleSet::simplex(Eigen::Index n, double scale) {
  if (n < 1) {
    throw std::invalid_argument("simplex: dimension must be positive");
  }
  if (!std::isfinite(scale) || !(scale > 0.0)) {
    throw std::invalid_argument("simplex: scale must be positive and finite");
  }
  return FeasibleSet(Simplex{n, scale});
}

Eigen::Index FeasibleSet::dimension() const {
  return std::visit(overloaded{[](const Ball& b) { return b.center.size(); },
                               [](const Box& b) { return b.lo.size(); },
                               [](const Simplex& s) { return s.dimension; }},
                    shape_);
}

std::string FeasibleSet::kind() const {
  return std::visit(overloaded{[](const Ball&) { return std::string("ball"); },
                               [](const Box&) { return std::string("box"); },
                               [](const Simplex&) { return std::string("simplex"); }},
                    shape_);
}

std::string FeasibleSet::describe() const {
  std::ostringstream out;
  out.precision(17);
  std::visit(
      overloaded{
          [&](const Ball& b) {
            out << "ball(r=" << b.radius << ",center=";
            for (Eigen::Index i = 0; i < b.center.size(); ++i) {
              out << (i ? ";" : "") << b.center[i];
            }
            out << ")";
          },
          [&](const Box& b) {
            const bool uniform = (b.lo.array() == b.lo[0]).all() &&
                                 (b.hi.array() == b.hi[0]).all();
            if (uniform) {
              out << "box[" << b.lo[0] << "," << b.hi[0] << "]^" << b.lo.size();
            } else {
              out << "box(";
              for (Eigen::Index i = 0; i < b.lo.size(); ++i) {
                out << (i ? ";" : "") << "[" << b.lo[i] << "," << b.hi[i] << "]";
              }
              out << ")";
            }
          },
          [&](const Simplex& s) {
            out << "simplex(scale=" << s.scale << ")^" << s.dimension;
          }},
      shape_);
  return out.str();
}

Vector FeasibleSet::center() const {
  return std::visit(
      overloaded{[](const Ball& b) -> Vector { return b.center; },
                 [](const Box& b) -> Vector { return 0.5 * (b.lo + b.hi); },
                 [](const Simplex& s) -> Vector {
                   return Vector::Constant(s.dimension,
                                           s.scale / static_cast<double>(s.dimension));
                 }},
      shape_);
}

Vector project(const FeasibleSet& set, const Vector& y) {
  require_input(set, y, "project");
  require_finite(y, "project");
  return std::visit(
      overloaded{[&](const Ball& b) -> Vector {
                   const Vector d = y - b.center;
                   const double norm = d.norm();
                   if (norm <= b.radius) {
                     return y;
                   }
                   return b.center + (b.radius / norm) * d;
                 },
                 [&](const Box& b) -> Vector {
                   return y.cwiseMax(b.lo).cwiseMin(b.hi);
                 },
                 [&](const Simplex& s) -> Vector { return project_simplex(s, y); }},
      set.shape());
}

bool contains(const FeasibleSet& set, const Vector& x, double tol) {
  if (x.size() != set.dimension() || !x.allFinite()) {
    return false;
  }
  return std::visit(
      overloaded{[&](const Ball& b) { return (x - b.center).norm() <= b.radius + tol; },
                 [&](const Box& b) {
                   return (x.array() >= b.lo.array() - tol).all() &&
                          (x.array() <= b.hi.array() + tol).all();
                 },
                 [&](const Simplex& s) {
                   return (x.array() >= -tol).all() && std::abs(x.sum() - s.scale) <= tol;
                 }},
      set.shape());
}

double radius_bound(const FeasibleSet& set, const Vector& x_star) {
  require_input(set, x_star, "radius_bound");
  if (!contains(set, x_star, 1e-9)) {
    throw std::invalid_argument("radius_bound: x_star is not a member of the set");
  }
  return std::visit(
      overloaded{[&](const Ball& b) { return (b.center - x_star).norm() + b.radius; },
                 [&](const Box& b) {
                   // Farthest corner picks, per coordinate, the more distant face.
                   const Vector reach =
                       (x_star - b.lo).cwiseAbs().cwiseMax((b.hi - x_star).cwiseAbs());
                   return reach.norm();
                 },
                 [&](const Simplex& s) {
                   double best = 0.0;
                   Vector vertex = Vector::Zero(s.dimension);
                   for (Eigen::Index i = 0; i < s.dimension; ++i) {
                     vertex[i] = s.scale;
                     best = std::max(best, (vertex - x_star).norm());
                     vertex[i] = 0.0;
                   }
                   return best;
                 }},
      set.shape());
}

}  // namespace psg

#include "psg/projections.hpp"
#include "psg/random.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

using psg::FeasibleSet;
using psg::Vector;

namespace {

Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("ball projection scales radially") {
  const auto ball = FeasibleSet::ball(Vector::Zero(2), 1.0);
  const Vector p = psg::project(ball, vec({2.0, 0.0}));
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p[1] == 0.0);

  const Vector inside = vec({0.3, -0.2});
  CHECK(psg::project(ball, inside) == inside);
}

TEST_CASE("box projection clamps componentwise") {
  const auto box = FeasibleSet::uniform_box(2, -1.0, 1.0);
  const Vector p = psg::project(box, vec({0.5, -3.0}));
  CHECK(p[0] == 0.5);
  CHECK(p[1] == -1.0);
}

TEST_CASE("simplex projection") {
  const auto simplex = FeasibleSet::simplex(2, 1.0);
  SUBCASE("symmetric input splits evenly") {
    const Vector p = psg::project(simplex, vec({1.0, 1.0}));
    CHECK(p[0] == 0.5);
    CHECK(p[1] == 0.5);
  }
  SUBCASE("matches support enumeration in dimension 3") {
    const auto s3 = FeasibleSet::simplex(3, 1.0);
    const Vector p = psg::project(s3, vec({0.9, 0.3, -0.5}));
    const auto expected = oracles::simplex_by_enumeration({0.9, 0.3, -0.5}, 1.0);
    // Support {0,1}: shift 0.1 -> (0.8, 0.2, 0).
    CHECK(expected[0] == doctest::Approx(0.8).epsilon(1e-14));
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(p[i] - expected[static_cast<std::size_t>(i)]) <= 1e-8);
    }
  }
  SUBCASE("equal components stay equal") {
    const auto s4 = FeasibleSet::simplex(4, 2.0);
    const Vector p = psg::project(s4, vec({0.7, 3.0, 0.7, -1.0}));
    CHECK(p[0] == p[2]);
  }
  SUBCASE("members are returned unchanged") {
    const Vector member = vec({0.25, 0.75});
    CHECK(psg::project(simplex, member) == member);
  }
}

TEST_CASE("projection rejects bad input") {
  const auto box = FeasibleSet::uniform_box(2, -1.0, 1.0);
  CHECK_THROWS_AS(psg::project(box, Vector::Zero(3)), std::invalid_argument);
  CHECK_THROWS_AS(psg::project(box, vec({NAN, 0.0})), std::invalid_argument);
  CHECK_THROWS_AS(psg::project(box, vec({INFINITY, 0.0})), std::invalid_argument);
}

TEST_CASE("set construction validates parameters") {
  CHECK_THROWS_AS(FeasibleSet::ball(Vector::Zero(2), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FeasibleSet::box(vec({1.0}), vec({0.0})), std::invalid_argument);
  CHECK_THROWS_AS(FeasibleSet::simplex(3, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(FeasibleSet::uniform_box(0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("contains") {
  CHECK(psg::contains(FeasibleSet::uniform_box(2, -1, 1), vec({1.0 + 1e-12, 0.0}), 1e-9));
  CHECK_FALSE(psg::contains(FeasibleSet::ball(Vector::Zero(2), 1.0), vec({1.1, 0.0}), 1e-9));
  CHECK(psg::contains(FeasibleSet::simplex(2, 1.0), vec({0.5, 0.5}), 0.0));
  CHECK_FALSE(psg::contains(FeasibleSet::simplex(2, 1.0), vec({0.5, 0.6}), 1e-9));
  CHECK_FALSE(psg::contains(FeasibleSet::simplex(2, 1.0), vec({0.5, 0.5, 0.0}), 1e-9));
}

TEST_CASE("radius_bound") {
  const Vector c = vec({0.5, -2.0, 1.0});
  CHECK(psg::radius_bound(FeasibleSet::ball(c, 1.5), c) == 1.5);
  CHECK(psg::radius_bound(FeasibleSet::uniform_box(2, -1, 1), Vector::Zero(2)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  const Vector bary = Vector::Constant(3, 1.0 / 3.0);
  // Vertices are symmetric: ||e_1 - bary|| = sqrt((2/3)^2 + 2 (1/3)^2) = sqrt(2/3).
  CHECK(psg::radius_bound(FeasibleSet::simplex(3, 1.0), bary) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(std::sqrt(2.0 / 3.0) == doctest::Approx(0.8165).epsilon(1e-4));
  CHECK_THROWS_AS(psg::radius_bound(FeasibleSet::uniform_box(2, -1, 1), vec({2.0, 0.0})),
                  std::invalid_argument);
}

TEST_CASE("projection properties on random inputs") {
  psg::Rng rng(2024);
  const FeasibleSet sets[] = {
      FeasibleSet::ball(vec({0.5, -1.0, 2.0, 0.0}), 1.3),
      FeasibleSet::box(vec({-1.0, 0.0, -2.0, 3.0}), vec({1.0, 0.5, 2.0, 3.0})),
      FeasibleSet::simplex(4, 2.5),
  };
  for (const auto& set : sets) {
    CAPTURE(set.describe());
    for (int trial = 0; trial < 2000; ++trial) {
      const Vector y = 3.0 * rng.normal_vector(4);
      const Vector z = 3.0 * rng.normal_vector(4);
      const Vector p = psg::project(set, y);
      const Vector q = psg::project(set, z);
      const Vector member = psg::sample_member(set, rng);

      REQUIRE(psg::contains(set, p, 1e-9));
      const Vector pp = psg::project(set, p);
      if (set.kind() == "box") {
        REQUIRE(pp == p);
      } else {
        REQUIRE((pp - p).norm() <= 1e-12 * (1.0 + p.norm()));
      }
      REQUIRE((p - q).norm() <= (y - z).norm() * (1.0 + 1e-12));
      REQUIRE((y - member).norm() >= (p - member).norm() * (1.0 - 1e-12));
      if (set.kind() == "simplex") {
        REQUIRE(std::abs(p.sum() - 2.5) <= 1e-10);
        REQUIRE(p.minCoeff() >= -1e-12);
      }
    }
  }
}

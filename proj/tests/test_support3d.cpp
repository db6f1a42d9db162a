#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <string>

#include "cw/support3d.hpp"
#include "oracles.hpp"

using namespace cw;

namespace {

const MeissnerBody& meissner0() {
  static const MeissnerBody mb = [] {
    const auto rp = build_combinatorics(PointSet3::make(regular_tetrahedron()));
    return build_meissner(rp, vertex_surgery_choice(rp, 0));
  }();
  return mb;
}

// max x.u over the revolved lens profile (rho + R)^2 + z^2 = 1, |z| <= a,
// where R = sqrt(1 - a^2) is the radius of the circle of ball centers.
double spindle_by_profile(double a, const Vec3& u, int n = 20000) {
  const double R = std::sqrt(1.0 - a * a);
  double best = -1e9;
  for (int i = 0; i <= n; ++i) {
    const double z = -a + 2.0 * a * i / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z)) - R;
    const double uh = std::hypot(u.x(), u.y());
    best = std::max(best, rho * uh + z * u.z());
  }
  return best;
}

}  // namespace

TEST_CASE("spindle support examples") {
  CHECK(spindle_support(0.5, Vec3(0, 0, 1)) == doctest::Approx(0.5));
  CHECK(spindle_support(0.5, Vec3(1, 0, 0)) == doctest::Approx(1.0 - std::sqrt(3.0) / 2).epsilon(1e-14));
  CHECK(spindle_support(0.5, Vec3(0.6, 0, 0.8)) == doctest::Approx(0.4));
  CHECK_THROWS_AS(spindle_support(0.0, Vec3(0, 0, 1)), ParamError);
  CHECK_THROWS_AS(spindle_support(1.0, Vec3(0, 0, 1)), ParamError);

  std::mt19937_64 rng(5);
  for (double a : {0.2, 0.5, 0.8})
    for (int i = 0; i < 100; ++i) {
      const Vec3 u = oracle::random_direction(rng);
      CHECK(std::abs(spindle_support(a, u) - spindle_by_profile(a, u)) < 1e-7);
    }
}

TEST_CASE("spindle curvature") {
  const auto [e0, e1] = spindle_curvature(0.5, Vec3(1, 0, 0));
  CHECK(e0.value == doctest::Approx(1.0));
  CHECK(e1.value == doctest::Approx(1.0 - std::sqrt(3.0) / 2).epsilon(1e-14));
  const Vec3 u = Vec3(std::sqrt(1.0 - 0.09), 0, 0.3);
  const auto [f0, f1] = spindle_curvature(0.5, u);
  CHECK(f1.value == doctest::Approx(1.0 - std::sqrt(0.75) / std::sqrt(0.91)).epsilon(1e-12));
  CHECK(f1.value == doctest::Approx(0.0922).epsilon(1e-3));
  CHECK(std::abs(f0.vector.dot(u)) < 1e-14);
  CHECK(std::abs(f1.vector.dot(u)) < 1e-14);
  CHECK_THROWS_AS(spindle_curvature(0.5, Vec3(0.6, 0, 0.8)), RangeError);
  CHECK_THROWS_AS(spindle_curvature(1.5, Vec3(1, 0, 0)), ParamError);
}

TEST_CASE("width and combinations") {
  std::mt19937_64 rng(9);
  const auto big = ball_field(1.0);
  const auto mf = analytic_field(meissner0());
  const auto sp = spindle_field(0.5, Vec3(0.1, 0, 0), Vec3(0, 1, 1));
  for (int i = 0; i < 200; ++i) {
    const Vec3 u = oracle::random_direction(rng);
    CHECK(width(big, u) == doctest::Approx(2.0));
    const auto zero = minkowski_combine(mf, big, 0.0);
    CHECK(zero(u) == doctest::Approx(mf(u)).epsilon(1e-15));
    const auto avg = minkowski_combine(mf, reflect(mf), 0.5);
    CHECK(avg(u) == doctest::Approx(0.5).epsilon(1e-12));
    const auto mix = minkowski_combine(mf, ball_field(0.5, Vec3(0.2, -0.1, 0.3)), 0.3);
    CHECK(std::abs(width(mix, u) - 1.0) < 1e-9);
    CHECK(reflect(sp)(u) == doctest::Approx(sp(-u)));
  }
}

TEST_CASE("rotated support ignores theta") {
  const auto rb = rotate_generators(build_regular(5));
  const auto f = analytic_field(rb);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> th(0.0, kTwoPi), ph(0.0, kPi);
  for (int i = 0; i < 200; ++i) {
    const double a = th(rng), b = th(rng), p = ph(rng);
    CHECK(rotated_support(rb, a, p) == rotated_support(rb, b, p));
    CHECK(rotated_support(rb, a, p) == doctest::Approx(support_2d(rb.polygon, kPi / 2 - p)));
    const Vec3 u = unit_from_spherical({a, p}).vec();
    CHECK(std::abs(f(u) - support_analytic(rb, u).value) < 1e-9);
    CHECK(std::abs(width(f, u) - 1.0) < 1e-9);
  }
}

TEST_CASE("boundary point") {
  const Tolerances tol;
  const auto b = ball_field(0.5);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> th(0.0, kTwoPi), ph(0.2, kPi - 0.2);
  for (int i = 0; i < 50; ++i) {
    const SphericalAngles a{th(rng), ph(rng)};
    const Vec3 u = unit_from_spherical(a).vec();
    CHECK((boundary_point(b, a, tol) - 0.5 * u).norm() < 1e-8);
    CHECK((boundary_point_at(b, u, tol) - 0.5 * u).norm() < 1e-8);
  }
  const auto sp = spindle_field(0.5);
  CHECK((boundary_point(sp, {0.0, kPi / 2}, tol) - Vec3(1.0 - std::sqrt(3.0) / 2, 0, 0)).norm() < 1e-8);
  CHECK_THROWS_AS(boundary_point(b, {0.0, 1e-3}, tol), PoleError);

  // DH(u) . u = h(u) on the Meissner body
  const auto mf = analytic_field(meissner0());
  const double d = tol.fd_step;
  for (int i = 0; i < 100; ++i) {
    const Vec3 u = oracle::random_direction(rng);
    CHECK(std::abs(boundary_point_at(mf, u, tol).dot(u) - mf(u)) <= 10 * d * d);
  }
}

TEST_CASE("analytic Meissner features") {
  const auto& mb = meissner0();
  const auto& X = mb.source.X;
  Vec3 c = Vec3::Zero();
  for (std::size_t i = 0; i < X.size(); ++i) c += X[i];
  c /= static_cast<double>(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const Vec3 out = (X[i] - c).normalized();
    const auto at_vertex = support_analytic(mb, out);
    CHECK(at_vertex.feature == Feature::vertex);
    CHECK((at_vertex.point - X[i]).norm() < 1e-9);
    const auto at_face = support_analytic(mb, -out);
    CHECK(at_face.feature == Feature::sphere);
    CHECK(std::abs((at_face.point - X[i]).norm() - 1.0) < 1e-12);
    CHECK(at_vertex.value + at_face.value == doctest::Approx(1.0));
  }
  CHECK(std::string(feature_name(Feature::spindle)) == "spindle");

  // value and point agree, and the point lies in every generator's unit ball
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    const Vec3 u = oracle::random_direction(rng);
    const auto v = support_analytic(mb, u);
    CHECK(v.point.dot(u) == doctest::Approx(v.value).epsilon(1e-12));
    CHECK(oracle::farthest_generator_distance(mb.generators, v.point) <= 1.0 + 1e-9);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "cw/oracle.hpp"
#include "oracles.hpp"

using namespace cw;

TEST_CASE("single point and single circle") {
  GeneratorSet p;
  p.points = {Vec3(0.1, 0.2, 0.3)};
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Vec3 u = oracle::random_direction(rng);
    CHECK(support_numeric(p, u) == doctest::Approx(1.0 + p.points[0].dot(u)).epsilon(1e-9));
  }

  // B(circle of radius sqrt(3)/2) is the a = 1/2 spindle
  GeneratorSet c;
  c.circles = {Circle3::make(Vec3::Zero(), std::sqrt(3.0) / 2, Vec3::UnitZ())};
  CHECK(support_numeric(c, Vec3(1, 0, 0)) == doctest::Approx(1.0 - std::sqrt(3.0) / 2).epsilon(1e-6));
  for (int i = 0; i < 100; ++i) {
    const Vec3 u = oracle::random_direction(rng);
    CHECK(std::abs(support_numeric(c, u) - spindle_support(0.5, u)) < 1e-6);
  }
}

TEST_CASE("returned point is feasible and attains the value") {
  const auto rp = build_combinatorics(PointSet3::make(regular_tetrahedron()));
  const auto mb = build_meissner(rp, SurgeryChoice{{1, 0, 1}});
  const NumericOracle o(mb.generators);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Vec3 u = oracle::random_direction(rng);
    const auto r = o.evaluate(u);
    CHECK(r.point.dot(u) == doctest::Approx(r.value).epsilon(1e-12));
    // feasible against the exact arcs, up to the sampling sag
    CHECK(oracle::farthest_generator_distance(mb.generators, r.point) <= 1.0 + 1e-6);
    CHECK(r.iterations >= 1);
  }
}

TEST_CASE("numeric support tracks the analytic field on a Meissner body") {
  const auto rp = build_combinatorics(PointSet3::make(regular_tetrahedron()));
  const auto mb = build_meissner(rp, vertex_surgery_choice(rp, 0));
  const auto fa = analytic_field(mb);
  const NumericOracle coarse(mb.generators);
  OracleConfig fine_cfg;
  fine_cfg.arc_samples = 4096;
  const NumericOracle fine(mb.generators, fine_cfg);

  std::mt19937_64 rng(99);
  double worst = 0.0, worst_fine = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const Vec3 u = oracle::random_direction(rng);
    const double a = fa(u);
    worst = std::max(worst, std::abs(coarse.evaluate(u).value - a));
    if (i % 10 == 0) worst_fine = std::max(worst_fine, std::abs(fine.evaluate(u).value - a));
  }
  CHECK(worst <= 5e-4);
  // doubling the resolution does not make things worse
  CHECK(worst_fine <= worst + 1e-12);
}

TEST_CASE("numeric field width") {
  const auto rb = rotate_generators(build_regular(3));
  const auto f = numeric_field(rb.generators());
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const Vec3 u = oracle::random_direction(rng);
    CHECK(std::abs(width(f, u) - 1.0) < 5e-4);
    CHECK(std::abs(f(u) - rotated_support(rb, 0.0, spherical_from_unit(u).phi)) < 5e-4);
  }
  CHECK(f.kind() == FieldKind::numeric);
}

TEST_CASE("configuration errors") {
  GeneratorSet p;
  p.points = {Vec3::Zero()};
  OracleConfig cfg;
  cfg.arc_samples = 32;
  CHECK_THROWS_AS(support_numeric(p, Vec3::UnitZ(), cfg), ParamError);
  OracleConfig bad;
  bad.max_iter = 0;
  CHECK_THROWS_AS(bad.validate(), ParamError);
  CHECK_THROWS_AS(support_numeric(GeneratorSet{}, Vec3::UnitZ()), GeneratorError);
}

#include "cw/support3d.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cw {

const char* feature_name(Feature f) {
  switch (f) {
    case Feature::sphere: return "sphere";
    case Feature::vertex: return "vertex";
    case Feature::spindle: return "spindle";
    case Feature::edge: return "edge";
    case Feature::none: break;
  }
  return "none";
}

SupportField ball_field(double radius, const Vec3& center) {
  return SupportField([=](const Vec3& u) { return center.dot(u) + radius; }, FieldKind::analytic, 1e-15);
}

namespace {

// Spindle support for a in (0, 1]; a = 1 is the unit ball.
double spindle_h(double a, const Vec3& u) {
  const double u3 = u.z();
  if (u3 >= a) return a * u3;
  if (u3 <= -a) return -a * u3;
  return u.norm() - std::sqrt(1.0 - a * a) * std::hypot(u.x(), u.y());
}

void check_a(double a) {
  if (!(a > 0.0 && a < 1.0)) throw ParamError("spindle parameter a must lie in (0, 1)");
}

Mat3 frame_for_axis(const Vec3& axis) {
  const Vec3 e3 = axis.normalized();
  const Vec3 helper = std::abs(e3.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = (helper - helper.dot(e3) * e3).normalized();
  Mat3 R;
  R.col(0) = e1;
  R.col(1) = e3.cross(e1);
  R.col(2) = e3;
  return R;
}

struct Candidate {
  double value;
  Feature feature;
  Vec3 point;
};

}  // namespace

double spindle_support(double a, const Vec3& u) {
  check_a(a);
  return spindle_h(a, u.normalized());
}

std::pair<EigenPair, EigenPair> spindle_curvature(double a, const Vec3& u_in) {
  check_a(a);
  const Vec3 u = u_in.normalized();
  const double u3 = u.z();
  if (!(u3 > -a && u3 < a)) throw RangeError("spindle curvature needs -a < u3 < a");
  const Vec3 e3 = Vec3::UnitZ();
  EigenPair meridian{1.0, e3 - u3 * u};
  EigenPair parallel{1.0 - std::sqrt(1.0 - a * a) / std::sqrt(1.0 - u3 * u3), u.cross(e3)};
  return {meridian, parallel};
}

SupportField spindle_field(double a, const Vec3& center, const Vec3& axis) {
  check_a(a);
  const Mat3 R = frame_for_axis(axis);
  return SupportField(
      [=](const Vec3& u) { return center.dot(u) + spindle_h(a, R.transpose() * u); },
      FieldKind::analytic, 1e-15,
      [=](const Vec3& u) {
        const double u3 = (R.transpose() * u).z();
        return std::abs(u3) >= a ? Feature::vertex : Feature::spindle;
      });
}

AnalyticValue support_analytic(const GeneratorSet& g, const Vec3& u_in, const Tolerances& tol) {
  const Vec3 u = u_in.normalized();
  const double limit = 1.0 + tol.eps_len;
  std::vector<Candidate> cands;
  auto offer = [&](const Vec3& y, Feature f) {
    if (g.farthest_distance(y) <= limit) cands.push_back({y.dot(u), f, y});
  };

  for (const auto& x : g.points) offer(x + u, Feature::sphere);

  auto curve_candidates = [&](const ArcRange& arc) {
    const Circle3& c = arc.circle;
    const double un = u.dot(c.normal);
    const Vec3 uh = u - un * c.normal;
    if (uh.norm() > 1e-14) {
      const double beta = std::atan2(uh.dot(c.e2), uh.dot(c.e1));
      for (double ang : {beta + kPi, beta}) {
        if (arc.contains_angle(ang, 1e-12)) offer(c.point(ang) + u, Feature::spindle);
      }
      // Highest point of the curve itself.
      if (arc.contains_angle(beta, 1e-12)) offer(c.point(beta), Feature::edge);
    }
    // arc ends are corners: their normal cone is full-dimensional
    offer(arc.point(0.0), Feature::vertex);
    offer(arc.point(1.0), Feature::vertex);
    const double a = std::sqrt(std::max(0.0, 1.0 - c.radius * c.radius));
    offer(c.center + a * c.normal, Feature::vertex);
    offer(c.center - a * c.normal, Feature::vertex);
  };
  for (const auto& arc : g.arcs) curve_candidates(arc);
  for (const auto& c : g.circles) curve_candidates(ArcRange{c, 0.0, kTwoPi});

  for (const auto& x : g.points) offer(x, Feature::vertex);

  if (cands.empty()) throw ClassificationError("no supporting candidate is feasible");
  // Ties keep the earliest candidate, so smooth features win over vertices.
  const Candidate* best = &cands.front();
  for (const auto& c : cands)
    if (c.value > best->value + 1e-13) best = &c;
  return {best->value, best->feature, best->point};
}

AnalyticValue support_analytic(const MeissnerBody& body, const Vec3& u, const Tolerances& tol) {
  return support_analytic(body.generators, u, tol);
}

AnalyticValue support_analytic(const RotatedBody& body, const Vec3& u_in, const Tolerances&) {
  const Vec3 u = u_in.normalized();
  const SphericalAngles a = spherical_from_unit(u);
  const double t2 = kPi / 2.0 - a.phi;
  const auto [is_arc, idx] = body.polygon.feature(t2);
  const Vec2& x = body.polygon.vertex(idx);
  const bool on_axis = std::abs(x.x()) < 1e-12;
  Feature f;
  if (is_arc) f = on_axis ? Feature::sphere : Feature::spindle;
  else f = on_axis ? Feature::vertex : Feature::edge;
  // Place the 2D support point in the meridian plane of u.
  const double rho = std::hypot(u.x(), u.y());
  const Vec3 er = rho > 1e-15 ? Vec3(u.x() / rho, u.y() / rho, 0.0) : Vec3::UnitX();
  const Vec2 d(std::cos(t2), std::sin(t2));
  const Vec2 p2 = is_arc ? Vec2(x + d) : x;
  return {support_2d(body.polygon, t2), f, p2.x() * er + p2.y() * Vec3::UnitZ()};
}

SupportField analytic_field(const MeissnerBody& body, const Tolerances& tol) {
  auto g = std::make_shared<GeneratorSet>(body.generators);
  return SupportField([g, tol](const Vec3& u) { return support_analytic(*g, u, tol).value; },
                      FieldKind::analytic, tol.eps_width,
                      [g, tol](const Vec3& u) { return support_analytic(*g, u, tol).feature; });
}

SupportField analytic_field(const RotatedBody& body) {
  auto b = std::make_shared<RotatedBody>(body);
  return SupportField(
      [b](const Vec3& u) {
        const SphericalAngles a = spherical_from_unit(u);
        return rotated_support(*b, a.theta, a.phi);
      },
      FieldKind::analytic, 1e-12,
      [b](const Vec3& u) { return support_analytic(*b, u).feature; });
}

double rotated_support(const RotatedBody& body, double /*theta*/, double phi) {
  return support_2d(body.polygon, kPi / 2.0 - phi);
}

double width(const SupportField& f, const Vec3& u) { return f(u) + f(-u); }

SupportField minkowski_combine(const SupportField& f0, const SupportField& f1, double lambda) {
  const double w0 = 1.0 - lambda;
  const FieldKind kind = f0.kind() == f1.kind() ? f0.kind() : FieldKind::numeric;
  return SupportField([=](const Vec3& u) { return w0 * f0(u) + lambda * f1(u); }, kind,
                      std::max(f0.tolerance(), f1.tolerance()));
}

SupportField reflect(const SupportField& f) {
  SupportField::Label label;
  if (f.has_features()) label = [f](const Vec3& u) { return f.feature(-u); };
  return SupportField([f](const Vec3& u) { return f(-u); }, f.kind(), f.tolerance(), label);
}

Vec3 boundary_point(const SupportField& f, const SphericalAngles& a, const Tolerances& tol,
                    const ChartFrame& frame) {
  const double margin = tol.pole_margin();
  if (a.phi < margin || a.phi > kPi - margin) throw PoleError("polar angle is inside the pole margin");
  const TangentBasis tb = tangent_basis(a);
  const double s = std::sin(a.phi);
  const double d = tol.fd_step;
  auto h = [&](double th, double ph) {
    const double sp = std::sin(ph);
    return f(frame.to_world(Vec3(sp * std::cos(th), sp * std::sin(th), std::cos(ph))));
  };
  const double h0 = h(a.theta, a.phi);
  const double ht = (h(a.theta + d, a.phi) - h(a.theta - d, a.phi)) / (2.0 * d);
  const double hp = (h(a.theta, a.phi + d) - h(a.theta, a.phi - d)) / (2.0 * d);
  const Vec3 u = unit_from_spherical(a).vec();
  const Vec3 local = (ht / (s * s)) * tb.u_theta + hp * tb.u_phi + h0 * u;
  return frame.to_world(local);
}

Vec3 boundary_point_at(const SupportField& f, const Vec3& u, const Tolerances& tol) {
  return boundary_point(f, SphericalAngles{0.0, kPi / 2.0}, tol, ChartFrame::equatorial(u));
}

}  // namespace cw

#include "cw/meissner3d.hpp"

#include <algorithm>
#include <cmath>

namespace cw {

Vec3 farthest_on_arc(const ArcRange& arc, const Vec3& y) {
  const Circle3& c = arc.circle;
  const Vec3 d = y - c.center;
  const Vec3 dp = d - d.dot(c.normal) * c.normal;
  if (dp.norm() < 1e-15) return arc.point(0.0);
  const double beta = std::atan2(dp.dot(c.e2), dp.dot(c.e1));
  const double opposite = beta + kPi;
  if (arc.contains_angle(opposite)) return c.point(opposite);
  const Vec3 p0 = arc.point(0.0);
  const Vec3 p1 = arc.point(1.0);
  return (y - p0).squaredNorm() >= (y - p1).squaredNorm() ? p0 : p1;
}

double GeneratorSet::farthest_distance(const Vec3& y) const {
  double best = 0.0;
  for (const auto& p : points) best = std::max(best, (y - p).norm());
  for (const auto& a : arcs) best = std::max(best, (y - farthest_on_arc(a, y)).norm());
  for (const auto& c : circles) {
    const Vec3 d = y - c.center;
    const double h = d.dot(c.normal);
    const double rho = (d - h * c.normal).norm();
    best = std::max(best, std::sqrt(h * h + (rho + c.radius) * (rho + c.radius)));
  }
  return best;
}

double GeneratorSet::diameter(std::size_t samples) const {
  std::vector<Vec3> pts = points;
  for (const auto& a : arcs)
    for (std::size_t i = 0; i < samples; ++i)
      pts.push_back(a.point(static_cast<double>(i) / static_cast<double>(samples - 1)));
  for (const auto& c : circles)
    for (std::size_t i = 0; i < samples; ++i)
      pts.push_back(c.point(kTwoPi * static_cast<double>(i) / static_cast<double>(samples)));
  double best = 0.0;
  for (const auto& p : pts) best = std::max(best, farthest_distance(p));
  return best;
}

void GeneratorSet::validate(const Tolerances& tol) const {
  if (empty()) throw GeneratorError("generator set is empty");
  for (const auto& c : circles)
    if (!(c.radius >= 0.0 && c.radius < 1.0)) throw GeneratorError("circle radius must lie in [0, 1)");
  if (diameter() > 1.0 + tol.eps_len) throw GeneratorError("generator set has diameter greater than 1");
}

MeissnerBody build_meissner(const ReuleauxPolyhedron& rp, const SurgeryChoice& choice,
                            const Tolerances& tol) {
  if (choice.bits.size() != rp.dual_pairs.size())
    throw ChoiceLengthError("surgery choice needs one bit per dual edge pair");
  MeissnerBody body{rp, choice, {}, {}, {}};
  body.generators.points = rp.X.points();
  for (std::size_t p = 0; p < rp.dual_pairs.size(); ++p) {
    const auto [first, second] = rp.dual_pairs[p];
    const int b = choice.bits[p];
    if (b != 0 && b != 1) throw ChoiceLengthError("surgery bits must be 0 or 1");
    const int keep = b == 0 ? first : second;
    const int cut = b == 0 ? second : first;
    body.retained_edges.push_back(keep);
    body.surgery_edges.push_back(cut);
    body.generators.arcs.push_back(rp.edges[keep].arc);
  }
  body.generators.validate(tol);
  return body;
}

SurgeryChoice vertex_surgery_choice(const ReuleauxPolyhedron& rp, int vertex) {
  SurgeryChoice c;
  for (const auto& [first, second] : rp.dual_pairs) {
    const auto& ep = rp.edges[first].endpoints;
    const bool first_ends_here = ep[0] == vertex || ep[1] == vertex;
    c.bits.push_back(first_ends_here ? 1 : 0);
  }
  return c;
}

SurgeryChoice face_surgery_choice(const ReuleauxPolyhedron& rp, int center) {
  SurgeryChoice c;
  for (const auto& [first, second] : rp.dual_pairs) {
    const auto& sp = rp.edges[first].supporting_pair;
    const bool first_on_face = sp[0] == center || sp[1] == center;
    c.bits.push_back(first_on_face ? 1 : 0);
  }
  return c;
}

GeneratorSet RotatedBody::generators() const {
  GeneratorSet g;
  g.points.push_back(apex);
  g.circles = circles;
  return g;
}

RotatedBody rotate_generators(const ReuleauxPolygon& c) {
  if (!c.symmetry()) throw NotSymmetricError("rotation needs a mirror-symmetric polygon");
  const SymmetricTag tag = *c.symmetry();
  std::vector<Vec2> v = c.vertices();
  for (auto& p : v) p.x() -= tag.axis_x;
  v[tag.apex_index].x() = 0.0;

  Tolerances tol;
  tol.eps_len = 1e-9;
  RotatedBody body{validate(v, true, tol), Vec3::Zero(), {}};
  const std::size_t N = v.size();
  const std::size_t n = (N - 1) / 2;
  const std::size_t k = tag.apex_index;
  body.apex = Vec3(0.0, 0.0, v[k].y());
  for (std::size_t i = 1; i <= n; ++i) {
    const Vec2& a = v[(k + i) % N];
    const Vec2& b = v[(k + N - i) % N];
    const double r = 0.5 * (std::abs(a.x()) + std::abs(b.x()));
    const double z = 0.5 * (a.y() + b.y());
    body.circles.push_back(Circle3::make(Vec3(0.0, 0.0, z), r, Vec3::UnitZ()));
  }
  return body;
}

SpindleParams spindle_of_circle(const Circle3& c) {
  if (!(c.radius >= 0.0) || c.radius >= 1.0) throw RadiusError("circle radius must lie in [0, 1)");
  return {std::sqrt(1.0 - c.radius * c.radius), c.center, c.normal};
}

}  // namespace cw

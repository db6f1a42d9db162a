#pragma once

#include <cstddef>
#include <vector>

#include "cw/ballpoly3d.hpp"
#include "cw/reuleaux2d.hpp"

namespace cw {

/// Points, arcs and full circles whose unit-ball intersection is a body.
struct GeneratorSet {
  std::vector<Vec3> points;
  std::vector<ArcRange> arcs;
  std::vector<Circle3> circles;

  bool empty() const { return points.empty() && arcs.empty() && circles.empty(); }
  /// Largest distance from y to any generator (closed form per arc).
  double farthest_distance(const Vec3& y) const;
  /// Diameter of the union, sampling arcs and circles at `samples` points.
  double diameter(std::size_t samples = 256) const;
  /// Throws GeneratorError when empty or the diameter exceeds 1 + eps_len.
  void validate(const Tolerances& tol = {}) const;
};

/// Point on an arc (or full circle) farthest from y.
Vec3 farthest_on_arc(const ArcRange& arc, const Vec3& y);

/// Bit p selects which edge of dual pair p is retained as a generator:
/// 0 keeps the first edge, 1 the second. Surgery happens near the other.
struct SurgeryChoice {
  std::vector<int> bits;
};

struct MeissnerBody {
  ReuleauxPolyhedron source;
  SurgeryChoice choice;
  GeneratorSet generators;
  std::vector<int> retained_edges;
  std::vector<int> surgery_edges;
};

/// Throws ChoiceLengthError unless the choice has one bit per dual pair.
MeissnerBody build_meissner(const ReuleauxPolyhedron& rp, const SurgeryChoice& choice,
                            const Tolerances& tol = {});

/// Choice that performs surgery on the edges ending at `vertex`.
SurgeryChoice vertex_surgery_choice(const ReuleauxPolyhedron& rp, int vertex);
/// Choice that performs surgery on the edges bounding the face of `center`.
SurgeryChoice face_surgery_choice(const ReuleauxPolyhedron& rp, int center);

/// Body of revolution of a symmetric Reuleaux polygon about the z axis. The
/// polygon's x coordinate becomes the radial distance and y becomes z; the
/// stored polygon is translated so that its mirror axis is x = 0.
struct RotatedBody {
  ReuleauxPolygon polygon;
  Vec3 apex = Vec3::Zero();
  std::vector<Circle3> circles;  // one per mirror pair of vertices

  GeneratorSet generators() const;
};

/// Throws NotSymmetricError when the polygon carries no mirror symmetry.
RotatedBody rotate_generators(const ReuleauxPolygon& c);

/// Parameters of B(c) for a horizontal-plane circle c: a spindle with tip
/// half-separation a = sqrt(1 - r^2) centered at c.center along c.normal.
struct SpindleParams {
  double a = 1.0;
  Vec3 center = Vec3::Zero();
  Vec3 axis = Vec3::UnitZ();
};

/// Throws RadiusError when the radius is not in [0, 1).
SpindleParams spindle_of_circle(const Circle3& c);

}  // namespace cw

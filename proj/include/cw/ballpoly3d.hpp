#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "cw/core.hpp"

namespace cw {

/// m >= 4 distinct finite points of diameter 1.
class PointSet3 {
 public:
  /// Throws PointSetError on fewer than 4 points, non-finite or repeated
  /// points, or a diameter differing from 1 by more than tol.eps_len.
  static PointSet3 make(std::vector<Vec3> points, const Tolerances& tol = {});

  std::size_t size() const { return points_.size(); }
  const std::vector<Vec3>& points() const { return points_; }
  const Vec3& operator[](std::size_t i) const { return points_[i]; }
  double diameter() const { return diameter_; }

 private:
  std::vector<Vec3> points_;
  double diameter_ = 0.0;
};

struct DiametricGraph {
  std::size_t m = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, lexicographic
  std::vector<std::vector<int>> adjacency;

  bool has_edge(int i, int j) const;
  bool connected() const;
};

/// Throws BoundViolation when more than 2m - 2 pairs are at unit distance.
DiametricGraph diametric_pairs(const PointSet3& X, const Tolerances& tol = {});

/// Circle in 3D with orthonormal in-plane basis (e1, e2) and normal e1 x e2.
struct Circle3 {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
  Vec3 normal = Vec3::UnitZ();
  Vec3 e1 = Vec3::UnitX();
  Vec3 e2 = Vec3::UnitY();

  static Circle3 make(const Vec3& center, double radius, const Vec3& normal);
  Vec3 point(double angle) const;
  double angle_of(const Vec3& p) const;  // in [0, 2pi)
};

/// The circle of points at unit distance from both a and b. Throws
/// DegenerateError when a == b or |a - b| >= 2.
Circle3 circle_of_pair(const Vec3& a, const Vec3& b);

/// Circular arc from angle start sweeping counterclockwise (about the circle
/// normal) by sweep radians.
struct ArcRange {
  Circle3 circle;
  double start = 0.0;
  double sweep = kTwoPi;

  Vec3 point(double s) const { return circle.point(start + s * sweep); }  // s in [0, 1]
  bool contains_angle(double angle, double slack = 0.0) const;
};

struct EdgeArc {
  std::array<int, 2> supporting_pair;  // the two ball centers
  std::array<int, 2> endpoints;        // the two vertices bounding the arc
  ArcRange arc;
};

struct ExtremalityCertificate {
  bool extremal = false;
  std::vector<Vec3> vertices;  // vertices of B(X) found by enumeration
  std::vector<Vec3> extra;     // vertices of B(X) that are not in X
  std::vector<int> missing;    // members of X that are not vertices
};

/// Enumerates the vertices of B(X) and compares them with X.
ExtremalityCertificate is_extremal(const PointSet3& X, const Tolerances& tol = {});

/// True when each point of X cuts off part of B(X without that point).
bool is_tight(const PointSet3& X, const Tolerances& tol = {});

/// Reuleaux polyhedron B(X) for an extremal X.
struct ReuleauxPolyhedron {
  PointSet3 X;
  DiametricGraph graph;
  std::vector<EdgeArc> edges;
  /// (a, b): edge a has centers {i,j} and endpoints {k,l}, edge b the
  /// reverse. a is the edge whose supporting pair holds the lower index.
  std::vector<std::pair<int, int>> dual_pairs;

  std::size_t vertex_count() const { return X.size(); }
  std::size_t face_count() const { return X.size(); }
  std::size_t edge_count() const { return edges.size(); }
  long euler() const {
    return static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) +
           static_cast<long>(face_count());
  }
  /// Index of the first edge supported by centers {i, j}, or -1.
  int edge_of_pair(int i, int j) const;
};

/// Throws NotExtremalError when X is not extremal and CombinatoricsError when
/// assembly yields an inconsistent edge structure.
ReuleauxPolyhedron build_combinatorics(const PointSet3& X, const Tolerances& tol = {});

/// Regular tetrahedron of side 1 centered at the origin with vertex 0 on +z.
std::vector<Vec3> regular_tetrahedron();

}  // namespace cw

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "cw/errors.hpp"

namespace cw {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Every numeric threshold used by the library, passed explicitly.
struct Tolerances {
  double eps_unit = 1e-12;    // unit-length validation
  double eps_len = 1e-9;      // diametric pair detection |x - y| = 1
  double eps_width = 1e-6;    // analytic width checks
  double eps_oracle = 5e-4;   // numeric oracle agreement
  double fd_step = 1e-3;      // finite-difference step (radians)
  double tau_kallay = 0.05;   // membership band around {0, 1}
  double tau_scan = 0.05;     // conjecture-scan band

  /// Throws ToleranceError unless all values are positive and
  /// fd_step^2 > eps_unit.
  void validate() const;

  double pole_margin() const { return 10.0 * fd_step; }
};

/// A direction on the sphere. Construction enforces |v| = 1.
class UnitVec3 {
 public:
  /// Accepts v only if ||v| - 1| <= eps; throws UnitError otherwise.
  static UnitVec3 checked(const Vec3& v, double eps = 1e-12);
  /// Normalizes v; throws UnitError for the zero vector.
  static UnitVec3 normalized(const Vec3& v);

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  UnitVec3 operator-() const { return UnitVec3(-v_); }
  operator const Vec3&() const { return v_; }

 private:
  explicit UnitVec3(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

/// Standard chart: u(theta, phi) = (sin phi cos theta, sin phi sin theta, cos phi).
struct SphericalAngles {
  double theta = 0.0;  // azimuth, [0, 2pi)
  double phi = 0.0;    // polar angle, [0, pi]
};

UnitVec3 unit_from_spherical(const SphericalAngles& a);
SphericalAngles spherical_from_unit(const Vec3& u);

/// Raw coordinate vectors du/dtheta (norm sin phi) and du/dphi (norm 1).
struct TangentBasis {
  Vec3 u_theta;
  Vec3 u_phi;
};

/// Throws PoleError when sin(phi) vanishes (phi in {0, pi}).
TangentBasis tangent_basis(const SphericalAngles& a);

/// Rotation R for which the chart is evaluated as u = R * u(theta, phi).
/// The identity is the standard chart; equatorial(u) puts u at
/// (theta, phi) = (0, pi/2) so derivatives there never meet a pole.
struct ChartFrame {
  Mat3 rotation = Mat3::Identity();

  static ChartFrame standard() { return {}; }
  static ChartFrame equatorial(const Vec3& u);

  Vec3 to_world(const Vec3& local) const { return rotation * local; }
  Vec3 to_local(const Vec3& world) const { return rotation.transpose() * world; }
};

/// Antipodally closed set of directions from icosahedron subdivision.
class DirectionGrid {
 public:
  int level() const { return level_; }
  std::size_t size() const { return nodes_.size(); }
  const Vec3& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Vec3>& nodes() const { return nodes_; }
  /// Index of the node equal to -node(i).
  std::size_t antipode(std::size_t i) const { return antipode_[i]; }
  const std::vector<std::size_t>& antipodal_map() const { return antipode_; }
  /// Outward-oriented (counterclockwise seen from outside) triangles.
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

  /// Same grid with every node multiplied by rotation r.
  DirectionGrid rotated(const Mat3& r) const;

 private:
  friend DirectionGrid sphere_grid(int level);
  int level_ = 0;
  std::vector<Vec3> nodes_;
  std::vector<std::size_t> antipode_;
  std::vector<std::array<int, 3>> triangles_;
};

/// Icosphere with 10 * 4^level + 2 nodes. The base icosahedron has a vertex
/// on each pole, so the grid is invariant under rotation by 2pi/5 about z.
/// Throws CapacityError for level > 8 and GridError for level < 0.
DirectionGrid sphere_grid(int level);

/// Fixed rotations (one per k) with no special relation to the coordinate
/// axes. Scans use sphere_grid(level).rotated(generic_rotation()) so that node
/// rings do not sit on axis-aligned feature boundaries (e.g. the equator of a
/// body of revolution), which are null sets an axis-aligned grid samples
/// heavily. Several k give independent samples of the same level.
Mat3 generic_rotation(int k = 0);

/// Worker count for data-parallel sweeps: CW_THREADS if set, else the
/// hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once, so
/// results written by index are deterministic regardless of thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cw

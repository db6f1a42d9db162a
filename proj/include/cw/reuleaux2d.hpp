#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cw/core.hpp"

namespace cw {

/// Mirror symmetry about the vertical line x = axis_x through the apex.
struct SymmetricTag {
  double axis_x = 0.0;
  std::size_t apex_index = 0;
};

/// Unit arc centered at vertices[center] joining vertices[from] to vertices[to]
/// counterclockwise.
struct Arc2 {
  std::size_t center;
  std::size_t from;
  std::size_t to;
};

/// Reuleaux polygon of width 1. Vertices are counterclockwise; with
/// N = 2n + 1, the arc centered at x_j joins x_{j+n} and x_{j+n+1}.
class ReuleauxPolygon {
 public:
  std::size_t size() const { return vertices_.size(); }
  std::size_t half() const { return (vertices_.size() - 1) / 2; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const Vec2& vertex(std::size_t j) const { return vertices_[j % vertices_.size()]; }
  Arc2 arc(std::size_t j) const;
  const std::optional<SymmetricTag>& symmetry() const { return symmetry_; }

  /// Sector boundaries of the normal map, sorted in [0, 2pi). There are
  /// 2N of them, alternating arc and vertex sectors.
  std::vector<double> transition_angles() const;

  /// Which feature supports direction theta: (is_arc, index). For an arc the
  /// index is its center vertex, otherwise the supporting vertex.
  std::pair<bool, std::size_t> feature(double theta) const;

  /// Distance (radians) from theta to the nearest sector transition.
  double transition_distance(double theta) const;

 private:
  friend ReuleauxPolygon make_polygon(std::vector<Vec2>, bool, const Tolerances&);
  std::vector<Vec2> vertices_;
  std::optional<SymmetricTag> symmetry_;
  double base_angle_ = 0.0;        // start of arc 0's sector
  std::vector<double> offsets_;    // cumulative sector starts relative to base_angle_
};

/// Regular Reuleaux polygon with apex on the y axis at the top and center at
/// the origin. Throws ParityError unless n_vertices is odd and >= 3.
ReuleauxPolygon build_regular(int n_vertices);

/// Validates a vertex list. Clockwise input is re-indexed counterclockwise
/// keeping vertex 0. Throws ParityError, DiameterError, ArcConditionError and,
/// when require_symmetric is set, SymmetryError.
ReuleauxPolygon validate(const std::vector<Vec2>& vertices, bool require_symmetric,
                         const Tolerances& tol = {});

double support_2d(const ReuleauxPolygon& p, double theta);

/// Closed-form h'' + h: 1 on arc sectors, 0 on vertex sectors. Throws
/// BoundaryBandError within tol.fd_step of a sector transition.
double radius_profile_2d(const ReuleauxPolygon& p, double theta, const Tolerances& tol = {});

/// Support values on an explicit theta grid.
struct SupportSamples2D {
  std::vector<double> theta;
  std::vector<double> h;
};

/// Uniform periodic grid theta_i = 2 pi i / n.
SupportSamples2D sample_support_2d(const ReuleauxPolygon& p, std::size_t n);

/// Grid step of a uniform periodic grid; throws GridError otherwise.
double uniform_step(const SupportSamples2D& s);

/// h_+(theta) = (h0(theta) + h0(pi - theta)) / 2. Throws GridError when the
/// grid is not uniform or is not closed under theta -> pi - theta.
SupportSamples2D symmetrize(const SupportSamples2D& h0);

}  // namespace cw

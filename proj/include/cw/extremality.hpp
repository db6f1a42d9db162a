#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cw/reuleaux2d.hpp"
#include "cw/support3d.hpp"

namespace cw {

/// h's curvature at one chart point. `coord` is the matrix of grad(DH) in the
/// coordinate basis {u_theta, u_phi}; `sym` is the same map in the orthonormal
/// frame {u_theta / sin(phi), u_phi}, which is symmetric.
struct CurvatureMatrix {
  double theta = 0.0;
  double phi = 0.0;
  Mat2 coord = Mat2::Zero();
  Mat2 sym = Mat2::Zero();

  /// (r_min, r_max): eigenvalues of `sym`.
  std::pair<double, double> radii() const;
};

/// Central differences at step fd_step in the chart of `frame`. Throws
/// PoleError when phi is within 10 * fd_step of a pole.
CurvatureMatrix curvature_matrix(const SupportField& f, double theta, double phi, double fd_step,
                                 const ChartFrame& frame = ChartFrame::standard());

/// r_min, r_max at u using a chart that puts u on the equator.
std::pair<double, double> radii_at(const SupportField& f, const Vec3& u, double fd_step);

struct RadiiProfile {
  std::vector<double> r_min;
  std::vector<double> r_max;
  std::vector<char> covered;  // 0 where the node fell in the pole margin
  std::vector<Feature> feature;

  std::size_t covered_count() const;
  double coverage() const;
};

/// Radii at every grid node in the standard chart, skipping nodes within the
/// pole margin.
RadiiProfile radii_profile(const SupportField& f, const DirectionGrid& grid, const Tolerances& tol = {});

struct DualityReport {
  std::size_t pairs = 0;   // covered antipode pairs
  std::size_t within = 0;  // pairs with |r_min(u) + r_max(-u) - 1| <= tol
  double max_deviation = 0.0;

  double fraction() const { return pairs ? static_cast<double>(within) / static_cast<double>(pairs) : 0.0; }
};

DualityReport check_duality(const RadiiProfile& p, const DirectionGrid& grid, double tol);

struct KallayReport {
  double measure = 0.0;  // radians of theta where h'' + h is not within tau of {0, 1}
  std::size_t violating = 0;
  std::size_t samples = 0;
  double step = 0.0;
  std::vector<double> values;  // h'' + h per node
};

/// Throws GridError for fewer than 256 samples or a non-uniform grid.
KallayReport kallay_test_2d(const SupportSamples2D& h, double tau);

struct ScanReport {
  double fraction = 0.0;
  std::size_t covered = 0;
  std::size_t violating = 0;
  std::vector<std::size_t> worst;  // node indices, largest margin first
};

/// Fraction of covered nodes with min(r_min, 1 - r_max) > tau.
ScanReport conjecture_scan_3d(const RadiiProfile& p, double tau, std::size_t worst_count = 10);

struct Cap {
  Vec3 center = Vec3::UnitZ();
  double radius = 0.5;  // geodesic radius, radians
};

struct ProbeRegion {
  std::vector<Cap> caps;
  double delta = 0.25;
};

/// Caps shrunk below pi/2. Throws RegionError when the union still meets its
/// antipodal image, when no cap is given, or when delta is outside (0, 1/2).
ProbeRegion normalize_region(ProbeRegion region);

/// Antisymmetric bump: g0 on A, -g0(-u) on -A, zero elsewhere, with
/// g0 = cos^2(pi d / (2 rho))^sharpness in the geodesic distance d to a cap center.
SupportField bump_field(const ProbeRegion& region, double sharpness);

struct ProbeOptions {
  int grid_level = 4;
  double sharpness = 1.0;
  double validate_tau = 1e-4;
  double residual_threshold = 1e-3;
};

struct TranslationFit {
  Vec3 b = Vec3::Zero();
  double residual = 0.0;
};

struct WidthValidation {
  bool ok = false;
  double max_width_deviation = 0.0;
  double min_eigenvalue = 0.0;
  std::size_t covered = 0;
};

struct ProbeResult {
  bool success = false;
  ProbeRegion region;
  double spectral_bound = 0.0;  // s
  double t = 0.0;
  std::vector<double> h_samples;
  std::vector<double> g_samples;
  std::vector<double> h_plus;
  std::vector<double> h_minus;
  WidthValidation plus_check;
  WidthValidation minus_check;
  double translation_residual = 0.0;
  std::string blocking;         // "r_max <= 1" or "r_min >= 0" on failure
  double admissible_t = 0.0;    // largest t the measured margins allow
};

ProbeResult probe_nonextreme(const SupportField& f, const ProbeRegion& region, const ProbeOptions& opts = {},
                             const Tolerances& tol = {});

/// Least-squares b with hB - hA ~ b . u over the grid; residual is the RMS of
/// what remains. Throws GridError on size mismatch.
TranslationFit translation_fit(const std::vector<double>& hA, const std::vector<double>& hB,
                               const DirectionGrid& grid);

/// Width within tau at every antipode pair and smallest curvature eigenvalue
/// >= -tau at every covered node.
WidthValidation validate_constant_width(const SupportField& f, const DirectionGrid& grid, double tau,
                                        const Tolerances& tol = {});

/// f at every grid node.
std::vector<double> sample_field(const SupportField& f, const DirectionGrid& grid);

}  // namespace cw

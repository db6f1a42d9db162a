#include "cw/extremality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cw {

namespace {

std::pair<double, double> sym_eigen(const Mat2& m) {
  const double a = m(0, 0), d = m(1, 1);
  const double b = 0.5 * (m(0, 1) + m(1, 0));
  const double mean = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), b);
  return {mean - rad, mean + rad};
}

double geodesic(const Vec3& a, const Vec3& b) { return std::acos(std::clamp(a.dot(b), -1.0, 1.0)); }

}  // namespace

std::pair<double, double> CurvatureMatrix::radii() const { return sym_eigen(sym); }

CurvatureMatrix curvature_matrix(const SupportField& f, double theta, double phi, double fd_step,
                                 const ChartFrame& frame) {
  const double margin = 10.0 * fd_step;
  if (phi < margin || phi > kPi - margin) throw PoleError("polar angle is inside the pole margin");
  const double d = fd_step;
  auto h = [&](double th, double ph) {
    const double sp = std::sin(ph);
    return f(frame.to_world(Vec3(sp * std::cos(th), sp * std::sin(th), std::cos(ph))));
  };
  const double h0 = h(theta, phi);
  const double tp = h(theta + d, phi), tm = h(theta - d, phi);
  const double pp = h(theta, phi + d), pm = h(theta, phi - d);
  const double hpp = h(theta + d, phi + d), hpm = h(theta + d, phi - d);
  const double hmp = h(theta - d, phi + d), hmm = h(theta - d, phi - d);

  const double s = std::sin(phi), c = std::cos(phi);
  const double h_t = (tp - tm) / (2.0 * d);
  const double h_tt = (tp - 2.0 * h0 + tm) / (d * d);
  const double h_p = (pp - pm) / (2.0 * d);
  const double h_pp = (pp - 2.0 * h0 + pm) / (d * d);
  const double h_tp = (hpp - hpm - hmp + hmm) / (4.0 * d * d);

  const double mixed = h_tp / s - h_t * c / (s * s);  // d/dphi (h_theta / sin phi)
  const double m11 = h_tt / (s * s) + h_p * c / s + h0;
  const double m22 = h_pp + h0;

  CurvatureMatrix m;
  m.theta = theta;
  m.phi = phi;
  m.coord << m11, s * mixed, mixed / s, m22;
  m.sym << m11, mixed, mixed, m22;
  return m;
}

std::pair<double, double> radii_at(const SupportField& f, const Vec3& u, double fd_step) {
  return curvature_matrix(f, 0.0, kPi / 2.0, fd_step, ChartFrame::equatorial(u)).radii();
}

std::size_t RadiiProfile::covered_count() const {
  return static_cast<std::size_t>(std::count(covered.begin(), covered.end(), 1));
}

double RadiiProfile::coverage() const {
  return covered.empty() ? 0.0 : static_cast<double>(covered_count()) / static_cast<double>(covered.size());
}

RadiiProfile radii_profile(const SupportField& f, const DirectionGrid& grid, const Tolerances& tol) {
  const std::size_t n = grid.size();
  RadiiProfile p;
  p.r_min.assign(n, 0.0);
  p.r_max.assign(n, 0.0);
  p.covered.assign(n, 0);
  p.feature.assign(n, Feature::none);
  parallel_for(n, [&](std::size_t i) {
    const SphericalAngles a = spherical_from_unit(grid.node(i));
    if (f.has_features()) p.feature[i] = f.feature(grid.node(i));
    try {
      const auto [lo, hi] = curvature_matrix(f, a.theta, a.phi, tol.fd_step).radii();
      p.r_min[i] = lo;
      p.r_max[i] = hi;
      p.covered[i] = 1;
    } catch (const PoleError&) {
    }
  });
  return p;
}

DualityReport check_duality(const RadiiProfile& p, const DirectionGrid& grid, double tol) {
  DualityReport r;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::size_t j = grid.antipode(i);
    if (!p.covered[i] || !p.covered[j]) continue;
    const double dev = std::abs(p.r_min[i] + p.r_max[j] - 1.0);
    ++r.pairs;
    if (dev <= tol) ++r.within;
    r.max_deviation = std::max(r.max_deviation, dev);
  }
  return r;
}

KallayReport kallay_test_2d(const SupportSamples2D& h, double tau) {
  if (h.theta.size() < 256) throw GridError("the Kallay test needs at least 256 samples");
  const double d = uniform_step(h);
  const std::size_t n = h.h.size();
  KallayReport r;
  r.samples = n;
  r.step = d;
  r.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double hm = h.h[(i + n - 1) % n], h0 = h.h[i], hp = h.h[(i + 1) % n];
    const double v = (hp - 2.0 * h0 + hm) / (d * d) + h0;
    r.values[i] = v;
    if (std::min(std::abs(v), std::abs(v - 1.0)) > tau) ++r.violating;
  }
  r.measure = static_cast<double>(r.violating) * d;
  return r;
}

ScanReport conjecture_scan_3d(const RadiiProfile& p, double tau, std::size_t worst_count) {
  ScanReport r;
  std::vector<std::pair<double, std::size_t>> margins;
  for (std::size_t i = 0; i < p.covered.size(); ++i) {
    if (!p.covered[i]) continue;
    ++r.covered;
    const double m = std::min(p.r_min[i], 1.0 - p.r_max[i]);
    if (m > tau) {
      ++r.violating;
      margins.emplace_back(m, i);
    }
  }
  r.fraction = r.covered ? static_cast<double>(r.violating) / static_cast<double>(r.covered) : 0.0;
  std::sort(margins.begin(), margins.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (std::size_t k = 0; k < std::min(worst_count, margins.size()); ++k) r.worst.push_back(margins[k].second);
  return r;
}

ProbeRegion normalize_region(ProbeRegion region) {
  if (region.caps.empty()) throw RegionError("probe region needs at least one cap");
  if (!(region.delta > 0.0 && region.delta < 0.5)) throw RegionError("delta must lie in (0, 1/2)");
  for (auto& c : region.caps) {
    if (!(c.radius > 0.0) || !c.center.allFinite() || c.center.norm() < 1e-12)
      throw RegionError("caps need a direction and a positive radius");
    c.center.normalize();
    c.radius = std::min(c.radius, kPi / 2.0 - 1e-6);
  }
  for (const auto& a : region.caps)
    for (const auto& b : region.caps)
      if (geodesic(a.center, -b.center) <= a.radius + b.radius)
        throw RegionError("probe region meets its antipodal image");
  return region;
}

SupportField bump_field(const ProbeRegion& region, double sharpness) {
  const std::vector<Cap> caps = region.caps;
  auto g0 = [caps, sharpness](const Vec3& u) {
    double s = 0.0;
    for (const auto& c : caps) {
      const double d = geodesic(u, c.center);
      if (d < c.radius) {
        const double v = std::cos(kPi * d / (2.0 * c.radius));
        s += std::pow(v * v, sharpness);
      }
    }
    return s;
  };
  return SupportField([g0](const Vec3& u) { return g0(u) - g0(-u); }, FieldKind::analytic, 0.0);
}

std::vector<double> sample_field(const SupportField& f, const DirectionGrid& grid) {
  std::vector<double> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { out[i] = f(grid.node(i)); });
  return out;
}

TranslationFit translation_fit(const std::vector<double>& hA, const std::vector<double>& hB,
                               const DirectionGrid& grid) {
  if (hA.size() != grid.size() || hB.size() != grid.size())
    throw GridError("sampled fields do not match the grid");
  Mat3 A = Mat3::Zero();
  Vec3 rhs = Vec3::Zero();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec3& u = grid.node(i);
    A += u * u.transpose();
    rhs += (hB[i] - hA[i]) * u;
  }
  TranslationFit fit;
  fit.b = A.ldlt().solve(rhs);
  double ss = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = hB[i] - hA[i] - fit.b.dot(grid.node(i));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(grid.size()));
  return fit;
}

WidthValidation validate_constant_width(const SupportField& f, const DirectionGrid& grid, double tau,
                                        const Tolerances& tol) {
  const std::vector<double> h = sample_field(f, grid);
  WidthValidation v;
  for (std::size_t i = 0; i < grid.size(); ++i)
    v.max_width_deviation = std::max(v.max_width_deviation, std::abs(h[i] + h[grid.antipode(i)] - 1.0));
  const RadiiProfile p = radii_profile(f, grid, tol);
  v.min_eigenvalue = 1e300;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (p.covered[i]) {
      ++v.covered;
      v.min_eigenvalue = std::min(v.min_eigenvalue, p.r_min[i]);
    }
  v.ok = v.max_width_deviation <= tau && v.min_eigenvalue >= -tau;
  return v;
}

ProbeResult probe_nonextreme(const SupportField& f, const ProbeRegion& region_in, const ProbeOptions& opts,
                             const Tolerances& tol) {
  ProbeResult r;
  r.region = normalize_region(region_in);
  const SupportField g = bump_field(r.region, opts.sharpness);

  // Dense samples of A for the spectral bound.
  const DirectionGrid fine = sphere_grid(6);
  std::vector<Vec3> samples;
  for (const auto& c : r.region.caps) samples.push_back(c.center);
  for (const auto& u : fine.nodes())
    for (const auto& c : r.region.caps)
      if (geodesic(u, c.center) < c.radius) {
        samples.push_back(u);
        break;
      }
  std::vector<double> spec(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    const auto [lo, hi] = radii_at(g, samples[i], tol.fd_step);
    spec[i] = std::max(std::abs(lo), std::abs(hi));
  });
  r.spectral_bound = *std::max_element(spec.begin(), spec.end());
  r.t = r.region.delta / r.spectral_bound;

  const double t = r.t;
  const SupportField hp([f, g, t](const Vec3& u) { return f(u) + t * g(u); }, FieldKind::sampled, tol.eps_width);
  const SupportField hm([f, g, t](const Vec3& u) { return f(u) - t * g(u); }, FieldKind::sampled, tol.eps_width);

  const DirectionGrid grid = sphere_grid(opts.grid_level);
  r.h_samples = sample_field(f, grid);
  r.g_samples = sample_field(g, grid);
  r.h_plus.resize(grid.size());
  r.h_minus.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    r.h_plus[i] = r.h_samples[i] + t * r.g_samples[i];
    r.h_minus[i] = r.h_samples[i] - t * r.g_samples[i];
  }
  r.plus_check = validate_constant_width(hp, grid, opts.validate_tau, tol);
  r.minus_check = validate_constant_width(hm, grid, opts.validate_tau, tol);
  r.translation_residual = translation_fit(r.h_minus, r.h_plus, grid).residual;

  // Largest t the curvature margins of h allow on A and -A (Weyl bound).
  constexpr double kNoise = 1e-4;
  double t_low = 1e300, t_high = 1e300;
  std::vector<double> lo_bound(2 * samples.size(), 1e300), hi_bound(2 * samples.size(), 1e300);
  parallel_for(2 * samples.size(), [&](std::size_t k) {
    const Vec3 u = k < samples.size() ? samples[k] : Vec3(-samples[k - samples.size()]);
    const auto [glo, ghi] = radii_at(g, u, tol.fd_step);
    const double gnorm = std::max(std::abs(glo), std::abs(ghi));
    if (gnorm < 1e-12) return;
    const auto [rlo, rhi] = radii_at(f, u, tol.fd_step);
    const double m_low = rlo < kNoise ? 0.0 : rlo;
    const double m_high = 1.0 - rhi < kNoise ? 0.0 : 1.0 - rhi;
    lo_bound[k] = m_low / gnorm;
    hi_bound[k] = m_high / gnorm;
  });
  for (std::size_t k = 0; k < lo_bound.size(); ++k) {
    t_low = std::min(t_low, lo_bound[k]);
    t_high = std::min(t_high, hi_bound[k]);
  }
  r.admissible_t = std::min(t_low, t_high);

  r.success = r.plus_check.ok && r.minus_check.ok && r.translation_residual > opts.residual_threshold;
  if (!r.success) {
    if (!(r.plus_check.ok && r.minus_check.ok))
      r.blocking = t_high <= t_low ? "r_max <= 1" : "r_min >= 0";
    else
      r.blocking = "translation residual";
  }
  return r;
}

}  // namespace cw

#include "cw/reuleaux2d.hpp"

#include <algorithm>
#include <cmath>

namespace cw {

namespace {

double wrap(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

double angle_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }

double signed_area(const std::vector<Vec2>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    a += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * a;
}

}  // namespace

Arc2 ReuleauxPolygon::arc(std::size_t j) const {
  const std::size_t N = size();
  const std::size_t n = half();
  return {j % N, (j + n) % N, (j + n + 1) % N};
}

std::vector<double> ReuleauxPolygon::transition_angles() const {
  std::vector<double> out;
  out.reserve(offsets_.size());
  for (double o : offsets_) out.push_back(wrap(base_angle_ + o));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<bool, std::size_t> ReuleauxPolygon::feature(double theta) const {
  const double t = wrap(theta - base_angle_);
  // offsets_[0] == 0, so the upper bound is never begin().
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  const std::size_t j = k / 2;
  if (k % 2 == 0) return {true, j};
  return {false, (j + half() + 1) % size()};
}

double ReuleauxPolygon::transition_distance(double theta) const {
  double best = kTwoPi;
  for (double o : offsets_) {
    const double d = std::abs(wrap(theta - base_angle_ - o + kPi) - kPi);
    best = std::min(best, d);
  }
  return best;
}

ReuleauxPolygon make_polygon(std::vector<Vec2> v, bool require_symmetric, const Tolerances& tol) {
  const std::size_t N = v.size();
  if (N < 3 || N % 2 == 0) throw ParityError("a Reuleaux polygon needs an odd number (>= 3) of vertices");
  for (const auto& p : v)
    if (!p.allFinite()) throw DiameterError("vertex coordinates must be finite");

  if (signed_area(v) < 0.0) std::reverse(v.begin() + 1, v.end());

  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if ((v[i] - v[j]).norm() > 1.0 + tol.eps_len)
        throw DiameterError("vertex set has diameter greater than 1");

  const std::size_t n = (N - 1) / 2;
  for (std::size_t j = 0; j < N; ++j) {
    const double d1 = (v[j] - v[(j + n) % N]).norm();
    const double d2 = (v[j] - v[(j + n + 1) % N]).norm();
    if (std::abs(d1 - 1.0) > tol.eps_len || std::abs(d2 - 1.0) > tol.eps_len)
      throw ArcConditionError("opposite vertices are not at unit distance");
  }

  ReuleauxPolygon p;
  p.vertices_ = v;
  p.base_angle_ = angle_of(v[n] - v[0]);
  p.offsets_.reserve(2 * N);
  double acc = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    const Vec2& c = v[j];
    const Vec2& a = v[(j + n) % N];
    const Vec2& b = v[(j + n + 1) % N];
    const Vec2& next_c = v[(j + 1) % N];
    const double arc_w = wrap(angle_of(b - c) - angle_of(a - c));
    const double vtx_w = wrap(angle_of(b - next_c) - angle_of(b - c));
    if (arc_w > kPi || vtx_w > kPi) throw ArcConditionError("arcs do not concatenate around the polygon");
    p.offsets_.push_back(acc);
    acc += arc_w;
    p.offsets_.push_back(acc);
    acc += vtx_w;
  }
  if (std::abs(acc - kTwoPi) > 1e-9) throw ArcConditionError("normal sectors do not cover the circle once");

  for (std::size_t k = 0; k < N && !p.symmetry_; ++k) {
    const double ax = v[k].x();
    bool ok = true;
    for (std::size_t i = 1; i <= n && ok; ++i) {
      const Vec2& a = v[(k + i) % N];
      const Vec2& b = v[(k + N - i) % N];
      ok = std::abs(a.x() + b.x() - 2.0 * ax) <= tol.eps_len && std::abs(a.y() - b.y()) <= tol.eps_len;
    }
    if (ok) p.symmetry_ = SymmetricTag{ax, k};
  }
  if (require_symmetric && !p.symmetry_)
    throw SymmetryError("no vertex lies on a mirror axis of the polygon");
  return p;
}

ReuleauxPolygon build_regular(int n_vertices) {
  if (n_vertices < 3 || n_vertices % 2 == 0)
    throw ParityError("regular Reuleaux polygons need an odd vertex count >= 3");
  const int N = n_vertices;
  const int n = (N - 1) / 2;
  const double R = 1.0 / (2.0 * std::sin(kPi * n / N));
  std::vector<Vec2> v;
  v.reserve(N);
  for (int j = 0; j < N; ++j) {
    const double a = kPi / 2.0 + kTwoPi * j / N;
    v.emplace_back(R * std::cos(a), R * std::sin(a));
  }
  // Exact mirror pairs keep the symmetry test clean of rounding.
  v[0].x() = 0.0;
  for (int j = 1; j <= n; ++j) {
    v[N - j].x() = -v[j].x();
    v[N - j].y() = v[j].y();
  }
  Tolerances tol;
  tol.eps_len = 1e-12;
  return make_polygon(std::move(v), true, tol);
}

ReuleauxPolygon validate(const std::vector<Vec2>& vertices, bool require_symmetric, const Tolerances& tol) {
  return make_polygon(vertices, require_symmetric, tol);
}

double support_2d(const ReuleauxPolygon& p, double theta) {
  const Vec2 u(std::cos(theta), std::sin(theta));
  const auto [is_arc, idx] = p.feature(theta);
  return p.vertex(idx).dot(u) + (is_arc ? 1.0 : 0.0);
}

double radius_profile_2d(const ReuleauxPolygon& p, double theta, const Tolerances& tol) {
  if (p.transition_distance(theta) < tol.fd_step)
    throw BoundaryBandError("direction lies within fd_step of an arc/vertex transition");
  return p.feature(theta).first ? 1.0 : 0.0;
}

SupportSamples2D sample_support_2d(const ReuleauxPolygon& p, std::size_t n) {
  SupportSamples2D s;
  s.theta.resize(n);
  s.h.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.theta[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    s.h[i] = support_2d(p, s.theta[i]);
  }
  return s;
}

double uniform_step(const SupportSamples2D& s) {
  const std::size_t n = s.theta.size();
  if (n < 2 || s.h.size() != n) throw GridError("sample arrays are empty or mismatched");
  const double d = kTwoPi / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double expect = s.theta[0] + d * static_cast<double>(i);
    if (std::abs(s.theta[i] - expect) > 1e-9) throw GridError("theta grid is not uniform over one period");
  }
  return d;
}

SupportSamples2D symmetrize(const SupportSamples2D& h0) {
  const double d = uniform_step(h0);
  const std::size_t n = h0.theta.size();
  const double shift = (kPi - 2.0 * h0.theta[0]) / d;
  const double k = std::round(shift);
  if (std::abs(shift - k) > 1e-6) throw GridError("grid is not closed under theta -> pi - theta");
  const long long N = static_cast<long long>(n);
  const long long K = static_cast<long long>(k);
  SupportSamples2D out = h0;
  for (long long i = 0; i < N; ++i) {
    // pi - theta_i = theta_0 + (K - i) d
    const long long m = (((K - i) % N) + N) % N;
    out.h[i] = 0.5 * (h0.h[i] + h0.h[m]);
  }
  return out;
}

}  // namespace cw

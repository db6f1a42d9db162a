#include "cw/core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <utility>

namespace cw {

void Tolerances::validate() const {
  const double values[] = {eps_unit, eps_len,  eps_width, eps_oracle,
                           fd_step,  tau_kallay, tau_scan};
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ToleranceError("all tolerances must be finite and positive");
  }
  if (!(fd_step * fd_step > eps_unit))
    throw ToleranceError("fd_step^2 must exceed eps_unit");
}

UnitVec3 UnitVec3::checked(const Vec3& v, double eps) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > eps)
    throw UnitError("vector is not of unit length");
  return UnitVec3(v);
}

UnitVec3 UnitVec3::normalized(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw UnitError("cannot normalize a zero or non-finite vector");
  return UnitVec3(v / n);
}

UnitVec3 unit_from_spherical(const SphericalAngles& a) {
  const double sp = std::sin(a.phi);
  return UnitVec3::normalized(
      Vec3(sp * std::cos(a.theta), sp * std::sin(a.theta), std::cos(a.phi)));
}

SphericalAngles spherical_from_unit(const Vec3& u) {
  SphericalAngles a;
  a.phi = std::atan2(std::hypot(u.x(), u.y()), u.z());
  double t = std::atan2(u.y(), u.x());
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  a.theta = t;
  return a;
}

TangentBasis tangent_basis(const SphericalAngles& a) {
  const double sp = std::sin(a.phi);
  const double cp = std::cos(a.phi);
  if (std::abs(sp) < 1e-12) throw PoleError("chart is degenerate at the poles");
  const double ct = std::cos(a.theta);
  const double st = std::sin(a.theta);
  return {Vec3(-sp * st, sp * ct, 0.0), Vec3(cp * ct, cp * st, -sp)};
}

ChartFrame ChartFrame::equatorial(const Vec3& u) {
  const Vec3 e1 = u.normalized();
  // Any unit vector orthogonal to u serves as the local pole.
  Vec3 helper = std::abs(e1.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX();
  const Vec3 e3 = (helper - helper.dot(e1) * e1).normalized();
  const Vec3 e2 = e3.cross(e1);
  ChartFrame f;
  f.rotation.col(0) = e1;
  f.rotation.col(1) = e2;
  f.rotation.col(2) = e3;
  return f;
}

namespace {

struct IcoBase {
  std::vector<Vec3> nodes;
  std::vector<std::array<int, 3>> faces;
};

IcoBase icosahedron() {
  IcoBase b;
  const double z = 1.0 / std::sqrt(5.0);
  const double r = 2.0 / std::sqrt(5.0);
  b.nodes.emplace_back(0.0, 0.0, 1.0);
  for (int k = 0; k < 5; ++k) {
    const double t = kTwoPi * k / 5.0;
    b.nodes.emplace_back(r * std::cos(t), r * std::sin(t), z);
  }
  for (int k = 0; k < 5; ++k) {
    const double t = kTwoPi * k / 5.0 + kPi / 5.0;
    b.nodes.emplace_back(r * std::cos(t), r * std::sin(t), -z);
  }
  b.nodes.emplace_back(0.0, 0.0, -1.0);

  for (int k = 0; k < 5; ++k) {
    const int u0 = 1 + k, u1 = 1 + (k + 1) % 5;
    const int l0 = 6 + k, l1 = 6 + (k + 1) % 5;
    b.faces.push_back({0, u0, u1});
    b.faces.push_back({u0, l0, u1});
    b.faces.push_back({u1, l0, l1});
    b.faces.push_back({11, l1, l0});
  }
  // Orient every face outward.
  for (auto& f : b.faces) {
    const Vec3& a = b.nodes[f[0]];
    const Vec3& c = b.nodes[f[1]];
    const Vec3& d = b.nodes[f[2]];
    if ((c - a).cross(d - a).dot(a + c + d) < 0.0) std::swap(f[1], f[2]);
  }
  return b;
}

}  // namespace

DirectionGrid sphere_grid(int level) {
  if (level < 0) throw GridError("grid level must be non-negative");
  if (level > 8) throw CapacityError("grid level above 8 is not supported");

  IcoBase base = icosahedron();
  std::vector<Vec3> nodes = base.nodes;
  std::vector<std::array<int, 3>> faces = base.faces;

  std::vector<std::size_t> anti(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::size_t best = 0;
    double best_d = 1e300;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const double d = (nodes[i] + nodes[j]).squaredNorm();
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    anti[i] = best;
  }

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const std::pair<int, int> key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const int idx = static_cast<int>(nodes.size());
      nodes.push_back((nodes[a] + nodes[b]).normalized());
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = mid(f[0], f[1]);
      const int bc = mid(f[1], f[2]);
      const int ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);

    // The antipode of the midpoint of (a, b) is the midpoint of their antipodes.
    anti.resize(nodes.size());
    for (const auto& [key, idx] : midpoint) {
      const int a = static_cast<int>(anti[key.first]);
      const int b = static_cast<int>(anti[key.second]);
      const std::pair<int, int> akey = std::minmax(a, b);
      anti[idx] = static_cast<std::size_t>(midpoint.at(akey));
    }
  }

  DirectionGrid g;
  g.level_ = level;
  g.nodes_ = std::move(nodes);
  g.antipode_ = std::move(anti);
  g.triangles_ = std::move(faces);
  return g;
}

DirectionGrid DirectionGrid::rotated(const Mat3& r) const {
  DirectionGrid g = *this;
  for (auto& n : g.nodes_) n = (r * n).normalized();
  return g;
}

Mat3 generic_rotation(int k) {
  return (Eigen::AngleAxisd(0.7236 + 0.9 * k, Vec3::UnitZ()) * Eigen::AngleAxisd(0.4142 + 0.37 * k, Vec3::UnitY()) *
          Eigen::AngleAxisd(0.3183 + 1.3 * k, Vec3::UnitX()))
      .toRotationMatrix();
}

unsigned thread_count() {
  if (const char* env = std::getenv("CW_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cw

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace oracle {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Vec3 random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Vec3 v(n(rng), n(rng), n(rng));
    const double len = v.norm();
    if (len > 1e-6) return v / len;
  }
}

double dense_support_2d(const std::vector<Vec2>& v, double theta, int samples_per_arc) {
  const int N = static_cast<int>(v.size());
  const int n = (N - 1) / 2;
  const Vec2 u(std::cos(theta), std::sin(theta));
  double best = -1e300;
  for (int j = 0; j < N; ++j) {
    const Vec2 c = v[j];
    const Vec2 a = v[(j + n) % N] - c;
    const Vec2 b = v[(j + n + 1) % N] - c;
    const double a0 = std::atan2(a.y(), a.x());
    double span = std::atan2(b.y(), b.x()) - a0;
    while (span < 0) span += 2 * kPi;
    while (span > 2 * kPi) span -= 2 * kPi;
    for (int s = 0; s <= samples_per_arc; ++s) {
      const double t = a0 + span * s / samples_per_arc;
      best = std::max(best, (c + Vec2(std::cos(t), std::sin(t))).dot(u));
    }
  }
  return best;
}

std::vector<Vec3> brute_force_vertices(const std::vector<Vec3>& X, double slack) {
  std::vector<Vec3> out;
  const std::size_t m = X.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const Vec3 &a = X[i], &b = X[j], &c = X[k];
        Eigen::Matrix<double, 2, 3> A;
        A.row(0) = 2.0 * (b - a).transpose();
        A.row(1) = 2.0 * (c - a).transpose();
        const Eigen::Vector2d rhs(b.squaredNorm() - a.squaredNorm(), c.squaredNorm() - a.squaredNorm());
        const Vec3 dir = (b - a).cross(c - a);
        if (dir.norm() < 1e-9) continue;
        const Vec3 p0 = A.completeOrthogonalDecomposition().solve(rhs);
        const Vec3 d = dir.normalized();
        // |p0 + s d - a|^2 = 1
        const Vec3 w = p0 - a;
        const double B = w.dot(d);
        const double C = w.squaredNorm() - 1.0;
        double disc = B * B - C;
        if (disc < -1e-12) continue;
        disc = std::max(disc, 0.0);
        for (double sgn : {-1.0, 1.0}) {
          const Vec3 p = p0 + (-B + sgn * std::sqrt(disc)) * d;
          bool inside = true;
          for (const auto& x : X) inside = inside && (p - x).norm() <= 1.0 + slack;
          if (!inside) continue;
          bool dup = false;
          for (const auto& q : out) dup = dup || (p - q).norm() < 1e-7;
          if (!dup) out.push_back(p);
        }
      }
  return out;
}

std::vector<Vec3> dangling_vertices(const std::vector<Vec3>& X, double tol) {
  std::vector<Vec3> out;
  for (std::size_t i = 0; i < X.size(); ++i) {
    int on = 0;
    bool inside = true;
    for (std::size_t j = 0; j < X.size(); ++j) {
      if (j == i) continue;
      const double d = (X[i] - X[j]).norm();
      if (std::abs(d - 1.0) <= tol) ++on;
      inside = inside && d <= 1.0 + tol;
    }
    if (on == 2 && inside) out.push_back(X[i]);
  }
  return out;
}

bool removable(const std::vector<Vec3>& X, std::size_t i, int samples) {
  std::vector<Vec3> rest;
  for (std::size_t j = 0; j < X.size(); ++j)
    if (j != i) rest.push_back(X[j]);
  auto in_rest = [&](const Vec3& p) {
    for (const auto& x : rest)
      if ((p - x).norm() > 1.0 + 1e-12) return false;
    return true;
  };
  // B(rest) lies in B(x_i) iff its boundary does; boundary points farthest
  // from x_i sit on vertices, edges or faces, so sample all three kinds.
  for (const auto& v : brute_force_vertices(rest))
    if ((v - X[i]).norm() > 1.0 + 1e-9) return false;
  for (std::size_t a = 0; a < rest.size(); ++a) {
    // face point: antipode of x_i on the sphere around rest[a]
    const Vec3 dir = rest[a] - X[i];
    if (dir.norm() > 1e-12) {
      const Vec3 p = rest[a] + dir.normalized();
      if (in_rest(p) && (p - X[i]).norm() > 1.0 + 1e-9) return false;
    }
    for (std::size_t b = a + 1; b < rest.size(); ++b) {
      const Vec3 c = 0.5 * (rest[a] + rest[b]);
      const Vec3 n = (rest[b] - rest[a]).normalized();
      const double r = std::sqrt(std::max(0.0, 1.0 - 0.25 * (rest[b] - rest[a]).squaredNorm()));
      const Vec3 e1 = n.unitOrthogonal();
      const Vec3 e2 = n.cross(e1);
      for (int s = 0; s < samples; ++s) {
        const double t = 2 * kPi * s / samples;
        const Vec3 p = c + r * (std::cos(t) * e1 + std::sin(t) * e2);
        if (in_rest(p) && (p - X[i]).norm() > 1.0 + 1e-9) return false;
      }
    }
  }
  return true;
}

bool is_tight(const std::vector<Vec3>& X) {
  for (std::size_t i = 0; i < X.size(); ++i)
    if (removable(X, i)) return false;
  return true;
}

bool vertices_equal_points(const std::vector<Vec3>& X, double tol) {
  auto V = brute_force_vertices(X);
  for (const auto& d : dangling_vertices(X)) V.push_back(d);
  for (const auto& v : V) {
    bool hit = false;
    for (const auto& x : X) hit = hit || (v - x).norm() <= tol;
    if (!hit) return false;
  }
  for (const auto& x : X) {
    bool hit = false;
    for (const auto& v : V) hit = hit || (v - x).norm() <= tol;
    if (!hit) return false;
  }
  return true;
}

int count_unit_pairs(const std::vector<Vec3>& X, double tol) {
  int c = 0;
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j)
      if (std::abs((X[i] - X[j]).norm() - 1.0) <= tol) ++c;
  return c;
}

std::vector<Vec3> search_extremal_five(std::uint64_t seed) {
  // Target diameter graph: K4 on {1,2,3,4} plus 0-3 and 0-4. Point 0 ends
  // up on the 3-4 circle as a dangling vertex and cuts off the 1-2 edge.
  const int unit[8][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {0, 3}, {0, 4}};
  const int shortp[2][2] = {{0, 1}, {0, 2}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-0.5, 0.5);
  Eigen::VectorXd x(15);
  for (int i = 0; i < 15; ++i) x[i] = U(rng);

  auto pt = [&](const Eigen::VectorXd& v, int i) { return Vec3(v[3 * i], v[3 * i + 1], v[3 * i + 2]); };
  const double lim2 = 0.97 * 0.97;  // keep the non-diametric pairs clearly short
  const double sep2 = 0.2 * 0.2;    // and the free point away from its neighbours

  for (int it = 0; it < 400; ++it) {
    std::vector<Eigen::VectorXd> rows;
    std::vector<double> res;
    auto add_pair = [&](int i, int j, double r, double scale) {
      Eigen::VectorXd g = Eigen::VectorXd::Zero(15);
      const Vec3 d = pt(x, i) - pt(x, j);
      for (int k = 0; k < 3; ++k) {
        g[3 * i + k] = 2.0 * d[k] * scale;
        g[3 * j + k] = -2.0 * d[k] * scale;
      }
      rows.push_back(g);
      res.push_back(r * scale);
    };
    for (const auto& p : unit) add_pair(p[0], p[1], (pt(x, p[0]) - pt(x, p[1])).squaredNorm() - 1.0, 1.0);
    for (const auto& p : shortp) {
      const double d2 = (pt(x, p[0]) - pt(x, p[1])).squaredNorm();
      if (d2 > lim2) add_pair(p[0], p[1], d2 - lim2, 1.0);
      if (d2 < sep2) add_pair(p[0], p[1], d2 - sep2, 1.0);
    }
    Eigen::MatrixXd J(rows.size(), 15);
    Eigen::VectorXd r(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      J.row(static_cast<Eigen::Index>(k)) = rows[k].transpose();
      r[static_cast<Eigen::Index>(k)] = res[k];
    }
    if (r.norm() < 1e-15) break;
    x -= J.completeOrthogonalDecomposition().solve(r);
  }

  std::vector<Vec3> X;
  for (int i = 0; i < 5; ++i) X.push_back(pt(x, i));
  for (const auto& p : unit)
    if (std::abs((X[p[0]] - X[p[1]]).norm() - 1.0) > 1e-13) return {};
  for (const auto& p : shortp) {
    const double d = (X[p[0]] - X[p[1]]).norm();
    if (d > 0.975 || d < 0.19) return {};
  }
  return X;
}

std::vector<Vec3> extremal_five() {
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    auto X = search_extremal_five(seed);
    if (!X.empty() && count_unit_pairs(X) == 8 && is_tight(X) && vertices_equal_points(X)) return X;
  }
  std::fprintf(stderr, "extremal 5-point search failed for every seed\n");
  std::abort();
}

std::vector<Vec2> symmetric_heptagon(double tilt) {
  const int N = 7;
  const double R = 1.0 / (2.0 * std::sin(3.0 * kPi / N));
  std::vector<Vec2> reg;
  for (int j = 0; j < N; ++j) {
    const double a = kPi / 2 + 2 * kPi * j / N;
    reg.emplace_back(R * std::cos(a), R * std::sin(a));
  }
  const Vec2 d03 = reg[3] - reg[0];
  const double beta = std::atan2(-d03.x(), -d03.y()) + tilt;
  const Vec2 d36 = reg[6] - reg[3];
  const double gamma = std::atan2(d36.y(), d36.x());

  auto mirror = [](const Vec2& p) { return Vec2(-p.x(), p.y()); };
  std::vector<Vec2> v(N);
  v[0] = Vec2(0.0, reg[0].y());
  v[3] = v[0] + Vec2(-std::sin(beta), -std::cos(beta));
  v[4] = mirror(v[3]);
  v[6] = v[3] + Vec2(std::cos(gamma), std::sin(gamma));
  v[1] = mirror(v[6]);
  const double dx = -0.5 - v[6].x();
  v[2] = Vec2(-0.5, v[6].y() - std::sqrt(1.0 - dx * dx));
  v[5] = mirror(v[2]);
  return v;
}

double farthest_generator_distance(const cw::GeneratorSet& g, const Vec3& y) {
  double best = 0.0;
  for (const auto& p : g.points) best = std::max(best, (y - p).norm());
  auto arc_far = [&](const Vec3& c, const Vec3& n, const Vec3& p0, double sweep) {
    const Vec3 v = p0 - c;
    const Vec3 w = n.cross(v);
    const Vec3 q = y - c;
    const double A = q.dot(v), B = q.dot(w);
    // |y - p(t)|^2 = |q|^2 + r^2 - 2 (A cos t + B sin t)
    auto dist = [&](double t) { return std::sqrt(std::max(0.0, q.squaredNorm() + v.squaredNorm() - 2.0 * (A * std::cos(t) + B * std::sin(t)))); };
    double m = std::max(dist(0.0), dist(sweep));
    double t = std::atan2(B, A) + kPi;
    while (t < 0) t += 2 * kPi;
    while (t >= 2 * kPi) t -= 2 * kPi;
    if (t <= sweep) m = std::max(m, dist(t));
    return m;
  };
  for (const auto& a : g.arcs)
    best = std::max(best, arc_far(a.circle.center, a.circle.normal, a.point(0.0), a.sweep));
  for (const auto& c : g.circles)
    best = std::max(best, arc_far(c.center, c.normal, c.point(0.0), 2 * kPi));
  return best;
}

double monte_carlo_volume(const cw::GeneratorSet& g, std::size_t samples, std::uint64_t seed) {
  // A width-1 body containing the points spans exactly 1 along each axis, so
  // it lies in [max - 1, min + 1] per coordinate.
  Vec3 lo = Vec3::Constant(1e300), hi = Vec3::Constant(-1e300);
  for (const auto& p : g.points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const Vec3 box_lo = hi - Vec3::Ones();
  const Vec3 box_hi = lo + Vec3::Ones();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::size_t inside = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Vec3 y(box_lo.x() + U(rng) * (box_hi.x() - box_lo.x()), box_lo.y() + U(rng) * (box_hi.y() - box_lo.y()),
                 box_lo.z() + U(rng) * (box_hi.z() - box_lo.z()));
    if (farthest_generator_distance(g, y) <= 1.0) ++inside;
  }
  const Vec3 side = box_hi - box_lo;
  return side.x() * side.y() * side.z() * static_cast<double>(inside) / static_cast<double>(samples);
}

}  // namespace oracle

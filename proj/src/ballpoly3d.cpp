#include "cw/ballpoly3d.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cw {

namespace {

double wrap(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a >= kTwoPi ? 0.0 : a;
}

// Slack used when testing membership of computed (not input) points.
double member_slack(const Tolerances& tol) { return std::max(1e2 * tol.eps_len, 1e-8); }

bool in_balls(const std::vector<Vec3>& X, const Vec3& p, double slack) {
  for (const auto& x : X)
    if ((p - x).norm() > 1.0 + slack) return false;
  return true;
}

// Points at unit distance from a, b and c: zero or two (possibly equal).
int trilaterate(const Vec3& a, const Vec3& b, const Vec3& c, Vec3 out[2]) {
  const Vec3 ab = b - a;
  const double d = ab.norm();
  if (d < 1e-12) return 0;
  const Vec3 ex = ab / d;
  const Vec3 ac = c - a;
  const double i = ex.dot(ac);
  Vec3 ey = ac - i * ex;
  const double j = ey.norm();
  if (j < 1e-9) return 0;  // collinear centers
  ey /= j;
  const Vec3 ez = ex.cross(ey);
  const double x = d / 2.0;
  const double y = (i * i + j * j) / (2.0 * j) - i * x / j;
  double z2 = 1.0 - x * x - y * y;
  if (z2 < -1e-12) return 0;
  z2 = std::max(z2, 0.0);
  const double z = std::sqrt(z2);
  const Vec3 base = a + x * ex + y * ey;
  out[0] = base + z * ez;
  out[1] = base - z * ez;
  return 2;
}

std::vector<Vec3> enumerate_vertices(const std::vector<Vec3>& X, const Tolerances& tol,
                                     const DiametricGraph* graph) {
  const std::size_t m = X.size();
  const double slack = member_slack(tol);
  std::vector<Vec3> found;
  auto add = [&](const Vec3& p) {
    for (const auto& q : found)
      if ((p - q).norm() < 1e-7) return;
    found.push_back(p);
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        Vec3 pts[2];
        const int k = trilaterate(X[a], X[b], X[c], pts);
        for (int t = 0; t < k; ++t)
          if (in_balls(X, pts[t], slack)) add(pts[t]);
      }
  if (graph) {
    for (std::size_t i = 0; i < m; ++i)
      if (graph->adjacency[i].size() == 2) add(X[i]);
  }
  return found;
}

}  // namespace

PointSet3 PointSet3::make(std::vector<Vec3> points, const Tolerances& tol) {
  if (points.size() < 4) throw PointSetError("a point set needs at least 4 points");
  double diam = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].allFinite()) throw PointSetError("point coordinates must be finite");
    for (std::size_t j = 0; j < i; ++j) {
      const double d = (points[i] - points[j]).norm();
      if (d <= tol.eps_len) throw PointSetError("points must be distinct");
      diam = std::max(diam, d);
    }
  }
  if (std::abs(diam - 1.0) > tol.eps_len) throw PointSetError("point set diameter must be 1");
  PointSet3 s;
  s.points_ = std::move(points);
  s.diameter_ = diam;
  return s;
}

bool DiametricGraph::has_edge(int i, int j) const {
  const auto& a = adjacency[i];
  return std::find(a.begin(), a.end(), j) != a.end();
}

bool DiametricGraph::connected() const {
  if (m == 0) return true;
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == m;
}

DiametricGraph diametric_pairs(const PointSet3& X, const Tolerances& tol) {
  DiametricGraph g;
  g.m = X.size();
  g.adjacency.assign(g.m, {});
  for (std::size_t i = 0; i < g.m; ++i)
    for (std::size_t j = i + 1; j < g.m; ++j)
      if (std::abs((X[i] - X[j]).norm() - 1.0) <= tol.eps_len) {
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        g.adjacency[i].push_back(static_cast<int>(j));
        g.adjacency[j].push_back(static_cast<int>(i));
      }
  if (g.edges.size() > 2 * g.m - 2)
    throw BoundViolation("more than 2m-2 diametric pairs; tolerance is too loose for this input");
  return g;
}

Circle3 Circle3::make(const Vec3& center, double radius, const Vec3& normal) {
  Circle3 c;
  c.center = center;
  c.radius = radius;
  c.normal = normal.normalized();
  const Vec3 helper = std::abs(c.normal.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  c.e1 = (helper - helper.dot(c.normal) * c.normal).normalized();
  c.e2 = c.normal.cross(c.e1);
  return c;
}

Vec3 Circle3::point(double angle) const {
  return center + radius * (std::cos(angle) * e1 + std::sin(angle) * e2);
}

double Circle3::angle_of(const Vec3& p) const {
  const Vec3 d = p - center;
  return wrap(std::atan2(d.dot(e2), d.dot(e1)));
}

Circle3 circle_of_pair(const Vec3& a, const Vec3& b) {
  const double d = (a - b).norm();
  if (!(d > 0.0)) throw DegenerateError("coincident centers have no intersection circle");
  if (d >= 2.0) throw DegenerateError("unit spheres at distance >= 2 meet in at most a point");
  return Circle3::make(0.5 * (a + b), std::sqrt(1.0 - d * d / 4.0), (a - b) / d);
}

bool ArcRange::contains_angle(double angle, double slack) const {
  if (sweep >= kTwoPi - 1e-15) return true;
  const double off = wrap(angle - start);
  return off <= sweep + slack || off >= kTwoPi - slack;
}

ExtremalityCertificate is_extremal(const PointSet3& X, const Tolerances& tol) {
  DiametricGraph g;
  g.m = X.size();
  g.adjacency.assign(g.m, {});
  for (std::size_t i = 0; i < g.m; ++i)
    for (std::size_t j = i + 1; j < g.m; ++j)
      if (std::abs((X[i] - X[j]).norm() - 1.0) <= tol.eps_len) {
        g.adjacency[i].push_back(static_cast<int>(j));
        g.adjacency[j].push_back(static_cast<int>(i));
      }

  ExtremalityCertificate cert;
  cert.vertices = enumerate_vertices(X.points(), tol, &g);
  const double match = std::max(1e3 * tol.eps_len, 1e-7);
  std::vector<char> hit(X.size(), 0);
  for (const auto& v : cert.vertices) {
    bool matched = false;
    for (std::size_t i = 0; i < X.size(); ++i)
      if ((v - X[i]).norm() <= match) {
        hit[i] = 1;
        matched = true;
      }
    if (!matched) cert.extra.push_back(v);
  }
  for (std::size_t i = 0; i < X.size(); ++i)
    if (!hit[i]) cert.missing.push_back(static_cast<int>(i));
  cert.extremal = cert.extra.empty() && cert.missing.empty();
  return cert;
}

bool is_tight(const PointSet3& X, const Tolerances& tol) {
  const double slack = member_slack(tol);
  for (std::size_t r = 0; r < X.size(); ++r) {
    std::vector<Vec3> rest;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (i != r) rest.push_back(X[i]);
    // the farthest point of B(rest) from X[r] is a vertex, a sphere point
    // antipodal to X[r], or the far point of a pair circle
    std::vector<Vec3> cand = enumerate_vertices(rest, tol, nullptr);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const Vec3 d = rest[i] - X[r];
      if (d.norm() > 1e-12) cand.push_back(rest[i] + d.normalized());
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        const Circle3 c = circle_of_pair(rest[i], rest[j]);
        Vec3 off = X[r] - c.center;
        off -= off.dot(c.normal) * c.normal;
        if (off.norm() > 1e-12) cand.push_back(c.center - c.radius * off.normalized());
      }
    }
    bool cuts = false;
    for (const auto& v : cand)
      if (in_balls(rest, v, slack) && (v - X[r]).norm() > 1.0 + slack) cuts = true;
    if (!cuts) return false;
  }
  return true;
}

int ReuleauxPolyhedron::edge_of_pair(int i, int j) const {
  // first edge on the pair
  if (i > j) std::swap(i, j);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].supporting_pair[0] == i && edges[e].supporting_pair[1] == j) return static_cast<int>(e);
  return -1;
}

ReuleauxPolyhedron build_combinatorics(const PointSet3& X, const Tolerances& tol) {
  const auto cert = is_extremal(X, tol);
  if (!cert.extremal) throw NotExtremalError("X is not the vertex set of B(X)");

  ReuleauxPolyhedron rp{X, diametric_pairs(X, tol), {}, {}};
  const std::size_t m = X.size();
  const double slack = member_slack(tol);

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Circle3 c = circle_of_pair(X[i], X[j]);

      std::vector<std::pair<double, int>> marks;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        if (std::abs((X[k] - X[i]).norm() - 1.0) <= tol.eps_len &&
            std::abs((X[k] - X[j]).norm() - 1.0) <= tol.eps_len)
          marks.emplace_back(c.angle_of(X[k]), static_cast<int>(k));
      }
      std::sort(marks.begin(), marks.end());

      auto piece_inside = [&](double a0, double sweep) {
        for (double s : {0.25, 0.5, 0.75}) {
          if (!in_balls(X.points(), c.point(a0 + s * sweep), slack)) return false;
        }
        return true;
      };

      if (marks.empty()) {
        if (piece_inside(0.0, kTwoPi))
          throw CombinatoricsError("a whole intersection circle lies on the boundary");
        continue;
      }
      for (std::size_t p = 0; p < marks.size(); ++p) {
        const auto& [a0, k] = marks[p];
        const auto& [a1, l] = marks[(p + 1) % marks.size()];
        double sweep = wrap(a1 - a0);
        if (marks.size() == 1) sweep = kTwoPi;
        if (!piece_inside(a0, sweep)) continue;
        EdgeArc e;
        e.supporting_pair = {static_cast<int>(i), static_cast<int>(j)};
        e.endpoints = {std::min(k, l), std::max(k, l)};
        e.arc = ArcRange{c, a0, sweep};
        rp.edges.push_back(e);
      }
    }

  if (rp.euler() != 2 || rp.edges.size() != 2 * m - 2)
    throw CombinatoricsError("assembled edges violate the Euler relation");

  std::vector<char> used(rp.edges.size(), 0);
  for (std::size_t a = 0; a < rp.edges.size(); ++a) {
    if (used[a]) continue;
    const auto& e = rp.edges[a];
    // a center pair can carry several edges when a dangling vertex splits it
    int b = -1;
    for (std::size_t c = 0; c < rp.edges.size(); ++c)
      if (c != a && !used[c] && rp.edges[c].supporting_pair == e.endpoints &&
          rp.edges[c].endpoints == e.supporting_pair)
        b = static_cast<int>(c);
    if (b < 0)
      throw CombinatoricsError("edge has no dual edge with swapped centers and endpoints");
    used[a] = used[b] = 1;
    rp.dual_pairs.emplace_back(static_cast<int>(a), b);
  }
  return rp;
}

std::vector<Vec3> regular_tetrahedron() {
  const double R = std::sqrt(3.0 / 8.0);
  const double r = 1.0 / std::sqrt(3.0);
  std::vector<Vec3> v{Vec3(0.0, 0.0, R)};
  for (int k = 0; k < 3; ++k) {
    const double t = kTwoPi * k / 3.0;
    v.emplace_back(r * std::cos(t), r * std::sin(t), -R / 3.0);
  }
  return v;
}

}  // namespace cw

#include "cw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

namespace cw {

void OracleConfig::validate() const {
  if (arc_samples < 64) throw ParamError("arc_samples must be at least 64");
  if (max_iter <= 0 || !(tol_primal > 0.0)) throw ParamError("max_iter and tol_primal must be positive");
}

namespace {

double wrap(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

// Uniform samples of one arc or full circle, with O(1) farthest-sample lookup.
struct SampledCurve {
  Circle3 circle;
  double start = 0.0;
  double step = 0.0;
  long count = 0;
  bool closed = false;
  std::vector<Vec3> pts;

  SampledCurve(const ArcRange& arc, std::size_t n, bool full) : circle(arc.circle), start(arc.start) {
    closed = full;
    count = static_cast<long>(n);
    step = full ? kTwoPi / static_cast<double>(n) : arc.sweep / static_cast<double>(n - 1);
    pts.reserve(n);
    for (long i = 0; i < count; ++i) pts.push_back(circle.point(start + step * static_cast<double>(i)));
  }

  const Vec3& farthest(const Vec3& y) const {
    const Vec3 d = y - circle.center;
    const Vec3 dp = d - d.dot(circle.normal) * circle.normal;
    if (dp.squaredNorm() < 1e-30) return pts.front();
    const double opp = std::atan2(dp.dot(circle.e2), dp.dot(circle.e1)) + kPi;
    const long k = std::lround(wrap(opp - start) / step);
    const Vec3* best = nullptr;
    double best_d = -1.0;
    auto consider = [&](long i) {
      if (closed) {
        i = ((i % count) + count) % count;
      } else if (i < 0 || i >= count) {
        return;
      }
      const double dd = (y - pts[i]).squaredNorm();
      if (dd > best_d) {
        best_d = dd;
        best = &pts[i];
      }
    };
    for (long i = k - 1; i <= k + 1; ++i) consider(i);
    if (!closed) {
      consider(0);
      consider(count - 1);
    }
    return *best;
  }
};

struct Discretized {
  std::vector<Vec3> points;
  std::vector<SampledCurve> curves;
  Vec3 centroid = Vec3::Zero();

  Discretized(const GeneratorSet& g, std::size_t n) : points(g.points) {
    for (const auto& a : g.arcs) curves.emplace_back(a, n, false);
    for (const auto& c : g.circles) curves.emplace_back(ArcRange{c, 0.0, kTwoPi}, n, true);
    std::size_t total = 0;
    for (const auto& p : points) {
      centroid += p;
      ++total;
    }
    for (const auto& c : curves)
      for (const auto& p : c.pts) {
        centroid += p;
        ++total;
      }
    centroid /= static_cast<double>(total);
  }

  // Generator sample farthest from y, with its distance.
  std::pair<Vec3, double> farthest(const Vec3& y) const {
    Vec3 best = y;
    double best_d = -1.0;
    for (const auto& p : points) {
      const double d = (y - p).norm();
      if (d > best_d) best_d = d, best = p;
    }
    for (const auto& c : curves) {
      const Vec3& p = c.farthest(y);
      const double d = (y - p).norm();
      if (d > best_d) best_d = d, best = p;
    }
    return {best, best_d};
  }
};

// max x.u over the intersection of unit balls around the active centers:
// the optimum is the top of one ball, the top of one pair circle or a triple
// point, so try all of them.
bool solve_active(const std::vector<Vec3>& A, const Vec3& u, Vec3& out) {
  constexpr double kSlack = 1e-11;
  double best = -1e300;
  bool found = false;
  auto consider = [&](const Vec3& x) {
    const double v = x.dot(u);
    if (v <= best) return;
    for (const auto& a : A)
      if ((x - a).squaredNorm() > (1.0 + kSlack) * (1.0 + kSlack)) return;
    best = v;
    out = x;
    found = true;
  };
  const std::size_t k = A.size();
  for (const auto& a : A) consider(a + u);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Vec3 d = A[j] - A[i];
      const double len = d.norm();
      if (len < 1e-12 || len >= 2.0) continue;
      const Vec3 n = d / len;
      const Vec3 m = 0.5 * (A[i] + A[j]);
      const double r = std::sqrt(1.0 - 0.25 * len * len);
      Vec3 t = u - u.dot(n) * n;
      if (t.norm() < 1e-14) t = n.unitOrthogonal();
      consider(m + r * t.normalized());
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        const Vec3 ab = A[j] - A[i], ac = A[l] - A[i];
        const Vec3 nrm = ab.cross(ac);
        const double nn = nrm.squaredNorm();
        if (nn < 1e-24) continue;
        // circumcenter of the three centers, then step along the normal
        const Vec3 cc = A[i] + (ac.squaredNorm() * nrm.cross(ab) + ab.squaredNorm() * ac.cross(nrm)) / (2.0 * nn);
        const double h2 = 1.0 - (cc - A[i]).squaredNorm();
        if (h2 < 0.0) continue;
        const Vec3 off = std::sqrt(h2 / nn) * nrm;
        consider(cc + off);
        consider(cc - off);
      }
  return found;
}

}  // namespace

struct NumericOracle::Impl {
  Discretized d;
};

NumericOracle::NumericOracle(const GeneratorSet& g, const OracleConfig& cfg) : cfg_(cfg) {
  cfg.validate();
  if (g.empty()) throw GeneratorError("generator set is empty");
  impl_ = std::make_unique<Impl>(Impl{Discretized(g, cfg.arc_samples)});
}

NumericOracle::~NumericOracle() = default;
NumericOracle::NumericOracle(NumericOracle&&) noexcept = default;

NumericResult NumericOracle::evaluate(const Vec3& u_in) const {
  const Vec3 u = u_in.normalized();
  const Discretized& D = impl_->d;
  // Cutting planes: solve over a small active set, add the most violated
  // sample, repeat. Values only decrease, and the last iterate is feasible.
  std::vector<Vec3> active{D.farthest(D.centroid).first};
  Vec3 x = Vec3::Zero();
  for (int it = 0; it < cfg_.max_iter; ++it) {
    if (!solve_active(active, u, x)) throw NonConvergence("active ball set has empty intersection");
    const auto [s, d] = D.farthest(x);
    if (d <= 1.0 + cfg_.tol_primal) return {x.dot(u), x, it + 1};
    bool seen = false;
    for (const auto& a : active) seen = seen || (a - s).squaredNorm() < 1e-28;
    if (seen) return {x.dot(u), x, it + 1};
    active.push_back(s);
  }
  throw NonConvergence("support oracle hit the iteration cap");
}

NumericResult support_numeric_detail(const GeneratorSet& g, const Vec3& u, const OracleConfig& cfg) {
  return NumericOracle(g, cfg).evaluate(u);
}

double support_numeric(const GeneratorSet& g, const Vec3& u, const OracleConfig& cfg) {
  return support_numeric_detail(g, u, cfg).value;
}

SupportField numeric_field(const GeneratorSet& g, const OracleConfig& cfg) {
  auto oracle = std::make_shared<NumericOracle>(g, cfg);
  return SupportField([oracle](const Vec3& u) { return oracle->evaluate(u).value; }, FieldKind::numeric,
                      5e-4);
}

}  // namespace cw

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "cw/meissner3d.hpp"

namespace cw {

enum class Feature { none, sphere, vertex, spindle, edge };
const char* feature_name(Feature f);

enum class FieldKind { analytic, numeric, sampled };

/// h(u) on unit directions, optionally with a supporting-feature label.
class SupportField {
 public:
  using Eval = std::function<double(const Vec3&)>;
  using Label = std::function<Feature(const Vec3&)>;

  SupportField(Eval h, FieldKind kind, double tolerance, Label label = {})
      : h_(std::move(h)), label_(std::move(label)), kind_(kind), tolerance_(tolerance) {}

  /// Evaluates at u / |u|.
  double operator()(const Vec3& u) const { return h_(u.normalized()); }
  Feature feature(const Vec3& u) const { return label_ ? label_(u.normalized()) : Feature::none; }
  bool has_features() const { return static_cast<bool>(label_); }
  FieldKind kind() const { return kind_; }
  /// Tolerance the field advertises for its width identity.
  double tolerance() const { return tolerance_; }

 private:
  Eval h_;
  Label label_;
  FieldKind kind_;
  double tolerance_;
};

/// Ball of the given radius around center: h(u) = center . u + radius.
SupportField ball_field(double radius = 0.5, const Vec3& center = Vec3::Zero());

/// Closed-form support of the spindle body bounded by T_a (tips at +-a e3).
/// Throws ParamError unless 0 < a < 1.
double spindle_support(double a, const Vec3& u);

struct EigenPair {
  double value;
  Vec3 vector;
};

/// Principal radii of the spindle body at u. Returns (e3 - u3 u, 1) and
/// (u x e3, 1 - sqrt(1 - a^2) / sqrt(1 - u3^2)). Throws RangeError unless
/// -a < u3 < a, ParamError unless 0 < a < 1.
std::pair<EigenPair, EigenPair> spindle_curvature(double a, const Vec3& u);

/// Support field of a spindle body in the frame (center, axis).
SupportField spindle_field(double a, const Vec3& center = Vec3::Zero(),
                           const Vec3& axis = Vec3::UnitZ());

struct AnalyticValue {
  double value;
  Feature feature;
  Vec3 point;
};

/// Largest feasible candidate among sphere caps, spindle patches, edge arcs
/// and vertices of B(G). Throws ClassificationError when nothing is feasible.
AnalyticValue support_analytic(const GeneratorSet& g, const Vec3& u, const Tolerances& tol = {});
AnalyticValue support_analytic(const MeissnerBody& body, const Vec3& u, const Tolerances& tol = {});
AnalyticValue support_analytic(const RotatedBody& body, const Vec3& u, const Tolerances& tol = {});

SupportField analytic_field(const MeissnerBody& body, const Tolerances& tol = {});
SupportField analytic_field(const RotatedBody& body);

/// h_K(theta, phi) = h_C(pi/2 - phi).
double rotated_support(const RotatedBody& body, double theta, double phi);

/// h(u) + h(-u).
double width(const SupportField& f, const Vec3& u);

/// (1 - lambda) h0 + lambda h1.
SupportField minkowski_combine(const SupportField& f0, const SupportField& f1, double lambda);

/// h(-u): support of the point reflection of the body.
SupportField reflect(const SupportField& f);

/// Supporting point DH(u) via central differences in the chart of `frame`.
/// Throws PoleError when the local polar angle is within the pole margin.
Vec3 boundary_point(const SupportField& f, const SphericalAngles& a, const Tolerances& tol = {},
                    const ChartFrame& frame = ChartFrame::standard());

/// DH at direction u, evaluated in a chart with u on the equator.
Vec3 boundary_point_at(const SupportField& f, const Vec3& u, const Tolerances& tol = {});

}  // namespace cw

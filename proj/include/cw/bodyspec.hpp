#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cw/meissner3d.hpp"
#include "cw/support3d.hpp"

namespace cw {

enum class BodyKind { reuleaux2d, pointset3, meissner, rotated, ball };

const char* kind_name(BodyKind k);

/// On-disk description of a body (JSON).
struct BodySpec {
  BodyKind kind = BodyKind::ball;
  std::vector<Vec2> vertices;  // reuleaux2d, rotated
  std::vector<Vec3> points;    // pointset3, meissner
  std::vector<int> choice;     // meissner
  bool symmetric = false;      // reuleaux2d
  double radius = 0.5;         // ball
};

/// Throws SpecError on malformed JSON, unknown kinds, missing or non-finite
/// fields.
BodySpec parse_body_spec(const std::string& text);
std::string dump_body_spec(const BodySpec& spec);
BodySpec load_body_spec(const std::string& path);
void save_body_spec(const BodySpec& spec, const std::string& path);

/// Parses "0101" into bits; throws SpecError on other characters.
std::vector<int> parse_bits(const std::string& bits);
std::string format_bits(const std::vector<int>& bits);

/// A validated body together with whatever structure its kind carries.
struct Body {
  BodySpec spec;
  std::optional<ReuleauxPolygon> polygon;
  std::optional<ReuleauxPolyhedron> polyhedron;
  std::optional<MeissnerBody> meissner;
  std::optional<RotatedBody> rotated;

  bool is_planar() const { return spec.kind == BodyKind::reuleaux2d; }
  /// 3D support field: analytic where available, the numeric oracle for a
  /// bare ball polyhedron. Throws SpecError for planar bodies.
  SupportField field(const Tolerances& tol = {}) const;
  /// Generators of the 3D body. Throws SpecError for planar bodies and balls.
  GeneratorSet generators() const;
};

Body build_body(const BodySpec& spec, const Tolerances& tol = {});

}  // namespace cw

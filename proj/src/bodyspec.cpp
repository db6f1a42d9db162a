#include "cw/bodyspec.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cw/oracle.hpp"
#include "json.hpp"

namespace cw {

using ojson = nlohmann::ordered_json;

const char* kind_name(BodyKind k) {
  switch (k) {
    case BodyKind::reuleaux2d: return "reuleaux2d";
    case BodyKind::pointset3: return "pointset3";
    case BodyKind::meissner: return "meissner";
    case BodyKind::rotated: return "rotated";
    case BodyKind::ball: return "ball";
  }
  return "?";
}

std::vector<int> parse_bits(const std::string& bits) {
  std::vector<int> out;
  for (char c : bits) {
    if (c != '0' && c != '1') throw SpecError("choice must be a string of 0 and 1");
    out.push_back(c - '0');
  }
  return out;
}

std::string format_bits(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

namespace {

template <int D>
std::vector<Eigen::Matrix<double, D, 1>> read_rows(const ojson& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw SpecError(std::string("missing array field '") + key + "'");
  std::vector<Eigen::Matrix<double, D, 1>> out;
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != D)
      throw SpecError(std::string("each entry of '") + key + "' needs " + std::to_string(D) + " numbers");
    Eigen::Matrix<double, D, 1> v;
    for (int k = 0; k < D; ++k) {
      if (!row[k].is_number()) throw SpecError("coordinates must be numbers");
      v[k] = row[k].get<double>();
      if (!std::isfinite(v[k])) throw SpecError("coordinates must be finite");
    }
    out.push_back(v);
  }
  return out;
}

template <int D>
ojson write_rows(const std::vector<Eigen::Matrix<double, D, 1>>& rows) {
  ojson a = ojson::array();
  for (const auto& v : rows) {
    ojson r = ojson::array();
    for (int k = 0; k < D; ++k) r.push_back(v[k]);
    a.push_back(r);
  }
  return a;
}

}  // namespace

BodySpec parse_body_spec(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("body spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw SpecError("body spec needs a string field 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  BodySpec s;
  if (kind == "reuleaux2d") {
    s.kind = BodyKind::reuleaux2d;
    s.vertices = read_rows<2>(j, "vertices");
    if (j.contains("symmetric")) {
      if (!j["symmetric"].is_boolean()) throw SpecError("'symmetric' must be a boolean");
      s.symmetric = j["symmetric"].get<bool>();
    }
  } else if (kind == "rotated") {
    s.kind = BodyKind::rotated;
    s.vertices = read_rows<2>(j, "vertices");
    s.symmetric = true;
  } else if (kind == "pointset3") {
    s.kind = BodyKind::pointset3;
    s.points = read_rows<3>(j, "points");
  } else if (kind == "meissner") {
    s.kind = BodyKind::meissner;
    s.points = read_rows<3>(j, "points");
    if (!j.contains("choice") || !j["choice"].is_string()) throw SpecError("meissner spec needs a 'choice' bit string");
    s.choice = parse_bits(j["choice"].get<std::string>());
  } else if (kind == "ball") {
    s.kind = BodyKind::ball;
    if (j.contains("radius")) {
      if (!j["radius"].is_number()) throw SpecError("'radius' must be a number");
      s.radius = j["radius"].get<double>();
    }
    if (!(s.radius > 0.0) || !std::isfinite(s.radius)) throw SpecError("'radius' must be positive");
  } else {
    throw SpecError("unknown body kind '" + kind + "'");
  }
  return s;
}

std::string dump_body_spec(const BodySpec& s) {
  ojson j;
  j["kind"] = kind_name(s.kind);
  switch (s.kind) {
    case BodyKind::reuleaux2d:
      j["vertices"] = write_rows<2>(s.vertices);
      j["symmetric"] = s.symmetric;
      break;
    case BodyKind::rotated:
      j["vertices"] = write_rows<2>(s.vertices);
      break;
    case BodyKind::pointset3:
      j["points"] = write_rows<3>(s.points);
      break;
    case BodyKind::meissner:
      j["points"] = write_rows<3>(s.points);
      j["choice"] = format_bits(s.choice);
      break;
    case BodyKind::ball:
      j["radius"] = s.radius;
      break;
  }
  return j.dump(2) + "\n";
}

BodySpec load_body_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open body spec '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_body_spec(ss.str());
}

void save_body_spec(const BodySpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write body spec '" + path + "'");
  out << dump_body_spec(spec);
}

Body build_body(const BodySpec& spec, const Tolerances& tol) {
  tol.validate();
  Body b;
  b.spec = spec;
  switch (spec.kind) {
    case BodyKind::reuleaux2d:
      b.polygon = validate(spec.vertices, spec.symmetric, tol);
      break;
    case BodyKind::rotated:
      b.polygon = validate(spec.vertices, true, tol);
      b.rotated = rotate_generators(*b.polygon);
      break;
    case BodyKind::pointset3:
      b.polyhedron = build_combinatorics(PointSet3::make(spec.points, tol), tol);
      break;
    case BodyKind::meissner:
      b.polyhedron = build_combinatorics(PointSet3::make(spec.points, tol), tol);
      b.meissner = build_meissner(*b.polyhedron, SurgeryChoice{spec.choice}, tol);
      break;
    case BodyKind::ball:
      break;
  }
  return b;
}

SupportField Body::field(const Tolerances& tol) const {
  switch (spec.kind) {
    case BodyKind::ball: return ball_field(spec.radius);
    case BodyKind::meissner: return analytic_field(*meissner, tol);
    case BodyKind::rotated: return analytic_field(*rotated);
    case BodyKind::pointset3: return numeric_field(generators());
    case BodyKind::reuleaux2d: break;
  }
  throw SpecError("a planar body has no 3D support field; rotate it first");
}

GeneratorSet Body::generators() const {
  switch (spec.kind) {
    case BodyKind::meissner: return meissner->generators;
    case BodyKind::rotated: return rotated->generators();
    case BodyKind::pointset3: {
      GeneratorSet g;
      g.points = polyhedron->X.points();
      return g;
    }
    case BodyKind::ball:
    case BodyKind::reuleaux2d: break;
  }
  throw SpecError("this body kind has no generator set");
}

}  // namespace cw

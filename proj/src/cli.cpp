#include "cw/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cw/bodyspec.hpp"
#include "cw/extremality.hpp"
#include "cw/mesh.hpp"
#include "cw/oracle.hpp"
#include "json.hpp"

namespace cw {

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw SpecError("cannot write '" + path + "'");
  return f;
}

Cap parse_cap(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (...) {
      throw RegionError("cap must be theta,phi,rho");
    }
  }
  if (v.size() != 3) throw RegionError("cap must be theta,phi,rho");
  return Cap{unit_from_spherical({v[0], v[1]}).vec(), v[2]};
}

SupportSamples2D planar_samples(const Body& b, std::size_t n) {
  if (b.polygon) return sample_support_2d(*b.polygon, n);
  if (b.spec.kind == BodyKind::ball) {
    SupportSamples2D s;
    for (std::size_t i = 0; i < n; ++i) {
      s.theta.push_back(kTwoPi * static_cast<double>(i) / static_cast<double>(n));
      s.h.push_back(b.spec.radius);
    }
    return s;
  }
  throw SpecError("this mode needs a planar profile (reuleaux2d, rotated or ball)");
}

// Curvature sweeps use a generically rotated grid so node rings miss
// axis-aligned feature boundaries.
DirectionGrid scan_grid(int level) { return sphere_grid(level).rotated(generic_rotation()); }

struct Common {
  std::string spec_path;
  int grid = 4;
};

int cmd_gen(const std::vector<std::string>& kind, const std::string& choice, double radius,
            const std::string& out_path, std::ostream& out) {
  BodySpec s;
  const std::string& k = kind.at(0);
  if (k == "reuleaux-regular") {
    if (kind.size() != 2) throw SpecError("reuleaux-regular needs a vertex count");
    int n = 0;
    try {
      n = std::stoi(kind[1]);
    } catch (...) {
      throw SpecError("vertex count must be an integer");
    }
    const ReuleauxPolygon p = build_regular(n);
    s.kind = BodyKind::reuleaux2d;
    s.vertices = p.vertices();
    s.symmetric = true;
  } else if (k == "tetra") {
    s.points = regular_tetrahedron();
    s.kind = BodyKind::pointset3;
    if (!choice.empty()) {
      s.kind = BodyKind::meissner;
      s.choice = parse_bits(choice);
    }
  } else if (k == "pointset") {
    if (kind.size() != 2) throw SpecError("pointset needs a file");
    std::ifstream in(kind[1]);
    if (!in) throw SpecError("cannot open '" + kind[1] + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    ojson j;
    try {
      j = ojson::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
      throw SpecError(std::string("point file is not valid JSON: ") + e.what());
    }
    ojson wrapped = j.is_array() ? ojson{{"kind", "pointset3"}, {"points", j}} : j;
    wrapped["kind"] = "pointset3";
    s = parse_body_spec(wrapped.dump());
    if (!choice.empty()) {
      s.kind = BodyKind::meissner;
      s.choice = parse_bits(choice);
    }
  } else if (k == "ball") {
    s.kind = BodyKind::ball;
    s.radius = radius;
  } else {
    throw SpecError("unknown generator kind '" + k + "'");
  }
  build_body(s);  // validate before writing
  if (out_path.empty()) out << dump_body_spec(s);
  else save_body_spec(s, out_path);
  return 0;
}

int cmd_build(const Common& c, const std::string& choice, bool rotate, const std::string& out_path,
              std::ostream& out) {
  BodySpec s = load_body_spec(c.spec_path);
  if (!choice.empty()) {
    if (s.kind != BodyKind::pointset3 && s.kind != BodyKind::meissner)
      throw SpecError("--choice applies to point-set bodies");
    s.kind = BodyKind::meissner;
    s.choice = parse_bits(choice);
  }
  if (rotate) {
    if (s.kind != BodyKind::reuleaux2d) throw SpecError("--rotate applies to planar bodies");
    s.kind = BodyKind::rotated;
  }
  const Body b = build_body(s);
  ojson r;
  r["kind"] = kind_name(s.kind);
  if (b.polygon) {
    r["vertices"] = b.polygon->size();
    r["symmetric"] = static_cast<bool>(b.polygon->symmetry());
    if (b.polygon->symmetry()) r["apex_index"] = b.polygon->symmetry()->apex_index;
  }
  if (b.polyhedron) {
    const auto& rp = *b.polyhedron;
    r["V"] = rp.vertex_count();
    r["E"] = rp.edge_count();
    r["F"] = rp.face_count();
    r["euler"] = rp.euler();
    ojson pairs = ojson::array();
    for (const auto& [a, d] : rp.dual_pairs) {
      const auto& ea = rp.edges[a];
      const auto& ed = rp.edges[d];
      pairs.push_back({{"centers", {ea.supporting_pair[0], ea.supporting_pair[1]}},
                       {"endpoints", {ea.endpoints[0], ea.endpoints[1]}},
                       {"dual_centers", {ed.supporting_pair[0], ed.supporting_pair[1]}}});
    }
    r["dual_pairs"] = pairs;
    const auto cert = is_extremal(rp.X);
    r["extremal"] = cert.extremal;
    r["extra_vertices"] = cert.extra.size();
    r["missing_vertices"] = cert.missing;
  }
  if (b.meissner) r["retained_edges"] = b.meissner->retained_edges;
  if (b.rotated) {
    r["circles"] = b.rotated->circles.size();
    r["apex_height"] = b.rotated->apex.z();
  }
  if (!out_path.empty()) save_body_spec(s, out_path);
  out << r.dump(2) << "\n";
  return 0;
}

int cmd_check(const Common& c, const std::string& what, bool numeric, std::ostream& out) {
  const Tolerances tol;
  const Body b = build_body(load_body_spec(c.spec_path), tol);
  ojson r;
  r["what"] = what;
  bool pass = false;
  if (what == "width") {
    double dev = 0.0;
    std::size_t count = 0;
    if (b.is_planar()) {
      const std::size_t n = 4096;
      for (std::size_t i = 0; i < n; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        dev = std::max(dev, std::abs(support_2d(*b.polygon, t) + support_2d(*b.polygon, t + kPi) - 1.0));
      }
      count = n;
    } else {
      const SupportField f = numeric && b.spec.kind != BodyKind::ball ? numeric_field(b.generators()) : b.field(tol);
      const DirectionGrid g = sphere_grid(c.grid);
      const auto h = sample_field(f, g);
      for (std::size_t i = 0; i < g.size(); ++i) dev = std::max(dev, std::abs(h[i] + h[g.antipode(i)] - 1.0));
      count = g.size();
    }
    pass = dev <= tol.eps_oracle;
    r["directions"] = count;
    r["max_deviation"] = dev;
    r["tolerance"] = tol.eps_oracle;
  } else if (what == "duality") {
    const DirectionGrid g = scan_grid(c.grid);
    const RadiiProfile p = radii_profile(b.field(tol), g, tol);
    const DualityReport d = check_duality(p, g, 5e-2);
    pass = d.fraction() >= 0.98;
    r["pairs"] = d.pairs;
    r["within"] = d.within;
    r["fraction"] = d.fraction();
    r["max_deviation"] = d.max_deviation;
  } else if (what == "euler" || what == "grunbaum") {
    if (!b.polyhedron) throw SpecError("this check needs a point-set or meissner body");
    const auto& rp = *b.polyhedron;
    const std::size_t m = rp.X.size();
    if (what == "euler") {
      pass = rp.euler() == 2;
      r["V"] = rp.vertex_count();
      r["E"] = rp.edge_count();
      r["F"] = rp.face_count();
      r["euler"] = rp.euler();
    } else {
      const auto cert = is_extremal(rp.X, tol);
      const std::size_t pairs = rp.graph.edges.size();
      pass = pairs == 2 * m - 2 && cert.extremal;
      r["diametric_pairs"] = pairs;
      r["bound"] = 2 * m - 2;
      r["extremal"] = cert.extremal;
      r["summary"] = std::to_string(pairs) + " diametric pairs " + (pairs == 2 * m - 2 ? "= " : "< ") +
                     "2m-2; extremal: " + (cert.extremal ? "true" : "false");
    }
  } else {
    throw SpecError("unknown check '" + what + "'");
  }
  r["pass"] = pass;
  out << r.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_curvature(const Common& c, const std::string& out_path, std::ostream& out) {
  const Tolerances tol;
  const Body b = build_body(load_body_spec(c.spec_path), tol);
  const DirectionGrid g = scan_grid(c.grid);
  const RadiiProfile p = radii_profile(b.field(tol), g, tol);
  std::ofstream file;
  if (!out_path.empty()) file = open_out(out_path);
  std::ostream& os = out_path.empty() ? out : file;
  os << "node,theta,phi,r_min,r_max,feature\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!p.covered[i]) continue;
    const SphericalAngles a = spherical_from_unit(g.node(i));
    os << i << ',' << fmt17(a.theta) << ',' << fmt17(a.phi) << ',' << fmt17(p.r_min[i]) << ','
       << fmt17(p.r_max[i]) << ',' << feature_name(p.feature[i]) << '\n';
  }
  if (!out_path.empty()) {
    ojson r{{"nodes", g.size()}, {"covered", p.covered_count()}, {"out", out_path}};
    out << r.dump(2) << "\n";
  }
  return 0;
}

int cmd_extremality(const Common& c, const std::string& mode, const std::vector<std::string>& caps, double delta,
                    double tau, std::size_t samples, const std::string& prefix, std::ostream& out) {
  const Tolerances tol;
  const Body b = build_body(load_body_spec(c.spec_path), tol);
  ojson r;
  r["mode"] = mode;
  if (mode == "kallay") {
    const KallayReport k = kallay_test_2d(planar_samples(b, samples), tau > 0 ? tau : tol.tau_kallay);
    r["samples"] = k.samples;
    r["violation_measure"] = k.measure;
    r["violating_nodes"] = k.violating;
    out << r.dump(2) << "\n";
    return 0;
  }
  if (mode == "scan") {
    const DirectionGrid g = scan_grid(c.grid);
    const RadiiProfile p = radii_profile(b.field(tol), g, tol);
    const ScanReport s = conjecture_scan_3d(p, tau > 0 ? tau : tol.tau_scan);
    r["grid_level"] = c.grid;
    r["covered"] = s.covered;
    r["violating"] = s.violating;
    r["fraction"] = s.fraction;
    ojson worst = ojson::array();
    for (std::size_t i : s.worst) {
      const SphericalAngles a = spherical_from_unit(g.node(i));
      worst.push_back({{"theta", a.theta}, {"phi", a.phi}, {"r_min", p.r_min[i]}, {"r_max", p.r_max[i]}});
    }
    r["worst"] = worst;
    out << r.dump(2) << "\n";
    return 0;
  }
  if (mode == "probe") {
    ProbeRegion region;
    for (const auto& cap : caps) region.caps.push_back(parse_cap(cap));
    region.delta = delta;
    ProbeOptions opts;
    opts.grid_level = c.grid;
    const ProbeResult p = probe_nonextreme(b.field(tol), region, opts, tol);
    r["success"] = p.success;
    r["t"] = p.t;
    r["spectral_bound"] = p.spectral_bound;
    r["translation_residual"] = p.translation_residual;
    r["plus_valid"] = p.plus_check.ok;
    r["minus_valid"] = p.minus_check.ok;
    r["plus_min_eigenvalue"] = p.plus_check.min_eigenvalue;
    r["minus_min_eigenvalue"] = p.minus_check.min_eigenvalue;
    if (!p.success) {
      r["blocking"] = p.blocking;
      r["admissible_t"] = p.admissible_t;
    }
    if (p.success && !prefix.empty()) {
      const DirectionGrid g = sphere_grid(c.grid);
      for (const auto& [suffix, vals] : {std::pair{"_plus.csv", &p.h_plus}, std::pair{"_minus.csv", &p.h_minus}}) {
        std::ofstream f = open_out(prefix + suffix);
        f << "x,y,z,h\n";
        for (std::size_t i = 0; i < g.size(); ++i)
          f << fmt17(g.node(i).x()) << ',' << fmt17(g.node(i).y()) << ',' << fmt17(g.node(i).z()) << ','
            << fmt17((*vals)[i]) << '\n';
      }
    }
    out << r.dump(2) << "\n";
    return p.success ? 0 : 1;
  }
  throw SpecError("unknown extremality mode '" + mode + "'");
}

int cmd_mesh(const Common& c, int level, const std::string& out_path, bool volume_only, std::ostream& out) {
  const Tolerances tol;
  const Body b = build_body(load_body_spec(c.spec_path), tol);
  const TriMesh m = mesh_from_support(b.field(tol), level, tol);
  if (volume_only) {
    ojson r{{"level", level}, {"vertices", m.vertices.size()}, {"volume", mesh_volume(m)}, {"area", mesh_area(m)}};
    out << r.dump(2) << "\n";
    return 0;
  }
  if (out_path.empty()) {
    write_obj(m, out);
  } else {
    std::ofstream f = open_out(out_path);
    write_obj(m, f);
  }
  return 0;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << ojson{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant-width body toolkit", "cwtool"};
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> gen_kind;
  std::string choice, out_path, what, mode, prefix;
  std::vector<std::string> caps;
  double radius = 0.5, delta = 0.25, tau = -1.0;
  std::size_t samples = 4096;
  int level = 4;
  bool rotate = false, numeric = false;

  auto* gen = app.add_subcommand("gen", "Write a body spec");
  gen->add_option("--kind", gen_kind, "reuleaux-regular N | tetra | pointset FILE | ball")->required()->expected(1, 2);
  gen->add_option("--choice", choice, "Surgery bits for tetra/pointset (makes a meissner spec)");
  gen->add_option("--radius", radius, "Ball radius");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto add_spec = [&](CLI::App* sc) { sc->add_option("--spec", common.spec_path, "Body spec JSON")->required(); };

  auto* build = app.add_subcommand("build", "Build a body and print its summary");
  add_spec(build);
  build->add_option("--choice", choice, "Surgery bits (point-set bodies)");
  build->add_flag("--rotate", rotate, "Rotate a symmetric planar polygon about its axis");
  build->add_option("--out", out_path, "Write the resulting body spec");

  auto* check = app.add_subcommand("check", "Check an invariant");
  add_spec(check);
  check->add_option("--what", what, "width | duality | euler | grunbaum")->required();
  check->add_option("--grid", common.grid, "Icosphere level")->default_val(4);
  check->add_flag("--numeric", numeric, "Use the numeric oracle for width");

  auto* curv = app.add_subcommand("curvature", "Principal radii per grid node as CSV");
  add_spec(curv);
  curv->add_option("--grid", common.grid, "Icosphere level")->default_val(4);
  curv->add_option("--out", out_path, "CSV output (default stdout)");

  auto* ext = app.add_subcommand("extremality", "Kallay test, conjecture scan or probe");
  add_spec(ext);
  ext->add_option("--mode", mode, "kallay | scan | probe")->required();
  ext->add_option("--cap", caps, "Probe cap theta,phi,rho (repeatable)");
  ext->add_option("--delta", delta, "Probe eigenvalue budget");
  ext->add_option("--tau", tau, "Band width (defaults per mode)");
  ext->add_option("--grid", common.grid, "Icosphere level")->default_val(4);
  ext->add_option("--samples", samples, "Planar samples for kallay")->default_val(4096);
  ext->add_option("--out-prefix", prefix, "Probe: write PREFIX_plus.csv and PREFIX_minus.csv");

  auto* mesh = app.add_subcommand("mesh", "Mesh the boundary as OBJ");
  add_spec(mesh);
  mesh->add_option("--level", level, "Icosphere level")->default_val(4);
  mesh->add_option("--out", out_path, "OBJ output (default stdout)");

  auto* vol = app.add_subcommand("volume", "Mesh volume and area");
  add_spec(vol);
  vol->add_option("--level", level, "Icosphere level")->default_val(4);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return 2;
  }

  try {
    if (*gen) return cmd_gen(gen_kind, choice, radius, out_path, out);
    if (*build) return cmd_build(common, choice, rotate, out_path, out);
    if (*check) return cmd_check(common, what, numeric, out);
    if (*curv) return cmd_curvature(common, out_path, out);
    if (*ext) return cmd_extremality(common, mode, caps, delta, tau, samples, prefix, out);
    if (*mesh) return cmd_mesh(common, level, out_path, false, out);
    if (*vol) return cmd_mesh(common, level, "", true, out);
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return 3;
  }
  return 2;
}

}  // namespace cw

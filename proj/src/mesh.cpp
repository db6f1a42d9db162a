#include "cw/mesh.hpp"

#include <cstdio>
#include <map>
#include <utility>

namespace cw {

bool TriMesh::is_closed() const {
  std::map<std::pair<int, int>, int> directed;
  for (const auto& t : triangles)
    for (int k = 0; k < 3; ++k) ++directed[{t[k], t[(k + 1) % 3]}];
  for (const auto& [e, count] : directed) {
    if (count != 1) return false;
    auto it = directed.find({e.second, e.first});
    if (it == directed.end() || it->second != 1) return false;
  }
  return !triangles.empty();
}

TriMesh mesh_from_support(const SupportField& f, int level, const Tolerances& tol) {
  const DirectionGrid grid = sphere_grid(level);
  TriMesh m;
  m.vertices.resize(grid.size());
  m.normals = grid.nodes();
  m.triangles = grid.triangles();
  parallel_for(grid.size(), [&](std::size_t i) { m.vertices[i] = boundary_point_at(f, grid.node(i), tol); });
  return m;
}

double mesh_volume(const TriMesh& m) {
  if (!m.is_closed()) throw OpenMeshError("volume needs a closed, consistently wound mesh");
  double v = 0.0;
  for (const auto& t : m.triangles)
    v += m.vertices[t[0]].dot(m.vertices[t[1]].cross(m.vertices[t[2]]));
  return v / 6.0;
}

double mesh_area(const TriMesh& m) {
  if (!m.is_closed()) throw OpenMeshError("area needs a closed, consistently wound mesh");
  double a = 0.0;
  for (const auto& t : m.triangles)
    a += (m.vertices[t[1]] - m.vertices[t[0]]).cross(m.vertices[t[2]] - m.vertices[t[0]]).norm();
  return 0.5 * a;
}

void write_obj(const TriMesh& m, std::ostream& os) {
  char buf[160];
  for (const auto& v : m.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    os << buf;
  }
  for (const auto& n : m.normals) {
    std::snprintf(buf, sizeof buf, "vn %.17g %.17g %.17g\n", n.x(), n.y(), n.z());
    os << buf;
  }
  for (const auto& t : m.triangles)
    os << "f " << t[0] + 1 << "//" << t[0] + 1 << ' ' << t[1] + 1 << "//" << t[1] + 1 << ' ' << t[2] + 1
       << "//" << t[2] + 1 << '\n';
}

}  // namespace cw

#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "cw/support3d.hpp"

namespace cw {

struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<Vec3> normals;  // the grid direction that produced each vertex
  std::vector<std::array<int, 3>> triangles;

  /// Every edge used by exactly two triangles with opposite orientation.
  bool is_closed() const;
};

/// One vertex per icosphere node at DH(node).
TriMesh mesh_from_support(const SupportField& f, int level, const Tolerances& tol = {});

/// Divergence-theorem volume. Throws OpenMeshError unless the mesh is closed.
double mesh_volume(const TriMesh& m);
/// Sum of triangle areas. Throws OpenMeshError unless the mesh is closed.
double mesh_area(const TriMesh& m);

/// Wavefront OBJ with 17 significant digits and vertex normals.
void write_obj(const TriMesh& m, std::ostream& os);

}  // namespace cw

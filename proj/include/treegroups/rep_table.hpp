#pragma once

#include <map>
#include <optional>
#include <vector>

#include "treegroups/circle.hpp"
#include "treegroups/moebius.hpp"
#include "treegroups/tree_scheme.hpp"
#include "treegroups/word.hpp"

namespace treegroups {

/// Per-vertex data of a representation of G^n.
///
/// The root carries no matrix. A vertex v whose children have been built
/// carries the plane D_v of its vertex group (`plane_circle`, oriented so
/// that the disk Delta_v is its <= 0 side), Delta_v itself, and the
/// combination circle W_v (oriented so that its <= 0 side B_v contains
/// Delta_v), and the frame of that plane: a map sending the plane to the
/// unit circle and Delta_v to the unit disk, in which the children of v are
/// in standard position. Vertices at the maximal depth carry only their
/// matrix.
struct VertexData {
  VertexAddress addr;
  std::optional<MoebiusMap> matrix;
  std::optional<Circle> plane_circle;
  std::optional<Disk> delta_disk;
  std::optional<Circle> combination_circle;
  std::optional<MoebiusMap> frame;
};

struct LevelParameter {
  int k = 0;      ///< level whose generators were created
  double L = 0;   ///< distance between the parent plane and the new planes
};

struct Tolerances {
  double identity_tol = 1e-8;
  double margin_floor = 1e-6;
};

/// Matrices and disks of the inductively built representation of G^depth.
struct RepTable {
  int depth = 0;
  Tolerances tolerances;
  std::vector<LevelParameter> levels;
  std::map<VertexAddress, VertexData> vertices;  // includes the root

  const VertexData& vertex(const VertexAddress& v) const;
  const MoebiusMap& matrix(const VertexAddress& v) const;
  /// Level parameter L_k, if the level exists.
  std::optional<double> level_L(int k) const;
  /// The table a build to `depth` would have produced at intermediate depth d.
  RepTable restricted_to(int d) const;
};

/// Product of the generator matrices along a word over g_v names.
MoebiusMap evaluate(const Word& w, const RepTable& rep);

/// Fixed point of M_v inside the parent's Delta disk.
Point alpha_point(const RepTable& rep, const VertexAddress& v);

}  // namespace treegroups

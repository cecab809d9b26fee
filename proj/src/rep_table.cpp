#include "treegroups/rep_table.hpp"

#include <stdexcept>

#include "treegroups/triangle.hpp"

namespace treegroups {

const VertexData& RepTable::vertex(const VertexAddress& v) const {
  auto it = vertices.find(v);
  if (it == vertices.end()) throw std::out_of_range("RepTable: no vertex '" + v.path() + "'");
  return it->second;
}

const MoebiusMap& RepTable::matrix(const VertexAddress& v) const {
  const auto& data = vertex(v);
  if (!data.matrix) throw std::out_of_range("RepTable: vertex '" + v.path() + "' has no matrix");
  return *data.matrix;
}

std::optional<double> RepTable::level_L(int k) const {
  for (const auto& lv : levels)
    if (lv.k == k) return lv.L;
  return std::nullopt;
}

RepTable RepTable::restricted_to(int d) const {
  if (d < 1 || d > depth) throw std::invalid_argument("RepTable::restricted_to: depth out of range");
  RepTable out;
  out.depth = d;
  out.tolerances = tolerances;
  for (const auto& lv : levels)
    if (lv.k <= d) out.levels.push_back(lv);
  for (const auto& [addr, data] : vertices) {
    if (addr.depth() > d) continue;
    VertexData copy = data;
    if (addr.depth() == d) {
      copy.plane_circle.reset();
      copy.delta_disk.reset();
      copy.combination_circle.reset();
      copy.frame.reset();
    }
    out.vertices.emplace(addr, copy);
  }
  return out;
}

MoebiusMap evaluate(const Word& w, const RepTable& rep) {
  MoebiusMap acc;
  for (const auto& s : w.syllables()) acc = acc * power(rep.matrix(vertex_of_generator(s.generator)), s.exponent);
  return acc;
}

Point alpha_point(const RepTable& rep, const VertexAddress& v) {
  const auto& parent = rep.vertex(v.parent());
  if (!parent.delta_disk) throw std::out_of_range("alpha_point: parent of '" + v.path() + "' has no disk");
  return fixed_point_inside(rep.matrix(v), *parent.delta_disk);
}

}  // namespace treegroups

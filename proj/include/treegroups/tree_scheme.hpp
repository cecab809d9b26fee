#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treegroups/presentation.hpp"
#include "treegroups/word.hpp"

namespace treegroups {

/// Vertex of the rooted binary tree, written as its path of child indices
/// ('1' or '2') from the root. The root is the empty path.
class VertexAddress {
 public:
  VertexAddress() = default;
  /// Throws std::invalid_argument unless `path` consists of '1'/'2'.
  static VertexAddress parse(std::string_view path);
  static VertexAddress root() { return {}; }

  const std::string& path() const { return path_; }
  int depth() const { return static_cast<int>(path_.size()); }
  bool is_root() const { return path_.empty(); }
  VertexAddress child(int i) const;
  VertexAddress parent() const;
  /// 1 or 2: which subtree of the root the vertex lies in. Root: 0.
  int root_branch() const { return is_root() ? 0 : path_.front() - '0'; }

  /// Breadth-first order: by depth, then lexicographic.
  friend bool operator<(const VertexAddress& a, const VertexAddress& b) {
    return a.depth() != b.depth() ? a.depth() < b.depth() : a.path_ < b.path_;
  }
  friend bool operator==(const VertexAddress&, const VertexAddress&) = default;

 private:
  std::string path_;
};

/// All vertices at exactly the given depth, lexicographic.
std::vector<VertexAddress> vertices_at_depth(int depth);
/// All vertices with 1 <= depth <= n, breadth-first.
std::vector<VertexAddress> vertices_up_to(int n);

/// Generator name of g_v, e.g. "g12".
std::string generator_name(const VertexAddress& v);
VertexAddress vertex_of_generator(std::string_view name);

/// Order 3 + depth(v) of g_v.
int generator_order(const VertexAddress& v);

/// Presentation of G^n on the generators g_v, 1 <= depth(v) <= n.
Presentation presentation_full(int n);
/// Tietze-equivalent presentation of G^n on the depth-n generators only.
Presentation presentation_leaf(int n);
/// g_v rewritten over the depth-n generators by g_w -> g_{w2} g_{w1}.
Word expand_to_level(const VertexAddress& v, int n);

/// Words g_{v1}^{k1} g_{v2}^{k2} ... with `syllable_count` syllables,
/// 1 <= k_i < order(g_{v_i}), alternating between the two root subtrees.
/// Such words are nontrivial in G^n (free-product normal form).
std::vector<Word> sample_alternating_words(int n, int syllable_count, std::size_t count, std::uint64_t seed);
/// Whether `w` has the shape produced by sample_alternating_words.
bool is_alternating_normal_form(const Word& w, int n);

struct MnPresentation {
  Presentation presentation;  ///< <a, b, c | b c^-n>
  Word witness;               ///< [a, b]
  Word rewritten_witness;     ///< [a, c^n], equal to the witness in the group
};

MnPresentation mn_presentation(int n);

}  // namespace treegroups

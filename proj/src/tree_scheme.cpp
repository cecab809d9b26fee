#include "treegroups/tree_scheme.hpp"

#include <stdexcept>

#include "treegroups/rng.hpp"

namespace treegroups {

VertexAddress VertexAddress::parse(std::string_view path) {
  for (char c : path)
    if (c != '1' && c != '2') throw std::invalid_argument("vertex address must consist of '1' and '2'");
  VertexAddress v;
  v.path_ = std::string(path);
  return v;
}

VertexAddress VertexAddress::child(int i) const {
  if (i != 1 && i != 2) throw std::invalid_argument("child index must be 1 or 2");
  VertexAddress v = *this;
  v.path_.push_back(static_cast<char>('0' + i));
  return v;
}

VertexAddress VertexAddress::parent() const {
  if (is_root()) throw std::invalid_argument("the root has no parent");
  VertexAddress v = *this;
  v.path_.pop_back();
  return v;
}

std::vector<VertexAddress> vertices_at_depth(int depth) {
  std::vector<VertexAddress> level{VertexAddress::root()};
  for (int d = 0; d < depth; ++d) {
    std::vector<VertexAddress> next;
    next.reserve(level.size() * 2);
    for (const auto& v : level) {
      next.push_back(v.child(1));
      next.push_back(v.child(2));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<VertexAddress> vertices_up_to(int n) {
  std::vector<VertexAddress> out;
  for (int d = 1; d <= n; ++d)
    for (auto& v : vertices_at_depth(d)) out.push_back(std::move(v));
  return out;
}

std::string generator_name(const VertexAddress& v) {
  if (v.is_root()) throw std::invalid_argument("the root carries no generator");
  return "g" + v.path();
}

VertexAddress vertex_of_generator(std::string_view name) {
  if (name.size() < 2 || name.front() != 'g') throw std::invalid_argument("not a tree generator name");
  return VertexAddress::parse(name.substr(1));
}

int generator_order(const VertexAddress& v) {
  if (v.is_root()) throw std::invalid_argument("the root carries no generator");
  return 3 + v.depth();
}

Presentation presentation_full(int n) {
  if (n < 1) throw std::invalid_argument("depth must be at least 1");
  const auto verts = vertices_up_to(n);
  std::vector<std::string> gens;
  std::vector<Word> rels;
  for (const auto& v : verts) gens.push_back(generator_name(v));
  for (const auto& v : verts) rels.push_back(Word::letter(generator_name(v), generator_order(v)));
  for (const auto& v : verts) {
    if (v.depth() >= n) continue;
    rels.push_back(Word{{{generator_name(v), 1}, {generator_name(v.child(1)), -1}, {generator_name(v.child(2)), -1}}});
  }
  return Presentation(std::move(gens), std::move(rels));
}

Word expand_to_level(const VertexAddress& v, int n) {
  if (v.depth() < 1 || v.depth() > n) throw std::invalid_argument("expand_to_level: need 1 <= depth(v) <= n");
  if (v.depth() == n) return Word::letter(generator_name(v));
  return expand_to_level(v.child(2), n) * expand_to_level(v.child(1), n);
}

Presentation presentation_leaf(int n) {
  if (n < 1) throw std::invalid_argument("depth must be at least 1");
  std::vector<std::string> gens;
  for (const auto& v : vertices_at_depth(n)) gens.push_back(generator_name(v));
  std::vector<Word> rels;
  for (int d = n; d >= 1; --d)
    for (const auto& v : vertices_at_depth(d)) rels.push_back(expand_to_level(v, n).power(generator_order(v)));
  return Presentation(std::move(gens), std::move(rels));
}

std::vector<Word> sample_alternating_words(int n, int syllable_count, std::size_t count, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("depth must be at least 1");
  if (syllable_count < 1) throw std::invalid_argument("syllable_count must be at least 1");
  // Vertices of each root subtree.
  std::vector<VertexAddress> subtree[2];
  for (const auto& v : vertices_up_to(n)) subtree[v.root_branch() - 1].push_back(v);

  Rng rng = Rng(seed).split("alternating-words");
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Syllable> syl;
    int branch = static_cast<int>(rng.uniform_int(0, 1));
    for (int s = 0; s < syllable_count; ++s) {
      const auto& pool = subtree[branch];
      const auto& v = pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(pool.size()) - 1))];
      int k = static_cast<int>(rng.uniform_int(1, generator_order(v) - 1));
      syl.push_back({generator_name(v), k});
      branch = 1 - branch;
    }
    out.emplace_back(std::move(syl));
  }
  return out;
}

bool is_alternating_normal_form(const Word& w, int n) {
  int previous = 0;
  for (const auto& s : w.syllables()) {
    VertexAddress v;
    try {
      v = vertex_of_generator(s.generator);
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (v.depth() < 1 || v.depth() > n) return false;
    if (s.exponent < 1 || s.exponent >= generator_order(v)) return false;
    if (v.root_branch() == previous) return false;
    previous = v.root_branch();
  }
  return !w.empty();
}

MnPresentation mn_presentation(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  Presentation p({"a", "b", "c"}, {Word{{{"b", 1}, {"c", -n}}}});
  Word a = Word::letter("a");
  return {std::move(p), commutator(a, Word::letter("b")), commutator(a, Word::letter("c", n))};
}

}  // namespace treegroups

#include "treegroups/finite_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace treegroups {

FiniteGroup::FiniteGroup(std::string name, Table table) : name_(std::move(name)), table_(std::move(table)) {
  const Eigen::Index n = table_.rows();
  if (n < 1 || table_.cols() != n) throw std::invalid_argument(name_ + ": table must be square and nonempty");
  if ((table_.array() < 0).any() || (table_.array() >= n).any())
    throw std::invalid_argument(name_ + ": table entry out of range");
  for (Eigen::Index x = 0; x < n; ++x)
    if (table_(0, x) != x || table_(x, 0) != x) throw std::invalid_argument(name_ + ": index 0 is not the identity");

  inverses_.assign(static_cast<std::size_t>(n), -1);
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = 0; y < n; ++y)
      if (table_(x, y) == 0) {
        inverses_[static_cast<std::size_t>(x)] = static_cast<Element>(y);
        break;
      }
    if (inverses_[static_cast<std::size_t>(x)] < 0) throw std::invalid_argument(name_ + ": missing inverse");
  }
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y)
      for (Eigen::Index z = 0; z < n; ++z)
        if (table_(table_(x, y), z) != table_(x, table_(y, z)))
          throw std::invalid_argument(name_ + ": not associative");

  orders_.assign(static_cast<std::size_t>(n), 0);
  for (Eigen::Index x = 0; x < n; ++x) {
    int k = 1;
    Element acc = static_cast<Element>(x);
    while (acc != 0) {
      acc = table_(acc, x);
      ++k;
    }
    orders_[static_cast<std::size_t>(x)] = k;
  }
}

Element FiniteGroup::power(Element x, long k) const {
  const long m = element_order(x);
  long e = ((k % m) + m) % m;
  Element acc = identity();
  for (long i = 0; i < e; ++i) acc = multiply(acc, x);
  return acc;
}

bool FiniteGroup::is_abelian() const { return table_ == table_.transpose(); }

int element_order(const FiniteGroup& h, Element x) {
  if (x < 0 || x >= h.order()) throw std::out_of_range("element index out of range");
  return h.element_order(x);
}

namespace {

std::vector<char> closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<Element> frontier{FiniteGroup::identity()};
  in[0] = 1;
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element s : gens) {
      Element y = g.multiply(x, s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        frontier.push_back(y);
      }
    }
  }
  return in;
}

// Builds a FiniteGroup from an element list (identity first) and a product on
// the element representation.
template <typename T, typename Mul>
FiniteGroup from_elements(std::string name, const std::vector<T>& elements, Mul mul) {
  std::map<T, Element> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Element>(i));
  const auto n = static_cast<Eigen::Index>(elements.size());
  FiniteGroup::Table table(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      auto it = index.find(mul(elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]));
      if (it == index.end()) throw std::logic_error(name + ": product leaves the element set");
      table(i, j) = it->second;
    }
  return FiniteGroup(std::move(name), std::move(table));
}

int mod(int a, int m) { return ((a % m) + m) % m; }

// Extends a map on generators to a homomorphism g -> h by breadth-first
// closure; returns false if the assignment is inconsistent.
bool extend_map(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& gens,
                const std::vector<Element>& images, std::vector<Element>& map) {
  map.assign(static_cast<std::size_t>(g.order()), -1);
  map[0] = 0;
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element y = g.multiply(x, gens[i]);
      Element fy = h.multiply(map[static_cast<std::size_t>(x)], images[i]);
      auto& slot = map[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = fy;
        frontier.push_back(y);
      } else if (slot != fy) {
        return false;
      }
    }
  }
  return true;
}

bool is_bijection(const std::vector<Element>& map) {
  std::vector<char> hit(map.size(), 0);
  for (Element y : map) {
    if (y < 0 || hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = 1;
  }
  return true;
}

// Enumerates bijective homomorphisms g -> h (h.order() == g.order()); stops
// early when `visit` returns false.
template <typename Visit>
void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h, Visit visit) {
  const auto gens = generating_set(g);
  std::vector<Element> images(gens.size(), 0);
  std::vector<Element> map;
  bool keep_going = true;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (!keep_going) return;
    if (i == gens.size()) {
      if (extend_map(g, h, gens, images, map) && is_bijection(map)) keep_going = visit(map);
      return;
    }
    for (Element y = 0; y < h.order() && keep_going; ++y) {
      if (h.element_order(y) != g.element_order(gens[i])) continue;
      images[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> profile(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Element x = 0; x < g.order(); ++x) ++profile[static_cast<std::size_t>(g.element_order(x))];
  return profile;
}

int center_size(const FiniteGroup& g) {
  int n = 0;
  for (Element x = 0; x < g.order(); ++x)
    if (g.table().row(x) == g.table().col(x).transpose()) ++n;
  return n;
}

}  // namespace

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  auto in = closure(g, gens);
  for (Element x = 1; x < g.order(); ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    in = closure(g, gens);
  }
  return gens;
}

FiniteGroup cyclic_group(int k) {
  if (k < 1) throw std::invalid_argument("cyclic_group: k must be positive");
  std::vector<int> elems(static_cast<std::size_t>(k));
  std::iota(elems.begin(), elems.end(), 0);
  return from_elements("C" + std::to_string(k), elems, [k](int a, int b) { return (a + b) % k; });
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::pair<Element, Element>> elems;
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < b.order(); ++y) elems.emplace_back(x, y);
  return from_elements(a.name() + "x" + b.name(), elems, [&](const auto& p, const auto& q) {
    return std::pair{a.multiply(p.first, q.first), b.multiply(p.second, q.second)};
  });
}

FiniteGroup dihedral_group(int k) {
  if (k < 1) throw std::invalid_argument("dihedral_group: k must be positive");
  // (r, s) = rotation^r reflection^s, with s r = r^-1 s.
  std::vector<std::pair<int, int>> elems;
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < k; ++r) elems.emplace_back(r, s);
  return from_elements("D" + std::to_string(k), elems, [k](const auto& p, const auto& q) {
    int r = p.second == 0 ? p.first + q.first : p.first - q.first;
    return std::pair{mod(r, k), (p.second + q.second) % 2};
  });
}

FiniteGroup dicyclic_group(int k) {
  if (k < 1) throw std::invalid_argument("dicyclic_group: k must be positive");
  // a^i x^j with a^{2k} = 1, x^2 = a^k, x a x^-1 = a^-1.
  const int m = 2 * k;
  std::vector<std::pair<int, int>> elems;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < m; ++i) elems.emplace_back(i, j);
  std::string name = k == 2 ? "Q8" : "Dic" + std::to_string(k);
  return from_elements(name, elems, [m, k](const auto& p, const auto& q) {
    // a^i x^j a^u x^v = a^{i + (-1)^j u} x^j x^v
    int i = p.first + (p.second == 0 ? q.first : -q.first);
    int j = p.second + q.second;
    if (j == 2) {
      i += k;
      j = 0;
    }
    return std::pair{mod(i, m), j};
  });
}

FiniteGroup alternating_group_a4() {
  using Perm = std::array<int, 4>;
  std::vector<Perm> elems;
  Perm p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    if (inversions % 2 == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_elements("A4", elems, [](const Perm& a, const Perm& b) {
    Perm c{};
    for (std::size_t i = 0; i < 4; ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  });
}

FiniteGroup semidirect_with_cyclic(const FiniteGroup& n, const std::vector<Element>& action, int k,
                                   std::string name) {
  if (static_cast<int>(action.size()) != n.order()) throw std::invalid_argument("action has wrong size");
  // action^i as tables
  std::vector<std::vector<Element>> powers{std::vector<Element>(action.size())};
  std::iota(powers[0].begin(), powers[0].end(), 0);
  for (int i = 1; i <= k; ++i) {
    std::vector<Element> next(action.size());
    for (std::size_t x = 0; x < action.size(); ++x)
      next[x] = action[static_cast<std::size_t>(powers.back()[x])];
    powers.push_back(std::move(next));
  }
  if (powers[static_cast<std::size_t>(k)] != powers[0])
    throw std::invalid_argument("action order does not divide k");

  std::vector<std::pair<Element, int>> elems;
  for (int i = 0; i < k; ++i)
    for (Element x = 0; x < n.order(); ++x) elems.emplace_back(x, i);
  return from_elements(std::move(name), elems, [&](const auto& p, const auto& q) {
    Element twisted = powers[static_cast<std::size_t>(p.second)][static_cast<std::size_t>(q.first)];
    return std::pair{n.multiply(p.first, twisted), (p.second + q.second) % k};
  });
}

std::vector<std::vector<Element>> automorphisms(const FiniteGroup& g) {
  std::vector<std::vector<Element>> out;
  for_each_isomorphism(g, g, [&](const std::vector<Element>& map) {
    out.push_back(map);
    return true;
  });
  return out;
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  if (g.is_abelian() != h.is_abelian()) return false;
  if (order_profile(g) != order_profile(h)) return false;
  if (center_size(g) != center_size(h)) return false;
  bool found = false;
  for_each_isomorphism(g, h, [&](const std::vector<Element>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace treegroups

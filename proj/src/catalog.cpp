#include <stdexcept>

#include "treegroups/finite_group.hpp"

namespace treegroups {

namespace {

// Order of a permutation under composition.
int permutation_order(const std::vector<Element>& p) {
  std::vector<Element> acc = p;
  int k = 1;
  auto is_identity = [](const std::vector<Element>& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != static_cast<Element>(i)) return false;
    return true;
  };
  while (!is_identity(acc)) {
    for (auto& x : acc) x = p[static_cast<std::size_t>(x)];
    ++k;
  }
  return k;
}

void add_if_new(std::vector<FiniteGroup>& found, FiniteGroup candidate) {
  for (const auto& g : found)
    if (are_isomorphic(g, candidate)) return;
  found.push_back(std::move(candidate));
}

}  // namespace

std::vector<FiniteGroup> catalog_groups(int max_order) {
  if (max_order < 1) throw std::invalid_argument("catalog_groups: max_order must be positive");
  if (max_order > 16) throw std::invalid_argument("catalog_groups: max_order must be at most 16");

  std::vector<FiniteGroup> catalog;
  for (int m = 1; m <= max_order; ++m) {
    std::vector<FiniteGroup> of_order;
    add_if_new(of_order, cyclic_group(m));

    const std::size_t smaller = catalog.size();
    for (std::size_t i = 0; i < smaller; ++i)
      for (std::size_t j = i; j < smaller; ++j) {
        const auto& a = catalog[i];
        const auto& b = catalog[j];
        if (a.order() > 1 && b.order() > 1 && a.order() * b.order() == m)
          add_if_new(of_order, direct_product(a, b));
      }

    if (m % 2 == 0 && m >= 4) add_if_new(of_order, dihedral_group(m / 2));
    if (m % 4 == 0 && m >= 8) add_if_new(of_order, dicyclic_group(m / 4));
    if (m == 12) add_if_new(of_order, alternating_group_a4());

    // Split extensions N x| C_k with a nontrivial action; needed for the
    // remaining classes of order 16.
    for (std::size_t i = 0; i < smaller; ++i) {
      const auto& n = catalog[i];
      if (n.order() < 2 || m % n.order() != 0) continue;
      const int k = m / n.order();
      if (k < 2) continue;
      int variant = 0;
      for (const auto& phi : automorphisms(n)) {
        const int ord = permutation_order(phi);
        if (ord == 1 || k % ord != 0) continue;
        add_if_new(of_order, semidirect_with_cyclic(n, phi, k,
                                                    n.name() + ":C" + std::to_string(k) + "#" +
                                                        std::to_string(variant++)));
      }
    }

    for (auto& g : of_order) catalog.push_back(std::move(g));
  }
  return catalog;
}

}  // namespace treegroups

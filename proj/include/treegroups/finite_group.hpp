#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace treegroups {

/// Elements of a FiniteGroup are indices 0..order-1; index 0 is the identity.
using Element = int;

/// Group given by its multiplication table, table(x, y) = x*y.
///
/// The constructor checks the group law exhaustively (closure, identity at
/// index 0, inverses, associativity), so any instance is a valid group.
class FiniteGroup {
 public:
  using Table = Eigen::Matrix<Element, Eigen::Dynamic, Eigen::Dynamic>;

  FiniteGroup(std::string name, Table table);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.rows()); }
  const Table& table() const { return table_; }

  static constexpr Element identity() { return 0; }
  Element multiply(Element x, Element y) const { return table_(x, y); }
  Element inverse(Element x) const { return inverses_[static_cast<std::size_t>(x)]; }
  /// x^k for any integer k.
  Element power(Element x, long k) const;
  int element_order(Element x) const { return orders_[static_cast<std::size_t>(x)]; }
  bool is_abelian() const;

 private:
  std::string name_;
  Table table_;
  std::vector<Element> inverses_;
  std::vector<int> orders_;
};

int element_order(const FiniteGroup& h, Element x);

/// Smallest set of elements (greedy, by index) generating the group.
std::vector<Element> generating_set(const FiniteGroup& g);

// Constructors. Names follow the usual conventions: C_k cyclic, D_k dihedral
// of order 2k, Dic_k dicyclic of order 4k (Dic_2 is called Q8).
FiniteGroup cyclic_group(int k);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup dihedral_group(int k);
FiniteGroup dicyclic_group(int k);
FiniteGroup alternating_group_a4();
/// N x| C_k where the generator of C_k acts on N by `action` (a permutation
/// of N's elements that is an automorphism with action^k = id).
FiniteGroup semidirect_with_cyclic(const FiniteGroup& n, const std::vector<Element>& action, int k,
                                   std::string name);

/// All automorphisms of g, each as the image permutation of its elements.
std::vector<std::vector<Element>> automorphisms(const FiniteGroup& g);

/// Backtracking search for an isomorphism, after cheap invariant checks.
bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// One representative per isomorphism class of order <= max_order (max 16).
std::vector<FiniteGroup> catalog_groups(int max_order);

}  // namespace treegroups

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "treegroups/finite_group.hpp"
#include "treegroups/presentation.hpp"

namespace treegroups {

/// Assignment of one target element per presentation generator. The target
/// group is referenced, not owned, and must outlive the homomorphism.
class Homomorphism {
 public:
  Homomorphism(const FiniteGroup& target, std::shared_ptr<const std::vector<std::string>> domain,
               std::vector<Element> images);

  const FiniteGroup& target() const { return *target_; }
  const std::vector<std::string>& domain() const { return *domain_; }
  const std::vector<Element>& images() const { return images_; }
  /// Image of a named generator; throws std::out_of_range for unknown names.
  Element image(const std::string& generator) const;
  bool is_trivial() const;

 private:
  const FiniteGroup* target_;
  std::shared_ptr<const std::vector<std::string>> domain_;
  std::vector<Element> images_;
};

Element evaluate(const Word& w, const Homomorphism& phi);

struct EnumerationOptions {
  /// Worker threads splitting the top of the search tree. The result is
  /// identical (same order) for any worker count.
  unsigned workers = 1;
};

/// All homomorphisms P -> H, by depth-first search over generators.
/// Single-syllable relators g^k restrict candidate images up front; every
/// other relator is checked as soon as its last generator is assigned.
std::vector<Homomorphism> enumerate_homs(const Presentation& p, const FiniteGroup& h,
                                         EnumerationOptions options = {});

struct CommutatorPowerReport {
  std::size_t pairs_checked = 0;
  std::vector<std::pair<Element, Element>> failures;
};

/// Checks [a, c^|H|] = 1 for all pairs (a, c) in H x H.
CommutatorPowerReport commutator_power_certificate(const FiniteGroup& h);

}  // namespace treegroups

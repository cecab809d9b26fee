#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treegroups/word.hpp"

namespace treegroups {

/// Finitely presented group. Every generator occurring in a relator must be
/// declared; this is checked on construction.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  /// Index of a generator, or -1.
  int index_of(std::string_view generator) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

// Text format, one item per line:
//   gens: a b c
//   rel: a^4
//   rel: b c^-2
// Blank lines and lines starting with '#' are ignored.
std::string format_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);

}  // namespace treegroups

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace treegroups {

/// A generator raised to a nonzero power.
struct Syllable {
  std::string generator;
  int exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Word in a free group, stored as a sequence of syllables.
///
/// Construction keeps the syllables as given; `reduce` brings a word to its
/// freely reduced form (no zero exponents, no two adjacent syllables on the
/// same generator). Products and powers always return reduced words.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {}

  static Word letter(std::string generator, int exponent = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t syllable_count() const { return syllables_.size(); }
  /// Sum of |exponent| over all syllables.
  long letter_count() const;

  Word inverse() const;
  Word power(int k) const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

Word reduce(const Word& w);

/// x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);

/// Whitespace separated tokens `name` or `name^k`; the empty word prints as "".
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

bool is_valid_generator_name(std::string_view name);

}  // namespace treegroups

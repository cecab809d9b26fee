#include "treegroups/word.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace treegroups {

Word Word::letter(std::string generator, int exponent) {
  if (exponent == 0) return Word{};
  return Word{{Syllable{std::move(generator), exponent}}};
}

long Word::letter_count() const {
  long n = 0;
  for (const auto& s : syllables_) n += std::labs(s.exponent);
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
  for (auto& s : out) s.exponent = -s.exponent;
  return Word{std::move(out)};
}

Word Word::power(int k) const {
  if (k < 0) return inverse().power(-k);
  std::vector<Syllable> out;
  out.reserve(syllables_.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), syllables_.begin(), syllables_.end());
  return reduce(Word{std::move(out)});
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<Syllable> out = lhs.syllables_;
  out.insert(out.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  return reduce(Word{std::move(out)});
}

Word reduce(const Word& w) {
  std::vector<Syllable> stack;
  stack.reserve(w.syllable_count());
  for (const auto& s : w.syllables()) {
    if (s.exponent == 0) continue;
    if (!stack.empty() && stack.back().generator == s.generator) {
      stack.back().exponent += s.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return Word{std::move(stack)};
}

Word commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.generator;
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  for (char c : name.substr(1))
    if (!alpha(c) && !digit(c) && c != '_') return false;
  return true;
}

Word parse_word(std::string_view text) {
  std::vector<Syllable> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    std::string_view token = text.substr(i, j - i);
    i = j;

    int exponent = 1;
    std::string_view name = token;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view exp = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
      if (ec != std::errc{} || ptr != exp.data() + exp.size() || exp.empty())
        throw std::invalid_argument("bad exponent in token '" + std::string(token) + "'");
    }
    if (!is_valid_generator_name(name))
      throw std::invalid_argument("bad generator name '" + std::string(name) + "'");
    if (exponent != 0) out.push_back({std::string(name), exponent});
  }
  return Word{std::move(out)};
}

}  // namespace treegroups

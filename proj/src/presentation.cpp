#include "treegroups/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace treegroups {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!is_valid_generator_name(g)) throw std::invalid_argument("bad generator name '" + g + "'");
    if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator '" + g + "'");
  }
  for (const auto& r : relators_)
    for (const auto& s : r.syllables())
      if (!seen.count(s.generator))
        throw std::invalid_argument("relator uses undeclared generator '" + s.generator + "'");
}

int Presentation::index_of(std::string_view generator) const {
  auto it = std::find(generators_.begin(), generators_.end(), generator);
  return it == generators_.end() ? -1 : static_cast<int>(it - generators_.begin());
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& g : p.generators()) out << ' ' << g;
  out << '\n';
  for (const auto& r : p.relators()) out << "rel: " << to_string(r) << '\n';
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> gens;
  std::vector<Word> rels;
  bool have_gens = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": missing ':'");
    std::string_view key = trim(line.substr(0, colon));
    std::string_view body = trim(line.substr(colon + 1));
    if (key == "gens") {
      if (have_gens) throw std::invalid_argument("line " + std::to_string(line_no) + ": repeated gens");
      have_gens = true;
      const Word listed = parse_word(body);
      for (const auto& s : listed.syllables()) {
        if (s.exponent != 1)
          throw std::invalid_argument("line " + std::to_string(line_no) + ": exponent in gens list");
        gens.push_back(s.generator);
      }
    } else if (key == "rel") {
      rels.push_back(parse_word(body));
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown key '" +
                                  std::string(key) + "'");
    }
  }
  if (!have_gens) throw std::invalid_argument("presentation has no gens line");
  return Presentation(std::move(gens), std::move(rels));
}

}  // namespace treegroups

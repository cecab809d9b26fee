#include "treegroups/homomorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace treegroups {

Homomorphism::Homomorphism(const FiniteGroup& target, std::shared_ptr<const std::vector<std::string>> domain,
                           std::vector<Element> images)
    : target_(&target), domain_(std::move(domain)), images_(std::move(images)) {
  if (!domain_ || domain_->size() != images_.size())
    throw std::invalid_argument("homomorphism: one image per generator required");
}

Element Homomorphism::image(const std::string& generator) const {
  auto it = std::find(domain_->begin(), domain_->end(), generator);
  if (it == domain_->end()) throw std::out_of_range("unknown generator '" + generator + "'");
  return images_[static_cast<std::size_t>(it - domain_->begin())];
}

bool Homomorphism::is_trivial() const {
  return std::all_of(images_.begin(), images_.end(), [](Element x) { return x == FiniteGroup::identity(); });
}

Element evaluate(const Word& w, const Homomorphism& phi) {
  const auto& h = phi.target();
  Element acc = FiniteGroup::identity();
  for (const auto& s : w.syllables()) acc = h.multiply(acc, h.power(phi.image(s.generator), s.exponent));
  return acc;
}

namespace {

struct CompiledRelator {
  std::vector<std::pair<int, int>> syllables;  // (generator index, exponent)
};

class Search {
 public:
  Search(const Presentation& p, const FiniteGroup& h) : h_(h), n_(p.generators().size()) {
    candidates_.resize(n_);
    std::vector<std::vector<char>> allowed(n_, std::vector<char>(static_cast<std::size_t>(h.order()), 1));
    checks_.resize(n_);

    for (const auto& r : p.relators()) {
      Word red = reduce(r);
      if (red.empty()) continue;
      CompiledRelator c;
      int last = -1;
      for (const auto& s : red.syllables()) {
        int idx = p.index_of(s.generator);
        c.syllables.emplace_back(idx, s.exponent);
        last = std::max(last, idx);
      }
      if (c.syllables.size() == 1) {
        auto [g, k] = c.syllables.front();
        for (Element x = 0; x < h.order(); ++x)
          if (h.power(x, k) != FiniteGroup::identity()) allowed[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)] = 0;
      } else {
        checks_[static_cast<std::size_t>(last)].push_back(std::move(c));
      }
    }
    for (std::size_t g = 0; g < n_; ++g)
      for (Element x = 0; x < h.order(); ++x)
        if (allowed[g][static_cast<std::size_t>(x)]) candidates_[g].push_back(x);
  }

  std::size_t generator_count() const { return n_; }
  const std::vector<Element>& candidates(std::size_t g) const { return candidates_[g]; }

  // Enumerates completions with generator 0 fixed to `first` (or all, if the
  // presentation has no generators).
  std::vector<std::vector<Element>> run_from(Element first) const {
    std::vector<std::vector<Element>> out;
    std::vector<Element> images(n_, 0);
    if (n_ == 0) {
      out.push_back(images);
      return out;
    }
    images[0] = first;
    if (!consistent(0, images)) return out;
    descend(1, images, out);
    return out;
  }

 private:
  bool consistent(std::size_t level, const std::vector<Element>& images) const {
    for (const auto& c : checks_[level]) {
      Element acc = FiniteGroup::identity();
      for (auto [g, k] : c.syllables) acc = h_.multiply(acc, h_.power(images[static_cast<std::size_t>(g)], k));
      if (acc != FiniteGroup::identity()) return false;
    }
    return true;
  }

  void descend(std::size_t level, std::vector<Element>& images, std::vector<std::vector<Element>>& out) const {
    if (level == n_) {
      out.push_back(images);
      return;
    }
    for (Element x : candidates_[level]) {
      images[level] = x;
      if (consistent(level, images)) descend(level + 1, images, out);
    }
  }

  const FiniteGroup& h_;
  std::size_t n_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<std::vector<CompiledRelator>> checks_;
};

}  // namespace

std::vector<Homomorphism> enumerate_homs(const Presentation& p, const FiniteGroup& h, EnumerationOptions options) {
  Search search(p, h);
  auto domain = std::make_shared<const std::vector<std::string>>(p.generators());

  std::vector<Element> tops = search.generator_count() == 0 ? std::vector<Element>{0} : search.candidates(0);
  std::vector<std::vector<std::vector<Element>>> parts(tops.size());

  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(tops.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < tops.size(); ++i) parts[i] = search.run_from(tops[i]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < tops.size(); i += workers) parts[i] = search.run_from(tops[i]);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<Homomorphism> out;
  for (auto& part : parts)
    for (auto& images : part) out.emplace_back(h, domain, std::move(images));
  return out;
}

CommutatorPowerReport commutator_power_certificate(const FiniteGroup& h) {
  CommutatorPowerReport report;
  for (Element a = 0; a < h.order(); ++a)
    for (Element c = 0; c < h.order(); ++c) {
      Element cp = h.power(c, h.order());
      Element comm = h.multiply(h.multiply(a, cp), h.multiply(h.inverse(a), h.inverse(cp)));
      ++report.pairs_checked;
      if (comm != FiniteGroup::identity()) report.failures.emplace_back(a, c);
    }
  return report;
}

}  // namespace treegroups

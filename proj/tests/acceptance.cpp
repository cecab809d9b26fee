// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "treegroups/builder.hpp"
#include "treegroups/homomorphism.hpp"
#include "treegroups/io.hpp"
#include "treegroups/tree_scheme.hpp"
#include "treegroups/verify.hpp"
#include "treegroups/word.hpp"

using namespace treegroups;

namespace {

using Cr = Complex<Real>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

const RepTable& depth3() {
  static const RepTable rep = build(3);
  return rep;
}

std::size_t count_homs(const std::vector<QuotientRow>& rows, int n, const std::string& g) {
  for (const auto& r : rows)
    if (r.n == n && r.group == g) return r.hom_count;
  return 0;
}

Outcome quotient_counts() {
  const auto t0 = Clock::now();
  const auto rows = quotient_experiment(3, catalog_groups(12));
  struct Want {
    int n;
    const char* group;
    std::size_t count;
  };
  const Want wants[] = {{1, "C4", 16}, {1, "A4", 16}, {2, "C5", 25}, {2, "C10", 25}, {3, "C5", 1}, {3, "C6", 1296}};
  Outcome out{true, ""};
  for (const auto& w : wants) {
    const auto got = count_homs(rows, w.n, w.group);
    // the full presentation carries every interior generator too; its hom set is in bijection
    std::size_t full = 0;
    for (const auto& h : catalog_groups(12))
      if (h.name() == w.group) full = enumerate_homs(presentation_full(w.n), h).size();
    out.pass = out.pass && got == w.count && full == w.count;
    out.detail += "G" + std::to_string(w.n) + "->" + w.group + "=" + std::to_string(got) + "/" + std::to_string(full) + " ";
  }
  for (const auto& r : rows)
    if (r.n == 2 && r.group == "C5") {
      out.pass = out.pass && r.nontrivial_count == 24;
      out.detail += "nontrivial(G2->C5)=" + std::to_string(r.nontrivial_count) + " ";
    }
  const double t = seconds_since(t0);
  out.pass = out.pass && t < 60;
  out.detail += "time=" + std::to_string(t) + "s";
  return out;
}

Outcome coprime_quotients() {
  const auto rows = quotient_experiment(3, catalog_groups(12));
  std::size_t flagged = 0, exceptions = 0;
  for (const auto& r : rows) {
    if (!r.gcd_flag) continue;
    ++flagged;
    if (r.nontrivial_count != 0 || r.hom_count != 1) ++exceptions;
  }
  return {flagged > 0 && exceptions == 0,
          "coprime (n,H) pairs=" + std::to_string(flagged) + " exceptions=" + std::to_string(exceptions)};
}

Outcome representation_build() {
  const auto t0 = Clock::now();
  const auto& rep = depth3();
  const double t = seconds_since(t0);
  double max_L = 0;
  for (int k = 2; k <= 3; ++k) max_L = std::max(max_L, rep.level_L(k).value_or(1e9));
  const auto rel = check_relators(rep, 1e-8);
  const auto nest = check_nesting(rep, 1e-6);
  CertificateParams p;
  p.word_radius_old = 3;
  p.word_radius_new = 6;
  bool pi_pass = true;
  double pi_min = 1e300;
  for (int k = 2; k <= 3; ++k) {
    const auto pi = check_precise_invariance(rep, k, p);
    pi_pass = pi_pass && pi.pass;
    pi_min = std::min(pi_min, pi.min_margin);
  }
  const bool ok = max_L <= 64 && rel.max_residual <= 1e-8 && nest.pass && nest.min_margin >= 1e-6 && pi_pass &&
                  pi_min >= 1e-6 && t < 300;
  char buf[256];
  std::snprintf(buf, sizeof buf, "max L=%g residual=%.3g nesting=%.3g invariance=%.3g build=%.2fs", max_L,
                rel.max_residual, nest.min_margin, pi_min, t);
  return {ok, buf};
}

Outcome separation() {
  const auto sep = check_separation_words(depth3(), 500, 8, 2024);
  char buf[128];
  std::snprintf(buf, sizeof buf, "words=%zu min distance from +-I=%.4g", sep.words_checked, sep.min_separation);
  return {sep.words_checked == 500 && sep.min_separation >= 1e-6, buf};
}

MoebiusMap rotation_about(const Real& angle, const MoebiusMap& frame) {
  const MoebiusMap r(std::polar(Real(1), angle / 2), Cr(0), Cr(0), std::polar(Real(1), -angle / 2));
  return frame.inverse() * r * frame;
}

Outcome jorgensen() {
  const auto scan = jorgensen_scan(depth3(), 10000, 2024);
  const MoebiusMap a = rotation_about(Real(0.3), MoebiusMap::identity());
  const MoebiusMap b = rotation_about(Real(0.3), MoebiusMap(Cr(1), Cr(-1), Cr(1), Cr(1)));
  const auto toy = jorgensen_scan({{a, b}});
  char buf[160];
  std::snprintf(buf, sizeof buf, "pairs=%zu violations=%zu min=%.4g toy flagged=%s", scan.pairs_scanned,
                scan.violations.size(), scan.min_value, toy.violations.size() == 1 ? "yes" : "no");
  return {scan.pairs_scanned == 10000 && scan.violations.empty() && toy.violations.size() == 1, buf};
}

Outcome commutator_example() {
  std::size_t groups = 0, pairs = 0, failures = 0;
  for (const auto& h : catalog_groups(16)) {
    const auto r = commutator_power_certificate(h);
    ++groups;
    pairs += r.pairs_checked;
    failures += r.failures.size();
  }
  bool witnesses = true;
  for (int n = 1; n <= 10; ++n)
    witnesses = witnesses && !reduce(commutator(Word::letter("a"), Word::letter("c", n))).empty();
  return {failures == 0 && witnesses, "groups=" + std::to_string(groups) + " pairs=" + std::to_string(pairs) +
                                          " failures=" + std::to_string(failures) +
                                          " witnesses nonempty=" + (witnesses ? "yes" : "no")};
}

Outcome limit_sets() {
  const auto& rep = depth3();
  double worst = 0;
  for (const auto& v : vertices_up_to(2)) {
    const auto lp = limit_points(rep, v, 10000, 30, 7);
    worst = std::max(worst, lp.max_distance.value_or(1e9));
  }
  const auto a = limit_points(rep, std::nullopt, 100000, 30, 7);
  const auto b = limit_points(rep, std::nullopt, 100000, 30, 7);
  const bool same = render_ppm(a.points, 512, 512, nullptr) == render_ppm(b.points, 512, 512, nullptr);
  char buf[128];
  std::snprintf(buf, sizeof buf, "worst vertex distance=%.3g ppm byte-identical=%s", worst, same ? "yes" : "no");
  return {worst <= 1e-3 && same, buf};
}

MoebiusMap pairing(double c, double r) { return MoebiusMap(Cr(Real(c)), Cr(Real(r * r + c * c)), Cr(1), Cr(Real(c))); }

StackInput schottky_toy(double c) {
  return {{pairing(c, 0.3), MoebiusMap(Cr(0, Real(c)), Cr(Real(0.09 - c * c)), Cr(1), Cr(0, Real(c)))},
          Disk::inside(Cr(0), Real(1))};
}

Outcome stacking() {
  const std::vector<StackInput> toys{schottky_toy(0.5), schottky_toy(0.55), schottky_toy(0.6)};
  const auto apart = stack_parabolic(toys, 1.0);
  const auto touching = stack_parabolic(toys, 0.0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "gap 1: margin=%.3g pass=%d; touching: margin=%.3g pass=%d", apart.min_margin,
                apart.pass, touching.min_margin, touching.pass);
  return {apart.pass && apart.min_margin > 0 && !touching.pass && touching.min_margin <= 0, buf};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"quotient counts", quotient_counts},
      {"coprime quotients are trivial", coprime_quotients},
      {"depth-3 representation", representation_build},
      {"alternating words separated from identity", separation},
      {"Jorgensen falsifier", jorgensen},
      {"commutator example", commutator_example},
      {"limit sets", limit_sets},
      {"stacking combiner", stacking},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

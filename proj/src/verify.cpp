#include "treegroups/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "treegroups/homomorphism.hpp"
#include "treegroups/rng.hpp"
#include "treegroups/triangle.hpp"

namespace treegroups {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxListedFailures = 50;

struct Letter {
  std::string name;
  int exponent;
  MoebiusMap m;
};

// Letters g, g^-1 for each generator; letter i and i ^ 1 are inverse.
std::vector<Letter> letters_for(const std::vector<std::pair<std::string, MoebiusMap>>& gens) {
  std::vector<Letter> out;
  for (const auto& [name, m] : gens) {
    out.push_back({name, 1, m});
    out.push_back({name, -1, m.inverse()});
  }
  return out;
}

std::vector<std::pair<std::string, MoebiusMap>> generators_up_to(const RepTable& rep, int depth) {
  std::vector<std::pair<std::string, MoebiusMap>> gens;
  for (const auto& v : vertices_up_to(depth)) gens.emplace_back(generator_name(v), rep.matrix(v));
  return gens;
}

std::string spell(const std::vector<Letter>& letters, const std::vector<int>& idx) {
  std::vector<Syllable> syl;
  for (int i : idx) syl.push_back({letters[static_cast<std::size_t>(i)].name, letters[static_cast<std::size_t>(i)].exponent});
  const auto s = to_string(reduce(Word(std::move(syl))));
  return s.empty() ? "1" : s;
}

// Depth-first walk over the freely reduced words of length <= radius,
// including the empty word, with their matrices.
void for_each_reduced_word(const std::vector<Letter>& letters, int radius,
                           const std::function<void(const std::vector<int>&, const MoebiusMap&)>& visit) {
  std::vector<int> word;
  std::function<void(const MoebiusMap&)> rec = [&](const MoebiusMap& g) {
    visit(word, g);
    if (static_cast<int>(word.size()) == radius) return;
    for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
      if (!word.empty() && (word.back() ^ 1) == i) continue;
      word.push_back(i);
      rec(g * letters[static_cast<std::size_t>(i)].m);
      word.pop_back();
    }
  };
  rec(MoebiusMap::identity());
}

bool is_power_of(const MoebiusMap& g, const std::vector<MoebiusMap>& powers, double tol) {
  const Real scale = std::max<Real>(1, max_abs_entry(g));
  return std::any_of(powers.begin(), powers.end(),
                     [&](const MoebiusMap& p) { return projective_distance(g, p) <= tol * scale; });
}

std::vector<MoebiusMap> all_powers(const MoebiusMap& m, int order) {
  std::vector<MoebiusMap> out{MoebiusMap::identity()};
  for (int j = 1; j < order; ++j) out.push_back(out.back() * m);
  return out;
}

void note_failure(std::vector<std::string>& failures, const std::string& what) {
  if (failures.size() < kMaxListedFailures) failures.push_back(what);
}

double distance_to_circle(const GeneralizedCircle<double>& c, std::complex<double> z) {
  if (c.is_line()) return std::abs(c.value(z)) / (2 * std::abs(c.B()));
  return std::abs(std::abs(z - c.center()) - c.radius());
}

}  // namespace

RelatorReport check_relators(const RepTable& rep) { return check_relators(rep, rep.tolerances.identity_tol); }

RelatorReport check_relators(const RepTable& rep, double identity_tol) {
  RelatorReport out;
  const auto pres = presentation_full(rep.depth);
  for (const auto& r : pres.relators()) {
    const double res = to_double(distance_to_identity(evaluate(r, rep)));
    out.max_residual = std::max(out.max_residual, res);
    ++out.relators_checked;
    if (!(res <= identity_tol)) {
      std::ostringstream s;
      s << to_string(r) << " residual " << res;
      note_failure(out.failures, s.str());
    }
  }
  out.pass = out.failures.empty();
  return out;
}

PreciseInvarianceReport check_precise_invariance(const RepTable& rep, int level, const CertificateParams& params) {
  if (level < 2 || level > rep.depth) throw std::invalid_argument("check_precise_invariance: level out of range");
  PreciseInvarianceReport out;
  out.level = level;
  out.min_old = out.min_new = kInf;

  const auto zs = vertices_at_depth(level - 1);
  std::vector<Disk> balls;
  for (const auto& z : zs) {
    const auto& data = rep.vertex(z);
    if (!data.combination_circle) throw std::invalid_argument("check_precise_invariance: missing circle at '" + z.path() + "'");
    balls.push_back({*data.combination_circle, -1});
  }

  const auto old_letters = letters_for(generators_up_to(rep, level - 1));
  for (std::size_t iz = 0; iz < zs.size(); ++iz) {
    const auto& z = zs[iz];
    LeafMargins lm{z, kInf, kInf, 0, 0};
    const MoebiusMap& mz = rep.matrix(z);
    const int order = generator_order(z);

    // Old side, global coordinates.
    const auto powers = all_powers(mz, order);
    for_each_reduced_word(old_letters, params.word_radius_old, [&](const std::vector<int>& w, const MoebiusMap& g) {
      ++lm.old_words;
      const auto img = disk_image(g, balls[iz]);
      auto record = [&](double m, const std::string& against) {
        lm.old_side = std::min(lm.old_side, m);
        if (!(m >= params.margin_floor)) {
          std::ostringstream s;
          s << "level " << level << " z=" << z.path() << " old word " << spell(old_letters, w) << " vs " << against
            << " margin " << m;
          note_failure(out.failures, s.str());
        }
      };
      if (!is_power_of(g, powers, params.identity_tol)) record(to_double(disks_disjoint(img, balls[iz]).margin), "B_" + z.path());
      for (std::size_t jz = 0; jz < zs.size(); ++jz)
        if (jz != iz) record(to_double(disks_disjoint(img, balls[jz]).margin), "B_" + zs[jz].path());
    });

    // New side, computed in the frame of D_z and compared globally.
    const auto& zdata = rep.vertex(z);
    if (!zdata.frame) throw std::invalid_argument("check_precise_invariance: missing frame at '" + z.path() + "'");
    const MoebiusMap& frame = *zdata.frame;
    const MoebiusMap frame_inv = frame.inverse();
    const auto z1 = z.child(1), z2 = z.child(2);
    const auto new_letters = letters_for({{generator_name(z1), frame * rep.matrix(z1) * frame_inv},
                                          {generator_name(z2), frame * rep.matrix(z2) * frame_inv}});
    const auto local_powers = all_powers(frame * mz * frame_inv, order);
    const auto outside = balls[iz].complement();
    const auto outside_local = disk_image(frame, outside);
    for_each_reduced_word(new_letters, params.word_radius_new, [&](const std::vector<int>& w, const MoebiusMap& h) {
      if (is_power_of(h, local_powers, params.identity_tol)) return;
      ++lm.new_words;
      const auto img = disk_image(frame_inv, disk_image(h, outside_local));
      const double m = to_double(disks_disjoint(img, outside).margin);
      lm.new_side = std::min(lm.new_side, m);
      if (!(m >= params.margin_floor)) {
        std::ostringstream s;
        s << "level " << level << " z=" << z.path() << " new word " << spell(new_letters, w) << " margin " << m;
        note_failure(out.failures, s.str());
      }
    });

    out.min_old = std::min(out.min_old, lm.old_side);
    out.min_new = std::min(out.min_new, lm.new_side);
    out.leaves.push_back(lm);
  }
  out.min_margin = std::min(out.min_old, out.min_new);
  out.pass = out.failures.empty();
  return out;
}

NestingReport check_nesting(const RepTable& rep, double margin_floor) {
  NestingReport out;
  out.min_margin = kInf;
  auto record = [&](const std::string& what, const Real& margin) {
    const double m = to_double(margin);
    out.margins.emplace_back(what, m);
    out.min_margin = std::min(out.min_margin, m);
  };
  for (const auto& [v, data] : rep.vertices) {
    if (!data.delta_disk) continue;
    for (int i = 1; i <= 2; ++i) {
      const auto& child = rep.vertex(v.child(i));
      if (child.delta_disk)
        record("Delta_" + child.addr.path() + " in Delta_" + v.path(),
               disks_disjoint(*child.delta_disk, data.delta_disk->complement()).margin);
    }
    const auto& c1 = rep.vertex(v.child(1));
    const auto& c2 = rep.vertex(v.child(2));
    if (c1.delta_disk && c2.delta_disk)
      record("Delta_" + c1.addr.path() + " vs Delta_" + c2.addr.path(),
             disks_disjoint(*c1.delta_disk, *c2.delta_disk).margin);
    if (data.combination_circle) {
      const Disk ball{*data.combination_circle, -1};
      const auto& parent = rep.vertex(v.parent());
      record("Delta_" + v.path() + " in B_" + v.path(), disks_disjoint(*data.delta_disk, ball.complement()).margin);
      record("B_" + v.path() + " in Delta_" + parent.addr.path(),
             disks_disjoint(ball, parent.delta_disk->complement()).margin);
    }
  }
  for (int d = 1; d < rep.depth; ++d) {
    const auto vs = vertices_at_depth(d);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (vs[i].parent() == vs[j].parent()) continue;  // siblings recorded above
        record("Delta_" + vs[i].path() + " vs Delta_" + vs[j].path(),
               disks_disjoint(*rep.vertex(vs[i]).delta_disk, *rep.vertex(vs[j]).delta_disk).margin);
      }
  }
  out.pass = out.min_margin >= margin_floor;
  return out;
}

SeparationReport check_separation_words(const std::vector<Word>& words, const RepTable& rep) {
  SeparationReport out;
  out.min_separation = kInf;
  for (const auto& w : words) {
    const double sep = to_double(distance_to_identity(evaluate(w, rep)));
    out.min_separation = std::min(out.min_separation, sep);
    ++out.words_checked;
    if (!(sep >= rep.tolerances.identity_tol)) {
      std::ostringstream s;
      s << to_string(w) << " separation " << sep;
      note_failure(out.failures, s.str());
    }
  }
  out.pass = out.failures.empty();
  return out;
}

SeparationReport check_separation_words(const RepTable& rep, std::size_t samples, int syllables, std::uint64_t seed) {
  if (syllables < 1) throw std::invalid_argument("check_separation_words: syllables must be >= 1");
  const Rng base = Rng(seed).split("separation");
  std::vector<Word> words;
  const auto per = samples / static_cast<std::size_t>(syllables);
  const auto extra = samples % static_cast<std::size_t>(syllables);
  for (int s = 1; s <= syllables; ++s) {
    const std::size_t count = per + (static_cast<std::size_t>(s) <= extra ? 1 : 0);
    if (count == 0) continue;
    auto batch = sample_alternating_words(rep.depth, s, count, base.split(static_cast<std::uint64_t>(s)).seed());
    words.insert(words.end(), batch.begin(), batch.end());
  }
  return check_separation_words(words, rep);
}

double jorgensen_value(const MoebiusMap& a, const MoebiusMap& b) {
  const auto ta = a.trace();
  const auto tc = (a * b * a.inverse() * b.inverse()).trace();
  return to_double(abs(ta * ta - Real(4)) + abs(tc - Real(2)));
}

bool is_elementary_pair(const MoebiusMap& a, const MoebiusMap& b, double sep) {
  for (const auto& p : fixed_points(a))
    for (const auto& q : fixed_points(b))
      if (chordal_distance(p, q) < sep) return true;
  return false;
}

JorgensenReport jorgensen_scan(const std::vector<std::pair<MoebiusMap, MoebiusMap>>& pairs) {
  JorgensenReport out;
  out.min_value = kInf;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    if (classify(a).kind == MoebiusKind::identity || classify(b).kind == MoebiusKind::identity ||
        is_elementary_pair(a, b)) {
      ++out.skipped_elementary;
      continue;
    }
    ++out.pairs_scanned;
    const double v = jorgensen_value(a, b);
    out.min_value = std::min(out.min_value, v);
    if (v < 1 - 1e-9) out.violations.push_back({"pair " + std::to_string(i) + " A", "pair " + std::to_string(i) + " B", v});
  }
  return out;
}

JorgensenReport jorgensen_scan(const RepTable& rep, std::size_t pair_count, std::uint64_t seed) {
  const auto letters = letters_for(generators_up_to(rep, rep.depth));
  Rng rng = Rng(seed).split("jorgensen");
  auto draw = [&](std::vector<int>& idx) {
    idx.clear();
    const long len = rng.uniform_int(1, 3);
    MoebiusMap g;
    while (static_cast<long>(idx.size()) < len) {
      const int i = static_cast<int>(rng.uniform_int(0, static_cast<long>(letters.size()) - 1));
      if (!idx.empty() && (idx.back() ^ 1) == i) continue;
      idx.push_back(i);
      g = g * letters[static_cast<std::size_t>(i)].m;
    }
    return g;
  };

  JorgensenReport out;
  out.min_value = kInf;
  std::vector<int> wa, wb;
  const std::size_t max_attempts = 50 * pair_count + 100;
  for (std::size_t attempt = 0; attempt < max_attempts && out.pairs_scanned < pair_count; ++attempt) {
    const MoebiusMap a = draw(wa), b = draw(wb);
    if (classify(a).kind == MoebiusKind::identity || classify(b).kind == MoebiusKind::identity ||
        is_elementary_pair(a, b)) {
      ++out.skipped_elementary;
      continue;
    }
    ++out.pairs_scanned;
    const double v = jorgensen_value(a, b);
    out.min_value = std::min(out.min_value, v);
    if (v < 1 - 1e-9) out.violations.push_back({spell(letters, wa), spell(letters, wb), v});
  }
  return out;
}

std::vector<QuotientRow> quotient_experiment(int n_max, const std::vector<FiniteGroup>& catalog, double search_limit,
                                             unsigned workers) {
  if (n_max < 1) throw std::invalid_argument("quotient_experiment: n_max must be >= 1");
  for (const auto& h : catalog) {
    const double space = std::pow(static_cast<double>(h.order()), std::ldexp(1.0, n_max));
    if (space > search_limit)
      throw SearchSpaceExceeded("quotient_experiment: |" + h.name() + "|^" + std::to_string(1 << n_max) +
                                " exceeds the search limit");
  }
  std::vector<QuotientRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto p = presentation_leaf(n);
    for (const auto& h : catalog) {
      const auto homs = enumerate_homs(p, h, {workers});
      QuotientRow row;
      row.n = n;
      row.group = h.name();
      row.group_order = h.order();
      row.hom_count = homs.size();
      row.nontrivial_count = static_cast<std::size_t>(
          std::count_if(homs.begin(), homs.end(), [](const Homomorphism& f) { return !f.is_trivial(); }));
      row.gcd_flag = std::gcd(3 + n, h.order()) == 1;
      row.consistent = !row.gcd_flag || row.nontrivial_count == 0;
      rows.push_back(row);
    }
  }
  return rows;
}

LimitPoints limit_points(const RepTable& rep, const std::optional<VertexAddress>& vertex, std::size_t count,
                         int word_len, std::uint64_t seed) {
  std::vector<VertexAddress> gens;
  std::optional<Circle> circle;
  if (!vertex) {
    gens = vertices_up_to(rep.depth);
  } else {
    const auto& data = rep.vertex(*vertex);
    if (!data.plane_circle) throw std::invalid_argument("limit_points: vertex '" + vertex->path() + "' has no plane");
    gens = {vertex->child(1), vertex->child(2)};
    circle = data.plane_circle;
  }

  // The walk only needs plotting accuracy.
  std::vector<Moebius<double>> mats;
  std::vector<SpherePoint<double>> starts;
  for (const auto& g : gens) {
    mats.push_back(rep.matrix(g).cast<double>());
    const Point a = alpha_point(rep, g);
    starts.push_back(a.infinite ? SpherePoint<double>::infinity()
                                : SpherePoint<double>(std::complex<double>(to_double(a.z.real()), to_double(a.z.imag()))));
  }

  Rng rng = Rng(seed).split("limit-points");
  LimitPoints out;
  out.points.reserve(count);
  const long ngens = static_cast<long>(gens.size());
  for (std::size_t i = 0; i < count; ++i) {
    SpherePoint<double> p = starts[static_cast<std::size_t>(rng.uniform_int(0, ngens - 1))];
    long prev = -1;
    for (int s = 0; s < word_len; ++s) {
      long g = rng.uniform_int(0, ngens - (prev < 0 ? 1 : 2));
      if (prev >= 0 && g >= prev) ++g;
      const int k = static_cast<int>(rng.uniform_int(1, generator_order(gens[static_cast<std::size_t>(g)]) - 1));
      p = apply(power(mats[static_cast<std::size_t>(g)], k), p);
      prev = g;
    }
    out.points.push_back(p);
  }
  if (circle) {
    const auto c = GeneralizedCircle<double>::from_normalized(
        to_double(circle->A()), {to_double(circle->B().real()), to_double(circle->B().imag())}, to_double(circle->D()));
    double worst = 0;
    for (const auto& p : out.points)
      if (!p.infinite) worst = std::max(worst, distance_to_circle(c, p.z));
    out.max_distance = worst;
  }
  return out;
}

CheckReport summarize(const RelatorReport& r, double identity_tol) {
  return {"relators", r.pass, identity_tol - r.max_residual, r.failures,
          {{"max_residual", r.max_residual}, {"relators_checked", static_cast<double>(r.relators_checked)}}};
}

CheckReport summarize(const PreciseInvarianceReport& r, double margin_floor) {
  CheckReport out{"precise_invariance_level_" + std::to_string(r.level), r.pass, r.min_margin, r.failures, {}};
  out.details = {{"min_old", r.min_old}, {"min_new", r.min_new}, {"margin_floor", margin_floor}};
  for (const auto& lm : r.leaves) {
    out.details.emplace_back("old_" + lm.vertex.path(), lm.old_side);
    out.details.emplace_back("new_" + lm.vertex.path(), lm.new_side);
  }
  return out;
}

CheckReport summarize(const NestingReport& r) {
  std::vector<std::string> failures;
  return {"nesting", r.pass, r.min_margin, failures, r.margins};
}

CheckReport summarize(const SeparationReport& r, double identity_tol) {
  return {"separation_words", r.pass, r.min_separation - identity_tol, r.failures,
          {{"min_separation", r.min_separation}, {"words_checked", static_cast<double>(r.words_checked)}}};
}

CheckReport summarize(const JorgensenReport& r) {
  std::vector<std::string> failures;
  for (const auto& v : r.violations) {
    std::ostringstream s;
    s << "(" << v.a << ", " << v.b << ") value " << v.value;
    note_failure(failures, s.str());
  }
  return {"jorgensen", r.violations.empty(), r.min_value - 1.0, failures,
          {{"pairs_scanned", static_cast<double>(r.pairs_scanned)},
           {"skipped_elementary", static_cast<double>(r.skipped_elementary)},
           {"min_value", r.min_value}}};
}

}  // namespace treegroups

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "treegroups/builder.hpp"
#include "treegroups/homomorphism.hpp"
#include "treegroups/io.hpp"
#include "treegroups/tree_scheme.hpp"
#include "treegroups/verify.hpp"

using namespace treegroups;

namespace {

constexpr int kPass = 0;
constexpr int kCertificateFailure = 1;
constexpr int kInvalidInput = 2;

void emit(const std::string& out, const std::string& text) {
  if (out.empty())
    std::cout << text;
  else
    write_text(out, text);
}

int run_presentation(int depth, const std::string& view, const std::string& out) {
  const auto p = view == "full" ? presentation_full(depth) : presentation_leaf(depth);
  emit(out, format_presentation(p));
  return kPass;
}

int run_quotients(int depth, int max_order, unsigned workers, const std::string& out) {
  const auto rows = quotient_experiment(depth, catalog_groups(max_order), 1e10, workers);
  std::ostringstream table;
  table << "n,group,order,homs,nontrivial,gcd_flag,consistent\n";
  bool ok = true;
  for (const auto& r : rows) {
    table << r.n << ',' << r.group << ',' << r.group_order << ',' << r.hom_count << ',' << r.nontrivial_count << ','
          << (r.gcd_flag ? 1 : 0) << ',' << (r.consistent ? 1 : 0) << '\n';
    ok = ok && r.consistent;
  }
  std::cout << table.str();
  if (!out.empty()) write_text(out, table.str());
  return ok ? kPass : kCertificateFailure;
}

int run_build(int depth, const BuildOptions& options, const std::string& out) {
  RepTable rep = build_level1();
  rep.tolerances = {options.certificate.identity_tol, options.certificate.margin_floor};
  for (int d = 2; d <= depth; ++d) {
    try {
      auto tuned = auto_tune_level(rep, options.certificate, options.l0, options.growth, options.l_max);
      for (const auto& s : tuned.ladder)
        std::cerr << "level " << d << " L=" << s.L << " old=" << s.min_old << " new=" << s.min_new
                  << " nesting=" << s.nesting << (s.pass ? " pass" : " fail") << '\n';
      rep = std::move(tuned.rep);
    } catch (const TuningError& e) {
      for (const auto& s : e.ladder())
        std::cerr << "level " << d << " L=" << s.L << " old=" << s.min_old << " new=" << s.min_new
                  << " nesting=" << s.nesting << " fail\n";
      std::cerr << e.what() << '\n';
      return kCertificateFailure;
    }
  }
  emit(out, rep_to_json(rep).dump(2) + "\n");
  return kPass;
}

int run_verify(const std::string& rep_path, const CertificateParams& params, std::size_t samples, std::size_t pairs,
               std::uint64_t seed, const std::string& out) {
  const RepTable rep = read_rep(rep_path);
  std::vector<CheckReport> checks;
  checks.push_back(summarize(check_relators(rep, params.identity_tol), params.identity_tol));
  checks.push_back(summarize(check_nesting(rep, params.margin_floor)));
  for (int k = 2; k <= rep.depth; ++k)
    checks.push_back(summarize(check_precise_invariance(rep, k, params), params.margin_floor));
  checks.push_back(summarize(check_separation_words(rep, samples, 8, seed), params.identity_tol));
  checks.push_back(summarize(jorgensen_scan(rep, pairs, seed)));

  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  bool ok = true;
  for (const auto& c : checks) {
    j["checks"].push_back(report_to_json(c));
    ok = ok && c.pass;
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.check << " min_margin=" << c.min_margin << '\n';
  }
  j["pass"] = ok;
  if (!out.empty()) write_text(out, j.dump(2) + "\n");
  return ok ? kPass : kCertificateFailure;
}

int run_limitset(const std::string& rep_path, const std::string& vertex, std::size_t count, int word_len,
                 std::uint64_t seed, const std::string& ppm_out, const std::string& csv_out, int width, int height) {
  const RepTable rep = read_rep(rep_path);
  std::optional<VertexAddress> target;
  if (vertex != "all") target = VertexAddress::parse(vertex == "root" ? "" : vertex);
  const auto lp = limit_points(rep, target, count, word_len, seed);
  if (!ppm_out.empty()) {
    std::size_t dropped = 0;
    write_text(ppm_out, render_ppm(lp.points, width, height, &dropped));
    std::cerr << "dropped " << dropped << " points outside the window\n";
  }
  if (!csv_out.empty()) write_text(csv_out, points_csv(lp.points));
  std::cout << "points " << lp.points.size();
  if (lp.max_distance) std::cout << " max_distance_to_circle " << *lp.max_distance;
  std::cout << '\n';
  return kPass;
}

int run_example2(int max_order, int n_max) {
  bool ok = true;
  for (int n = 1; n <= n_max; ++n) {
    const auto mn = mn_presentation(n);
    const auto reduced = reduce(mn.rewritten_witness);
    std::cout << "n=" << n << " witness " << to_string(mn.witness) << " = " << to_string(reduced) << " letters "
              << reduced.letter_count() << '\n';
    ok = ok && !reduced.empty();
  }
  std::size_t pairs = 0, failures = 0;
  for (const auto& h : catalog_groups(max_order)) {
    const auto r = commutator_power_certificate(h);
    pairs += r.pairs_checked;
    failures += r.failures.size();
    std::cout << h.name() << " pairs " << r.pairs_checked << " failures " << r.failures.size() << '\n';
  }
  std::cout << "total pairs " << pairs << " failures " << failures << '\n';
  return ok && failures == 0 ? kPass : kCertificateFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree-of-triangle-groups toolkit"};
  app.require_subcommand(1);

  int depth = 1;
  std::string view = "full", out;
  auto* pres = app.add_subcommand("presentation", "write the presentation of G^N");
  pres->add_option("--depth", depth)->required()->check(CLI::Range(1, 20));
  pres->add_option("--view", view)->check(CLI::IsMember({"full", "leaf"}));
  pres->add_option("--out", out);

  int max_order = 12;
  unsigned workers = 1;
  auto* quot = app.add_subcommand("quotients", "count homomorphisms G^n -> H over the catalog");
  quot->add_option("--depth", depth)->required()->check(CLI::Range(1, 3));
  quot->add_option("--max-order", max_order)->check(CLI::Range(1, 16));
  quot->add_option("--workers", workers)->check(CLI::Range(1u, 64u));
  quot->add_option("--out", out);

  BuildOptions options;
  auto* bld = app.add_subcommand("build", "build the representation of G^N");
  bld->add_option("--depth", depth)->required()->check(CLI::Range(1, 6));
  bld->add_option("--l0", options.l0)->check(CLI::PositiveNumber);
  bld->add_option("--growth", options.growth)->check(CLI::Range(1.0 + 1e-9, 100.0));
  bld->add_option("--lmax", options.l_max)->check(CLI::PositiveNumber);
  bld->add_option("--radius-old", options.certificate.word_radius_old)->check(CLI::Range(0, 6));
  bld->add_option("--radius-new", options.certificate.word_radius_new)->check(CLI::Range(0, 10));
  bld->add_option("--out", out);

  std::string rep_path;
  CertificateParams params;
  std::size_t samples = 500, pairs = 10000;
  std::uint64_t seed = 7;
  auto* ver = app.add_subcommand("verify", "run all certificates on a stored representation");
  ver->add_option("--rep", rep_path)->required();
  ver->add_option("--radius-old", params.word_radius_old)->check(CLI::Range(0, 6));
  ver->add_option("--radius-new", params.word_radius_new)->check(CLI::Range(0, 10));
  ver->add_option("--samples", samples);
  ver->add_option("--pairs", pairs);
  ver->add_option("--seed", seed);
  ver->add_option("--out", out);

  std::size_t count = 100000;
  int word_len = 30, width = 1024, height = 1024;
  std::string ppm_out, csv_out, vertex = "all";
  auto* lim = app.add_subcommand("limitset", "sample and render orbit points");
  lim->add_option("--rep", rep_path)->required();
  lim->add_option("--vertex", vertex, "all, root, or a vertex path");
  lim->add_option("--count", count);
  lim->add_option("--word-len", word_len)->check(CLI::Range(0, 100000));
  lim->add_option("--seed", seed);
  lim->add_option("--png-out", ppm_out);
  lim->add_option("--points-out", csv_out);
  lim->add_option("--width", width)->check(CLI::Range(1, 16384));
  lim->add_option("--height", height)->check(CLI::Range(1, 16384));

  int n_max = 10;
  auto* ex2 = app.add_subcommand("example2", "commutator witnesses and the power certificate");
  ex2->add_option("--max-order", max_order)->check(CLI::Range(1, 16));
  ex2->add_option("--n-max", n_max)->check(CLI::Range(1, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*pres) return run_presentation(depth, view, out);
    if (*quot) return run_quotients(depth, max_order, workers, out);
    if (*bld) return run_build(depth, options, out);
    if (*ver) return run_verify(rep_path, params, samples, pairs, seed, out);
    if (*lim) return run_limitset(rep_path, vertex, count, word_len, seed, ppm_out, csv_out, width, height);
    if (*ex2) return run_example2(max_order, n_max);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const SearchSpaceExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCertificateFailure;
  }
  return kInvalidInput;
}

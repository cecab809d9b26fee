#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treegroups/finite_group.hpp"
#include "treegroups/rep_table.hpp"

namespace treegroups {

/// Word-ball radii and thresholds of the truncated combination certificates.
struct CertificateParams {
  int word_radius_old = 3;
  int word_radius_new = 6;
  double margin_floor = 1e-6;
  double identity_tol = 1e-8;
};

/// Common summary shape of every certificate.
struct CheckReport {
  std::string check;
  bool pass = false;
  double min_margin = 0;
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, double>> details;
};

struct RelatorReport {
  double max_residual = 0;
  std::size_t relators_checked = 0;
  std::vector<std::string> failures;
  bool pass = false;
};

/// Every relator of presentation_full(depth) evaluated in matrices; the
/// residual is the projective distance to the identity.
RelatorReport check_relators(const RepTable& rep);
RelatorReport check_relators(const RepTable& rep, double identity_tol);

struct LeafMargins {
  VertexAddress vertex;
  double old_side = 0;   ///< min over old words of the B_z checks
  double new_side = 0;   ///< min over new words of the E_z check
  std::size_t old_words = 0;
  std::size_t new_words = 0;
};

struct PreciseInvarianceReport {
  int level = 0;
  std::vector<LeafMargins> leaves;
  double min_margin = 0;
  double min_old = 0;
  double min_new = 0;
  std::vector<std::string> failures;
  bool pass = false;
};

/// Truncated hypotheses of the combination step that created level k
/// (2 <= k <= depth), for every vertex z of depth k-1:
///  old side: gamma(B_z) misses B_z and every other B_z' for all reduced
///    words gamma of length <= word_radius_old in generators of depth < k,
///    except powers of M_z (which are only checked against the other B_z');
///  new side: h(E_z) misses E_z, E_z the complement of B_z, for all reduced
///    words h of length <= word_radius_new in the two children of z, except
///    powers of M_z.
PreciseInvarianceReport check_precise_invariance(const RepTable& rep, int level, const CertificateParams& params);

struct NestingReport {
  double min_margin = 0;
  std::vector<std::pair<std::string, double>> margins;  ///< (description, margin)
  bool pass = false;
};

/// Delta_{v1}, Delta_{v2} inside Delta_v and mutually disjoint; W_v between
/// the planes of v and of its parent.
NestingReport check_nesting(const RepTable& rep, double margin_floor);

struct SeparationReport {
  double min_separation = 0;
  std::size_t words_checked = 0;
  std::vector<std::string> failures;
  bool pass = false;
};

/// Evaluates `samples` certified-nontrivial alternating words with 1..syllables
/// syllables; each must stay identity_tol away from +-I.
SeparationReport check_separation_words(const RepTable& rep, std::size_t samples, int syllables, std::uint64_t seed);
SeparationReport check_separation_words(const std::vector<Word>& words, const RepTable& rep);

struct JorgensenViolation {
  std::string a;
  std::string b;
  double value = 0;
};

struct JorgensenReport {
  std::size_t pairs_scanned = 0;
  std::size_t skipped_elementary = 0;
  double min_value = 0;
  std::vector<JorgensenViolation> violations;
};

/// |tr^2 A - 4| + |tr [A,B] - 2|.
double jorgensen_value(const MoebiusMap& a, const MoebiusMap& b);
/// Whether a and b share a fixed point (chordal distance below `sep`).
bool is_elementary_pair(const MoebiusMap& a, const MoebiusMap& b, double sep = 1e-6);

/// Samples `pair_count` non-elementary pairs of random words (length 1..3)
/// and flags every pair with jorgensen_value < 1 - 1e-9.
JorgensenReport jorgensen_scan(const RepTable& rep, std::size_t pair_count, std::uint64_t seed);
/// Same scan over explicit pairs.
JorgensenReport jorgensen_scan(const std::vector<std::pair<MoebiusMap, MoebiusMap>>& pairs);

class SearchSpaceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuotientRow {
  int n = 0;
  std::string group;
  int group_order = 0;
  std::size_t hom_count = 0;
  std::size_t nontrivial_count = 0;
  bool gcd_flag = false;    ///< gcd(3 + n, |H|) == 1
  bool consistent = false;  ///< !gcd_flag or nontrivial_count == 0
};

/// Hom(G^n, H) via presentation_leaf(n) for n = 1..n_max and every H.
/// Throws SearchSpaceExceeded when |H|^(2^n) exceeds `search_limit`.
std::vector<QuotientRow> quotient_experiment(int n_max, const std::vector<FiniteGroup>& catalog,
                                             double search_limit = 1e10, unsigned workers = 1);

struct LimitPoints {
  std::vector<SpherePoint<double>> points;
  /// For a vertex target: max distance of a finite point to the plane circle.
  std::optional<double> max_distance;
};

/// Orbit samples: random words of length word_len applied to alpha points.
/// `vertex` empty selects the whole group; otherwise the vertex group of
/// `vertex` (the root, or a vertex whose children exist).
LimitPoints limit_points(const RepTable& rep, const std::optional<VertexAddress>& vertex, std::size_t count,
                         int word_len, std::uint64_t seed);

// Conversions to the common report shape.
CheckReport summarize(const RelatorReport& r, double identity_tol);
CheckReport summarize(const PreciseInvarianceReport& r, double margin_floor);
CheckReport summarize(const NestingReport& r);
CheckReport summarize(const SeparationReport& r, double identity_tol);
CheckReport summarize(const JorgensenReport& r);

}  // namespace treegroups

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "treegroups/rep_table.hpp"
#include "treegroups/verify.hpp"

namespace treegroups {

struct BuildOptions {
  double l0 = 4.0;
  double growth = 1.4;
  double l_max = 64.0;
  CertificateParams certificate;
};

/// Depth-1 table: the (4,4,inf) group on the unit circle, Delta_root the unit disk.
RepTable build_level1();

/// Adds the generators of depth n+1. For every vertex z of depth n the
/// generator M_z is put in standard position (its fixed point in the parent
/// disk at 0, the parent plane on the unit circle); the new plane D_z is the
/// perpendicular plane at distance L toward 0 and W_z the one at L/2; the
/// children of z are the (4+n, 4+n, 3+n) triangle rotations on D_z with
/// M_{z2} M_{z1} = M_z. Existing data is copied unchanged.
RepTable extend_one_level(const RepTable& rep, double L);

struct LadderStep {
  double L = 0;
  double min_old = 0;
  double min_new = 0;
  double nesting = 0;
  bool pass = false;
};

struct TuneResult {
  RepTable rep;
  double L = 0;
  std::vector<LadderStep> ladder;
};

class TuningError : public std::runtime_error {
 public:
  TuningError(const std::string& what, std::vector<LadderStep> ladder)
      : std::runtime_error(what), ladder_(std::move(ladder)) {}
  const std::vector<LadderStep>& ladder() const { return ladder_; }

 private:
  std::vector<LadderStep> ladder_;
};

/// Tries L = l0, l0*growth, ... <= l_max and returns the first extension
/// passing check_precise_invariance and check_nesting at margin_floor.
TuneResult auto_tune_level(const RepTable& rep, const CertificateParams& params, double l0, double growth,
                           double l_max);

RepTable build(int depth, const BuildOptions& options = {});

struct StackInput {
  std::vector<MoebiusMap> generators;
  Disk support;  ///< bounded disk claimed to absorb the group's ping-pong
};

struct StackResult {
  std::vector<std::vector<MoebiusMap>> generators;  ///< conjugated by h_{t_k}
  std::vector<double> offsets;                      ///< t_k
  std::vector<Disk> supports;       ///< translated support disks
  std::vector<std::pair<std::pair<int, int>, double>> pair_margins;
  double min_margin = 0;
  bool pass = false;
};

/// Translates group k by h_{t_k}(z) = z + t_k i, stacking the support disks
/// upward so that consecutive disks are gap_factor * (r_{k-1} + r_k) apart,
/// and reports all pairwise margins; passes when every margin is at least
/// margin_floor. Throws for unbounded supports.
StackResult stack_parabolic(const std::vector<StackInput>& groups, double gap_factor, double margin_floor = 1e-6);

}  // namespace treegroups

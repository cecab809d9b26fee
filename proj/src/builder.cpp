#include "treegroups/builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "treegroups/triangle.hpp"

namespace treegroups {

namespace {

using Cr = Complex<Real>;

const Real kPi = boost::multiprecision::acos(Real(-1));

MoebiusMap snapped(const MoebiusMap& m) {
  Matrix2c<Real> out = m.matrix();
  for (auto& e : out.reshaped()) e = Cr(snap_double_double(e.real()), snap_double_double(e.imag()));
  return MoebiusMap::from_normalized(out);
}

Circle snapped(const Circle& c) {
  return Circle::from_normalized(snap_double_double(c.A()),
                                 Cr(snap_double_double(c.B().real()), snap_double_double(c.B().imag())),
                                 snap_double_double(c.D()));
}

Real primitive_turn(int order, const Real& sign_of) { return (sign_of < 0 ? -2 : 2) * kPi / order; }

// Matrix of g_z in the frame of its parent's plane, rebuilt from the
// standard construction rather than conjugated numerically.
MoebiusMap local_generator(const RepTable& rep, const VertexAddress& z) {
  const auto v = z.parent();
  const bool first = z.path().back() == '1';
  if (v.is_root()) {
    const auto t = build_44inf();
    return first ? t.a : t.b;
  }
  const MoebiusMap& frame = *rep.vertex(v).frame;
  const int p = generator_order(v);
  const Real turn = std::arg(multiplier_at(frame * rep.matrix(v) * frame.inverse(), Point(Cr(0))));
  const auto gens = standard_qqp(p + 1, p, primitive_turn(p, turn));
  return first ? gens.g1 : gens.g2;
}

VertexData leaf(const VertexAddress& v, const MoebiusMap& m) {
  return {v, snapped(m), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
}

}  // namespace

RepTable build_level1() {
  const auto t = build_44inf();
  RepTable rep;
  rep.depth = 1;
  VertexData root{VertexAddress::root(), std::nullopt, snapped(t.invariant_circle),
                  Disk{snapped(t.said_disk.circle), t.said_disk.side}, std::nullopt,
                  MoebiusMap::identity()};
  rep.vertices.emplace(root.addr, root);
  const auto v1 = VertexAddress::parse("1"), v2 = VertexAddress::parse("2");
  rep.vertices.emplace(v1, leaf(v1, t.a));
  rep.vertices.emplace(v2, leaf(v2, t.b));
  return rep;
}

RepTable extend_one_level(const RepTable& rep, double L) {
  if (!(L > 0)) throw std::invalid_argument("extend_one_level: L must be positive");
  if (rep.depth < 1) throw std::invalid_argument("extend_one_level: empty table");
  const int n = rep.depth;
  RepTable out = rep;
  out.depth = n + 1;
  out.levels.push_back({n + 1, L});

  const Disk unit_disk = Disk::inside(Cr(0), Real(1));
  const Real len(L);
  for (const auto& z : vertices_at_depth(n)) {
    const auto& parent = rep.vertex(z.parent());
    if (!parent.frame) throw std::invalid_argument("extend_one_level: parent frame missing at '" + z.path() + "'");
    const MoebiusMap local = local_generator(rep, z);
    if (classify(local).kind != MoebiusKind::elliptic)
      throw std::invalid_argument("extend_one_level: edge generator at '" + z.path() + "' is not elliptic");

    // Send alpha to 0 along the disk automorphism, turn the parent's apex onto
    // the positive axis, then push the plane at distance L out to the unit circle.
    const Cr alpha = fixed_point_inside(local, unit_disk).z;
    const Real turn = std::arg(multiplier_at(local, Point(alpha)));
    const MoebiusMap to_origin(Cr(1), -alpha, -std::conj(alpha), Cr(1));
    const Real phi = std::arg(-alpha);
    const MoebiusMap rotate(std::polar(Real(1), Real(-phi / 2)), Cr(0), Cr(0), std::polar(Real(1), Real(phi / 2)));
    const MoebiusMap zoom(Cr(exp(len / 2)), Cr(0), Cr(0), Cr(exp(-len / 2)));
    const MoebiusMap frame = snapped(zoom * rotate * to_origin * *parent.frame);
    const MoebiusMap frame_inv = frame.inverse();

    const Circle plane = snapped(circle_image(frame_inv, Circle::from_center_radius(Cr(0), Real(1))));
    const Circle combination = snapped(circle_image(frame_inv, Circle::from_center_radius(Cr(0), exp(len / 2))));
    const auto gens = standard_qqp(4 + n, 3 + n, primitive_turn(3 + n, turn));

    auto& data = out.vertices.at(z);
    data.plane_circle = plane;
    data.delta_disk = Disk{plane, -1};
    data.combination_circle = combination;
    data.frame = frame;
    out.vertices.emplace(z.child(1), leaf(z.child(1), frame_inv * gens.g1 * frame));
    out.vertices.emplace(z.child(2), leaf(z.child(2), frame_inv * gens.g2 * frame));
  }
  return out;
}

TuneResult auto_tune_level(const RepTable& rep, const CertificateParams& params, double l0, double growth,
                           double l_max) {
  if (!(l0 > 0)) throw std::invalid_argument("auto_tune_level: l0 must be positive");
  if (!(growth > 1)) throw std::invalid_argument("auto_tune_level: growth must exceed 1");
  const int level = rep.depth + 1;
  std::vector<LadderStep> ladder;
  for (double L = l0; L <= l_max * (1 + 1e-12); L *= growth) {
    RepTable candidate = extend_one_level(rep, L);
    const auto pi = check_precise_invariance(candidate, level, params);
    const auto nest = check_nesting(candidate, params.margin_floor);
    ladder.push_back({L, pi.min_old, pi.min_new, nest.min_margin, pi.pass && nest.pass});
    if (ladder.back().pass) return {std::move(candidate), L, std::move(ladder)};
  }

  std::ostringstream msg;
  msg << "auto_tune_level: no L in [" << l0 << ", " << l_max << "] passes level " << level;
  if (ladder.empty()) {
    msg << " (empty ladder)";
  } else {
    const auto best = std::max_element(ladder.begin(), ladder.end(), [](const LadderStep& a, const LadderStep& b) {
      return std::min({a.min_old, a.min_new, a.nesting}) < std::min({b.min_old, b.min_new, b.nesting});
    });
    msg << "; best L=" << best->L << " old=" << best->min_old << " new=" << best->min_new
        << " nesting=" << best->nesting;
  }
  throw TuningError(msg.str(), std::move(ladder));
}

RepTable build(int depth, const BuildOptions& options) {
  if (depth < 1) throw std::invalid_argument("build: depth must be >= 1");
  RepTable rep = build_level1();
  rep.tolerances = {options.certificate.identity_tol, options.certificate.margin_floor};
  for (int d = 2; d <= depth; ++d)
    rep = auto_tune_level(rep, options.certificate, options.l0, options.growth, options.l_max).rep;
  return rep;
}

StackResult stack_parabolic(const std::vector<StackInput>& groups, double gap_factor, double margin_floor) {
  StackResult out;
  if (gap_factor < 0) throw std::invalid_argument("stack_parabolic: gap_factor must be nonnegative");
  std::vector<DiskShape<Real>> shapes;
  for (const auto& g : groups) {
    const auto s = disk_shape(g.support);
    if (s.kind != DiskShape<Real>::Kind::interior)
      throw std::invalid_argument("stack_parabolic: support disk must be bounded");
    shapes.push_back(s);
  }

  Real t = 0;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (k > 0) {
      const auto &prev = shapes[k - 1], &cur = shapes[k];
      t += prev.center.imag() - cur.center.imag() + (1 + gap_factor) * (prev.radius + cur.radius);
    }
    const MoebiusMap h = vertical_translation(t), h_inv = h.inverse();
    std::vector<MoebiusMap> conj;
    for (const auto& g : groups[k].generators) conj.push_back(h * g * h_inv);
    out.generators.push_back(std::move(conj));
    out.offsets.push_back(to_double(t));
    out.supports.push_back(disk_image(h, groups[k].support));
  }

  out.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < out.supports.size(); ++i)
    for (std::size_t j = i + 1; j < out.supports.size(); ++j) {
      const double m = to_double(disks_disjoint(out.supports[i], out.supports[j]).margin);
      out.pair_margins.push_back({{static_cast<int>(i), static_cast<int>(j)}, m});
      out.min_margin = std::min(out.min_margin, m);
    }
  out.pass = out.pair_margins.empty() || out.min_margin >= margin_floor;
  return out;
}

}  // namespace treegroups

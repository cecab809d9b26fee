#include "treegroups/triangle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace treegroups {

namespace {

using Cr = Complex<Real>;

const Real kPi = boost::multiprecision::acos(Real(-1));

// An anti-Moebius map z -> R(conj z) is stored as R. The composition of two
// such maps s_a s_b is the Moebius map R_a * conj(R_b).
MoebiusMap compose_reflections(const Matrix2c<Real>& ra, const Matrix2c<Real>& rb) {
  return MoebiusMap(Matrix2c<Real>(ra * rb.conjugate()));
}

Matrix2c<Real> mat(Cr a, Cr b, Cr c, Cr d) {
  Matrix2c<Real> m;
  m << a, b, c, d;
  return m;
}

}  // namespace

Triangle44Inf build_44inf() {
  // Upper half plane: ideal vertex at infinity, finite vertices at
  // exp(3 pi i/4) and exp(pi i/4) on the unit semicircle, angles pi/4.
  const Real u = cos(kPi / 4);
  const auto left = mat(Cr(-1), Cr(-2 * u), Cr(0), Cr(1));  // z -> -2u - conj z
  const auto right = mat(Cr(-1), Cr(2 * u), Cr(0), Cr(1));  // z -> 2u - conj z
  const auto unit = mat(Cr(0), Cr(1), Cr(1), Cr(0));        // z -> 1 / conj z

  const MoebiusMap a_half = compose_reflections(unit, left);
  const MoebiusMap b_half = compose_reflections(right, unit);

  // Cayley map to the unit disk, infinity -> 1.
  const MoebiusMap cayley(Cr(1), Cr(0, -1), Cr(1), Cr(0, 1));
  const MoebiusMap cayley_inv = cayley.inverse();

  return {cayley * a_half * cayley_inv, cayley * b_half * cayley_inv, Circle::from_center_radius(Cr(0), Real(1)),
          Disk::inside(Cr(0), Real(1))};
}

Point default_anchor(const MoebiusMap& g0) {
  const auto fps = fixed_points(g0);
  const Point candidates[] = {Point::infinity(), Point(Cr(0)), Point(Cr(1))};
  for (const auto& c : candidates) {
    bool is_fixed = false;
    for (const auto& f : fps) is_fixed = is_fixed || chordal_distance(c, f) < Real(1e-9);
    if (!is_fixed) return c;
  }
  return Point(Cr(0, 1));
}

MoebiusMap standard_frame(const MoebiusMap& g0, const Circle& plane, const Point& anchor) {
  const auto fps = fixed_points(g0);
  if (fps.size() != 2) throw std::invalid_argument("standard_frame: map must have two fixed points");
  const Disk inner{plane, -1};
  const bool in0 = disk_contains(inner, fps[0]), in1 = disk_contains(inner, fps[1]);
  if (in0 == in1) throw std::invalid_argument("standard_frame: fixed points are not separated by the plane");
  const auto& front = in0 ? fps[0] : fps[1];

  const MoebiusMap std0 = axis_standardizer(g0, front);
  const Circle image = circle_image(std0, plane);
  if (image.is_line()) throw std::invalid_argument("standard_frame: plane maps to a line");
  const Real rho = image.radius();
  if (std::abs(image.center()) > Real(1e-7) * rho)
    throw std::invalid_argument("standard_frame: axis is not perpendicular to the plane");

  const auto u = apply(std0, anchor);
  if (u.infinite || std::abs(u.z) == Real(0)) throw std::invalid_argument("standard_frame: anchor is a fixed point");
  return scaling<Real>(Cr(std::abs(u.z)) / (u.z * rho)) * std0;
}

TriangleGenerators standard_qqp(int q, int p, const Real& theta) {
  if (q < 2 || p < 2 || 2 * p + q >= q * p)
    throw std::invalid_argument("standard_qqp: signature (q,q,p) is not hyperbolic");

  // Apex at 0 with angle pi/p, base vertices A (on the positive real axis)
  // and B at polar angle theta/2, both with angle pi/q.
  const Real cq = cos(kPi / q), sq = sin(kPi / q);
  const Real cp = cos(kPi / p), sp = sin(kPi / p);
  const Real side = acosh((cq + cp * cq) / (sp * sq));
  const Real ae = tanh(side / 2);
  const Real s = (ae * ae + 1) / (2 * ae * cos(theta / 4));
  const Cr c = std::polar(s, Real(theta / 4));

  const auto refl_real = mat(Cr(1), Cr(0), Cr(0), Cr(1));  // z -> conj z
  const auto refl_apex = mat(std::polar(Real(1), Real(theta / 2)), Cr(0), Cr(0), std::polar(Real(1), Real(-theta / 2)));
  const auto refl_base = mat(c, Cr(-1), Cr(1), -std::conj(c));  // geodesic AB

  return {compose_reflections(refl_base, refl_real), compose_reflections(refl_apex, refl_base)};
}

TriangleGenerators build_qqp(int q, int p, const Circle& plane, const MoebiusMap& g0, const std::optional<Point>& anchor) {
  if (q < 2 || p < 2 || 2 * p + q >= q * p)
    throw std::invalid_argument("build_qqp: signature (q,q,p) is not hyperbolic");
  const auto cls = classify(g0);
  if (cls.kind != MoebiusKind::elliptic) throw std::invalid_argument("build_qqp: g0 is not elliptic");
  if (abs(cls.angle - 2 * kPi / p) > Real(1e-8))
    throw std::invalid_argument("build_qqp: g0 is not a primitive rotation of order p");

  const MoebiusMap frame = standard_frame(g0, plane, anchor ? *anchor : default_anchor(g0));
  const MoebiusMap frame_inv = frame.inverse();
  const Real theta = std::arg(multiplier_at(frame * g0 * frame_inv, Point(Cr(0))));
  const auto local = standard_qqp(q, p, theta < 0 ? Real(-2 * kPi / p) : Real(2 * kPi / p));

  TriangleGenerators out{frame_inv * local.g1 * frame, frame_inv * local.g2 * frame};
  const Real scale = std::max<Real>(Real(1), max_abs_entry(out.g1) * max_abs_entry(out.g2));
  if (projective_distance(out.g2 * out.g1, g0) > Real(1e-8) * scale)
    throw std::logic_error("build_qqp: product relation g2 g1 = g0 not reproduced");
  return out;
}

Point fixed_point_inside(const MoebiusMap& m, const Disk& disk) {
  const auto fps = fixed_points(m);
  int inside = -1, count = 0;
  for (std::size_t i = 0; i < fps.size(); ++i)
    if (disk_contains(disk, fps[i])) {
      inside = static_cast<int>(i);
      ++count;
    }
  if (count != 1) throw std::invalid_argument("fixed_point_inside: need exactly one fixed point inside the disk");
  return fps[static_cast<std::size_t>(inside)];
}

std::pair<Point, Point> generator_alpha_points(const MoebiusMap& g1, const MoebiusMap& g2, const Disk& disk) {
  return {fixed_point_inside(g1, disk), fixed_point_inside(g2, disk)};
}

}  // namespace treegroups

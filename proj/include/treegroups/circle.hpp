#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "treegroups/moebius.hpp"

namespace treegroups {

/// Circle or line {z : A|z|^2 + 2 Re(conj(B) z) + D = 0} of the Riemann
/// sphere, normalized to |B|^2 - A D = 1.
template <typename Scalar = double>
class GeneralizedCircle {
 public:
  using C = Complex<Scalar>;

  GeneralizedCircle() : GeneralizedCircle(Scalar(1), C(0), Scalar(-1)) {}
  GeneralizedCircle(Scalar a, C b, Scalar d) : a_(a), b_(b), d_(d) {
    const Scalar disc = std::norm(b_) - a_ * d_;
    if (!(disc > Scalar(0))) throw std::invalid_argument("GeneralizedCircle: degenerate form");
    using std::sqrt;
    const Scalar s = sqrt(disc);
    a_ /= s;
    b_ /= s;
    d_ /= s;
  }

  static GeneralizedCircle from_center_radius(C center, Scalar radius) {
    if (!(radius > Scalar(0))) throw std::invalid_argument("GeneralizedCircle: radius must be positive");
    return GeneralizedCircle(Scalar(1) / radius, -center / radius, (std::norm(center) / radius) - radius, raw_tag{});
  }
  /// Keeps A, B, D as given when |B|^2 - A D is 1 up to rounding.
  static GeneralizedCircle from_normalized(Scalar a, C b, Scalar d) {
    using std::abs;
    const Scalar scale = std::max<Scalar>({Scalar(1), abs(a), Scalar(std::abs(b)), abs(d)});
    if (abs(std::norm(b) - a * d - Scalar(1)) <= Scalar(1e-9) * scale * scale)
      return GeneralizedCircle(a, b, d, raw_tag{});
    return GeneralizedCircle(a, b, d);
  }
  /// Form of an already normalized Hermitian matrix, taken as is.
  static GeneralizedCircle from_hermitian(const Matrix2c<Scalar>& h) {
    return GeneralizedCircle(h(0, 0).real(), h(0, 1), h(1, 1).real(), raw_tag{});
  }
  /// Line through `point` with normal direction `normal`.
  static GeneralizedCircle line(C point, C normal) {
    const C n = normal / std::abs(normal);
    return GeneralizedCircle(Scalar(0), n, Scalar(-2) * (std::conj(n) * point).real());
  }

  Scalar A() const { return a_; }
  C B() const { return b_; }
  Scalar D() const { return d_; }

  Scalar value(C z) const { return a_ * std::norm(z) + Scalar(2) * (std::conj(b_) * z).real() + d_; }
  bool is_line(Scalar tol = Scalar(1e-12)) const {
    using std::abs;
    return abs(a_) < tol;
  }
  C center() const { return -b_ / a_; }
  Scalar radius() const {
    using std::abs;
    return Scalar(1) / abs(a_);
  }
  GeneralizedCircle negated() const { return GeneralizedCircle(-a_, -b_, -d_, raw_tag{}); }

  /// Hermitian matrix [[A, B], [conj B, D]] of the form.
  Matrix2c<Scalar> hermitian() const {
    Matrix2c<Scalar> h;
    h << C(a_), b_, std::conj(b_), C(d_);
    return h;
  }

 private:
  struct raw_tag {};
  GeneralizedCircle(Scalar a, C b, Scalar d, raw_tag) : a_(a), b_(b), d_(d) {}

  Scalar a_;
  C b_;
  Scalar d_;
};

using Circle = GeneralizedCircle<Real>;

/// Image of a circle under m: the form transported by m^-1 (congruence),
/// which keeps the sign of the form on corresponding points.
template <typename Scalar>
GeneralizedCircle<Scalar> circle_image(const Moebius<Scalar>& m, const GeneralizedCircle<Scalar>& c) {
  const auto inv = m.inverse().matrix();
  const Matrix2c<Scalar> h = inv.adjoint() * c.hermitian() * inv;
  // det m = 1 keeps |B|^2 - A D = 1; recomputing it would cancel badly for
  // small circles far from the origin.
  return GeneralizedCircle<Scalar>::from_hermitian(h);
}

/// Closed disk of the sphere bounded by a generalized circle. side = -1 is the
/// region where the form is <= 0, side = +1 where it is >= 0.
template <typename Scalar = double>
struct OrientedDisk {
  GeneralizedCircle<Scalar> circle;
  int side = -1;

  /// The same disk described by a form that is <= 0 on it.
  GeneralizedCircle<Scalar> inner_form() const { return side < 0 ? circle : circle.negated(); }
  OrientedDisk complement() const { return {circle, -side}; }

  static OrientedDisk inside(Complex<Scalar> center, Scalar radius) {
    return {GeneralizedCircle<Scalar>::from_center_radius(center, radius), -1};
  }
};

using Disk = OrientedDisk<Real>;

template <typename Scalar>
bool disk_contains(const OrientedDisk<Scalar>& disk, const SpherePoint<Scalar>& p) {
  const auto f = disk.inner_form();
  if (p.infinite) return f.A() <= Scalar(0);
  return f.value(p.z) <= Scalar(0);
}

template <typename Scalar>
OrientedDisk<Scalar> disk_image(const Moebius<Scalar>& m, const OrientedDisk<Scalar>& disk) {
  return {circle_image(m, disk.circle), disk.side};
}

/// Euclidean description of a disk of the sphere.
template <typename Scalar>
struct DiskShape {
  enum class Kind { interior, exterior, half_plane } kind;
  Complex<Scalar> center{};  // interior / exterior
  Scalar radius = 0;         // interior / exterior
  Complex<Scalar> normal{};  // half plane {x : <normal, x> <= offset}
  Scalar offset = 0;
};

template <typename Scalar>
DiskShape<Scalar> disk_shape(const OrientedDisk<Scalar>& disk, Scalar line_tol = Scalar(1e-12)) {
  const auto f = disk.inner_form();
  DiskShape<Scalar> s{};
  if (f.is_line(line_tol)) {
    s.kind = DiskShape<Scalar>::Kind::half_plane;
    const Scalar nb = std::abs(f.B());
    s.normal = f.B() / nb;
    s.offset = -f.D() / (Scalar(2) * nb);
    return s;
  }
  s.kind = f.A() > Scalar(0) ? DiskShape<Scalar>::Kind::interior : DiskShape<Scalar>::Kind::exterior;
  s.center = f.center();
  s.radius = f.radius();
  return s;
}

template <typename Scalar>
struct Disjointness {
  bool disjoint = false;
  /// Euclidean gap between the disks; negative (possibly -inf) on overlap.
  Scalar margin = 0;
};

/// Disjointness of two closed disks with the Euclidean gap as margin. Two
/// disks that both contain infinity overlap with margin -inf. Symmetric.
template <typename Scalar>
Disjointness<Scalar> disks_disjoint(const OrientedDisk<Scalar>& d1, const OrientedDisk<Scalar>& d2) {
  using Kind = typename DiskShape<Scalar>::Kind;
  const Scalar ninf = -std::numeric_limits<Scalar>::infinity();
  auto s1 = disk_shape(d1), s2 = disk_shape(d2);
  auto rank = [](Kind k) { return k == Kind::interior ? 0 : k == Kind::exterior ? 1 : 2; };
  if (rank(s1.kind) > rank(s2.kind)) std::swap(s1, s2);
  auto dot = [](Complex<Scalar> u, Complex<Scalar> v) { return (std::conj(u) * v).real(); };

  Scalar gap = ninf;
  if (s1.kind == Kind::interior && s2.kind == Kind::interior) {
    gap = std::abs(s1.center - s2.center) - s1.radius - s2.radius;
  } else if (s1.kind == Kind::interior && s2.kind == Kind::exterior) {
    gap = s2.radius - std::abs(s1.center - s2.center) - s1.radius;
  } else if (s1.kind == Kind::interior && s2.kind == Kind::half_plane) {
    gap = dot(s2.normal, s1.center) - s2.offset - s1.radius;
  } else if (s1.kind == Kind::half_plane && s2.kind == Kind::half_plane) {
    if (std::abs(s1.normal + s2.normal) < Scalar(1e-12)) gap = -s2.offset - s1.offset;
  }
  return {gap > Scalar(0), gap};
}

/// In standard position (geodesic axis over 0, starting height h), the plane
/// perpendicular to the axis at hyperbolic distance L toward 0 meets the
/// sphere in the circle |z| = h e^-L.
template <typename Scalar>
GeneralizedCircle<Scalar> perpendicular_circle_at(Scalar h, Scalar distance) {
  if (!(h > Scalar(0))) throw std::invalid_argument("perpendicular_circle_at: h must be positive");
  if (distance < Scalar(0)) throw std::invalid_argument("perpendicular_circle_at: distance must be nonnegative");
  using std::exp;
  return GeneralizedCircle<Scalar>::from_center_radius(Complex<Scalar>(0), h * exp(-distance));
}

}  // namespace treegroups

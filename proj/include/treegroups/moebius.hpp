#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "treegroups/real.hpp"

namespace treegroups {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

/// Point of the Riemann sphere: a complex number or infinity.
template <typename Scalar>
struct SpherePoint {
  Complex<Scalar> z{};
  bool infinite = false;

  SpherePoint() = default;
  SpherePoint(Complex<Scalar> value) : z(value) {}  // NOLINT: implicit by design of the type
  static SpherePoint infinity() {
    SpherePoint p;
    p.infinite = true;
    return p;
  }
};

/// Chordal distance on the unit sphere (diameter 2).
template <typename Scalar>
Scalar chordal_distance(const SpherePoint<Scalar>& p, const SpherePoint<Scalar>& q) {
  using std::sqrt;
  if (p.infinite && q.infinite) return Scalar(0);
  if (p.infinite) return Scalar(2) / sqrt(Scalar(1) + std::norm(q.z));
  if (q.infinite) return Scalar(2) / sqrt(Scalar(1) + std::norm(p.z));
  return Scalar(2) * std::abs(p.z - q.z) / sqrt((Scalar(1) + std::norm(p.z)) * (Scalar(1) + std::norm(q.z)));
}

/// Element of PSL(2, C), stored as a determinant-one matrix. M and -M are the
/// same map; compare with projective_distance, never entrywise.
template <typename Scalar = double>
class Moebius {
 public:
  using Matrix = Matrix2c<Scalar>;
  using C = Complex<Scalar>;

  Moebius() : m_(Matrix::Identity()) {}
  explicit Moebius(const Matrix& m) : m_(m) { normalize(); }
  Moebius(C a, C b, C c, C d) {
    m_ << a, b, c, d;
    normalize();
  }

  static Moebius identity() { return Moebius(); }

  /// Keeps the entries as given when det is 1 up to rounding (relative to
  /// the entry size), so stored tables reload bit for bit; otherwise
  /// normalizes like the plain constructor.
  static Moebius from_normalized(const Matrix& m) {
    using std::max;
    const Scalar scale = max(Scalar(1), Scalar(m.cwiseAbs().maxCoeff()));
    if (std::abs(m.determinant() - C(1)) <= Scalar(1e-9) * scale * scale) {
      Moebius out;
      out.m_ = m;
      return out;
    }
    return Moebius(m);
  }

  const Matrix& matrix() const { return m_; }
  C a() const { return m_(0, 0); }
  C b() const { return m_(0, 1); }
  C c() const { return m_(1, 0); }
  C d() const { return m_(1, 1); }
  C trace() const { return m_(0, 0) + m_(1, 1); }
  C det() const { return m_.determinant(); }

  Moebius inverse() const {
    Matrix inv;
    inv << d(), -b(), -c(), a();
    Moebius out;
    out.m_ = inv;
    return out;
  }

  template <typename Other>
  Moebius<Other> cast() const {
    Matrix2c<Other> m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m(i, j) = Complex<Other>(static_cast<Other>(m_(i, j).real()), static_cast<Other>(m_(i, j).imag()));
    return Moebius<Other>::from_normalized(m);
  }

  // det(AB) = 1 already; renormalizing long products only adds cancellation noise.
  friend Moebius operator*(const Moebius& lhs, const Moebius& rhs) {
    Moebius out;
    out.m_ = lhs.m_ * rhs.m_;
    return out;
  }
  Moebius& operator*=(const Moebius& rhs) { return *this = *this * rhs; }

 private:
  void normalize() {
    using std::isfinite;
    const C det = m_.determinant();
    const Scalar size = std::abs(det);
    if (size == Scalar(0) || !isfinite(size))
      throw std::invalid_argument("Moebius: singular matrix");
    m_ /= std::sqrt(det);
  }

  Matrix m_;
};

using MoebiusMap = Moebius<Real>;
using Point = SpherePoint<Real>;

template <typename Scalar>
Scalar max_abs_entry(const Moebius<Scalar>& m) {
  return Scalar(m.matrix().cwiseAbs().maxCoeff());
}

/// min(|M - N|, |M + N|) in the max-entry norm.
template <typename Scalar>
Scalar projective_distance(const Moebius<Scalar>& m, const Moebius<Scalar>& n) {
  using std::min;
  return min(Scalar((m.matrix() - n.matrix()).cwiseAbs().maxCoeff()),
             Scalar((m.matrix() + n.matrix()).cwiseAbs().maxCoeff()));
}

template <typename Scalar>
Scalar distance_to_identity(const Moebius<Scalar>& m) {
  return projective_distance(m, Moebius<Scalar>::identity());
}

template <typename Scalar>
Moebius<Scalar> power(const Moebius<Scalar>& m, int k) {
  if (k < 0) return power(m.inverse(), -k);
  Moebius<Scalar> acc;
  for (int i = 0; i < k; ++i) acc = acc * m;
  return acc;
}

template <typename Scalar>
SpherePoint<Scalar> apply(const Moebius<Scalar>& m, const SpherePoint<Scalar>& p) {
  using C = Complex<Scalar>;
  if (p.infinite) {
    if (m.c() == C(0)) return SpherePoint<Scalar>::infinity();
    return SpherePoint<Scalar>(m.a() / m.c());
  }
  const C den = m.c() * p.z + m.d();
  if (den == C(0)) return SpherePoint<Scalar>::infinity();
  return SpherePoint<Scalar>((m.a() * p.z + m.b()) / den);
}

template <typename Scalar>
SpherePoint<Scalar> apply(const Moebius<Scalar>& m, const Complex<Scalar>& z) {
  return apply(m, SpherePoint<Scalar>(z));
}

enum class MoebiusKind { identity, elliptic, parabolic, loxodromic };

template <typename Scalar>
struct Classification {
  MoebiusKind kind = MoebiusKind::identity;
  /// Rotation angle in [0, pi] for elliptic maps (trace = +-2 cos(angle/2)).
  Scalar angle = 0;
};

/// Trace classification with tolerance `tol` on the trace and on the
/// distance to the identity.
template <typename Scalar>
Classification<Scalar> classify(const Moebius<Scalar>& m, Scalar tol = Scalar(1e-8)) {
  using std::abs;
  using std::acos;
  if (distance_to_identity(m) <= tol) return {MoebiusKind::identity, 0};
  const auto tr = m.trace();
  if (std::abs(tr - Scalar(2)) <= tol || std::abs(tr + Scalar(2)) <= tol) return {MoebiusKind::parabolic, 0};
  if (abs(tr.imag()) <= tol && abs(tr.real()) < Scalar(2)) {
    return {MoebiusKind::elliptic, Scalar(2) * acos(abs(tr.real()) / Scalar(2))};
  }
  return {MoebiusKind::loxodromic, 0};
}

/// Fixed points on the sphere: two for elliptic and loxodromic maps, one for
/// parabolic maps. Throws std::invalid_argument for the identity.
template <typename Scalar>
std::vector<SpherePoint<Scalar>> fixed_points(const Moebius<Scalar>& m, Scalar tol = Scalar(1e-8)) {
  using C = Complex<Scalar>;
  using P = SpherePoint<Scalar>;
  const auto cls = classify(m, tol);
  if (cls.kind == MoebiusKind::identity) throw std::invalid_argument("fixed_points: identity has no isolated fixed points");
  const C a = m.a(), b = m.b(), c = m.c(), d = m.d();
  const bool parabolic = cls.kind == MoebiusKind::parabolic;

  if (std::abs(c) <= std::numeric_limits<Scalar>::epsilon() * max_abs_entry(m)) {
    if (parabolic || a == d) return {P::infinity()};
    return {P(b / (d - a)), P::infinity()};
  }
  const C s = std::sqrt((a + d) * (a + d) - Scalar(4));
  if (parabolic) return {P((a - d) / (Scalar(2) * c))};
  const C q1 = (a - d) + s, q2 = (a - d) - s;
  const C q = std::abs(q1) >= std::abs(q2) ? q1 : q2;
  return {P(q / (Scalar(2) * c)), P(Scalar(-2) * b / q)};
}

/// Derivative of m at one of its fixed points (the multiplier). For an
/// elliptic map it is exp(i theta), theta the signed rotation angle about p.
template <typename Scalar>
Complex<Scalar> multiplier_at(const Moebius<Scalar>& m, const SpherePoint<Scalar>& p) {
  if (p.infinite) return m.d() / m.a();
  const auto den = m.c() * p.z + m.d();
  return Scalar(1) / (den * den);
}

/// h_t(z) = z + t i.
template <typename Scalar>
Moebius<Scalar> vertical_translation(Scalar t) {
  using C = Complex<Scalar>;
  return Moebius<Scalar>(C(1), C(Scalar(0), t), C(0), C(1));
}

/// z -> lambda z.
template <typename Scalar>
Moebius<Scalar> scaling(Complex<Scalar> lambda) {
  using C = Complex<Scalar>;
  return Moebius<Scalar>(lambda, C(0), C(0), C(1));
}

/// Map Q with Q(front) = 0 and Q(other fixed point) = infinity, so that
/// Q M Q^-1 is diagonal. `third`, when given, is sent to 1; otherwise Q is
/// z -> (z - p)/(z - q) (with the obvious forms when p or q is infinite).
/// Throws for maps without two fixed points or a `front` that is not fixed.
template <typename Scalar>
Moebius<Scalar> axis_standardizer(const Moebius<Scalar>& m, const SpherePoint<Scalar>& front,
                                  const std::optional<SpherePoint<Scalar>>& third = std::nullopt) {
  using C = Complex<Scalar>;
  const auto fps = fixed_points(m);
  if (fps.size() != 2) throw std::invalid_argument("axis_standardizer: map must have two fixed points");
  const Scalar d0 = chordal_distance(front, fps[0]), d1 = chordal_distance(front, fps[1]);
  using std::min;
  if (min(d0, d1) > Scalar(1e-6)) throw std::invalid_argument("axis_standardizer: front is not a fixed point");
  const auto& p = d0 <= d1 ? fps[0] : fps[1];
  const auto& q = d0 <= d1 ? fps[1] : fps[0];

  Moebius<Scalar> std0;
  if (q.infinite) {
    std0 = Moebius<Scalar>(C(1), -p.z, C(0), C(1));
  } else if (p.infinite) {
    std0 = Moebius<Scalar>(C(0), C(1), C(1), -q.z);
  } else {
    std0 = Moebius<Scalar>(C(1), -p.z, C(1), -q.z);
  }
  if (!third) return std0;
  const auto u = apply(std0, *third);
  if (u.infinite || std::abs(u.z) == Scalar(0))
    throw std::invalid_argument("axis_standardizer: third point coincides with a fixed point");
  return scaling<Scalar>(Scalar(1) / u.z) * std0;
}

/// Serialization as [re a, im a, re b, im b, re c, im c, re d, im d].
template <typename Scalar>
std::array<Scalar, 8> to_array(const Moebius<Scalar>& m) {
  return {m.a().real(), m.a().imag(), m.b().real(), m.b().imag(),
          m.c().real(), m.c().imag(), m.d().real(), m.d().imag()};
}

template <typename Scalar>
Moebius<Scalar> moebius_from_array(const std::array<Scalar, 8>& v) {
  using C = Complex<Scalar>;
  Matrix2c<Scalar> m;
  m << C(v[0], v[1]), C(v[2], v[3]), C(v[4], v[5]), C(v[6], v[7]);
  return Moebius<Scalar>::from_normalized(m);
}

/// Point of upper half-space; t > 0 is the height over the plane.
template <typename Scalar>
struct H3Point {
  Complex<Scalar> z{};
  Scalar t = 1;
};

}  // namespace treegroups

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "treegroups/circle.hpp"
#include "treegroups/moebius.hpp"

using namespace treegroups;
using gen::Cd;
using gen::Cir;
using gen::M;
using Dk = OrientedDisk<double>;
using P = SpherePoint<double>;

namespace {

const M kInversion(Cd(0), Cd(0, 1), Cd(0, 1), Cd(0));  // z -> 1/z

double dist(const P& a, const P& b) { return chordal_distance(a, b); }

double circle_distance(const Cir& a, const Cir& b) {
  // forms up to sign
  const double plus = std::abs(a.A() - b.A()) + std::abs(a.B() - b.B()) + std::abs(a.D() - b.D());
  const double minus = std::abs(a.A() + b.A()) + std::abs(a.B() + b.B()) + std::abs(a.D() + b.D());
  return std::min(plus, minus);
}

}  // namespace

TEST_CASE("apply examples") {
  const double t = 0.7;
  CHECK(dist(treegroups::apply(vertical_translation(t), Cd(0)), P(Cd(0, t))) < 1e-15);
  CHECK(dist(treegroups::apply(vertical_translation(t), Cd(1)), P(Cd(1, t))) < 1e-15);
  CHECK(dist(treegroups::apply(M::identity(), Cd(0.3, -2)), P(Cd(0.3, -2))) == 0);
  CHECK(dist(treegroups::apply(kInversion, P::infinity()), P(Cd(0))) == 0);
  CHECK(treegroups::apply(kInversion, Cd(0)).infinite);
}

TEST_CASE("normalization and projective equality") {
  const M m(Cd(2), Cd(0), Cd(0), Cd(2));
  CHECK(std::abs(m.det() - Cd(1)) < 1e-15);
  CHECK(distance_to_identity(m) < 1e-15);
  const M n(Cd(-1), Cd(0), Cd(0), Cd(-1));
  CHECK(distance_to_identity(n) == 0);
  CHECK_THROWS_AS(M(Cd(1), Cd(2), Cd(2), Cd(4)), std::invalid_argument);
  Rng rng(1);
  for (int i = 0; i < 200; ++i) CHECK(std::abs(gen::moebius(rng).det() - Cd(1)) < 1e-12);
}

TEST_CASE("classify examples") {
  CHECK(classify(vertical_translation(1.0)).kind == MoebiusKind::parabolic);
  const M rot(std::polar(1.0, std::numbers::pi / 4), Cd(0), Cd(0), std::polar(1.0, -std::numbers::pi / 4));
  const auto c = classify(rot);
  CHECK(c.kind == MoebiusKind::elliptic);
  CHECK(c.angle == doctest::Approx(std::numbers::pi / 2));
  CHECK(distance_to_identity(power(rot, 4)) < 1e-12);
  CHECK(classify(M(Cd(2), Cd(0), Cd(0), Cd(0.5))).kind == MoebiusKind::loxodromic);
  CHECK(classify(M::identity()).kind == MoebiusKind::identity);
}

TEST_CASE("classify is conjugation invariant") {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const M m = gen::moebius(rng);
    const M p = gen::moebius(rng, 1.0);
    const auto a = classify(m), b = classify(p * m * p.inverse());
    if (std::abs(std::abs(m.trace().real()) - 2) < 1e-6 && std::abs(m.trace().imag()) < 1e-6) continue;
    CHECK(a.kind == b.kind);
    if (a.kind == MoebiusKind::elliptic) CHECK(a.angle == doctest::Approx(b.angle).epsilon(1e-8));
  }
  for (int i = 0; i < 200; ++i) {
    const double angle = rng.uniform_real(0.1, 3.0);
    const auto c = classify(gen::elliptic(rng, angle));
    CHECK(c.kind == MoebiusKind::elliptic);
    CHECK(c.angle == doctest::Approx(angle).epsilon(1e-8));
  }
}

TEST_CASE("fixed points examples") {
  const auto fp = fixed_points(vertical_translation(2.0));
  REQUIRE(fp.size() == 1);
  CHECK(fp[0].infinite);
  const auto d = fixed_points(M(Cd(3), Cd(0), Cd(0), Cd(1.0 / 3)));
  REQUIRE(d.size() == 2);
  CHECK(((dist(d[0], P(Cd(0))) < 1e-15 && d[1].infinite) || (dist(d[1], P(Cd(0))) < 1e-15 && d[0].infinite)));
  const auto inv = fixed_points(kInversion);
  REQUIRE(inv.size() == 2);
  CHECK(std::min(dist(inv[0], P(Cd(1))), dist(inv[0], P(Cd(-1)))) < 1e-15);
  CHECK(dist(inv[0], inv[1]) > 1);
  CHECK_THROWS_AS(fixed_points(M::identity()), std::invalid_argument);
}

TEST_CASE("fixed points are fixed") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const M m = gen::moebius(rng);
    if (classify(m).kind == MoebiusKind::identity) continue;
    for (const auto& p : fixed_points(m)) CHECK(dist(treegroups::apply(m, p), p) < 1e-9);
  }
}

TEST_CASE("apply respects composition") {
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const M m = gen::moebius(rng), n = gen::moebius(rng);
    const P z(gen::complex(rng));
    CHECK(dist(treegroups::apply(m * n, z), treegroups::apply(m, treegroups::apply(n, z))) <= 1e-9);
  }
}

TEST_CASE("circle_image examples") {
  const auto unit = Cir::from_center_radius(Cd(0), 1.0);
  const auto two = circle_image(scaling(Cd(2)), unit);
  CHECK(two.center() == Cd(0));
  CHECK(two.radius() == doctest::Approx(2));
  CHECK(circle_distance(circle_image(M::identity(), unit), unit) == 0);

  const auto line = circle_image(kInversion, Cir::from_center_radius(Cd(1), 1.0));
  CHECK(line.is_line());
  for (double y : {-3.0, 0.0, 0.5, 10.0}) CHECK(std::abs(line.value(Cd(0.5, y))) < 1e-14);
  CHECK(std::abs(line.value(Cd(0.6, 0))) > 1e-3);
}

TEST_CASE("circle_image: composition, inverse and sampled points") {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const M m = gen::moebius(rng), n = gen::moebius(rng);
    const Cir c = gen::circle(rng);
    CHECK(circle_distance(circle_image(m * n, c), circle_image(m, circle_image(n, c))) <= 1e-9 * (1 + max_abs_entry(m * n) * max_abs_entry(m * n)));
    CHECK(circle_distance(circle_image(m.inverse(), circle_image(m, c)), c) <= 1e-9 * (1 + std::pow(max_abs_entry(m), 4)));
    const Cir img = circle_image(m, c);
    CHECK(std::abs(std::norm(img.B()) - img.A() * img.D() - 1) < 1e-9);
    for (int k = 0; k < 5; ++k) {
      const Cd z = c.center() + std::polar(c.radius(), rng.uniform_real(0, 2 * std::numbers::pi));
      const P w = treegroups::apply(m, z);
      if (w.infinite) {
        CHECK(std::abs(img.A()) < 1e-9);
        continue;
      }
      // residual of the normalized form scaled to a distance
      CHECK(std::abs(img.value(w.z)) / (1 + std::abs(img.A()) * std::abs(w.z) + std::abs(img.B())) <= 1e-9 * (1 + std::norm(w.z)));
    }
  }
}

TEST_CASE("disk images keep points on their side") {
  Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    const M m = gen::moebius(rng);
    const Dk d{gen::circle(rng), rng.uniform_int(0, 1) ? 1 : -1};
    const Dk img = disk_image(m, d);
    for (int k = 0; k < 5; ++k) {
      const Cd z = gen::complex(rng, 3);
      if (std::abs(d.circle.value(z)) < 1e-3) continue;
      const P w = treegroups::apply(m, z);
      if (w.infinite) continue;
      CHECK(disk_contains(d, P(z)) == disk_contains(img, w));
    }
  }
}

TEST_CASE("disks_disjoint examples") {
  const Dk unit = Dk::inside(Cd(0), 1.0);
  const auto far = disks_disjoint(unit, Dk::inside(Cd(3), 1.0));
  CHECK(far.disjoint);
  CHECK(far.margin == doctest::Approx(1));
  const auto touch = disks_disjoint(unit, Dk::inside(Cd(1), 1.0));
  CHECK_FALSE(touch.disjoint);
  CHECK(touch.margin == doctest::Approx(-1));
  const auto nested = disks_disjoint(unit, Dk::inside(Cd(0.1), 0.2));
  CHECK_FALSE(nested.disjoint);
  CHECK(nested.margin < 0);
  const auto inside_complement = disks_disjoint(Dk::inside(Cd(0.1), 0.2), unit.complement());
  CHECK(inside_complement.disjoint);
  CHECK(inside_complement.margin == doctest::Approx(0.7));
  const Dk half{Cir::line(Cd(2), Cd(1)), 1};  // Re z >= 2
  CHECK(disks_disjoint(unit, half).margin == doctest::Approx(1));
  CHECK_FALSE(disks_disjoint(unit.complement(), half).disjoint);
}

TEST_CASE("disks_disjoint is symmetric") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const Dk a{gen::circle(rng), rng.uniform_int(0, 1) ? 1 : -1};
    const Dk b{gen::circle(rng), rng.uniform_int(0, 1) ? 1 : -1};
    const auto ab = disks_disjoint(a, b), ba = disks_disjoint(b, a);
    CHECK(ab.disjoint == ba.disjoint);
    if (std::isfinite(ab.margin)) CHECK(ab.margin == doctest::Approx(ba.margin));
  }
}

TEST_CASE("axis_standardizer") {
  const M rot(Cd(0, 1), Cd(0), Cd(0), Cd(0, -1));
  const M q = axis_standardizer(rot, P(Cd(0)));
  CHECK(dist(treegroups::apply(q, Cd(0)), P(Cd(0))) < 1e-15);
  CHECK(treegroups::apply(q, P::infinity()).infinite);

  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const M m = gen::elliptic(rng, rng.uniform_real(0.2, 3.0));
    const auto fps = fixed_points(m);
    const M s = axis_standardizer(m, fps[0], std::optional<P>(P(Cd(0.3, 0.4))));
    const M diag = s * m * s.inverse();
    CHECK(std::abs(diag.b()) + std::abs(diag.c()) <= 1e-10 * (1 + std::pow(max_abs_entry(s), 2)));
    CHECK(dist(treegroups::apply(s, fps[0]), P(Cd(0))) < 1e-8);
    CHECK(dist(treegroups::apply(s, fps[1]), P::infinity()) < 1e-6);
    CHECK(dist(treegroups::apply(s, Cd(0.3, 0.4)), P(Cd(1))) < 1e-9);
    const M swapped = axis_standardizer(m, fps[1], std::optional<P>(P(Cd(0.3, 0.4))));
    CHECK(dist(treegroups::apply(swapped * s.inverse(), Cd(2)), P(Cd(0.5))) < 1e-8);
  }
  CHECK_THROWS_AS(axis_standardizer(vertical_translation(1.0), P::infinity()), std::invalid_argument);
}

TEST_CASE("perpendicular circles") {
  CHECK(perpendicular_circle_at(1.0, 0.0).radius() == doctest::Approx(1));
  CHECK(perpendicular_circle_at(1.0, std::log(2.0)).radius() == doctest::Approx(0.5));
  CHECK(perpendicular_circle_at(2.0, 1.0).radius() == doctest::Approx(2 / std::exp(1.0)));
  CHECK_THROWS_AS(perpendicular_circle_at(1.0, -1.0), std::invalid_argument);
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const double h = rng.uniform_real(0.1, 5), l1 = rng.uniform_real(0, 3), l2 = rng.uniform_real(0, 3);
    CHECK(perpendicular_circle_at(h, l1 + l2).radius() ==
          doctest::Approx(perpendicular_circle_at(h * std::exp(-l1), l2).radius()).epsilon(1e-12));
  }
}

TEST_CASE("vertical translations") {
  CHECK(distance_to_identity(vertical_translation(0.0)) == 0);
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    const double s = rng.uniform_real(-5, 5), t = rng.uniform_real(-5, 5);
    CHECK(projective_distance(vertical_translation(s) * vertical_translation(t), vertical_translation(s + t)) < 1e-14);
  }
}

TEST_CASE("quad precision products keep determinant one") {
  // depth-3 generators have entries near 2e4; long products must stay usable
  const MoebiusMap a(Complex<Real>(Real(20000)), Complex<Real>(Real(1)), Complex<Real>(Real(1)),
                     Complex<Real>((Real(1) + Real(1)) / Real(20000)));
  MoebiusMap acc;
  for (int i = 0; i < 2; ++i) acc = acc * a * a.inverse() * a;
  CHECK(to_double(abs(acc.det() - Complex<Real>(1))) < 1e-10);
  CHECK(to_double(distance_to_identity(acc * power(a, -2))) < 1e-8);
}

TEST_CASE("serialization arrays") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const M m = gen::moebius(rng);
    CHECK(moebius_from_array(to_array(m)).matrix() == m.matrix());
  }
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "gen.hpp"
#include "treegroups/builder.hpp"
#include "treegroups/io.hpp"
#include "treegroups/triangle.hpp"
#include "treegroups/verify.hpp"

using namespace treegroups;

namespace {

using Cr = Complex<Real>;

double d(const Real& x) { return to_double(x); }

std::string dump(const RepTable& rep) { return rep_to_json(rep).dump(); }

Circle radius_circle(const Real& r) { return Circle::from_center_radius(Cr(0), r); }

double circle_gap(const Circle& a, const Circle& b) {
  const Real plus = abs(a.A() - b.A()) + abs(a.B() - b.B()) + abs(a.D() - b.D());
  const Real minus = abs(a.A() + b.A()) + abs(a.B() + b.B()) + abs(a.D() + b.D());
  return d(plus < minus ? plus : minus);
}

// z -> c + r^2 / (z + c): |z + c| = r outside onto |w - c| = r inside
MoebiusMap pairing(double c, double r) {
  return MoebiusMap(Cr(Real(c)), Cr(Real(r * r + c * c)), Cr(1), Cr(Real(c)));
}

StackInput schottky_toy(double c) {
  return {{pairing(c, 0.3), MoebiusMap(Cr(0, Real(c)), Cr(Real(0.09 - c * c)), Cr(1), Cr(0, Real(c)))},
          Disk::inside(Cr(0), Real(1))};
}

}  // namespace

TEST_CASE("level 1") {
  const auto rep = build_level1();
  CHECK(rep.depth == 1);
  CHECK(rep.vertices.size() == 3);
  CHECK(check_relators(rep).max_residual <= 1e-10);
  const auto& root = rep.vertex(VertexAddress::root());
  REQUIRE(root.delta_disk);
  CHECK(disk_contains(*root.delta_disk, Point(Cr(0))));
  CHECK(circle_gap(root.delta_disk->circle, *root.plane_circle) == 0);
  const auto lp = limit_points(rep, VertexAddress::root(), 10000, 30, 7);
  REQUIRE(lp.max_distance);
  CHECK(*lp.max_distance <= 1e-3);
  CHECK(dump(build(1)) == dump(rep));
}

TEST_CASE("one extension step in the local frame") {
  const double L = 4.0;
  const auto rep = extend_one_level(build_level1(), L);
  CHECK(rep.depth == 2);
  CHECK(rep.level_L(2) == L);
  for (const auto& z : vertices_at_depth(1)) {
    const auto& data = rep.vertex(z);
    REQUIRE(data.frame);
    const MoebiusMap& f = *data.frame;
    CHECK(circle_gap(circle_image(f, *data.plane_circle), radius_circle(Real(1))) < 1e-12);
    CHECK(circle_gap(circle_image(f, *data.combination_circle), radius_circle(exp(Real(L) / 2))) < 1e-9);
    CHECK(circle_gap(circle_image(f, *rep.vertex(z.parent()).plane_circle), radius_circle(exp(Real(L)))) < 1e-6);
    const Point alpha = fixed_point_inside(rep.matrix(z), *rep.vertex(z.parent()).delta_disk);
    CHECK(d(chordal_distance(apply(f, alpha), Point(Cr(0)))) < 1e-12);
    for (int i = 1; i <= 2; ++i) {
      const auto c = classify(rep.matrix(z.child(i)));
      CHECK(c.kind == MoebiusKind::elliptic);
      CHECK(d(c.angle) == doctest::Approx(2 * std::numbers::pi / 5));
    }
    CHECK(d(projective_distance(rep.matrix(z.child(2)) * rep.matrix(z.child(1)), rep.matrix(z))) <= 1e-10);
  }
  CHECK_THROWS_AS(extend_one_level(build_level1(), 0.0), std::invalid_argument);
}

TEST_CASE("extension never changes existing data") {
  const auto rep1 = build_level1();
  const auto rep2 = extend_one_level(rep1, 4.0);
  for (const auto& [v, data] : rep1.vertices) {
    if (!data.matrix) continue;
    CHECK(rep2.matrix(v).matrix() == data.matrix->matrix());
  }
  CHECK(dump(rep2.restricted_to(1)) == dump(rep1));
}

TEST_CASE("build(3): restriction, orders, edge compatibility, nesting") {
  const auto& rep = fixtures::depth3();
  CHECK(rep.depth == 3);
  CHECK(rep.vertices.size() == 15);
  for (int k = 2; k <= 3; ++k) {
    REQUIRE(rep.level_L(k));
    CHECK(*rep.level_L(k) <= 64);
  }
  CHECK(dump(rep.restricted_to(2)) == dump(fixtures::depth2()));
  CHECK(dump(rep.restricted_to(1)) == dump(build_level1()));

  for (const auto& v : vertices_up_to(3)) {
    const auto c = classify(rep.matrix(v));
    CHECK(c.kind == MoebiusKind::elliptic);
    CHECK(d(c.angle) == doctest::Approx(2 * std::numbers::pi / generator_order(v)).epsilon(1e-9));
  }
  for (const auto& v : vertices_up_to(2))
    CHECK(d(projective_distance(rep.matrix(v.child(2)) * rep.matrix(v.child(1)), rep.matrix(v))) <= 1e-8);

  const auto nest = check_nesting(rep, 1e-6);
  CHECK(nest.pass);
  CHECK(nest.min_margin >= 1e-6);
}

TEST_CASE("build is deterministic") { CHECK(dump(build(3)) == dump(fixtures::depth3())); }

TEST_CASE("auto tuning") {
  const auto base = build_level1();
  const auto res = auto_tune_level(base, {}, 4.0, 1.4, 64);
  CHECK(res.L <= 64);
  CHECK(res.ladder.back().pass);

  try {
    auto_tune_level(base, {}, 0.05, 1.4, 0.1);
    FAIL("expected TuningError");
  } catch (const TuningError& e) {
    CHECK_FALSE(e.ladder().empty());
    for (const auto& s : e.ladder()) CHECK_FALSE(s.pass);
    CHECK(std::string(e.what()).find("best L=") != std::string::npos);
  }
  CHECK_THROWS_AS(auto_tune_level(base, {}, 4.0, 1.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(auto_tune_level(base, {}, -1.0, 1.4, 64), std::invalid_argument);
}

TEST_CASE("old-side margin does not decrease along the ladder") {
  // empirical; a failure here is a flag for investigation
  double prev = -1;
  for (double L = 4.0; L <= 16; L *= 1.4) {
    const auto pi = check_precise_invariance(extend_one_level(fixtures::depth2(), L), 3, {});
    CHECK(pi.min_old >= prev - 1e-12);
    prev = pi.min_old;
  }
}

TEST_CASE("stacking toy Schottky groups") {
  const auto one = stack_parabolic({schottky_toy(0.5)}, 1.0);
  CHECK(one.offsets == std::vector<double>{0});
  CHECK(one.pass);

  const auto two = stack_parabolic({schottky_toy(0.5), schottky_toy(0.55)}, 1.0);
  CHECK(two.pass);
  CHECK(two.min_margin == doctest::Approx(2.0));
  CHECK(two.offsets[1] == doctest::Approx(4.0));

  const auto touching = stack_parabolic({schottky_toy(0.5), schottky_toy(0.55)}, 0.0);
  CHECK_FALSE(touching.pass);
  CHECK(touching.min_margin <= 1e-12);

  const auto three = stack_parabolic({schottky_toy(0.5), schottky_toy(0.55), schottky_toy(0.6)}, 0.5);
  CHECK(three.pair_margins.size() == 3);
  CHECK(three.pass);

  CHECK_THROWS_AS(stack_parabolic({{{}, Disk{Circle::line(Cr(0), Cr(1)), -1}}}, 1.0), std::invalid_argument);
}

TEST_CASE("stacked generators ping-pong into their translated supports") {
  Rng rng(31);
  const auto res = stack_parabolic({schottky_toy(0.5), schottky_toy(0.55)}, 1.0);
  for (std::size_t k = 0; k < res.generators.size(); ++k)
    for (const auto& g : res.generators[k])
      for (const auto& m : {g, g.inverse()})
        for (int i = 0; i < 200; ++i) {
          const auto z = gen::complex(rng, 20);
          const Point p(Cr(Real(z.real()), Real(z.imag())));
          if (disk_contains(res.supports[k], p)) continue;
          CHECK(disk_contains(res.supports[k], apply(m, p)));
        }
}

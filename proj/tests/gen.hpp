#pragma once

// Hand-rolled random generators for the property tests.

#include <complex>
#include <string>
#include <vector>

#include "treegroups/circle.hpp"
#include "treegroups/finite_group.hpp"
#include "treegroups/moebius.hpp"
#include "treegroups/rng.hpp"
#include "treegroups/word.hpp"

namespace gen {

using Cd = std::complex<double>;
using M = treegroups::Moebius<double>;
using Cir = treegroups::GeneralizedCircle<double>;

inline Cd complex(treegroups::Rng& rng, double r = 2.0) { return {rng.uniform_real(-r, r), rng.uniform_real(-r, r)}; }

// Entries bounded by r, determinant kept away from 0 by rejection.
inline M moebius(treegroups::Rng& rng, double r = 2.0) {
  for (;;) {
    const Cd a = complex(rng, r), b = complex(rng, r), c = complex(rng, r), d = complex(rng, r);
    if (std::abs(a * d - b * c) > 0.1) return M(a, b, c, d);
  }
}

inline Cir circle(treegroups::Rng& rng) {
  return Cir::from_center_radius(complex(rng), rng.uniform_real(0.1, 2.0));
}

inline M elliptic(treegroups::Rng& rng, double angle) {
  const M rot(std::polar(1.0, angle / 2), Cd(0), Cd(0), std::polar(1.0, -angle / 2));
  const M p = moebius(rng, 1.0);
  return p * rot * p.inverse();
}

// Freely reduced or not, exponents in [-3, 3] \ {0}.
inline treegroups::Word word(treegroups::Rng& rng, const std::vector<std::string>& gens, int max_len) {
  std::vector<treegroups::Syllable> syl;
  const long len = rng.uniform_int(0, max_len);
  for (long i = 0; i < len; ++i) {
    int e = static_cast<int>(rng.uniform_int(1, 3));
    if (rng.uniform_int(0, 1)) e = -e;
    syl.push_back({gens[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(gens.size()) - 1))], e});
  }
  return treegroups::Word(std::move(syl));
}

inline treegroups::Element element(treegroups::Rng& rng, const treegroups::FiniteGroup& h) {
  return static_cast<treegroups::Element>(rng.uniform_int(0, h.order() - 1));
}

}  // namespace gen

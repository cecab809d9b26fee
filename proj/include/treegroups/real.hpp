#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/float128.hpp>

namespace treegroups {

/// Scalar of the representation pipeline. Generator norms reach 1e4 at
/// depth 3, so double rounding alone leaves relator residuals near 1e-3.
using Real = boost::multiprecision::float128;

inline double to_double(const Real& x) { return static_cast<double>(x); }
inline double to_double(double x) { return x; }

}  // namespace treegroups

namespace treegroups {

/// Nearest value of the form hi + lo with hi, lo doubles; stored tables are
/// kept on this grid so that they serialize exactly as two doubles.
inline Real snap_double_double(const Real& x) {
  const double hi = static_cast<double>(x);
  const double lo = static_cast<double>(x - Real(hi));
  return Real(hi) + Real(lo);
}

}  // namespace treegroups

#pragma once

#include <optional>
#include <utility>

#include "treegroups/circle.hpp"
#include "treegroups/moebius.hpp"

namespace treegroups {

/// The (4,4,inf) triangle group <a, b | a^4, b^4> acting on the unit disk,
/// with b*a parabolic fixing 1.
struct Triangle44Inf {
  MoebiusMap a;
  MoebiusMap b;
  Circle invariant_circle;  ///< the unit circle
  Disk said_disk;           ///< the open unit disk side
};

Triangle44Inf build_44inf();

/// Normalizing frame for an elliptic (or loxodromic) map whose fixed points
/// are inverse with respect to `plane`: the fixed point on the <= 0 side of
/// `plane` goes to 0, the other to infinity, `plane` to the unit circle, and
/// `anchor` onto the positive real axis. Throws if the axis is not
/// perpendicular to the plane.
MoebiusMap standard_frame(const MoebiusMap& g0, const Circle& plane, const Point& anchor);

struct TriangleGenerators {
  MoebiusMap g1;
  MoebiusMap g2;
};

/// Default anchor: infinity, or 0 or 1 if those are fixed by g0.
Point default_anchor(const MoebiusMap& g0);

/// The (q,q,p) rotation pair in standard position: the plane is the unit
/// circle, g2 g1 is the rotation z -> exp(i theta) z (theta = +-2 pi/p), and
/// the fixed point of g1 inside the unit disk is on the positive real axis.
TriangleGenerators standard_qqp(int q, int p, const Real& theta);

/// Rotations g1, g2 of order q about the two base vertices of the (q,q,p)
/// triangle whose apex is the rotation center of g0, with g2 * g1 = g0, all
/// preserving `plane`. g0 must be a primitive rotation of order p whose axis
/// is perpendicular to `plane`; the triangle lives on the <= 0 side of the
/// plane's form. The first base vertex lies on the ray from the apex toward
/// `anchor` (default_anchor when not given).
TriangleGenerators build_qqp(int q, int p, const Circle& plane, const MoebiusMap& g0,
                             const std::optional<Point>& anchor = std::nullopt);

/// Fixed point of each generator inside `disk`.
std::pair<Point, Point> generator_alpha_points(const MoebiusMap& g1, const MoebiusMap& g2, const Disk& disk);

/// Fixed point of an elliptic map that lies inside `disk`; throws unless
/// exactly one does.
Point fixed_point_inside(const MoebiusMap& m, const Disk& disk);

}  // namespace treegroups

#pragma once

#include "treegroups/builder.hpp"

namespace fixtures {

inline const treegroups::RepTable& depth3() {
  static const treegroups::RepTable rep = treegroups::build(3);
  return rep;
}

inline const treegroups::RepTable& depth2() {
  static const treegroups::RepTable rep = treegroups::build(2);
  return rep;
}

}  // namespace fixtures

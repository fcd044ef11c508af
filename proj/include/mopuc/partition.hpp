#pragma once

#include "mopuc/linalg.hpp"

namespace mopuc {

// Disjoint left / center / right coordinate sets covering the ambient space.
struct SubspacePartition {
  IndexSubspace left, center, right;

  SubspacePartition() = default;
  SubspacePartition(IndexSubspace l, IndexSubspace c, IndexSubspace r);

  std::size_t ambient() const { return center.ambient(); }
  IndexSubspace left_center() const { return left.united(center); }
  IndexSubspace center_right() const { return center.united(right); }
};

// U = (u_lc (+) 1_R)(1_L (+) u_cr); u_lc acts on left_center() and u_cr on center_right(),
// both in increasing index order.
struct OverlapFactorization {
  SubspacePartition partition;
  Matrix u_lc, u_cr;

  Matrix left_factor() const;
  Matrix right_factor() const;
  Matrix product() const { return left_factor() * right_factor(); }
};

}  // namespace mopuc

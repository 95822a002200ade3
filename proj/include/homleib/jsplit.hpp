#pragma once

#include "homleib/roots.hpp"

namespace homleib {

// Partition of the root set by position relative to the squares ideal J:
//   lambda_J    : L_alpha contained in J
//   lambda_notJ : L_alpha meets J trivially
//   mixed       : neither (possible only above dimension 1)
struct JSplit {
  Subspace J;
  std::vector<Root> lambda_J;
  std::vector<Root> lambda_notJ;
  std::vector<Root> mixed;
  Subspace J_cap_H;
};

JSplit split_roots_by_J(const SplitDecomposition& d);

// Maximal length: every root space is one-dimensional.
bool check_maximal_length(const SplitDecomposition& d);

}  // namespace homleib

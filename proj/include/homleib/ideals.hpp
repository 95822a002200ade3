#pragma once

#include "homleib/connections.hpp"

namespace homleib {

// The ideal attached to one connection class [alpha]:
//   I_0 = span{ [L_beta, L_{-beta}] : beta in [alpha], -beta a root }  (inside H)
//   V   = sum of L_beta over beta in [alpha]
//   I   = I_0 + V, a phi-stable ideal.
struct IdealSummand {
  std::vector<Root> class_roots;
  Subspace I0;
  Subspace V;
  Subspace I;
};

// Builds the summand and re-verifies its claims (I0 inside H, I an ideal,
// phi(I) = I, dim I = dim I0 + dim V).  NotAClass when class_roots is not
// exactly one of the connection classes.
IdealSummand build_class_ideal(const SplitDecomposition& d, const std::vector<Root>& class_roots);

// [I_a, I_b] = 0 and [I_b, I_a] = 0 for all pairs of distinct summands.
IdentityReport check_pairwise_zero(const HomAlgebra& a, const std::vector<IdealSummand>& summands);

// L = U + sum of class ideals, where U is the coordinate complement (in the
// H basis) of H_0 = span{ [L_alpha, L_{-alpha}] : alpha in Lambda } inside H.
struct GlobalDecomposition {
  Subspace U;
  std::vector<IdealSummand> summands;
  bool covers = false;   // U + sum I = L (always true; re-verified)
  bool direct = false;   // see check_direct_sum
  std::vector<std::string> notes;
};

GlobalDecomposition global_decomposition(const SplitDecomposition& d);

// The sum is direct when the annihilator vanishes and L = [L,L]; verified by
// dimension count.  Returns the report (holds == direct-sum established).
IdentityReport check_direct_sum(const SplitDecomposition& d, const GlobalDecomposition& g);

// Necessary conditions for simplicity: a single connection class and
// H = span{ [L_alpha, L_{-alpha}] : alpha in Lambda }.
IdentityReport check_simple_necessary(const SplitDecomposition& d);

}  // namespace homleib

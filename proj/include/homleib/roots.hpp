#pragma once

#include <compare>
#include <vector>

#include "homleib/algebra.hpp"

namespace homleib {

// A root: the nonzero value vector (alpha(h_1),...,alpha(h_r)) of a linear
// functional on H in the user-chosen ordered basis of H.
struct Root {
  Vec values;
  auto operator<=>(const Root&) const = default;
};
std::string root_str(const Root& r);  // "(2)", "(2,-1/2)"

// Root-space decomposition of a split algebra with respect to an abelian,
// phi-stable H: L = H + sum of L_alpha where
//   L_alpha = { v : [v,h] = alpha(h) phi(v) for all h in H }.
struct SplitDecomposition {
  HomAlgebra algebra;
  std::vector<Vec> H_basis;          // ordered, user-supplied; defines root coords
  Subspace H;                        // canonical form of span(H_basis)
  std::vector<Root> roots;           // Lambda, sorted ascending
  std::vector<Subspace> root_spaces; // parallel to roots
  Matrix phiH;                       // phi restricted to H, in H_basis coords
  Matrix phiH_inv;

  int root_index(const Root& r) const;           // -1 when absent
  const Subspace& root_space(const Root& r) const;  // throws RootNotInLambda
  Subspace root_space_or_zero(const Vec& values) const;  // L_0 = H; absent -> 0
};

// Computes the decomposition.  Throws MathError with code
//   NotAbelian / NotPhiStable / DegenerateHBasis on a bad H,
//   HypothesisMissing when the algebra is not Hom-Leibniz or phi not regular,
//   HNotMaximal when the zero-weight space strictly contains span(H_basis),
//   NotSplit when the weight spaces fail to fill L (uncovered part reported).
SplitDecomposition decompose(const HomAlgebra& a, const std::vector<Vec>& h_basis);

// Re-verifies the decomposition laws on every pair of weight spaces:
//   phi(L_alpha) inside L_{alpha o phi^{-1}}            (one report per alpha)
//   [L_alpha, L_beta] inside L_{alpha o phi^{-1} + beta o phi^{-1}}
// with L_0 = H and target 0 when the sum functional is neither a root nor 0.
std::vector<IdentityReport> verify_split(const SplitDecomposition& d);

// alpha o phi^{-z} as a raw value vector (z may be negative).
Vec functional_twist(const SplitDecomposition& d, const Vec& values, long z);

// Same, but insists the result is a root or zero; anything else means the
// decomposition's orbit closure is broken (InternalInconsistency).
Vec root_phi_pow(const SplitDecomposition& d, const Vec& values, long z);

// The cycle alpha, alpha o phi^{-1}, alpha o phi^{-2}, ... back to alpha.
// Every element is a root (roots permute under the orbit map).
std::vector<Root> root_orbit(const SplitDecomposition& d, const Root& alpha);

// Is the set closed under negation?  is_symmetric checks all of Lambda;
// the subset form checks -alpha is again in the subset (not merely in Lambda).
bool is_symmetric(const SplitDecomposition& d);
bool is_symmetric_subset(const SplitDecomposition& d, const std::vector<Root>& subset);

// An h in H with alpha(h) != 0 and alpha(h) != beta(h); tries basis elements
// h_i, then h_i + t h_j for t = 1,2,...  alpha must be a root; beta may be a
// root or the zero functional.  Throws NotSeparable when alpha = beta or
// alpha = 0.
Vec find_separating_element(const SplitDecomposition& d, const Root& alpha, const Root& beta);

}  // namespace homleib

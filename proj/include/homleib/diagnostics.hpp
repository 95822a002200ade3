#pragma once

#include "homleib/ideals.hpp"

namespace homleib {

// { x : [x, L] = 0 and [L_alpha, x] = 0 for every alpha in Lambda^{not J} }.
Subspace lie_annihilator(const SplitDecomposition& d, const JSplit& js);

// Ideal test plus homogeneity: I = (I cap H) + sum over roots of (I cap L_alpha).
// Throws NotAnIdeal when I is not a phi-stable two-sided ideal.
IdentityReport check_ideal_homogeneous(const SplitDecomposition& d, const Subspace& ideal);

// H = sum over alpha in Lambda^{not J} of [L_alpha, L_{-alpha}]?
IdentityReport check_H_generated(const SplitDecomposition& d, const JSplit& js);

// Root-multiplicativity under maximal length.  Condition 1: alpha, beta in
// Lambda^{not J} with (alpha+beta) o phi^{-1} a root forces [L_alpha,L_beta] != 0.
// Condition 2 pairs alpha in Lambda^{not J} with gamma in Lambda^J and
// (alpha+gamma) o phi^{-1} in Lambda^J; the literal order [L_alpha, L_gamma]
// is identically zero whenever [L,J] = 0, so the effective reading used for
// verdicts is the swapped order [L_gamma, L_alpha] != 0.  Both are recorded.
struct RootMultInstance {
  Root alpha;        // Lambda^{not J} member
  Root other;        // the second root (either side)
  Root target;       // (alpha + other) o phi^{-1}
  int condition;     // 1 or 2
  bool literal_nonzero;
  bool swapped_nonzero;  // condition 2 only; mirrors literal for condition 1
};

struct RootMultReport {
  IdentityReport summary;  // holds = cond 1 and swapped cond 2 all nonzero
  std::vector<RootMultInstance> instances;
  bool literal_holds = true;   // with condition 2 read verbatim
  bool effective_holds = true; // with condition 2 swapped
};

RootMultReport check_root_multiplicative(const SplitDecomposition& d, const JSplit& js);

// Minimal nonempty subsets S of Lambda^J closed under
//   (i)  beta in S  =>  beta o phi^{-1} in S
//   (ii) beta in S, gamma in Lambda or gamma = 0, [L_beta, L_gamma] != 0
//        =>  (beta + gamma) o phi^{-1} in S.
// Each yields the root support of an ideal of L contained in J.  Requires
// maximal length and a vanishing annihilator (HypothesisMissing).
std::vector<std::vector<Root>> sub_ideals_of_J(const SplitDecomposition& d, const JSplit& js);

// Direct sum of L_beta over the nj-connection class of alpha inside Lambda^J;
// an ideal of L when [L,L] = L (HypothesisMissing otherwise, ClassMismatch
// when alpha is not in Lambda^J).  The H-part of such an ideal is zero.
Subspace class_J_ideal(const SplitDecomposition& d, const JSplit& js, const Root& alpha);

// Simplicity of (L, [.,.], phi): no phi-stable ideal other than 0, J, L,
// together with [L,L] != 0.
struct SimplicityVerdict {
  enum class Status { Simple, NotSimple, Inconclusive };
  Status status = Status::Inconclusive;
  std::vector<std::string> certificate;  // Simple: verified hypotheses
  std::optional<Subspace> witness;       // NotSimple: ideal outside {0, J, L}
  std::string witness_note;              // NotSimple without a subspace witness
  std::vector<std::string> reasons;      // Inconclusive: what is missing
};

// Decision procedure:
//   0. zero product  -> NotSimple.
//   1. deterministic probe ideals (closures of every L_alpha, of J, of the
//      annihilators, and of the minimal closed subsets of Lambda^J); any probe
//      outside {0, J, L} -> NotSimple with that witness.
//   2. under maximal length, certification: [L,L] = L, both annihilators zero,
//      Lambda^J and Lambda^{not J} symmetric, root-multiplicative (swapped
//      reading), each side all nj-connected, and the minimal closed subsets
//      of Lambda^J are none or exactly Lambda^J  -> Simple.
//   3. otherwise Inconclusive with the list of failed/unavailable hypotheses.
SimplicityVerdict decide_simplicity(const SplitDecomposition& d);

// Re-derives the ideal dichotomies on a given ideal I when the standing
// hypotheses hold (maximal length assumed):
//   - annihilator zero and I inside H          => I = 0
//   - [L,L]=L, root-mult., not-J side connected,
//     I not inside H+J                          => I = L
//   - [L,L]=L, Lie annihilator zero, root-mult.,
//     not-J side connected, I not inside J      => I = L
//   - [L,L]=L, annihilator zero, root-mult., both
//     sides symmetric, J side connected, 0 != I inside J
//                                               => I = J or J = I + K (ideal K)
// Inapplicable branches are skipped with a note.
IdentityReport check_ideal_dichotomies(const SplitDecomposition& d, const Subspace& ideal);

}  // namespace homleib

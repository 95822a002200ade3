#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homleib/errors.hpp"
#include "homleib/linalg.hpp"

namespace homleib {

// Finite-dimensional algebra over Q with bilinear bracket and a linear twist
// phi, given by structure constants on a fixed basis.  Value type; nothing is
// assumed about the bracket or phi until the check_* functions say so.
struct HomAlgebra {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;       // basis names, size dim
  std::vector<std::vector<Vec>> table;   // table[i][j] = [e_i, e_j], length dim
  Matrix phi;                            // dim x dim

  const Vec& bracket_basis(int i, int j) const { return table[i][j]; }
  Vec bracket(const Vec& x, const Vec& y) const;  // bilinear extension
  const std::string& label(int i) const { return labels[i]; }
  bool product_is_zero() const;
};

// Constructs an algebra with a zero table and identity phi; caller fills in.
HomAlgebra make_algebra(std::string name, int dim, std::vector<std::string> labels);

// Outcome of one identity check.  holds == false implies a witness whose
// residual, recomputed from the table, is nonzero (or an explanatory note for
// structural failures such as a singular phi).
struct Witness {
  std::vector<int> indices;  // basis indices that produced the failure
  Vec residual;
};

struct IdentityReport {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
};

// Hom-Leibniz identity [[y,z],phi(x)] = [[y,x],phi(z)] + [phi(y),[z,x]]
// brute-forced over all basis triples (y,z,x).
IdentityReport check_hom_leibniz(const HomAlgebra& a);

// phi invertible and phi([x,y]) = [phi(x),phi(y)] on all basis pairs.
IdentityReport check_regular(const HomAlgebra& a);

// Antisymmetry plus the cyclic identity
// [[x,y],phi(z)] + [[y,z],phi(x)] + [[z,x],phi(y)] = 0.
IdentityReport check_hom_lie(const HomAlgebra& a);

// Smallest subspace containing `s` that is closed under bracketing with L on
// either side and under phi and phi^{-1}.  (With phi regular, this is the
// smallest phi-stable two-sided ideal containing s.)
Subspace ideal_closure(const HomAlgebra& a, const Subspace& s);

// The ideal generated by squares [x,x]: seeded by polarization with
// span{[e_i,e_i]} and {[e_i,e_j]+[e_j,e_i]}, then ideal closure.  Verifies
// [L,J] = 0 afterwards and throws JNotLeftCentral when that fails (which
// means the input was not Hom-Leibniz).
Subspace compute_J(const HomAlgebra& a);

// Two-sided annihilator { x : [x,L] = [L,x] = 0 }.
Subspace annihilator(const HomAlgebra& a);

// Derived subalgebra span{ [e_i,e_j] }.
Subspace derived(const HomAlgebra& a);

// Semidirect sum L x (L/J) with bracket
// [(a,x+J),(b,y+J)] = ([a,y]-[b,x], [x,y]+J) and twist phi x phi-bar.
// The quotient is realized on the pivot-complement of J; basis order is
// first-component basis then quotient basis.  Output dim = 2 dim L - dim J.
HomAlgebra semidirect_product(const HomAlgebra& a);

// Yau twist: bracket'(x,y) = psi([x,y]), phi' = psi o phi.  psi must be an
// invertible bracket automorphism (NotAutomorphism) and must commute with phi
// so the twist stays regular (NotRegular).
HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& psi);

}  // namespace homleib

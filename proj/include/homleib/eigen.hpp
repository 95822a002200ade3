#pragma once

#include <utility>
#include <vector>

#include "homleib/linalg.hpp"

namespace homleib {

// Characteristic polynomial det(xI - m), monic, coefficients low-to-high
// degree (size n+1).  Faddeev-LeVerrier, exact over Q.
std::vector<Scalar> char_poly(const Matrix& m);

// All rational roots of the characteristic polynomial with their algebraic
// multiplicities, sorted ascending by value.
std::vector<std::pair<Scalar, int>> rational_eigenvalues(const Matrix& m);

// Common eigenspace piece of a family of commuting operators.
struct EigenPiece {
  Vec values;      // one eigenvalue per operator, in operator order
  Subspace space;  // nonzero
};

// Splits Q^n into joint rational eigenspaces of `ops` (all n x n).  Pieces
// are intersections of global eigenspaces kernel(op - lambda I), so they are
// invariant under every op even when intermediate refinements are not.
// Pieces need not span Q^n; ordering is deterministic (eigenvalues ascending,
// refined left to right).
std::vector<EigenPiece> simultaneous_eigenspaces(const std::vector<Matrix>& ops, int ambient);

}  // namespace homleib

#pragma once

#include <optional>

#include "homleib/jsplit.hpp"

namespace homleib {

// A connection from alpha to beta: roots alpha_1..alpha_k whose twisted
// partial sums
//   sigma_1 = alpha_1,  sigma_{i+1} = sigma_i o phi^{-1} + alpha_{i+1} o phi^{-1}
// satisfy sigma_1..sigma_{k-1} in Lambda, alpha_1 = alpha o phi^{-n} and
// sigma_k = end_sign * beta o phi^{-m}.  sigma_k itself need not be a root.
struct Connection {
  std::vector<Root> chain;   // alpha_1 .. alpha_k, all roots
  std::vector<Vec> sums;     // sigma_1 .. sigma_k (value vectors)
  int start_shift = 0;       // n
  int end_shift = 0;         // m
  int end_sign = 1;          // +1 or -1
};

// Shortest connection (BFS over the root set, deterministic tie-breaks), or
// nullopt when none exists.  Throws RootNotInLambda for non-roots.
std::optional<Connection> connected(const SplitDecomposition& d, const Root& alpha, const Root& beta);

// Replays a certificate from scratch; false on any mismatch.
bool verify_connection(const SplitDecomposition& d, const Root& alpha, const Root& beta,
                       const Connection& c);

// Partition of Lambda into connection classes.  Asserts that reachability is
// an equivalence (symmetric + transitive) before returning; classes are
// ordered by their smallest root, roots within a class ascending.
struct RootPartition {
  std::vector<std::vector<Root>> classes;
  int class_of(const Root& r) const;  // -1 when absent
};
RootPartition connection_classes(const SplitDecomposition& d);

// Connections through the complement of J: every link alpha_2..alpha_k lies
// in Lambda^{not J} and every partial sum sigma_1..sigma_k stays on the common
// side of alpha and beta.  ClassMismatch when alpha, beta are not both in
// Lambda^J or both in Lambda^{not J}.
std::optional<Connection> nj_connected(const SplitDecomposition& d, const JSplit& js,
                                       const Root& alpha, const Root& beta);

bool verify_nj_connection(const SplitDecomposition& d, const JSplit& js, const Root& alpha,
                          const Root& beta, const Connection& c);

enum class JSide { J, NotJ };

// Classes of the side's roots under nj-connectivity.  Enforces the standing
// hypotheses under which the relation is an equivalence: Lambda^{not J}
// symmetric, and for the J side additionally [L,L] = L and Lambda^J symmetric
// (HypothesisMissing otherwise).
RootPartition nj_classes(const SplitDecomposition& d, const JSplit& js, JSide side);

}  // namespace homleib

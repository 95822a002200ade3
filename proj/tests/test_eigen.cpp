#include <doctest.h>

#include <map>
#include <random>

#include "corpus.hpp"
#include "homleib/eigen.hpp"

using namespace homleib;
using testutil::q;
using testutil::qvec;

namespace {

Matrix mat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vec> rs;
  for (const auto& r : rows) rs.push_back(qvec(r));
  return Matrix::from_rows(rs, rs.empty() ? 0 : static_cast<int>(rs[0].size()));
}

Matrix diag(const std::vector<std::string>& entries) {
  Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = q(entries[i]);
  return m;
}

// p evaluated at the matrix argument (Horner).
Matrix eval_poly_at(const std::vector<Scalar>& p, const Matrix& m) {
  Matrix acc(m.rows(), m.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * m;
    for (int i = 0; i < m.rows(); ++i) acc.at(i, i) += *it;
  }
  return acc;
}

}  // namespace

TEST_CASE("characteristic polynomial oracles") {
  // diag(2,3): (x-2)(x-3) = 6 - 5x + x^2.
  CHECK(char_poly(diag({"2", "3"})) == std::vector<Scalar>{Scalar(6), Scalar(-5), Scalar(1)});
  // Swap matrix: x^2 - 1.
  CHECK(char_poly(mat({{"0", "1"}, {"1", "0"}})) ==
        std::vector<Scalar>{Scalar(-1), Scalar(0), Scalar(1)});
  // 0x0 edge: the empty product is the constant 1.
  CHECK(char_poly(Matrix(0, 0)) == std::vector<Scalar>{Scalar(1)});
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 3;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = Scalar(num(gen)) / den(gen);
    CHECK(eval_poly_at(char_poly(m), m).is_zero());
  }
}

TEST_CASE("rational eigenvalues oracles") {
  using EV = std::vector<std::pair<Scalar, int>>;
  CHECK(rational_eigenvalues(diag({"2", "-2", "0"})) ==
        EV{{Scalar(-2), 1}, {Scalar(0), 1}, {Scalar(2), 1}});
  CHECK(rational_eigenvalues(mat({{"0", "1"}, {"1", "0"}})) == EV{{Scalar(-1), 1}, {Scalar(1), 1}});
  // Rotation has no rational (or real) eigenvalues.
  CHECK(rational_eigenvalues(mat({{"0", "-1"}, {"1", "0"}})).empty());
  // Jordan block: eigenvalue 1 with algebraic multiplicity 2.
  CHECK(rational_eigenvalues(mat({{"1", "1"}, {"0", "1"}})) == EV{{Scalar(1), 2}});
  // Fractional eigenvalues exercise the integer-normalization path.
  CHECK(rational_eigenvalues(diag({"1/2", "1/3"})) ==
        EV{{Scalar(1) / 3, 1}, {Scalar(1) / 2, 1}});
  // Mixed rational/irrational spectrum: x^2 - 2 contributes nothing rational.
  const Matrix m = mat({{"0", "2", "0"}, {"1", "0", "0"}, {"0", "0", "5"}});
  CHECK(rational_eigenvalues(m) == EV{{Scalar(5), 1}});
}

TEST_CASE("eigenvalues of conjugated diagonal matrices") {
  // A = P D P^{-1} must report exactly D's entries with multiplicities.
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2), pick(0, 3);
  const std::vector<Scalar> pool = {Scalar(0), Scalar(1), Scalar(-2), Scalar(1) / 2};
  for (int t = 0; t < 10; ++t) {
    const int n = 3;
    std::map<Scalar, int> want;
    Matrix d(n, n);
    for (int i = 0; i < n; ++i) {
      d.at(i, i) = pool[pick(gen)];
      ++want[d.at(i, i)];
    }
    Matrix p(n, n);
    std::optional<Matrix> pinv;
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.at(i, j) = Scalar(num(gen)) / den(gen);
      pinv = p.inverse();
    } while (!pinv);
    const Matrix a = p * d * (*pinv);
    std::map<Scalar, int> got;
    for (const auto& [lam, mult] : rational_eigenvalues(a)) got[lam] = mult;
    CHECK(got == want);
    // Geometric eigenspace of each eigenvalue matches its multiplicity here
    // (diagonalizable), and kernel vectors are genuine eigenvectors.
    for (const auto& [lam, mult] : rational_eigenvalues(a)) {
      Matrix shifted = a;
      for (int i = 0; i < n; ++i) shifted.at(i, i) -= lam;
      const Subspace es = kernel(shifted);
      CHECK(es.dim() == mult);
      for (const Vec& v : es.basis_vectors()) CHECK(a.apply(v) == vec_scale(lam, v));
    }
  }
}

TEST_CASE("simultaneous eigenspaces of commuting operators") {
  // Two commuting diagonal operators split Q^3 by value pairs.
  const Matrix a = diag({"1", "1", "2"});
  const Matrix b = diag({"3", "4", "4"});
  const auto pieces = simultaneous_eigenspaces({a, b}, 3);
  REQUIRE(pieces.size() == 3);
  for (const auto& p : pieces) {
    CHECK(p.space.dim() == 1);
    for (const Vec& v : p.space.basis_vectors()) {
      CHECK(a.apply(v) == vec_scale(p.values[0], v));
      CHECK(b.apply(v) == vec_scale(p.values[1], v));
    }
  }
  // Deterministic order: values ascending lexicographically per refinement.
  CHECK(pieces[0].values == qvec({"1", "3"}));
  CHECK(pieces[1].values == qvec({"1", "4"}));
  CHECK(pieces[2].values == qvec({"2", "4"}));
}

TEST_CASE("simultaneous eigenspaces stay invariant under every operator") {
  // A pair whose naive sequential refinement could break invariance: the
  // second operator permutes the first one's eigenvectors inside a piece.
  const Matrix a = diag({"1", "1", "5"});
  const Matrix b = mat({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "2"}});
  REQUIRE((a * b) == (b * a));
  const auto pieces = simultaneous_eigenspaces({a, b}, 3);
  REQUIRE(pieces.size() == 3);
  int covered = 0;
  for (const auto& p : pieces) {
    covered += p.space.dim();
    for (const Vec& v : p.space.basis_vectors()) {
      CHECK(a.apply(v) == vec_scale(p.values[0], v));
      CHECK(b.apply(v) == vec_scale(p.values[1], v));
    }
  }
  CHECK(covered == 3);
}

TEST_CASE("simultaneous eigenspaces may not cover the space") {
  const Matrix rot = mat({{"0", "-1"}, {"1", "0"}});
  CHECK(simultaneous_eigenspaces({rot}, 2).empty());
}

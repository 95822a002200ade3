#pragma once

#include <optional>
#include <vector>

#include "homleib/rational.hpp"

namespace homleib {

// --- Vec helpers -----------------------------------------------------------

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
Vec vec_neg(const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);
std::string vec_str(const Vec& v);  // "(a, b, ...)"

// --- Matrix ----------------------------------------------------------------

// Dense rational matrix, row-major.  Always rectangular.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);  // zero-filled
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix from_cols(const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  std::vector<Vec> rows_as_vecs() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Vec apply(const Vec& x) const;  // this * x (column convention)
  Matrix pow(long e) const;       // square matrices, e >= 0

  Scalar trace() const;
  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix&) const = default;

  // Gauss-Jordan inverse; nullopt when singular.
  std::optional<Matrix> inverse() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

// Reduced row echelon form: pivots are 1, pivot columns are cleared above and
// below, rows of zeros sink to the bottom.  Canonical for the row space.
struct Rref {
  Matrix reduced;           // same shape as the input
  std::vector<int> pivots;  // pivot column per nonzero row, strictly increasing
};
Rref rref(const Matrix& m);

int rank(const Matrix& m);

// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// --- Subspace ---------------------------------------------------------------

// Subspace of Q^n held as a canonical RREF basis (rows).  Two subspaces are
// equal iff their stored bases are identical, so operator== is structural.
class Subspace {
 public:
  Subspace() = default;            // zero subspace of the 0-dim space
  explicit Subspace(int ambient);  // zero subspace
  static Subspace span(int ambient, const std::vector<Vec>& generators);
  static Subspace full(int ambient);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  const Matrix& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }
  std::vector<Vec> basis_vectors() const { return basis_.rows_as_vecs(); }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace intersect(const Subspace& other) const;
  Subspace map(const Matrix& m) const;  // span{ m * b : b basis }

  // Coordinate-subspace complement: span{ e_i : i not a pivot column }.
  // Deterministic; used for "fill out the rest of the space" constructions.
  Subspace pivot_complement() const;

  bool operator==(const Subspace&) const = default;

 private:
  int ambient_ = 0;
  Matrix basis_;  // dim x ambient, RREF with zero rows dropped
  std::vector<int> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);

// Kernel of m as a canonical subspace of Q^cols.
Subspace kernel(const Matrix& m);

// Coordinates of v in the ordered basis `basis` (vectors of length ambient),
// or nullopt when v is outside their span.
std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v);

}  // namespace homleib

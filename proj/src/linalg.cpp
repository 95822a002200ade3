#include "homleib/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "homleib/errors.hpp"

namespace homleib {

std::string err_code_name(ErrCode c) {
  switch (c) {
    case ErrCode::DimensionMismatch: return "DimensionMismatch";
    case ErrCode::DegenerateHBasis: return "DegenerateHBasis";
    case ErrCode::MissingH: return "MissingH";
    case ErrCode::NotAbelian: return "NotAbelian";
    case ErrCode::NotPhiStable: return "NotPhiStable";
    case ErrCode::NotSplit: return "NotSplit";
    case ErrCode::HNotMaximal: return "HNotMaximal";
    case ErrCode::JNotLeftCentral: return "JNotLeftCentral";
    case ErrCode::NotAutomorphism: return "NotAutomorphism";
    case ErrCode::NotRegular: return "NotRegular";
    case ErrCode::RootNotInLambda: return "RootNotInLambda";
    case ErrCode::ClassMismatch: return "ClassMismatch";
    case ErrCode::HypothesisMissing: return "HypothesisMissing";
    case ErrCode::NotAClass: return "NotAClass";
    case ErrCode::NotAnIdeal: return "NotAnIdeal";
    case ErrCode::NotSeparable: return "NotSeparable";
    case ErrCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

Scalar parse_rational(const std::string& text) {
  auto fail = [&](const std::string& msg) -> Scalar {
    throw ParseError(ParseError::Kind::NonRational, "", "'" + text + "': " + msg);
  };
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) return fail("not an integer or p/q fraction");
    return Scalar(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return fail("not an integer or p/q fraction");
  Int n(num), d(den);
  if (d == 0) return fail("zero denominator");
  // The backend's (num, den) constructor rejects negative denominators;
  // normalize the sign here so "1/-2" parses as -1/2.
  if (d < 0) { n = -n; d = -d; }
  return Scalar(n, d);
}

std::string rational_str(const Scalar& value) { return value.str(); }

// --- Vec helpers -------------------------------------------------------------

static void require_same_len(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw MathError(ErrCode::DimensionMismatch,
                    "vector lengths " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vec vec_add(const Vec& a, const Vec& b) {
  require_same_len(a, b);
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require_same_len(a, b);
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Vec vec_neg(const Vec& v) { return vec_scale(Scalar(-1), v); }

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Scalar(0)); }

Vec unit_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rational_str(v[i]);
  }
  os << ")";
  return os.str();
}

// --- Matrix ------------------------------------------------------------------

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Scalar(0)) {
  if (rows < 0 || cols < 0) throw MathError(ErrCode::DimensionMismatch, "negative matrix shape");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw MathError(ErrCode::DimensionMismatch, "ragged rows");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      throw MathError(ErrCode::DimensionMismatch, "ragged columns");
    for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Vec> Matrix::rows_as_vecs() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw MathError(ErrCode::DimensionMismatch, "matrix product shapes");
  Matrix p(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw MathError(ErrCode::DimensionMismatch, "matrix sum shapes");
  Matrix s(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s.at(i, j) = at(i, j) + rhs.at(i, j);
  return s;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw MathError(ErrCode::DimensionMismatch, "matrix difference shapes");
  Matrix s(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s.at(i, j) = at(i, j) - rhs.at(i, j);
  return s;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw MathError(ErrCode::DimensionMismatch, "matrix-vector shapes");
  Vec y(rows_, Scalar(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

Matrix Matrix::pow(long e) const {
  if (rows_ != cols_) throw MathError(ErrCode::DimensionMismatch, "pow of non-square matrix");
  if (e < 0) throw MathError(ErrCode::DimensionMismatch, "negative power");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Scalar Matrix::trace() const {
  Scalar t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const int n = rows_;
  // Gauss-Jordan on [this | I].
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (aug.at(i, c) != 0) { p = i; break; }
    if (p < 0) return std::nullopt;  // rank deficient
    if (p != r)
      for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(p, j), aug.at(r, j));
    const Scalar inv = Scalar(1) / aug.at(r, c);
    for (int j = 0; j < 2 * n; ++j) aug.at(r, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || aug.at(i, c) == 0) continue;
      const Scalar f = aug.at(i, c);
      for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(r, j);
    }
    ++r;
  }
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// --- RREF and friends --------------------------------------------------------

Rref rref(const Matrix& m) {
  Matrix a = m;
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    const Scalar inv = Scalar(1) / a.at(r, c);
    for (int j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const Scalar f = a.at(i, c);
      for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw MathError(ErrCode::DimensionMismatch, "solve shapes");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const Rref rr = rref(aug);
  Vec x = zero_vec(a.cols());
  for (size_t k = 0; k < rr.pivots.size(); ++k) {
    if (rr.pivots[k] == a.cols()) return std::nullopt;  // pivot in the rhs column
    x[rr.pivots[k]] = rr.reduced.at(static_cast<int>(k), a.cols());
  }
  return x;
}

// --- Subspace ----------------------------------------------------------------

Subspace::Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(int ambient, const std::vector<Vec>& generators) {
  for (const Vec& g : generators)
    if (static_cast<int>(g.size()) != ambient)
      throw MathError(ErrCode::DimensionMismatch, "generator length vs ambient dim");
  const Rref rr = rref(Matrix::from_rows(generators, ambient));
  Subspace s(ambient);
  std::vector<Vec> keep;
  for (size_t i = 0; i < rr.pivots.size(); ++i) keep.push_back(rr.reduced.row(static_cast<int>(i)));
  s.basis_ = Matrix::from_rows(keep, ambient);
  s.pivots_ = rr.pivots;
  return s;
}

Subspace Subspace::full(int ambient) {
  std::vector<Vec> rows;
  for (int i = 0; i < ambient; ++i) rows.push_back(unit_vec(ambient, i));
  return span(ambient, rows);
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw MathError(ErrCode::DimensionMismatch, "vector vs ambient dim");
  // Reduce v against the RREF basis; zero remainder means membership.
  Vec r = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    const int p = pivots_[i];
    if (r[p] == 0) continue;
    const Scalar f = r[p];  // pivot entries are 1
    for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  return vec_is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw MathError(ErrCode::DimensionMismatch, "subspace ambient dims");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw MathError(ErrCode::DimensionMismatch, "subspace ambient dims");
  std::vector<Vec> gens = a.basis_vectors();
  for (const Vec& v : b.basis_vectors()) gens.push_back(v);
  return Subspace::span(a.ambient_dim(), gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw MathError(ErrCode::DimensionMismatch, "subspace ambient dims");
  // Zassenhaus: row reduce [A|A; B|0]; rows with zero left half have right
  // halves spanning the intersection.
  const int n = ambient_;
  std::vector<Vec> rows;
  for (const Vec& v : basis_vectors()) {
    Vec w(2 * n);
    for (int j = 0; j < n; ++j) { w[j] = v[j]; w[n + j] = v[j]; }
    rows.push_back(std::move(w));
  }
  for (const Vec& v : other.basis_vectors()) {
    Vec w(2 * n, Scalar(0));
    for (int j = 0; j < n; ++j) w[j] = v[j];
    rows.push_back(std::move(w));
  }
  const Rref rr = rref(Matrix::from_rows(rows, 2 * n));
  std::vector<Vec> inter;
  for (size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] < n) continue;  // left half nonzero
    Vec right(n);
    for (int j = 0; j < n; ++j) right[j] = rr.reduced.at(static_cast<int>(i), n + j);
    inter.push_back(std::move(right));
  }
  return span(n, inter);
}

Subspace Subspace::map(const Matrix& m) const {
  std::vector<Vec> img;
  for (const Vec& v : basis_vectors()) img.push_back(m.apply(v));
  return span(m.rows(), img);
}

Subspace Subspace::pivot_complement() const {
  std::vector<Vec> gens;
  size_t k = 0;
  for (int i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) { ++k; continue; }
    gens.push_back(unit_vec(ambient_, i));
  }
  return span(ambient_, gens);
}

Subspace kernel(const Matrix& m) {
  const Rref rr = rref(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(n);
    v[j] = 1;
    for (size_t i = 0; i < rr.pivots.size(); ++i)
      v[rr.pivots[i]] = -rr.reduced.at(static_cast<int>(i), j);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);  // re-canonicalized
}

std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve(Matrix::from_cols(basis, static_cast<int>(v.size())), v);
}

}  // namespace homleib

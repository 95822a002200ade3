#include "homleib/eigen.hpp"

#include <algorithm>

#include "homleib/errors.hpp"

namespace homleib {

std::vector<Scalar> char_poly(const Matrix& m) {
  if (m.rows() != m.cols())
    throw MathError(ErrCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const int n = m.rows();
  // Faddeev-LeVerrier: M_1 = A, c_1 = -tr(M_1), M_k = A(M_{k-1} + c_{k-1} I),
  // c_k = -tr(M_k)/k; then det(xI - A) = x^n + c_1 x^{n-1} + ... + c_n.
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar(0));
  c[n] = 1;  // coefficient of x^n (we store low-to-high below, fill descending)
  std::vector<Scalar> cs(static_cast<size_t>(n) + 1, Scalar(0));  // cs[k] = c_k
  Matrix mk = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      Matrix adj = mk;
      for (int i = 0; i < n; ++i) adj.at(i, i) += cs[k - 1];
      mk = m * adj;
    }
    cs[k] = -mk.trace() / k;
  }
  std::vector<Scalar> poly(static_cast<size_t>(n) + 1, Scalar(0));
  poly[n] = 1;
  for (int k = 1; k <= n; ++k) poly[n - k] = cs[k];
  return poly;
}

namespace {

// All positive divisors of |v|, unordered.  Trial division; fine at the
// integer sizes produced by desk-scale structure constants.
std::vector<Int> divisors(Int v) {
  if (v < 0) v = -v;
  std::vector<std::pair<Int, int>> factors;
  Int d = 2;
  while (d * d <= v) {
    if (v % d == 0) {
      int e = 0;
      while (v % d == 0) { v /= d; ++e; }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (v > 1) factors.emplace_back(v, 1);
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : factors) {
    const size_t base = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

Scalar eval_int_poly(const std::vector<Int>& p, const Scalar& x) {
  Scalar acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + Scalar(p[i]);
  return acc;
}

// Exact deflation of an integer polynomial by the rational root u/v (lowest
// terms): p(x) = (v x - u) q(x).  q has integer coefficients by Gauss.
std::vector<Int> deflate(const std::vector<Int>& p, const Int& u, const Int& v) {
  const size_t deg = p.size() - 1;
  std::vector<Scalar> q(deg, Scalar(0));
  // Synthetic division over Q by the monic factor (x - u/v), then divide by v.
  const Scalar root(u, v);
  Scalar carry = 0;
  std::vector<Scalar> monic_q(deg);
  for (size_t i = deg; i-- > 0;) {
    // p = (x - root) * monic_q + remainder, coefficients high to low
    carry = p[i + 1] + carry * root;
    monic_q[i] = carry;
  }
  std::vector<Int> out(deg);
  for (size_t i = 0; i < deg; ++i) {
    const Scalar c = monic_q[i] / Scalar(v);
    if (denominator(c) != 1)
      throw MathError(ErrCode::InternalInconsistency, "non-integral deflation");
    out[i] = numerator(c);
  }
  return out;
}

}  // namespace

std::vector<std::pair<Scalar, int>> rational_eigenvalues(const Matrix& m) {
  const std::vector<Scalar> poly = char_poly(m);
  // Clear denominators and content to get a primitive integer polynomial.
  Int lcm_den = 1;
  for (const Scalar& c : poly) {
    const Int d = denominator(c);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  std::vector<Int> p(poly.size());
  Int content = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Scalar scaled = poly[i] * Scalar(lcm_den);
    p[i] = numerator(scaled);
    content = gcd(content, p[i]);
  }
  if (content > 1)
    for (Int& c : p) c /= content;

  std::vector<std::pair<Scalar, int>> out;

  // Roots at zero: trailing zero coefficients.
  int zero_mult = 0;
  while (p.size() > 1 && p[0] == 0) {
    ++zero_mult;
    p.erase(p.begin());
  }
  if (zero_mult > 0) out.emplace_back(Scalar(0), zero_mult);

  if (p.size() > 1) {
    // Rational root candidates u/v with u | trailing, v | leading; any root of
    // a deflated quotient is a root of the original, so one candidate list
    // suffices for the whole loop.
    std::vector<Scalar> candidates;
    for (const Int& u : divisors(p.front()))
      for (const Int& v : divisors(p.back())) {
        if (gcd(u, v) != 1) continue;
        candidates.emplace_back(u, v);
        candidates.emplace_back(-u, v);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Scalar& r : candidates) {
      if (p.size() <= 1) break;
      int mult = 0;
      while (p.size() > 1 && eval_int_poly(p, r) == 0) {
        p = deflate(p, numerator(r), denominator(r));
        ++mult;
      }
      if (mult > 0) out.emplace_back(r, mult);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EigenPiece> simultaneous_eigenspaces(const std::vector<Matrix>& ops, int ambient) {
  std::vector<EigenPiece> pieces{{Vec{}, Subspace::full(ambient)}};
  for (const Matrix& op : ops) {
    if (op.rows() != ambient || op.cols() != ambient)
      throw MathError(ErrCode::DimensionMismatch, "operator shape vs ambient dim");
    // Global eigenspaces once per operator; refine every current piece by
    // intersection so results stay invariant under all the operators.
    std::vector<std::pair<Scalar, Subspace>> spaces;
    for (const auto& [lambda, mult] : rational_eigenvalues(op)) {
      (void)mult;
      Matrix shifted = op;
      for (int i = 0; i < ambient; ++i) shifted.at(i, i) -= lambda;
      spaces.emplace_back(lambda, kernel(shifted));
    }
    std::vector<EigenPiece> next;
    for (const EigenPiece& piece : pieces) {
      for (const auto& [lambda, eig] : spaces) {
        Subspace cut = piece.space.intersect(eig);
        if (cut.is_zero()) continue;
        Vec values = piece.values;
        values.push_back(lambda);
        next.push_back({std::move(values), std::move(cut)});
      }
    }
    pieces = std::move(next);
  }
  return pieces;
}

}  // namespace homleib

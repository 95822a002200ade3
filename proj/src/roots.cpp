#include "homleib/roots.hpp"

#include <algorithm>

#include "homleib/eigen.hpp"

namespace homleib {

std::string root_str(const Root& r) { return vec_str(r.values); }

int SplitDecomposition::root_index(const Root& r) const {
  const auto it = std::lower_bound(roots.begin(), roots.end(), r);
  if (it != roots.end() && *it == r) return static_cast<int>(it - roots.begin());
  return -1;
}

const Subspace& SplitDecomposition::root_space(const Root& r) const {
  const int i = root_index(r);
  if (i < 0) throw MathError(ErrCode::RootNotInLambda, root_str(r) + " is not a root");
  return root_spaces[i];
}

Subspace SplitDecomposition::root_space_or_zero(const Vec& values) const {
  if (vec_is_zero(values)) return H;
  const int i = root_index(Root{values});
  if (i >= 0) return root_spaces[i];
  return Subspace(algebra.dim);
}

SplitDecomposition decompose(const HomAlgebra& a, const std::vector<Vec>& h_basis) {
  const int n = a.dim;
  const int r = static_cast<int>(h_basis.size());
  if (r == 0) throw MathError(ErrCode::DegenerateHBasis, "empty H basis");
  for (const Vec& h : h_basis)
    if (static_cast<int>(h.size()) != n)
      throw MathError(ErrCode::DegenerateHBasis, "H basis vector length vs algebra dim");
  const Subspace h_span = Subspace::span(n, h_basis);
  if (h_span.dim() != r)
    throw MathError(ErrCode::DegenerateHBasis, "H basis vectors are linearly dependent");

  const IdentityReport leib = check_hom_leibniz(a);
  if (!leib.holds)
    throw MathError(ErrCode::HypothesisMissing,
                    "algebra is not Hom-Leibniz (" + leib.notes.front() + ")");
  const IdentityReport reg = check_regular(a);
  if (!reg.holds)
    throw MathError(ErrCode::HypothesisMissing, "phi is not a regular twist (" +
                                                    (reg.notes.empty() ? std::string("?") : reg.notes.front()) + ")");

  for (const Vec& x : h_basis)
    for (const Vec& y : h_basis)
      if (!vec_is_zero(a.bracket(x, y)))
        throw MathError(ErrCode::NotAbelian, "[H,H] != 0 on " + vec_str(x) + ", " + vec_str(y));
  if (!(h_span.map(a.phi) == h_span))
    throw MathError(ErrCode::NotPhiStable, "phi(H) != H");

  // For h in H the weight condition [v,h] = alpha(h) phi(v) says v is an
  // eigenvector of T_h = phi^{-1} o (right multiplication by h).
  const Matrix phi_inv = *a.phi.inverse();
  std::vector<Matrix> ops;
  for (const Vec& h : h_basis) {
    std::vector<Vec> cols;
    for (int j = 0; j < n; ++j) cols.push_back(a.bracket(unit_vec(n, j), h));
    ops.push_back(phi_inv * Matrix::from_cols(cols, n));
  }
  std::vector<EigenPiece> pieces = simultaneous_eigenspaces(ops, n);

  const auto zero_piece =
      std::find_if(pieces.begin(), pieces.end(),
                   [](const EigenPiece& p) { return vec_is_zero(p.values); });
  if (zero_piece == pieces.end())
    throw MathError(ErrCode::InternalInconsistency, "zero-weight space missing despite abelian H");
  if (!(zero_piece->space == h_span)) {
    if (zero_piece->space.contains(h_span))
      throw MathError(ErrCode::HNotMaximal,
                      "zero-weight space has dimension " + std::to_string(zero_piece->space.dim()) +
                          " > dim H = " + std::to_string(r) +
                          "; H is not maximal abelian with the weight property");
    throw MathError(ErrCode::InternalInconsistency, "H not inside its own zero-weight space");
  }

  Subspace covered(n);
  for (const EigenPiece& p : pieces) covered = covered + p.space;
  int total = 0;
  for (const EigenPiece& p : pieces) total += p.space.dim();
  if (total != n || covered.dim() != n) {
    const Subspace uncovered = covered.pivot_complement();
    throw MathError(ErrCode::NotSplit,
                    "weight spaces cover only " + std::to_string(covered.dim()) + " of " +
                        std::to_string(n) + " dimensions; uncovered coordinates " +
                        vec_str(uncovered.dim() ? uncovered.basis_vector(0) : zero_vec(n)));
  }

  SplitDecomposition d;
  d.algebra = a;
  d.H_basis = h_basis;
  d.H = h_span;
  std::vector<std::pair<Root, Subspace>> rs;
  for (EigenPiece& p : pieces)
    if (!vec_is_zero(p.values)) rs.emplace_back(Root{std::move(p.values)}, std::move(p.space));
  std::sort(rs.begin(), rs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [root, space] : rs) {
    d.roots.push_back(std::move(root));
    d.root_spaces.push_back(std::move(space));
  }

  // phi restricted to H in the chosen coordinates.
  const Matrix h_cols = Matrix::from_cols(h_basis, n);
  std::vector<Vec> phi_cols;
  for (const Vec& h : h_basis) {
    const auto c = solve(h_cols, a.phi.apply(h));
    if (!c) throw MathError(ErrCode::InternalInconsistency, "phi(H) = H but phi(h) not solvable");
    phi_cols.push_back(*c);
  }
  d.phiH = Matrix::from_cols(phi_cols, r);
  d.phiH_inv = *d.phiH.inverse();

  // The orbit map alpha -> alpha o phi^{-1} must permute the roots.
  for (const Root& alpha : d.roots) {
    const Vec next = functional_twist(d, alpha.values, 1);
    if (vec_is_zero(next) || d.root_index(Root{next}) < 0)
      throw MathError(ErrCode::InternalInconsistency,
                      "orbit map leaves the root set at " + root_str(alpha));
  }
  return d;
}

Vec functional_twist(const SplitDecomposition& d, const Vec& values, long z) {
  const Matrix m = (z >= 0 ? d.phiH_inv.pow(z) : d.phiH.pow(-z)).transpose();
  return m.apply(values);
}

Vec root_phi_pow(const SplitDecomposition& d, const Vec& values, long z) {
  Vec out = functional_twist(d, values, z);
  if (!vec_is_zero(out) && d.root_index(Root{out}) < 0)
    throw MathError(ErrCode::InternalInconsistency,
                    "functional " + vec_str(out) + " is neither zero nor a root");
  return out;
}

std::vector<Root> root_orbit(const SplitDecomposition& d, const Root& alpha) {
  if (d.root_index(alpha) < 0)
    throw MathError(ErrCode::RootNotInLambda, root_str(alpha) + " is not a root");
  std::vector<Root> orbit{alpha};
  Vec cur = alpha.values;
  for (size_t guard = 0; guard <= d.roots.size(); ++guard) {
    cur = root_phi_pow(d, cur, 1);
    if (Root{cur} == alpha) return orbit;
    orbit.push_back(Root{cur});
  }
  throw MathError(ErrCode::InternalInconsistency, "orbit of " + root_str(alpha) + " did not close");
}

bool is_symmetric(const SplitDecomposition& d) { return is_symmetric_subset(d, d.roots); }

bool is_symmetric_subset(const SplitDecomposition&, const std::vector<Root>& subset) {
  return std::all_of(subset.begin(), subset.end(), [&](const Root& r) {
    const Root neg{vec_neg(r.values)};
    return std::find(subset.begin(), subset.end(), neg) != subset.end();
  });
}

Vec find_separating_element(const SplitDecomposition& d, const Root& alpha, const Root& beta) {
  if (alpha == beta)
    throw MathError(ErrCode::NotSeparable, "alpha = beta admits no separating element");
  if (vec_is_zero(alpha.values))
    throw MathError(ErrCode::NotSeparable, "alpha = 0 admits no separating element");
  if (d.root_index(alpha) < 0 || (!vec_is_zero(beta.values) && d.root_index(beta) < 0))
    throw MathError(ErrCode::RootNotInLambda, "separating element of non-roots");
  const int r = static_cast<int>(d.H_basis.size());
  const Vec& a = alpha.values;
  const Vec& b = beta.values;
  for (int i = 0; i < r; ++i)
    if (a[i] != 0 && a[i] != b[i]) return d.H_basis[i];
  // Two-term combinations h_i + t h_j; a short scan suffices because each
  // (i,j) pair rules out at most finitely many t.
  for (int t = 1; t <= 64; ++t)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j) continue;
        const Scalar av = a[i] + Scalar(t) * a[j];
        const Scalar bv = b[i] + Scalar(t) * b[j];
        if (av != 0 && av != bv)
          return vec_add(d.H_basis[i], vec_scale(Scalar(t), d.H_basis[j]));
      }
  throw MathError(ErrCode::InternalInconsistency, "separating-element scan exhausted");
}

std::vector<IdentityReport> verify_split(const SplitDecomposition& d) {
  std::vector<IdentityReport> reports;
  const HomAlgebra& a = d.algebra;
  // Weight labels: index -1 is H (the zero functional).
  std::vector<std::pair<std::string, const Subspace*>> spaces;
  std::vector<Vec> functionals;
  spaces.emplace_back("H", &d.H);
  functionals.push_back(zero_vec(static_cast<int>(d.H_basis.size())));
  for (size_t i = 0; i < d.roots.size(); ++i) {
    spaces.emplace_back("L" + root_str(d.roots[i]), &d.root_spaces[i]);
    functionals.push_back(d.roots[i].values);
  }

  for (size_t i = 0; i < spaces.size(); ++i) {
    const Vec target_f = functional_twist(d, functionals[i], 1);
    const Subspace target = d.root_space_or_zero(target_f);
    IdentityReport rep{"phi(" + spaces[i].first + ") in " +
                           (vec_is_zero(target_f) ? std::string("H") : "L" + vec_str(target_f)),
                       true,
                       std::nullopt,
                       {}};
    const Subspace image = spaces[i].second->map(a.phi);
    if (!target.contains(image)) {
      rep.holds = false;
      for (const Vec& v : spaces[i].second->basis_vectors())
        if (!target.contains(a.phi.apply(v))) {
          rep.witness = Witness{{}, a.phi.apply(v)};
          break;
        }
      rep.notes.push_back("image escapes the target weight space");
    }
    reports.push_back(std::move(rep));
  }

  for (size_t i = 0; i < spaces.size(); ++i)
    for (size_t j = 0; j < spaces.size(); ++j) {
      const Vec target_f =
          vec_add(functional_twist(d, functionals[i], 1), functional_twist(d, functionals[j], 1));
      const Subspace target = d.root_space_or_zero(target_f);
      std::string target_name = vec_is_zero(target_f)
                                    ? std::string("H")
                                    : (d.root_index(Root{target_f}) >= 0 ? "L" + vec_str(target_f)
                                                                         : std::string("0"));
      IdentityReport rep{"[" + spaces[i].first + ", " + spaces[j].first + "] in " + target_name,
                         true,
                         std::nullopt,
                         {}};
      for (const Vec& u : spaces[i].second->basis_vectors()) {
        for (const Vec& v : spaces[j].second->basis_vectors()) {
          const Vec w = a.bracket(u, v);
          if (!target.contains(w)) {
            rep.holds = false;
            rep.witness = Witness{{}, w};
            rep.notes.push_back("bracket escapes the target weight space");
            break;
          }
        }
        if (!rep.holds) break;
      }
      reports.push_back(std::move(rep));
    }
  return reports;
}

}  // namespace homleib

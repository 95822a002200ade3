#include "homleib/algebra.hpp"

#include <algorithm>

namespace homleib {

Vec HomAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw MathError(ErrCode::DimensionMismatch, "bracket operand length vs algebra dim");
  Vec out = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Scalar c = x[i] * y[j];
      const Vec& t = table[i][j];
      for (int k = 0; k < dim; ++k)
        if (t[k] != 0) out[k] += c * t[k];
    }
  }
  return out;
}

bool HomAlgebra::product_is_zero() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!vec_is_zero(table[i][j])) return false;
  return true;
}

HomAlgebra make_algebra(std::string name, int dim, std::vector<std::string> labels) {
  HomAlgebra a;
  a.name = std::move(name);
  a.dim = dim;
  if (labels.empty())
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  if (static_cast<int>(labels.size()) != dim)
    throw MathError(ErrCode::DimensionMismatch, "label count vs dim");
  a.labels = std::move(labels);
  a.table.assign(dim, std::vector<Vec>(dim, zero_vec(dim)));
  a.phi = Matrix::identity(dim);
  return a;
}

IdentityReport check_hom_leibniz(const HomAlgebra& a) {
  IdentityReport rep{"hom_leibniz", true, std::nullopt, {}};
  const int n = a.dim;
  std::vector<Vec> phi_of(n);
  for (int i = 0; i < n; ++i) phi_of[i] = a.phi.col(i);
  for (int i = 0; i < n; ++i)        // y
    for (int j = 0; j < n; ++j)      // z
      for (int k = 0; k < n; ++k) {  // x
        // [[y,z],phi(x)] - [[y,x],phi(z)] - [phi(y),[z,x]]
        Vec res = a.bracket(a.bracket_basis(i, j), phi_of[k]);
        res = vec_sub(res, a.bracket(a.bracket_basis(i, k), phi_of[j]));
        res = vec_sub(res, a.bracket(phi_of[i], a.bracket_basis(j, k)));
        if (!vec_is_zero(res)) {
          rep.holds = false;
          rep.witness = Witness{{i, j, k}, res};
          rep.notes.push_back("fails at (y,z,x) = (" + a.label(i) + ", " + a.label(j) + ", " +
                              a.label(k) + ")");
          return rep;
        }
      }
  return rep;
}

IdentityReport check_regular(const HomAlgebra& a) {
  IdentityReport rep{"regular", true, std::nullopt, {}};
  const Subspace ker = kernel(a.phi);
  if (!ker.is_zero()) {
    rep.holds = false;
    rep.witness = Witness{{}, ker.basis_vector(0)};
    rep.notes.push_back("phi is singular; witness is a kernel vector");
    return rep;
  }
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      const Vec lhs = a.phi.apply(a.bracket_basis(i, j));
      const Vec rhs = a.bracket(a.phi.col(i), a.phi.col(j));
      const Vec res = vec_sub(lhs, rhs);
      if (!vec_is_zero(res)) {
        rep.holds = false;
        rep.witness = Witness{{i, j}, res};
        rep.notes.push_back("phi([x,y]) != [phi(x),phi(y)] at (x,y) = (" + a.label(i) + ", " +
                            a.label(j) + ")");
        return rep;
      }
    }
  return rep;
}

IdentityReport check_hom_lie(const HomAlgebra& a) {
  IdentityReport rep{"hom_lie", true, std::nullopt, {}};
  const int n = a.dim;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Vec res = vec_add(a.bracket_basis(i, j), a.bracket_basis(j, i));
      if (!vec_is_zero(res)) {
        rep.holds = false;
        rep.witness = Witness{{i, j}, res};
        rep.notes.push_back("antisymmetry fails: [" + a.label(i) + "," + a.label(j) + "] + [" +
                            a.label(j) + "," + a.label(i) + "] != 0");
        return rep;
      }
    }
  std::vector<Vec> phi_of(n);
  for (int i = 0; i < n; ++i) phi_of[i] = a.phi.col(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec res = a.bracket(a.bracket_basis(i, j), phi_of[k]);
        res = vec_add(res, a.bracket(a.bracket_basis(j, k), phi_of[i]));
        res = vec_add(res, a.bracket(a.bracket_basis(k, i), phi_of[j]));
        if (!vec_is_zero(res)) {
          rep.holds = false;
          rep.witness = Witness{{i, j, k}, res};
          rep.notes.push_back("cyclic identity fails at (" + a.label(i) + ", " + a.label(j) +
                              ", " + a.label(k) + ")");
          return rep;
        }
      }
  return rep;
}

Subspace ideal_closure(const HomAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim)
    throw MathError(ErrCode::DimensionMismatch, "subspace ambient vs algebra dim");
  const auto phi_inv = a.phi.inverse();
  Subspace cur = s;
  for (;;) {
    std::vector<Vec> gens = cur.basis_vectors();
    const size_t base = gens.size();
    for (size_t g = 0; g < base; ++g) {
      for (int i = 0; i < a.dim; ++i) {
        gens.push_back(a.bracket(gens[g], unit_vec(a.dim, i)));
        gens.push_back(a.bracket(unit_vec(a.dim, i), gens[g]));
      }
      gens.push_back(a.phi.apply(gens[g]));
      if (phi_inv) gens.push_back(phi_inv->apply(gens[g]));
    }
    Subspace next = Subspace::span(a.dim, gens);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Subspace compute_J(const HomAlgebra& a) {
  std::vector<Vec> seeds;
  // Polarization: [x,x] for x ranging over a basis and over e_i + e_j.
  for (int i = 0; i < a.dim; ++i) seeds.push_back(a.bracket_basis(i, i));
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j)
      seeds.push_back(vec_add(a.bracket_basis(i, j), a.bracket_basis(j, i)));
  const Subspace j = ideal_closure(a, Subspace::span(a.dim, seeds));
  // [L, J] = 0 is forced by the Hom-Leibniz identity; a violation means the
  // input was never Hom-Leibniz to begin with.
  for (int i = 0; i < a.dim; ++i)
    for (const Vec& v : j.basis_vectors())
      if (!vec_is_zero(a.bracket(unit_vec(a.dim, i), v)))
        throw MathError(ErrCode::JNotLeftCentral,
                        "[" + a.label(i) + ", J] != 0; input fails the Hom-Leibniz identity");
  return j;
}

Subspace annihilator(const HomAlgebra& a) {
  // x with [x, e_j] = 0 and [e_j, x] = 0 for all j: stack the right- and
  // left-multiplication operators and take the kernel.
  const int n = a.dim;
  Matrix stacked(2 * n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        stacked.at(j * n + k, i) = a.table[i][j][k];          // [x, e_j]_k
        stacked.at(n * n + j * n + k, i) = a.table[j][i][k];  // [e_j, x]_k
      }
  return kernel(stacked);
}

Subspace derived(const HomAlgebra& a) {
  std::vector<Vec> gens;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) gens.push_back(a.bracket_basis(i, j));
  return Subspace::span(a.dim, gens);
}

HomAlgebra semidirect_product(const HomAlgebra& a) {
  const Subspace j = compute_J(a);
  const Subspace comp = j.pivot_complement();  // coordinate transversal of J
  const int n = a.dim;
  const int q = comp.dim();  // dim L/J
  // Basis: (e_i, 0) for i < n, then (0, t_k + J) for the transversal vectors.
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(a.labels[i]);
  std::vector<Vec> transversal = comp.basis_vectors();
  std::vector<int> t_index;  // coordinate index of each transversal unit vector
  for (int k = 0; k < q; ++k) {
    // pivot_complement returns unit vectors; recover the index for labels.
    int idx = -1;
    for (int i = 0; i < n; ++i)
      if (transversal[k][i] != 0) { idx = i; break; }
    t_index.push_back(idx);
    labels.push_back(a.labels[idx] + "+J");
  }
  HomAlgebra out = make_algebra(a.name + "_semidirect", n + q, labels);

  // Projection L -> L/J in transversal coordinates: x = j_part + sum c_k t_k.
  std::vector<Vec> j_and_t = j.basis_vectors();
  for (const Vec& t : transversal) j_and_t.push_back(t);
  const Matrix basis_cols = Matrix::from_cols(j_and_t, n);
  auto project = [&](const Vec& x) -> Vec {
    const auto coords = solve(basis_cols, x);
    if (!coords)
      throw MathError(ErrCode::InternalInconsistency, "J + transversal does not span L");
    Vec c(q);
    for (int k = 0; k < q; ++k) c[k] = (*coords)[j.dim() + k];
    return c;
  };

  // [(a,x+J),(b,y+J)] = ([a,y] - [b,x], [x,y]+J) with x, y transversal reps.
  auto embed = [&](const Vec& first, const Vec& quot) {
    Vec v = zero_vec(n + q);
    for (int i = 0; i < n; ++i) v[i] = first[i];
    for (int k = 0; k < q; ++k) v[n + k] = quot[k];
    return v;
  };
  for (int u = 0; u < n + q; ++u)
    for (int v = 0; v < n + q; ++v) {
      const Vec au = u < n ? unit_vec(n, u) : zero_vec(n);
      const Vec xu = u < n ? zero_vec(n) : transversal[u - n];
      const Vec bv = v < n ? unit_vec(n, v) : zero_vec(n);
      const Vec yv = v < n ? zero_vec(n) : transversal[v - n];
      const Vec first = vec_sub(a.bracket(au, yv), a.bracket(bv, xu));
      const Vec quot = project(a.bracket(xu, yv));
      out.table[u][v] = embed(first, quot);
    }

  // Twist: phi on the first component, induced map on the quotient.
  Matrix phi_hat(n + q, n + q);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) phi_hat.at(k, i) = a.phi.at(k, i);
  for (int k = 0; k < q; ++k) {
    const Vec img = project(a.phi.apply(transversal[k]));
    for (int l = 0; l < q; ++l) phi_hat.at(n + l, n + k) = img[l];
  }
  out.phi = std::move(phi_hat);
  return out;
}

HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& psi) {
  if (psi.rows() != a.dim || psi.cols() != a.dim)
    throw MathError(ErrCode::DimensionMismatch, "twist matrix shape vs algebra dim");
  if (!psi.inverse())
    throw MathError(ErrCode::NotAutomorphism, "twist map is singular");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      const Vec lhs = psi.apply(a.bracket_basis(i, j));
      const Vec rhs = a.bracket(psi.col(i), psi.col(j));
      if (lhs != rhs)
        throw MathError(ErrCode::NotAutomorphism,
                        "psi([x,y]) != [psi(x),psi(y)] at (" + a.label(i) + ", " + a.label(j) + ")");
    }
  if (!(psi * a.phi == a.phi * psi))
    throw MathError(ErrCode::NotRegular,
                    "psi does not commute with phi; the twisted structure map "
                    "would not be an automorphism of the twisted bracket");
  HomAlgebra out = a;
  out.name = a.name + "_twist";
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) out.table[i][j] = psi.apply(a.table[i][j]);
  out.phi = psi * a.phi;
  return out;
}

}  // namespace homleib

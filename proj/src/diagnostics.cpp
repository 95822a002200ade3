#include "homleib/diagnostics.hpp"

#include <algorithm>
#include <set>

namespace homleib {

JSplit split_roots_by_J(const SplitDecomposition& d) {
  JSplit js{compute_J(d.algebra), {}, {}, {}, Subspace(d.algebra.dim)};
  for (size_t i = 0; i < d.roots.size(); ++i) {
    const Subspace& space = d.root_spaces[i];
    if (js.J.contains(space))
      js.lambda_J.push_back(d.roots[i]);
    else if (space.intersect(js.J).is_zero())
      js.lambda_notJ.push_back(d.roots[i]);
    else
      js.mixed.push_back(d.roots[i]);
  }
  js.J_cap_H = js.J.intersect(d.H);
  return js;
}

bool check_maximal_length(const SplitDecomposition& d) {
  return std::all_of(d.root_spaces.begin(), d.root_spaces.end(),
                     [](const Subspace& s) { return s.dim() == 1; });
}

Subspace lie_annihilator(const SplitDecomposition& d, const JSplit& js) {
  const HomAlgebra& a = d.algebra;
  const int n = a.dim;
  // Rows: [x, e_j] = 0 for all j, plus [u, x] = 0 for u spanning each
  // root space on the not-J side.
  std::vector<Vec> rows;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Vec row(n);
      for (int i = 0; i < n; ++i) row[i] = a.table[i][j][k];
      rows.push_back(std::move(row));
    }
  for (const Root& alpha : js.lambda_notJ)
    for (const Vec& u : d.root_space(alpha).basis_vectors())
      for (int k = 0; k < n; ++k) {
        Vec row(n);
        for (int i = 0; i < n; ++i) row[i] = a.bracket(u, unit_vec(n, i))[k];
        rows.push_back(std::move(row));
      }
  return kernel(Matrix::from_rows(rows, n));
}

namespace {

bool is_phi_stable_ideal(const HomAlgebra& a, const Subspace& s) {
  for (const Vec& v : s.basis_vectors()) {
    if (!s.contains(a.phi.apply(v))) return false;
    for (int i = 0; i < a.dim; ++i) {
      if (!s.contains(a.bracket(v, unit_vec(a.dim, i)))) return false;
      if (!s.contains(a.bracket(unit_vec(a.dim, i), v))) return false;
    }
  }
  return true;
}

}  // namespace

IdentityReport check_ideal_homogeneous(const SplitDecomposition& d, const Subspace& ideal) {
  if (ideal.ambient_dim() != d.algebra.dim)
    throw MathError(ErrCode::DimensionMismatch, "ideal ambient vs algebra dim");
  if (!is_phi_stable_ideal(d.algebra, ideal))
    throw MathError(ErrCode::NotAnIdeal, "subspace is not a phi-stable two-sided ideal");
  IdentityReport rep{"ideal_homogeneous", true, std::nullopt, {}};
  Subspace graded = ideal.intersect(d.H);
  const int h_part = graded.dim();
  for (const Subspace& space : d.root_spaces) graded = graded + space.intersect(ideal);
  rep.notes.push_back("H-part dim " + std::to_string(h_part) + ", total graded dim " +
                      std::to_string(graded.dim()) + ", ideal dim " + std::to_string(ideal.dim()));
  if (!(graded == ideal)) {
    rep.holds = false;
    rep.notes.push_back("ideal is not the sum of its weight-space slices");
  }
  return rep;
}

IdentityReport check_H_generated(const SplitDecomposition& d, const JSplit& js) {
  IdentityReport rep{"H_generated_by_notJ_pairings", true, std::nullopt, {}};
  std::vector<Vec> gens;
  for (const Root& alpha : js.lambda_notJ) {
    const int neg = d.root_index(Root{vec_neg(alpha.values)});
    if (neg < 0) continue;
    for (const Vec& u : d.root_space(alpha).basis_vectors())
      for (const Vec& v : d.root_spaces[neg].basis_vectors())
        gens.push_back(d.algebra.bracket(u, v));
  }
  const Subspace span = Subspace::span(d.algebra.dim, gens);
  if (!(span == d.H)) {
    rep.holds = false;
    rep.notes.push_back("span of [L_alpha, L_{-alpha}] over the not-J side has dim " +
                        std::to_string(span.dim()) + " vs dim H = " + std::to_string(d.H.dim()));
  }
  return rep;
}

RootMultReport check_root_multiplicative(const SplitDecomposition& d, const JSplit& js) {
  if (!check_maximal_length(d))
    throw MathError(ErrCode::HypothesisMissing, "root-multiplicativity needs maximal length");
  RootMultReport out;
  out.summary = IdentityReport{"root_multiplicative", true, std::nullopt, {}};
  const HomAlgebra& a = d.algebra;
  auto in = [&](const std::vector<Root>& set, const Root& r) {
    return std::find(set.begin(), set.end(), r) != set.end();
  };
  auto space_product_nonzero = [&](const Root& x, const Root& y) {
    for (const Vec& u : d.root_space(x).basis_vectors())
      for (const Vec& v : d.root_space(y).basis_vectors())
        if (!vec_is_zero(a.bracket(u, v))) return true;
    return false;
  };
  for (const Root& alpha : js.lambda_notJ) {
    for (const Root& beta : js.lambda_notJ) {
      const Vec t = functional_twist(d, vec_add(alpha.values, beta.values), 1);
      if (vec_is_zero(t) || d.root_index(Root{t}) < 0) continue;
      const bool nz = space_product_nonzero(alpha, beta);
      out.instances.push_back({alpha, beta, Root{t}, 1, nz, nz});
      if (!nz) {
        out.literal_holds = false;
        out.effective_holds = false;
      }
    }
    for (const Root& gamma : js.lambda_J) {
      const Vec t = functional_twist(d, vec_add(alpha.values, gamma.values), 1);
      if (vec_is_zero(t) || !in(js.lambda_J, Root{t})) continue;
      const bool literal = space_product_nonzero(alpha, gamma);
      const bool swapped = space_product_nonzero(gamma, alpha);
      out.instances.push_back({alpha, gamma, Root{t}, 2, literal, swapped});
      if (!literal) out.literal_holds = false;
      if (!swapped) out.effective_holds = false;
    }
  }
  out.summary.holds = out.effective_holds;
  if (out.literal_holds != out.effective_holds)
    out.summary.notes.push_back(
        "condition 2 read verbatim ([L_alpha, L_gamma] with gamma on the J side) disagrees "
        "with the swapped order [L_gamma, L_alpha]; [L,J] = 0 forces the verbatim products "
        "to zero, so the verdict uses the swapped order");
  for (const RootMultInstance& inst : out.instances)
    if (inst.condition == 2 && inst.literal_nonzero != inst.swapped_nonzero)
      out.summary.notes.push_back("condition 2 at (" + root_str(inst.alpha) + ", " +
                                  root_str(inst.other) + "): verbatim " +
                                  (inst.literal_nonzero ? "nonzero" : "zero") + ", swapped " +
                                  (inst.swapped_nonzero ? "nonzero" : "zero"));
  return out;
}

std::vector<std::vector<Root>> sub_ideals_of_J(const SplitDecomposition& d, const JSplit& js) {
  if (!check_maximal_length(d))
    throw MathError(ErrCode::HypothesisMissing, "sub-ideal scan needs maximal length");
  if (!annihilator(d.algebra).is_zero())
    throw MathError(ErrCode::HypothesisMissing, "sub-ideal scan needs a vanishing annihilator");
  const HomAlgebra& a = d.algebra;

  auto bracket_nonzero_with = [&](const Root& beta, int gamma_index /* -1 = H */) {
    const Vec u = d.root_space(beta).basis_vector(0);
    if (gamma_index < 0) {
      for (const Vec& h : d.H_basis)
        if (!vec_is_zero(a.bracket(u, h))) return true;
      return false;
    }
    for (const Vec& v : d.root_spaces[gamma_index].basis_vectors())
      if (!vec_is_zero(a.bracket(u, v))) return true;
    return false;
  };

  auto closure_of = [&](const Root& seed) {
    std::set<Root> s{seed};
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Root& beta : std::vector<Root>(s.begin(), s.end())) {
        auto push = [&](const Vec& values) {
          const Root r{values};
          if (std::find(js.lambda_J.begin(), js.lambda_J.end(), r) == js.lambda_J.end())
            throw MathError(ErrCode::InternalInconsistency,
                            "closure of a J-side root left Lambda^J at " + root_str(r));
          if (s.insert(r).second) changed = true;
        };
        push(root_phi_pow(d, beta.values, 1));
        // gamma = 0 (bracketing with H)
        if (bracket_nonzero_with(beta, -1)) push(root_phi_pow(d, beta.values, 1));
        for (size_t g = 0; g < d.roots.size(); ++g)
          if (bracket_nonzero_with(beta, static_cast<int>(g)))
            push(functional_twist(d, vec_add(beta.values, d.roots[g].values), 1));
      }
    }
    return std::vector<Root>(s.begin(), s.end());
  };

  std::vector<std::vector<Root>> closures;
  for (const Root& beta : js.lambda_J) {
    std::vector<Root> c = closure_of(beta);
    if (std::find(closures.begin(), closures.end(), c) == closures.end())
      closures.push_back(std::move(c));
  }
  // Minimal closed sets are exactly the inclusion-minimal singleton closures.
  std::vector<std::vector<Root>> minimal;
  for (const auto& c : closures) {
    const bool has_smaller = std::any_of(closures.begin(), closures.end(), [&](const auto& o) {
      return o.size() < c.size() && std::includes(c.begin(), c.end(), o.begin(), o.end());
    });
    if (!has_smaller) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

Subspace class_J_ideal(const SplitDecomposition& d, const JSplit& js, const Root& alpha) {
  if (std::find(js.lambda_J.begin(), js.lambda_J.end(), alpha) == js.lambda_J.end())
    throw MathError(ErrCode::ClassMismatch, root_str(alpha) + " is not on the J side");
  if (!(derived(d.algebra) == Subspace::full(d.algebra.dim)))
    throw MathError(ErrCode::HypothesisMissing, "class J-ideal needs [L,L] = L");
  Subspace v(d.algebra.dim);
  std::vector<Root> members;
  for (const Root& beta : js.lambda_J)
    if (nj_connected(d, js, alpha, beta)) {
      v = v + d.root_space(beta);
      members.push_back(beta);
    }
  if (!is_phi_stable_ideal(d.algebra, v))
    throw MathError(ErrCode::InternalInconsistency,
                    "not-J class sum of " + root_str(alpha) + " is not an ideal");
  for (const Root& beta : members) {
    const int neg = d.root_index(Root{vec_neg(beta.values)});
    if (neg < 0) continue;
    for (const Vec& u : d.root_space(beta).basis_vectors())
      for (const Vec& w : d.root_spaces[neg].basis_vectors())
        if (!vec_is_zero(d.algebra.bracket(u, w)))
          throw MathError(ErrCode::InternalInconsistency,
                          "J-side class ideal has a nonzero H-part");
  }
  return v;
}

namespace {

struct Hypotheses {
  bool maximal = false;
  bool derived_full = false;
  bool ann_zero = false;
  bool zlie_zero = false;
  bool sym_J = false;
  bool sym_notJ = false;
  bool root_mult = false;       // effective (swapped) reading
  bool notJ_connected = false;  // at most one class
  bool J_connected = false;
  bool nj_classes_ok = false;   // nj class machinery applicable
};

Hypotheses gather_hypotheses(const SplitDecomposition& d, const JSplit& js) {
  Hypotheses h;
  h.maximal = check_maximal_length(d);
  h.derived_full = derived(d.algebra) == Subspace::full(d.algebra.dim);
  h.ann_zero = annihilator(d.algebra).is_zero();
  h.zlie_zero = lie_annihilator(d, js).is_zero();
  h.sym_J = is_symmetric_subset(d, js.lambda_J);
  h.sym_notJ = is_symmetric_subset(d, js.lambda_notJ);
  if (h.maximal) {
    const RootMultReport rm = check_root_multiplicative(d, js);
    h.root_mult = rm.effective_holds;
  }
  bool notJ_ok = false, J_ok = false;
  try {
    h.notJ_connected = nj_classes(d, js, JSide::NotJ).classes.size() <= 1;
    notJ_ok = true;
  } catch (const MathError&) {
  }
  try {
    h.J_connected = nj_classes(d, js, JSide::J).classes.size() <= 1;
    J_ok = true;
  } catch (const MathError&) {
  }
  h.notJ_connected = notJ_ok && h.notJ_connected;
  h.J_connected = J_ok && h.J_connected;
  h.nj_classes_ok = notJ_ok && J_ok;
  return h;
}

}  // namespace

SimplicityVerdict decide_simplicity(const SplitDecomposition& d) {
  SimplicityVerdict v;
  const HomAlgebra& a = d.algebra;
  if (a.product_is_zero()) {
    v.status = SimplicityVerdict::Status::NotSimple;
    v.witness_note = "the product is identically zero, so [L,L] = 0";
    return v;
  }
  const JSplit js = split_roots_by_J(d);
  const Subspace zero(a.dim);
  const Subspace full = Subspace::full(a.dim);
  auto is_trivial = [&](const Subspace& s) { return s == zero || s == js.J || s == full; };

  // Deterministic probe ideals; any one outside {0, J, L} refutes simplicity.
  std::vector<std::pair<std::string, Subspace>> probes;
  for (size_t i = 0; i < d.roots.size(); ++i)
    probes.emplace_back("ideal closure of L" + root_str(d.roots[i]),
                        ideal_closure(a, d.root_spaces[i]));
  probes.emplace_back("ideal closure of J", js.J);
  const Subspace ann = annihilator(a);
  if (!ann.is_zero()) probes.emplace_back("ideal closure of the annihilator", ideal_closure(a, ann));
  const Subspace zlie = lie_annihilator(d, js);
  if (!zlie.is_zero())
    probes.emplace_back("ideal closure of the Lie annihilator", ideal_closure(a, zlie));
  if (check_maximal_length(d) && ann.is_zero()) {
    for (const std::vector<Root>& s : sub_ideals_of_J(d, js)) {
      Subspace sum(a.dim);
      std::string name = "root-closed J-side set {";
      for (size_t i = 0; i < s.size(); ++i) {
        sum = sum + d.root_space(s[i]);
        name += (i ? " " : "") + root_str(s[i]);
      }
      name += "}";
      probes.emplace_back(name, ideal_closure(a, sum));
    }
  }
  for (const auto& [name, p] : probes)
    if (!is_trivial(p)) {
      v.status = SimplicityVerdict::Status::NotSimple;
      v.witness = p;
      v.witness_note = name + " is an ideal of dimension " + std::to_string(p.dim()) +
                       ", different from 0, J and L";
      return v;
    }

  const IdentityReport necessary = check_simple_necessary(d);
  const Hypotheses h = gather_hypotheses(d, js);

  if (!necessary.holds && is_symmetric(d)) {
    // Necessary conditions for simplicity fail; definitive refutation even
    // though no probe produced a nontrivial ideal.
    v.status = SimplicityVerdict::Status::NotSimple;
    v.witness_note = "necessary conditions fail:";
    for (const std::string& n : necessary.notes) v.witness_note += " " + n + ";";
    return v;
  }

  if (!h.maximal) {
    v.status = SimplicityVerdict::Status::Inconclusive;
    v.reasons.push_back("some root space has dimension > 1 (not maximal length); the "
                        "certification route is unavailable and no probe refuted simplicity");
    return v;
  }

  std::vector<std::pair<bool, std::string>> cert{
      {h.derived_full, "[L,L] = L"},
      {h.ann_zero, "annihilator is zero"},
      {h.zlie_zero, "Lie annihilator is zero"},
      {h.sym_J, "Lambda^J is symmetric"},
      {h.sym_notJ, "Lambda^{not J} is symmetric"},
      {h.root_mult, "root-multiplicative (condition 2 in the swapped order)"},
      {h.notJ_connected, "all of Lambda^{not J} is mutually not-J-connected"},
      {h.J_connected, "all of Lambda^J is mutually not-J-connected"},
  };
  bool all = js.mixed.empty();
  for (const auto& [ok, text] : cert) all = all && ok;
  std::vector<std::vector<Root>> subideals;
  if (h.ann_zero) {
    subideals = sub_ideals_of_J(d, js);
    const bool sub_ok = subideals.empty() || (subideals.size() == 1 && subideals[0] == js.lambda_J);
    cert.emplace_back(sub_ok, "the only root-closed J-side set is all of Lambda^J (or none)");
    all = all && sub_ok;
  } else {
    all = false;
  }

  if (all) {
    if (!necessary.holds)
      throw MathError(ErrCode::InternalInconsistency,
                      "certification hypotheses hold but the necessary conditions fail");
    v.status = SimplicityVerdict::Status::Simple;
    v.certificate.push_back("maximal length (every root space is one-dimensional)");
    for (const auto& [ok, text] : cert) v.certificate.push_back(text);
    v.certificate.push_back(
        "every probe ideal (root-space closures, J, annihilator closures, J-side "
        "root-set closures) lies in {0, J, L}");
    return v;
  }
  v.status = SimplicityVerdict::Status::Inconclusive;
  for (const auto& [ok, text] : cert)
    if (!ok) v.reasons.push_back("not established: " + text);
  if (!js.mixed.empty()) v.reasons.push_back("some roots are mixed relative to J");
  return v;
}

IdentityReport check_ideal_dichotomies(const SplitDecomposition& d, const Subspace& ideal) {
  if (!is_phi_stable_ideal(d.algebra, ideal))
    throw MathError(ErrCode::NotAnIdeal, "subspace is not a phi-stable two-sided ideal");
  IdentityReport rep{"ideal_dichotomies", true, std::nullopt, {}};
  const JSplit js = split_roots_by_J(d);
  const Hypotheses h = gather_hypotheses(d, js);
  if (!h.maximal) {
    rep.notes.push_back("skipped: not maximal length");
    return rep;
  }
  const Subspace zero(d.algebra.dim);
  const Subspace full = Subspace::full(d.algebra.dim);
  const Subspace h_plus_j = d.H + js.J;

  if (h.ann_zero && d.H.contains(ideal)) {
    if (ideal == zero)
      rep.notes.push_back("applies: ideal inside H with zero annihilator is 0");
    else {
      rep.holds = false;
      rep.notes.push_back("violation: nonzero ideal inside H despite zero annihilator");
    }
  }
  if (h.derived_full && h.root_mult && h.notJ_connected &&
      !h_plus_j.contains(ideal)) {
    if (ideal == full)
      rep.notes.push_back("applies: ideal escaping H+J is L");
    else {
      rep.holds = false;
      rep.notes.push_back("violation: ideal escapes H+J but is not L");
    }
  }
  if (h.derived_full && h.zlie_zero && h.root_mult && h.notJ_connected &&
      !js.J.contains(ideal)) {
    if (ideal == full)
      rep.notes.push_back("applies: ideal escaping J is L (Lie annihilator zero)");
    else {
      rep.holds = false;
      rep.notes.push_back("violation: ideal escapes J but is not L");
    }
  }
  if (h.derived_full && h.ann_zero && h.root_mult && h.sym_J && h.sym_notJ &&
      h.J_connected && !ideal.is_zero() && js.J.contains(ideal)) {
    if (ideal == js.J)
      rep.notes.push_back("applies: nonzero ideal inside J is J itself");
    else {
      // The only homogeneous complement candidate: root spaces not absorbed.
      Subspace k(d.algebra.dim);
      for (const Root& beta : js.lambda_J)
        if (!ideal.contains(d.root_space(beta))) k = k + d.root_space(beta);
      const bool splits = is_phi_stable_ideal(d.algebra, k) && (ideal + k) == js.J &&
                          ideal.dim() + k.dim() == js.J.dim();
      if (splits)
        rep.notes.push_back("applies: nonzero ideal inside J splits J = I + K with K an ideal");
      else {
        rep.holds = false;
        rep.notes.push_back("violation: ideal inside J neither equals J nor splits it");
      }
    }
  }
  if (rep.notes.empty()) rep.notes.push_back("no dichotomy branch applicable to this ideal");
  return rep;
}

}  // namespace homleib

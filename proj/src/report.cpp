#include "homleib/report.hpp"

#include <sstream>

#include "homleib/connections.hpp"
#include "homleib/ideals.hpp"
#include "homleib/jsplit.hpp"
#include "homleib/roots.hpp"

namespace homleib {

namespace {

json witness_json(const Witness& w) {
  json j;
  j["indices"] = w.indices;
  j["residual"] = vec_to_json(w.residual);
  return j;
}

json report_json(const IdentityReport& ir) {
  json j;
  j["property"] = ir.property;
  j["holds"] = ir.holds;
  if (ir.witness) j["witness"] = witness_json(*ir.witness);
  if (!ir.notes.empty()) j["notes"] = ir.notes;
  return j;
}

json root_list_json(const std::vector<Root>& roots) {
  json j = json::array();
  for (const Root& r : roots) j.push_back(root_str(r));
  return j;
}

json error_json(const MathError& e) {
  json j;
  j["code"] = err_code_name(e.code());
  j["message"] = e.what();
  return j;
}

// Is `s` a phi-stable two-sided ideal of `a`?
bool is_ideal(const HomAlgebra& a, const Subspace& s) {
  for (const Vec& u : s.basis_vectors()) {
    if (!s.contains(a.phi.apply(u))) return false;
    for (int j = 0; j < a.dim; ++j) {
      if (!s.contains(a.bracket(u, unit_vec(a.dim, j)))) return false;
      if (!s.contains(a.bracket(unit_vec(a.dim, j), u))) return false;
    }
  }
  return true;
}

}  // namespace

Report build_report(const ParsedAlgebra& pa, bool check_all) {
  const HomAlgebra& a = pa.algebra;
  Report r;
  r.check_all_ran = check_all;
  json& b = r.body;
  b["schema_version"] = 1;
  b["name"] = a.name;
  b["dim"] = a.dim;

  json checks = json::array();
  // `theorem` marks statements that must hold on any input that got this far;
  // their failure lands in `violations`.  Others are recorded verdicts.
  auto add_check = [&](const IdentityReport& ir, bool theorem) {
    checks.push_back(report_json(ir));
    if (theorem && !ir.holds) r.violations.push_back(ir.property);
  };

  const IdentityReport leib = check_hom_leibniz(a);
  const IdentityReport reg = check_regular(a);
  const IdentityReport hlie = check_hom_lie(a);
  b["identities"]["hom_leibniz"] = report_json(leib);
  b["identities"]["regular"] = report_json(reg);
  b["identities"]["hom_lie"] = report_json(hlie);

  b["annihilator_dim"] = annihilator(a).dim();
  b["derived_dim"] = derived(a).dim();
  b["product_is_zero"] = a.product_is_zero();

  std::optional<Subspace> J;
  try {
    J = compute_J(a);
    json js;
    js["dim"] = J->dim();
    js["basis"] = subspace_to_json(*J);
    b["squares_ideal"] = std::move(js);
  } catch (const MathError& e) {
    b["squares_ideal"]["error"] = error_json(e);
  }

  std::optional<SplitDecomposition> dec;
  if (!pa.has_h) {
    b["split"]["ok"] = false;
    b["split"]["skipped"] = "no H basis in the input";
  } else {
    try {
      dec = decompose(a, pa.h_basis);
    } catch (const MathError& e) {
      r.expected_failure = err_code_name(e.code());
      b["split"]["ok"] = false;
      b["split"]["error"] = error_json(e);
    }
  }

  if (dec) {
    const SplitDecomposition& d = *dec;
    r.decomposed = true;
    json sp;
    sp["ok"] = true;
    sp["H_dim"] = d.H.dim();
    sp["roots"] = root_list_json(d.roots);
    json spaces = json::object();
    for (size_t i = 0; i < d.roots.size(); ++i) {
      json one;
      one["dim"] = d.root_spaces[i].dim();
      one["basis"] = subspace_to_json(d.root_spaces[i]);
      spaces[root_str(d.roots[i])] = std::move(one);
    }
    sp["root_spaces"] = std::move(spaces);
    sp["phi_on_H"] = matrix_to_json(d.phiH);
    sp["symmetric"] = is_symmetric(d);

    const std::vector<IdentityReport> laws = verify_split(d);
    bool all_laws = true;
    for (const IdentityReport& ir : laws) {
      all_laws = all_laws && ir.holds;
      if (check_all) add_check(ir, true);
      else if (!ir.holds) r.violations.push_back(ir.property);
    }
    sp["laws_hold"] = all_laws;
    b["split"] = std::move(sp);

    const JSplit js = split_roots_by_J(d);
    json jj;
    jj["lambda_J"] = root_list_json(js.lambda_J);
    jj["lambda_notJ"] = root_list_json(js.lambda_notJ);
    jj["mixed"] = root_list_json(js.mixed);
    jj["J_cap_H_dim"] = js.J_cap_H.dim();
    b["j_split"] = std::move(jj);
    b["maximal_length"] = check_maximal_length(d);

    const RootPartition part = connection_classes(d);
    json cl = json::array();
    for (const auto& cls : part.classes) cl.push_back(root_list_json(cls));
    b["connections"]["class_count"] = part.classes.size();
    b["connections"]["classes"] = std::move(cl);

    if (check_all) {
      for (size_t ci = 0; ci < part.classes.size(); ++ci) {
        IdentityReport ir;
        ir.property = "connection certificates within class " + std::to_string(ci);
        for (const Root& target : part.classes[ci]) {
          const Root& from = part.classes[ci].front();
          const auto c = connected(d, from, target);
          if (!c || !verify_connection(d, from, target, *c)) {
            ir.holds = false;
            ir.notes.push_back("failed for " + root_str(from) + " ~ " + root_str(target));
          }
        }
        add_check(ir, true);
      }
      IdentityReport cross;
      cross.property = "distinct connection classes are unconnected";
      for (size_t ci = 0; ci < part.classes.size(); ++ci)
        for (size_t cj = 0; cj < part.classes.size(); ++cj)
          if (ci != cj && connected(d, part.classes[ci].front(), part.classes[cj].front())) {
            cross.holds = false;
            cross.notes.push_back("classes " + std::to_string(ci) + ", " + std::to_string(cj));
          }
      add_check(cross, true);
    }

    const GlobalDecomposition g = global_decomposition(d);
    json gd;
    gd["U_dim"] = g.U.dim();
    json summ = json::array();
    for (const IdealSummand& s : g.summands) {
      json one;
      one["class"] = root_list_json(s.class_roots);
      one["I0_dim"] = s.I0.dim();
      one["V_dim"] = s.V.dim();
      one["I_dim"] = s.I.dim();
      summ.push_back(std::move(one));
    }
    gd["summands"] = std::move(summ);
    gd["covers"] = g.covers;
    gd["direct"] = g.direct;
    if (!g.notes.empty()) gd["notes"] = g.notes;
    const IdentityReport pz = check_pairwise_zero(a, g.summands);
    gd["pairwise_zero"] = pz.holds;
    b["class_decomposition"] = std::move(gd);
    if (check_all) {
      add_check(pz, true);
      IdentityReport cov;
      cov.property = "U + sum of class ideals covers L";
      cov.holds = g.covers;
      add_check(cov, true);
      add_check(check_direct_sum(d, g), false);
      add_check(check_simple_necessary(d), false);
    } else if (!pz.holds) {
      r.violations.push_back(pz.property);
    }

    json diag;
    diag["lie_annihilator_dim"] = lie_annihilator(d, js).dim();
    const IdentityReport hg = check_H_generated(d, js);
    diag["H_generated"] = hg.holds;
    try {
      const RootMultReport rm = check_root_multiplicative(d, js);
      json rmj;
      rmj["literal"] = rm.literal_holds;
      rmj["effective"] = rm.effective_holds;
      rmj["instances"] = rm.instances.size();
      if (!rm.summary.notes.empty()) rmj["notes"] = rm.summary.notes;
      diag["root_multiplicative"] = std::move(rmj);
    } catch (const MathError& e) {
      diag["root_multiplicative"]["skipped"] = e.what();
    }
    try {
      const auto subs = sub_ideals_of_J(d, js);
      json sj = json::array();
      for (const auto& s : subs) sj.push_back(root_list_json(s));
      diag["sub_ideals_of_J"] = std::move(sj);
    } catch (const MathError& e) {
      diag["sub_ideals_of_J"] = json::object({{"skipped", e.what()}});
    }
    try {
      const RootPartition nj = nj_classes(d, js, JSide::NotJ);
      json cj = json::array();
      for (const auto& cls : nj.classes) cj.push_back(root_list_json(cls));
      diag["nj_classes_notJ"] = std::move(cj);
      if (check_all) {
        IdentityReport ir;
        ir.property = "non-J-side connection certificates";
        for (const auto& cls : nj.classes)
          for (const Root& target : cls) {
            const auto c = nj_connected(d, js, cls.front(), target);
            if (!c || !verify_nj_connection(d, js, cls.front(), target, *c)) {
              ir.holds = false;
              ir.notes.push_back("failed for " + root_str(cls.front()) + " ~ " + root_str(target));
            }
          }
        add_check(ir, true);
      }
    } catch (const MathError& e) {
      diag["nj_classes_notJ"] = json::object({{"skipped", e.what()}});
    }
    try {
      const RootPartition nj = nj_classes(d, js, JSide::J);
      json cj = json::array();
      for (const auto& cls : nj.classes) cj.push_back(root_list_json(cls));
      diag["nj_classes_J"] = std::move(cj);
    } catch (const MathError& e) {
      diag["nj_classes_J"] = json::object({{"skipped", e.what()}});
    }
    b["diagnostics"] = std::move(diag);

    const SimplicityVerdict v = decide_simplicity(d);
    json sv;
    switch (v.status) {
      case SimplicityVerdict::Status::Simple: {
        sv["status"] = "Simple";
        sv["certificate"] = v.certificate;
        break;
      }
      case SimplicityVerdict::Status::NotSimple: {
        sv["status"] = "NotSimple";
        if (v.witness) {
          sv["witness_dim"] = v.witness->dim();
          sv["witness_basis"] = subspace_to_json(*v.witness);
        }
        if (!v.witness_note.empty()) sv["witness_note"] = v.witness_note;
        break;
      }
      case SimplicityVerdict::Status::Inconclusive: {
        sv["status"] = "Inconclusive";
        sv["reasons"] = v.reasons;
        break;
      }
    }
    b["simplicity"] = std::move(sv);

    if (check_all) {
      if (J) {
        IdentityReport lj;
        lj.property = "[L, J] = 0 and phi(J) = J";
        for (int i = 0; i < a.dim && lj.holds; ++i)
          for (const Vec& u : J->basis_vectors())
            if (!vec_is_zero(a.bracket(unit_vec(a.dim, i), u))) {
              lj.holds = false;
              lj.witness = Witness{{i}, a.bracket(unit_vec(a.dim, i), u)};
              break;
            }
        if (J->map(a.phi) != *J) lj.holds = false;
        add_check(lj, true);
        add_check(check_ideal_homogeneous(d, *J), true);
        add_check(check_ideal_dichotomies(d, *J), true);
      }
      for (size_t i = 0; i < d.roots.size(); ++i) {
        const Subspace closure = ideal_closure(a, d.root_spaces[i]);
        IdentityReport ir = check_ideal_dichotomies(d, closure);
        ir.property += " [closure of L_" + root_str(d.roots[i]) + "]";
        add_check(ir, true);
      }
      if (v.status == SimplicityVerdict::Status::NotSimple && v.witness) {
        IdentityReport wr;
        wr.property = "non-simplicity witness is a proper ideal";
        const Subspace& w = *v.witness;
        wr.holds = is_ideal(a, w) && !w.is_zero() && w.dim() < a.dim &&
                   (!J || !(w == *J));
        add_check(wr, true);
      }
    }
  }

  if (check_all) b["checks"] = std::move(checks);
  b["violations"] = r.violations;
  return r;
}

namespace {

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

std::string join_strings(const json& arr) {
  std::string out;
  for (const auto& e : arr) {
    if (!out.empty()) out += ", ";
    out += e.get<std::string>();
  }
  return out.empty() ? "{}" : "{" + out + "}";
}

}  // namespace

std::string report_to_text(const Report& r) {
  const json& b = r.body;
  std::ostringstream os;
  os << "algebra '" << b["name"].get<std::string>() << "' (dim " << b["dim"].get<int>() << ")\n";
  const json& ids = b["identities"];
  os << "  identities: hom-leibniz " << mark(ids["hom_leibniz"]["holds"].get<bool>())
     << ", regular " << mark(ids["regular"]["holds"].get<bool>()) << ", hom-lie "
     << mark(ids["hom_lie"]["holds"].get<bool>()) << "\n";
  if (b["squares_ideal"].contains("error"))
    os << "  squares ideal J: error " << b["squares_ideal"]["error"]["code"].get<std::string>()
       << "\n";
  else
    os << "  squares ideal J: dim " << b["squares_ideal"]["dim"].get<int>() << "\n";
  os << "  annihilator dim " << b["annihilator_dim"].get<int>() << ", derived dim "
     << b["derived_dim"].get<int>() << "\n";

  const json& sp = b["split"];
  if (!sp["ok"].get<bool>()) {
    if (sp.contains("error"))
      os << "  split: failed [" << sp["error"]["code"].get<std::string>() << "] "
         << sp["error"]["message"].get<std::string>() << "\n";
    else
      os << "  split: skipped (" << sp["skipped"].get<std::string>() << ")\n";
  } else {
    os << "  split: H dim " << sp["H_dim"].get<int>() << ", roots " << join_strings(sp["roots"])
       << ", laws " << mark(sp["laws_hold"].get<bool>()) << "\n";
    os << "  j-split: Lambda^J " << join_strings(b["j_split"]["lambda_J"]) << ", Lambda^notJ "
       << join_strings(b["j_split"]["lambda_notJ"]) << ", mixed "
       << join_strings(b["j_split"]["mixed"]) << "\n";
    os << "  maximal length: " << (b["maximal_length"].get<bool>() ? "yes" : "no") << "\n";
    os << "  connection classes (" << b["connections"]["class_count"].get<size_t>() << "):";
    for (const auto& cls : b["connections"]["classes"]) os << " " << join_strings(cls);
    os << "\n";
    const json& gd = b["class_decomposition"];
    os << "  class decomposition: U dim " << gd["U_dim"].get<int>() << ", "
       << gd["summands"].size() << " summand(s), covers " << mark(gd["covers"].get<bool>())
       << ", direct " << (gd["direct"].get<bool>() ? "yes" : "no") << ", pairwise zero "
       << mark(gd["pairwise_zero"].get<bool>()) << "\n";
    const json& diag = b["diagnostics"];
    os << "  diagnostics: H generated " << (diag["H_generated"].get<bool>() ? "yes" : "no")
       << ", lie annihilator dim " << diag["lie_annihilator_dim"].get<int>();
    if (diag["root_multiplicative"].is_object() &&
        diag["root_multiplicative"].contains("skipped"))
      os << ", root-multiplicative skipped";
    else
      os << ", root-multiplicative "
         << mark(diag["root_multiplicative"]["effective"].get<bool>()) << " (literal "
         << mark(diag["root_multiplicative"]["literal"].get<bool>()) << ")";
    os << "\n";
    if (diag["sub_ideals_of_J"].is_array()) {
      os << "  minimal closed subsets of Lambda^J:";
      if (diag["sub_ideals_of_J"].empty()) os << " none";
      for (const auto& s : diag["sub_ideals_of_J"]) os << " " << join_strings(s);
      os << "\n";
    }
    const json& sv = b["simplicity"];
    os << "  simplicity: " << sv["status"].get<std::string>() << "\n";
    if (sv.contains("certificate"))
      for (const auto& line : sv["certificate"])
        os << "    + " << line.get<std::string>() << "\n";
    if (sv.contains("witness_dim"))
      os << "    witness: ideal of dim " << sv["witness_dim"].get<int>() << "\n";
    if (sv.contains("witness_note"))
      os << "    " << sv["witness_note"].get<std::string>() << "\n";
    if (sv.contains("reasons"))
      for (const auto& line : sv["reasons"])
        os << "    - " << line.get<std::string>() << "\n";
  }
  if (r.check_all_ran)
    os << "  checks run: " << b["checks"].size() << ", violations: " << r.violations.size()
       << "\n";
  for (const std::string& v : r.violations) os << "  VIOLATION: " << v << "\n";
  return os.str();
}

}  // namespace homleib

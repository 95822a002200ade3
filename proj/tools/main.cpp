// Command-line front end: exact structural analysis of split regular
// Hom-Leibniz algebras over Q given by rational structure constants.
//
// Exit codes: 0 = verdict computed, 1 = structured mathematical failure
// (MathError), 2 = file/syntax/usage problems.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "homleib/connections.hpp"
#include "homleib/diagnostics.hpp"
#include "homleib/ideals.hpp"
#include "homleib/io.hpp"
#include "homleib/report.hpp"

using namespace homleib;

namespace {

struct Options {
  std::string input;
  std::string json_out;
  std::string psi_path;
  bool quiet = false;
  bool check_all = false;
};

void write_json(const Options& opt, const json& body) {
  if (opt.json_out.empty()) return;
  std::ofstream out(opt.json_out);
  if (!out) throw ParseError(ParseError::Kind::Malformed, opt.json_out, "cannot open for writing");
  out << body.dump(2) << "\n";
}

void say(const Options& opt, const std::string& line) {
  if (!opt.quiet) std::cout << line << "\n";
}

std::string root_list(const std::vector<Root>& roots) {
  std::string out;
  for (const Root& r : roots) {
    if (!out.empty()) out += ", ";
    out += root_str(r);
  }
  return "{" + out + "}";
}

json identity_json(const IdentityReport& ir) {
  json j;
  j["property"] = ir.property;
  j["holds"] = ir.holds;
  if (ir.witness) {
    j["witness"]["indices"] = ir.witness->indices;
    j["witness"]["residual"] = vec_to_json(ir.witness->residual);
  }
  if (!ir.notes.empty()) j["notes"] = ir.notes;
  return j;
}

void print_identity(const Options& opt, const IdentityReport& ir) {
  std::string line = "  " + ir.property + ": " + (ir.holds ? "holds" : "FAILS");
  if (!ir.holds && ir.witness) {
    line += " at indices [";
    for (size_t i = 0; i < ir.witness->indices.size(); ++i)
      line += (i ? "," : "") + std::to_string(ir.witness->indices[i]);
    line += "]";
  }
  say(opt, line);
  for (const std::string& n : ir.notes) say(opt, "    note: " + n);
}

int run_validate(const Options& opt) {
  const ParsedAlgebra pa = parse_algebra_file(opt.input);
  const HomAlgebra& a = pa.algebra;
  say(opt, "algebra '" + a.name + "' (dim " + std::to_string(a.dim) + ")");
  json body;
  body["schema_version"] = 1;
  body["name"] = a.name;
  body["dim"] = a.dim;
  for (const IdentityReport& ir :
       {check_hom_leibniz(a), check_regular(a), check_hom_lie(a)}) {
    print_identity(opt, ir);
    body["identities"].push_back(identity_json(ir));
  }
  const Subspace J = compute_J(a);  // throws JNotLeftCentral on non-Leibniz inputs
  say(opt, "  squares ideal J: dim " + std::to_string(J.dim()));
  body["squares_ideal_dim"] = J.dim();
  body["annihilator_dim"] = annihilator(a).dim();
  body["derived_dim"] = derived(a).dim();
  write_json(opt, body);
  return 0;
}

std::vector<Vec> require_h(const ParsedAlgebra& pa) {
  if (!pa.has_h)
    throw MathError(ErrCode::MissingH, "this command needs an \"H\" member in the input file");
  return pa.h_basis;
}

int run_decompose(const Options& opt) {
  const ParsedAlgebra pa = parse_algebra_file(opt.input);
  const SplitDecomposition d = decompose(pa.algebra, require_h(pa));
  say(opt, "algebra '" + pa.algebra.name + "': split decomposition");
  say(opt, "  H dim " + std::to_string(d.H.dim()));
  json body;
  body["schema_version"] = 1;
  body["name"] = pa.algebra.name;
  body["H_dim"] = d.H.dim();
  json spaces = json::object();
  for (size_t i = 0; i < d.roots.size(); ++i) {
    say(opt, "  L_" + root_str(d.roots[i]) + ": dim " +
                 std::to_string(d.root_spaces[i].dim()));
    json one;
    one["dim"] = d.root_spaces[i].dim();
    one["basis"] = subspace_to_json(d.root_spaces[i]);
    spaces[root_str(d.roots[i])] = std::move(one);
  }
  body["roots"] = json::array();
  for (const Root& r : d.roots) body["roots"].push_back(root_str(r));
  body["root_spaces"] = std::move(spaces);
  body["phi_on_H"] = matrix_to_json(d.phiH);
  bool all = true;
  json laws = json::array();
  for (const IdentityReport& ir : verify_split(d)) {
    all = all && ir.holds;
    if (!ir.holds) print_identity(opt, ir);
    laws.push_back(identity_json(ir));
  }
  body["laws_hold"] = all;
  body["laws"] = std::move(laws);
  say(opt, std::string("  decomposition laws: ") + (all ? "all hold" : "FAIL"));
  write_json(opt, body);
  return all ? 0 : 1;
}

json connection_json(const Connection& c) {
  json j;
  j["chain"] = json::array();
  for (const Root& r : c.chain) j["chain"].push_back(root_str(r));
  j["sums"] = json::array();
  for (const Vec& v : c.sums) j["sums"].push_back(vec_to_json(v));
  j["start_shift"] = c.start_shift;
  j["end_shift"] = c.end_shift;
  j["end_sign"] = c.end_sign;
  return j;
}

int run_connections(const Options& opt) {
  const ParsedAlgebra pa = parse_algebra_file(opt.input);
  const SplitDecomposition d = decompose(pa.algebra, require_h(pa));
  const RootPartition part = connection_classes(d);
  say(opt, "algebra '" + pa.algebra.name + "': " + std::to_string(part.classes.size()) +
               " connection class(es)");
  json body;
  body["schema_version"] = 1;
  body["name"] = pa.algebra.name;
  body["classes"] = json::array();
  bool all_ok = true;
  for (size_t ci = 0; ci < part.classes.size(); ++ci) {
    const auto& cls = part.classes[ci];
    say(opt, "  class " + std::to_string(ci) + ": " + root_list(cls));
    json cj;
    cj["roots"] = json::array();
    for (const Root& r : cls) cj["roots"].push_back(root_str(r));
    cj["certificates"] = json::array();
    for (const Root& target : cls) {
      const auto c = connected(d, cls.front(), target);
      const bool ok = c && verify_connection(d, cls.front(), target, *c);
      all_ok = all_ok && ok;
      if (c) {
        std::string chain;
        for (const Root& r : c->chain) chain += (chain.empty() ? "" : " ") + root_str(r);
        say(opt, "    " + root_str(cls.front()) + " ~ " + root_str(target) + ": chain [" +
                     chain + "], n=" + std::to_string(c->start_shift) +
                     ", m=" + std::to_string(c->end_shift) +
                     ", sign=" + std::to_string(c->end_sign) +
                     (ok ? "  (verified)" : "  (VERIFY FAILED)"));
        json one = connection_json(*c);
        one["from"] = root_str(cls.front());
        one["to"] = root_str(target);
        one["verified"] = ok;
        cj["certificates"].push_back(std::move(one));
      } else {
        say(opt, "    " + root_str(cls.front()) + " ~ " + root_str(target) +
                     ": NO CONNECTION (class is broken)");
      }
    }
    body["classes"].push_back(std::move(cj));
  }
  write_json(opt, body);
  if (!all_ok) throw MathError(ErrCode::InternalInconsistency, "a certificate failed to verify");
  return 0;
}

int run_decomposition(const Options& opt) {
  const ParsedAlgebra pa = parse_algebra_file(opt.input);
  const SplitDecomposition d = decompose(pa.algebra, require_h(pa));
  const GlobalDecomposition g = global_decomposition(d);
  say(opt, "algebra '" + pa.algebra.name + "': L = U + sum of class ideals");
  say(opt, "  U dim " + std::to_string(g.U.dim()));
  json body;
  body["schema_version"] = 1;
  body["name"] = pa.algebra.name;
  body["U_dim"] = g.U.dim();
  body["summands"] = json::array();
  for (const IdealSummand& s : g.summands) {
    say(opt, "  class " + root_list(s.class_roots) + ": I0 dim " + std::to_string(s.I0.dim()) +
                 ", V dim " + std::to_string(s.V.dim()) + ", I dim " + std::to_string(s.I.dim()));
    json one;
    one["class"] = json::array();
    for (const Root& r : s.class_roots) one["class"].push_back(root_str(r));
    one["I0_dim"] = s.I0.dim();
    one["V_dim"] = s.V.dim();
    one["I_dim"] = s.I.dim();
    one["I_basis"] = subspace_to_json(s.I);
    body["summands"].push_back(std::move(one));
  }
  const IdentityReport pz = check_pairwise_zero(pa.algebra, g.summands);
  say(opt, std::string("  pairwise products: ") + (pz.holds ? "zero" : "NONZERO"));
  say(opt, std::string("  covers L: ") + (g.covers ? "yes" : "NO"));
  say(opt, std::string("  direct: ") + (g.direct ? "yes" : "not established"));
  for (const std::string& n : g.notes) say(opt, "    note: " + n);
  body["pairwise_zero"] = pz.holds;
  body["covers"] = g.covers;
  body["direct"] = g.direct;
  if (!g.notes.empty()) body["notes"] = g.notes;
  write_json(opt, body);
  if (!pz.holds || !g.covers)
    throw MathError(ErrCode::InternalInconsistency, "class-ideal law failed to re-verify");
  return 0;
}

int run_simplicity(const Options& opt) {
  const ParsedAlgebra pa = parse_algebra_file(opt.input);
  const SplitDecomposition d = decompose(pa.algebra, require_h(pa));
  const SimplicityVerdict v = decide_simplicity(d);
  json body;
  body["schema_version"] = 1;
  body["name"] = pa.algebra.name;
  switch (v.status) {
    case SimplicityVerdict::Status::Simple:
      say(opt, "verdict: Simple");
      for (const std::string& c : v.certificate) say(opt, "  + " + c);
      body["status"] = "Simple";
      body["certificate"] = v.certificate;
      break;
    case SimplicityVerdict::Status::NotSimple:
      say(opt, "verdict: NotSimple");
      body["status"] = "NotSimple";
      if (v.witness) {
        say(opt, "  witness ideal of dim " + std::to_string(v.witness->dim()));
        body["witness_dim"] = v.witness->dim();
        body["witness_basis"] = subspace_to_json(*v.witness);
      }
      if (!v.witness_note.empty()) {
        say(opt, "  " + v.witness_note);
        body["witness_note"] = v.witness_note;
      }
      break;
    case SimplicityVerdict::Status::Inconclusive:
      say(opt, "verdict: Inconclusive");
      for (const std::string& m : v.reasons) say(opt, "  - " + m);
      body["status"] = "Inconclusive";
      body["reasons"] = v.reasons;
      break;
  }
  write_json(opt, body);
  return 0;
}

int run_semidirect(const Options& opt) {
  const ParsedAlgebra pa = parse_algebra_file(opt.input);
  const HomAlgebra prod = semidirect_product(pa.algebra);
  say(opt, "semidirect sum L x (L/J): dim " + std::to_string(prod.dim));
  const IdentityReport lie = check_hom_lie(prod);
  const IdentityReport reg = check_regular(prod);
  print_identity(opt, lie);
  print_identity(opt, reg);
  write_json(opt, algebra_to_json(prod, {}));
  if (!lie.holds || !reg.holds)
    throw MathError(ErrCode::InternalInconsistency,
                    "semidirect sum failed to be a regular Hom-Lie algebra");
  return 0;
}

int run_twist(const Options& opt) {
  const ParsedAlgebra pa = parse_algebra_file(opt.input);
  const Matrix psi = parse_matrix_file(opt.psi_path);
  const HomAlgebra twisted = yau_twist(pa.algebra, psi);
  say(opt, "twisted algebra '" + twisted.name + "' (dim " + std::to_string(twisted.dim) + ")");
  print_identity(opt, check_hom_leibniz(twisted));
  print_identity(opt, check_regular(twisted));
  write_json(opt, algebra_to_json(twisted, pa.h_basis));
  return 0;
}

int run_report(const Options& opt) {
  const ParsedAlgebra pa = parse_algebra_file(opt.input);
  const Report r = build_report(pa, opt.check_all);
  if (!opt.quiet) std::cout << report_to_text(r);
  write_json(opt, r.body);
  return r.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact structural analysis of split regular Hom-Leibniz algebras over Q:\n"
      "root-space decompositions, connections of roots, class-ideal\n"
      "decompositions and simplicity verdicts, all in rational arithmetic."};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input)
      sub->add_option("input", opt.input, "algebra file (JSON)")->required();
    sub->add_option("--json", opt.json_out, "write the result as JSON to this file");
    sub->add_flag("--quiet", opt.quiet, "suppress text output");
    return sub;
  };

  add_common(app.add_subcommand("validate", "check the Hom-Leibniz/regular/Hom-Lie identities and J"));
  add_common(app.add_subcommand("decompose", "root-space decomposition with respect to H"));
  add_common(app.add_subcommand("connections", "connection classes with verified certificates"));
  add_common(app.add_subcommand("decomposition", "L = U + sum of class ideals"));
  add_common(app.add_subcommand("simplicity", "simplicity verdict with certificate or witness"));
  add_common(app.add_subcommand("semidirect", "build the Hom-Lie semidirect sum L x (L/J)"));
  CLI::App* twist = add_common(app.add_subcommand("twist", "apply a Yau twist by a matrix psi"));
  twist->add_option("--psi", opt.psi_path, "matrix file for psi")->required();
  CLI::App* report = add_common(app.add_subcommand("report", "full analysis in one pass"));
  report->add_flag("--check-all", opt.check_all, "re-verify every structural law");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("validate")) return run_validate(opt);
    if (app.got_subcommand("decompose")) return run_decompose(opt);
    if (app.got_subcommand("connections")) return run_connections(opt);
    if (app.got_subcommand("decomposition")) return run_decomposition(opt);
    if (app.got_subcommand("simplicity")) return run_simplicity(opt);
    if (app.got_subcommand("semidirect")) return run_semidirect(opt);
    if (app.got_subcommand("twist")) return run_twist(opt);
    if (app.got_subcommand("report")) return run_report(opt);
  } catch (const MathError& e) {
    std::cerr << "error [" << err_code_name(e.code()) << "]: " << e.what() << "\n";
    if (!opt.json_out.empty()) {
      json body;
      body["schema_version"] = 1;
      body["error"]["code"] = err_code_name(e.code());
      body["error"]["message"] = e.what();
      std::ofstream out(opt.json_out);
      if (out) out << body.dump(2) << "\n";
    }
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}

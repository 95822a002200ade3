#include <doctest.h>

#include "corpus.hpp"
#include "homleib/diagnostics.hpp"

using namespace homleib;
using testutil::load;
using testutil::q;
using testutil::qvec;

namespace {

SplitDecomposition dec(const char* name) {
  const ParsedAlgebra pa = load(name);
  return decompose(pa.algebra, pa.h_basis);
}

Root root(const std::vector<std::string>& vals) { return Root{qvec(vals)}; }

}  // namespace

TEST_CASE("roots split by position relative to the squares ideal") {
  const SplitDecomposition s = dec("sl2v1");
  const JSplit sj = split_roots_by_J(s);
  CHECK(sj.lambda_J == std::vector<Root>{root({"-1"}), root({"1"})});
  CHECK(sj.lambda_notJ == std::vector<Root>{root({"-2"}), root({"2"})});
  CHECK(sj.mixed.empty());
  CHECK(sj.J_cap_H.is_zero());

  const SplitDecomposition p = dec("sl2");
  const JSplit pj = split_roots_by_J(p);
  CHECK(pj.J.is_zero());
  CHECK(pj.lambda_J.empty());
  CHECK(pj.lambda_notJ.size() == 2);

  // mixed7: L_{+-1} each meet J in one line without lying inside it.
  const SplitDecomposition m = dec("mixed7");
  const JSplit mj = split_roots_by_J(m);
  CHECK(mj.mixed == std::vector<Root>{root({"-1"}), root({"1"})});
  CHECK(mj.lambda_notJ == std::vector<Root>{root({"-2"}), root({"2"})});
  CHECK(mj.lambda_J.empty());

  const SplitDecomposition t = dec("d6v10");
  const JSplit tj = split_roots_by_J(t);
  CHECK(tj.lambda_J == std::vector<Root>{root({"-1", "0"}), root({"0", "-1"}), root({"0", "1"}),
                                         root({"1", "0"})});
  CHECK(tj.lambda_notJ.size() == 4);
  CHECK(tj.J.dim() == 4);
}

TEST_CASE("maximal length means one-dimensional root spaces") {
  CHECK(check_maximal_length(dec("sl2")));
  CHECK(check_maximal_length(dec("sl2v1")));
  CHECK(check_maximal_length(dec("d6")));
  CHECK(check_maximal_length(dec("d6v10")));
  CHECK(!check_maximal_length(dec("mixed7")));
}

TEST_CASE("lie annihilator") {
  const SplitDecomposition s = dec("sl2v1");
  CHECK(lie_annihilator(s, split_roots_by_J(s)).is_zero());

  const SplitDecomposition a = dec("a0");
  CHECK(lie_annihilator(a, split_roots_by_J(a)) == Subspace::full(2));

  const SplitDecomposition d = dec("d6");
  CHECK(lie_annihilator(d, split_roots_by_J(d)).is_zero());
}

TEST_CASE("ideal homogeneity") {
  const SplitDecomposition d = dec("sl2v1");
  const Subspace J = compute_J(d.algebra);
  const IdentityReport r = check_ideal_homogeneous(d, J);
  CHECK(r.holds);

  // The closure of a single root space is homogeneous too.
  const Subspace c = ideal_closure(d.algebra, d.root_space(root({"-1"})));
  CHECK(c == J);
  CHECK(check_ideal_homogeneous(d, c).holds);

  // span{e} inside sl2 is not an ideal ([e,f] = h escapes).
  const SplitDecomposition p = dec("sl2");
  CHECK_THROWS_WITH_AS(check_ideal_homogeneous(p, Subspace::span(3, {unit_vec(3, 1)})),
                       doctest::Contains("NotAnIdeal"), MathError);
}

TEST_CASE("H generated by pairings of opposite non-J root spaces") {
  for (const char* name : {"sl2", "sl2c", "sl2v1", "d6", "d6s", "d6v10", "mixed7"}) {
    CAPTURE(name);
    const SplitDecomposition d = dec(name);
    CHECK(check_H_generated(d, split_roots_by_J(d)).holds);
  }
  const SplitDecomposition a = dec("a0");
  CHECK(!check_H_generated(a, split_roots_by_J(a)).holds);
}

TEST_CASE("root multiplicativity: literal vs swapped second condition") {
  const SplitDecomposition d = dec("sl2v1");
  const RootMultReport r = check_root_multiplicative(d, split_roots_by_J(d));
  CHECK(r.effective_holds);
  CHECK(!r.literal_holds);
  CHECK(r.summary.holds);
  REQUIRE(r.instances.size() == 2);
  for (const RootMultInstance& inst : r.instances) {
    CHECK(inst.condition == 2);
    CHECK(!inst.literal_nonzero);  // [L_alpha, L_gamma] lands in [L,J] = 0
    CHECK(inst.swapped_nonzero);
  }
  CHECK(r.instances[0].alpha == root({"-2"}));
  CHECK(r.instances[0].other == root({"1"}));
  CHECK(r.instances[0].target == root({"-1"}));
  CHECK(r.instances[1].alpha == root({"2"}));
  CHECK(r.instances[1].other == root({"-1"}));
  CHECK(r.instances[1].target == root({"1"}));

  // No applicable pairs at all on d6: vacuously multiplicative.
  const SplitDecomposition d6 = dec("d6");
  const RootMultReport v = check_root_multiplicative(d6, split_roots_by_J(d6));
  CHECK(v.instances.empty());
  CHECK(v.literal_holds);
  CHECK(v.effective_holds);

  // Needs maximal length.
  const SplitDecomposition m = dec("mixed7");
  CHECK_THROWS_WITH_AS(check_root_multiplicative(m, split_roots_by_J(m)),
                       doctest::Contains("HypothesisMissing"), MathError);
}

TEST_CASE("minimal closed subsets of the J-side roots") {
  const SplitDecomposition s = dec("sl2v1");
  const auto subs = sub_ideals_of_J(s, split_roots_by_J(s));
  REQUIRE(subs.size() == 1);
  CHECK(subs[0] == std::vector<Root>{root({"-1"}), root({"1"})});

  const SplitDecomposition p = dec("sl2");
  CHECK(sub_ideals_of_J(p, split_roots_by_J(p)).empty());

  const SplitDecomposition t = dec("d6v10");
  const auto tsubs = sub_ideals_of_J(t, split_roots_by_J(t));
  REQUIRE(tsubs.size() == 2);
  CHECK(tsubs[0] == std::vector<Root>{root({"-1", "0"}), root({"1", "0"})});
  CHECK(tsubs[1] == std::vector<Root>{root({"0", "-1"}), root({"0", "1"})});

  const SplitDecomposition m = dec("mixed7");
  CHECK_THROWS_WITH_AS(sub_ideals_of_J(m, split_roots_by_J(m)),
                       doctest::Contains("HypothesisMissing"), MathError);
}

TEST_CASE("class J-ideal") {
  const SplitDecomposition s = dec("sl2v1");
  const JSplit sj = split_roots_by_J(s);
  const Subspace v = class_J_ideal(s, sj, root({"1"}));
  CHECK(v == compute_J(s.algebra));
  CHECK(ideal_closure(s.algebra, v) == v);
  CHECK_THROWS_WITH_AS(class_J_ideal(s, sj, root({"2"})), doctest::Contains("ClassMismatch"),
                       MathError);

  const SplitDecomposition t = dec("d6v10");
  const JSplit tj = split_roots_by_J(t);
  const Subspace w = class_J_ideal(t, tj, root({"1", "0"}));
  CHECK(w == Subspace::span(10, {unit_vec(10, 3), unit_vec(10, 4)}));
  CHECK(ideal_closure(t.algebra, w) == w);
}

TEST_CASE("simplicity verdicts across the corpus") {
  using S = SimplicityVerdict::Status;

  for (const char* name : {"sl2", "sl2c", "sl2v1", "d6s"}) {
    CAPTURE(name);
    const SimplicityVerdict v = decide_simplicity(dec(name));
    CHECK(v.status == S::Simple);
    CHECK(!v.certificate.empty());
  }

  const SplitDecomposition d6 = dec("d6");
  const SimplicityVerdict vd = decide_simplicity(d6);
  REQUIRE(vd.status == S::NotSimple);
  REQUIRE(vd.witness.has_value());
  CHECK(vd.witness->dim() == 3);
  // Re-verify the witness: a proper nonzero ideal distinct from J.
  CHECK(ideal_closure(d6.algebra, *vd.witness) == *vd.witness);
  CHECK(!vd.witness->is_zero());
  CHECK(vd.witness->dim() < 6);
  CHECK(!(*vd.witness == compute_J(d6.algebra)));

  const SimplicityVerdict va = decide_simplicity(dec("a0"));
  REQUIRE(va.status == S::NotSimple);
  CHECK(!va.witness_note.empty());  // zero product: no subspace witness needed

  const SimplicityVerdict vm = decide_simplicity(dec("mixed7"));
  REQUIRE(vm.status == S::NotSimple);
  REQUIRE(vm.witness.has_value());
  CHECK(vm.witness->dim() == 4);

  const SimplicityVerdict vt = decide_simplicity(dec("d6v10"));
  REQUIRE(vt.status == S::NotSimple);
  REQUIRE(vt.witness.has_value());
  CHECK(vt.witness->dim() == 5);
}

TEST_CASE("ideal dichotomies") {
  const SplitDecomposition s = dec("sl2v1");
  const int n = s.algebra.dim;

  CHECK(check_ideal_dichotomies(s, Subspace(n)).holds);             // I = 0
  CHECK(check_ideal_dichotomies(s, Subspace::full(n)).holds);       // I = L
  CHECK(check_ideal_dichotomies(s, compute_J(s.algebra)).holds);    // I = J

  // A proper summand of d6: every applicable branch is either satisfied or
  // skipped with a note, never violated.
  const SplitDecomposition d6 = dec("d6");
  const Subspace copy1 = Subspace::span(6, {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)});
  const IdentityReport r = check_ideal_dichotomies(d6, copy1);
  CHECK(r.holds);
  CHECK(!r.notes.empty());

  CHECK_THROWS_WITH_AS(check_ideal_dichotomies(s, Subspace::span(n, {unit_vec(n, 1)})),
                       doctest::Contains("NotAnIdeal"), MathError);
}

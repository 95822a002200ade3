#include <doctest.h>

#include "corpus.hpp"
#include "homleib/ideals.hpp"

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

TEST_CASE("sl2: the single class ideal is the whole algebra") {
  const SplitDecomposition d = dec("sl2");
  const RootPartition p = connection_classes(d);
  REQUIRE(p.classes.size() == 1);
  const IdealSummand s = build_class_ideal(d, p.classes[0]);
  CHECK(s.I0 == Subspace::span(3, {unit_vec(3, 0)}));  // [e,f] pairings span h
  CHECK(s.V == Subspace::span(3, {unit_vec(3, 1), unit_vec(3, 2)}));
  CHECK(s.I == Subspace::full(3));

  const GlobalDecomposition g = global_decomposition(d);
  CHECK(g.U.dim() == 0);
  REQUIRE(g.summands.size() == 1);
  CHECK(g.covers);
  CHECK(g.direct);
}

TEST_CASE("d6: two class ideals, one per copy, meeting trivially") {
  const SplitDecomposition d = dec("d6");
  const GlobalDecomposition g = global_decomposition(d);
  REQUIRE(g.summands.size() == 2);

  const IdealSummand& a = g.summands[0];
  const IdealSummand& b = g.summands[1];
  CHECK(a.I0.dim() == 1);
  CHECK(a.V.dim() == 2);
  CHECK(a.I == Subspace::span(6, {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)}));
  CHECK(b.I == Subspace::span(6, {unit_vec(6, 3), unit_vec(6, 4), unit_vec(6, 5)}));
  CHECK(a.I.intersect(b.I).dim() == 0);
  CHECK(a.I.dim() + b.I.dim() == 6);

  CHECK(g.U.dim() == 0);
  CHECK(g.covers);
  CHECK(g.direct);
  CHECK(check_pairwise_zero(d.algebra, g.summands).holds);

  CHECK(!check_simple_necessary(d).holds);  // two classes rule out simplicity

  // Each summand really is a two-sided ideal: its closure adds nothing.
  for (const IdealSummand& s : g.summands)
    CHECK(ideal_closure(d.algebra, s.I) == s.I);
}

TEST_CASE("sl2v1 and mixed7: one class swallowing everything") {
  for (const char* name : {"sl2v1", "mixed7"}) {
    CAPTURE(name);
    const SplitDecomposition d = dec(name);
    const GlobalDecomposition g = global_decomposition(d);
    REQUIRE(g.summands.size() == 1);
    CHECK(g.summands[0].I == Subspace::full(d.algebra.dim));
    CHECK(g.U.dim() == 0);
    CHECK(g.covers);
  }
}

TEST_CASE("a0: no roots, no summands, U carries all of H") {
  const SplitDecomposition d = dec("a0");
  const GlobalDecomposition g = global_decomposition(d);
  CHECK(g.summands.empty());
  CHECK(g.U == Subspace::full(2));
  CHECK(g.covers);
  CHECK(!g.direct);  // annihilator is everything, [L,L] = 0

  const IdentityReport ds = check_direct_sum(d, g);
  CHECK(!ds.holds);
  REQUIRE(!ds.notes.empty());
}

TEST_CASE("class ideal construction rejects non-classes") {
  const SplitDecomposition d = dec("d6");
  CHECK_THROWS_WITH_AS(build_class_ideal(d, {root({"2", "0"})}), doctest::Contains("NotAClass"),
                       MathError);
  CHECK_THROWS_WITH_AS(build_class_ideal(d, {root({"2", "0"}), root({"0", "2"})}),
                       doctest::Contains("NotAClass"), MathError);
  CHECK_THROWS_WITH_AS(build_class_ideal(d, {}), doctest::Contains("NotAClass"), MathError);
}

TEST_CASE("d6v10: two dim-5 summands, still direct") {
  const SplitDecomposition d = dec("d6v10");
  const GlobalDecomposition g = global_decomposition(d);
  REQUIRE(g.summands.size() == 2);
  CHECK(g.summands[0].I.dim() == 5);
  CHECK(g.summands[1].I.dim() == 5);
  CHECK(g.summands[0].I.intersect(g.summands[1].I).dim() == 0);
  CHECK(g.U.dim() == 0);
  CHECK(g.covers);
  CHECK(g.direct);
  CHECK(check_pairwise_zero(d.algebra, g.summands).holds);
}

TEST_CASE("simple necessary condition singles out one-class algebras") {
  CHECK(check_simple_necessary(dec("sl2")).holds);
  CHECK(check_simple_necessary(dec("sl2v1")).holds);
  CHECK(check_simple_necessary(dec("d6s")).holds);
  CHECK(!check_simple_necessary(dec("d6")).holds);
  CHECK(!check_simple_necessary(dec("a0")).holds);
}

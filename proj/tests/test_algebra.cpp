#include <doctest.h>

#include "corpus.hpp"
#include "homleib/algebra.hpp"

using namespace homleib;
using testutil::load;
using testutil::q;
using testutil::qvec;

namespace {

// Recompute the Hom-Leibniz residual [[y,z],phi(x)] - [[y,x],phi(z)] - [phi(y),[z,x]]
// at basis indices, independently of check_hom_leibniz's internals.
Vec leibniz_residual(const HomAlgebra& a, int y, int z, int x) {
  const Vec ey = unit_vec(a.dim, y), ez = unit_vec(a.dim, z), ex = unit_vec(a.dim, x);
  const Vec lhs = a.bracket(a.bracket(ey, ez), a.phi.apply(ex));
  const Vec r1 = a.bracket(a.bracket(ey, ex), a.phi.apply(ez));
  const Vec r2 = a.bracket(a.phi.apply(ey), a.bracket(ez, ex));
  return vec_sub(lhs, vec_add(r1, r2));
}

}  // namespace

TEST_CASE("identity checks hold on the corpus") {
  for (const char* name : {"a0", "sl2", "sl2c", "lb2", "sl2v1", "d6", "d6s", "mixed7", "d6v10"}) {
    CAPTURE(name);
    const HomAlgebra a = load(name).algebra;
    CHECK(check_hom_leibniz(a).holds);
    CHECK(check_regular(a).holds);
  }
  // Of these, exactly the ones with a one-sided module part fail antisymmetry.
  CHECK(check_hom_lie(load("sl2").algebra).holds);
  CHECK(check_hom_lie(load("d6s").algebra).holds);
  CHECK(!check_hom_lie(load("lb2").algebra).holds);
  CHECK(!check_hom_lie(load("sl2v1").algebra).holds);
}

TEST_CASE("hom-lie failure carries a recomputable witness") {
  const HomAlgebra a = load("sl2v1").algebra;
  const IdentityReport r = check_hom_lie(a);
  REQUIRE(!r.holds);
  REQUIRE(r.witness.has_value());
  // First failing antisymmetry pair in scan order: (h, mp) = (0, 3).
  CHECK(r.witness->indices == std::vector<int>{0, 3});
  const Vec re = vec_add(a.bracket(unit_vec(5, 0), unit_vec(5, 3)),
                         a.bracket(unit_vec(5, 3), unit_vec(5, 0)));
  CHECK(re == r.witness->residual);
  CHECK(!vec_is_zero(re));
}

TEST_CASE("hom-leibniz failure carries a recomputable witness") {
  HomAlgebra a = load("sl2").algebra;
  a.table[2][1] = a.table[1][2];  // [f,e] := +h breaks the identity
  const IdentityReport r = check_hom_leibniz(a);
  REQUIRE(!r.holds);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->indices.size() == 3);
  const auto& ix = r.witness->indices;
  const Vec re = leibniz_residual(a, ix[0], ix[1], ix[2]);
  CHECK(re == r.witness->residual);
  CHECK(!vec_is_zero(re));
}

TEST_CASE("regularity failures") {
  HomAlgebra a = load("sl2").algebra;
  a.phi.at(0, 0) = 0;  // singular phi
  CHECK(!check_regular(a).holds);

  HomAlgebra b = load("sl2").algebra;
  b.phi = Matrix::identity(3);
  b.phi.at(1, 1) = 2;
  b.phi.at(2, 2) = 3;  // invertible but not multiplicative: psi([e,f]) != [psi e, psi f]
  const IdentityReport r = check_regular(b);
  REQUIRE(!r.holds);
  REQUIRE(r.witness.has_value());
  const auto& ix = r.witness->indices;
  REQUIRE(ix.size() == 2);
  const Vec re = vec_sub(b.phi.apply(b.bracket_basis(ix[0], ix[1])),
                         b.bracket(b.phi.apply(unit_vec(3, ix[0])), b.phi.apply(unit_vec(3, ix[1]))));
  CHECK(re == r.witness->residual);
  CHECK(!vec_is_zero(re));
}

TEST_CASE("squares ideal oracles") {
  CHECK(compute_J(load("sl2").algebra).is_zero());
  CHECK(compute_J(load("a0").algebra).is_zero());
  CHECK(compute_J(load("d6s").algebra).is_zero());

  // lb2: [b,b] = a seeds J = span{a}.
  CHECK(compute_J(load("lb2").algebra) == Subspace::span(2, {unit_vec(2, 0)}));

  // sl2v1: polarization of (h, mp) and (h, mm) seeds span{mp, mm}.
  CHECK(compute_J(load("sl2v1").algebra) ==
        Subspace::span(5, {unit_vec(5, 3), unit_vec(5, 4)}));

  // mixed7: the antisymmetric module part contributes nothing to J.
  CHECK(compute_J(load("mixed7").algebra) ==
        Subspace::span(7, {unit_vec(7, 3), unit_vec(7, 4)}));

  CHECK(compute_J(load("d6v10").algebra) ==
        Subspace::span(10, {unit_vec(10, 3), unit_vec(10, 4), unit_vec(10, 8), unit_vec(10, 9)}));
}

TEST_CASE("left-central failure of J is detected") {
  // [a,a] = a: J = span{a} but [a, J] != 0, impossible for a Hom-Leibniz input.
  HomAlgebra a = make_algebra("bad", 1, {});
  a.table[0][0] = unit_vec(1, 0);
  CHECK(!check_hom_leibniz(a).holds);
  CHECK_THROWS_WITH_AS(compute_J(a), doctest::Contains("JNotLeftCentral"), MathError);
}

TEST_CASE("ideal closure oracles on sl2v1") {
  const HomAlgebra a = load("sl2v1").algebra;
  // Closing the lone square generator mp recovers J exactly.
  CHECK(ideal_closure(a, Subspace::span(5, {unit_vec(5, 3)})) ==
        Subspace::span(5, {unit_vec(5, 3), unit_vec(5, 4)}));
  // Closing a non-J root vector sweeps out everything.
  CHECK(ideal_closure(a, Subspace::span(5, {unit_vec(5, 1)})) == Subspace::full(5));
  CHECK(ideal_closure(a, Subspace(5)).is_zero());
}

TEST_CASE("annihilator and derived oracles") {
  CHECK(annihilator(load("a0").algebra) == Subspace::full(2));
  CHECK(annihilator(load("sl2").algebra).is_zero());
  CHECK(annihilator(load("lb2").algebra) == Subspace::span(2, {unit_vec(2, 0)}));
  CHECK(annihilator(load("sl2v1").algebra).is_zero());

  CHECK(derived(load("a0").algebra).is_zero());
  CHECK(derived(load("sl2").algebra) == Subspace::full(3));
  CHECK(derived(load("lb2").algebra) == Subspace::span(2, {unit_vec(2, 0)}));
  CHECK(derived(load("d6v10").algebra) == Subspace::full(10));
}

TEST_CASE("semidirect sum is a regular Hom-Lie algebra of the right size") {
  for (const char* name : {"a0", "sl2", "sl2c", "lb2", "sl2v1", "d6", "d6s", "mixed7", "d6v10"}) {
    CAPTURE(name);
    const HomAlgebra a = load(name).algebra;
    const HomAlgebra p = semidirect_product(a);
    CHECK(p.dim == 2 * a.dim - compute_J(a).dim());
    CHECK(check_hom_lie(p).holds);
    CHECK(check_regular(p).holds);
    CHECK(check_hom_leibniz(p).holds);
  }
}

TEST_CASE("semidirect sum: second-component H carries the weight structure") {
  // For v in L_lambda the pairs (v, 0) and (0, v+J) are weight vectors for
  // hat(H) = {(0, h+J)}; the diagonal embedding (h, h+J) is not even an
  // eigen-relation for quotient vectors, which is why hat(H) sits in the
  // second component only.
  const ParsedAlgebra pa = load("sl2v1");
  const HomAlgebra& a = pa.algebra;
  const HomAlgebra p = semidirect_product(a);
  const Subspace J = compute_J(a);

  // Transversal = coordinate complement of J; quotient coordinates follow the
  // first-component block.  Recomputed here independently of the constructor.
  std::vector<Vec> mixed_basis = J.basis_vectors();
  const std::vector<Vec> transversal = J.pivot_complement().basis_vectors();
  mixed_basis.insert(mixed_basis.end(), transversal.begin(), transversal.end());
  const int jdim = J.dim();
  auto embed_second = [&](const Vec& x) {  // (0, x + J)
    const auto coords = coordinates_in(mixed_basis, x);
    REQUIRE(coords.has_value());
    Vec out = zero_vec(p.dim);
    for (size_t t = 0; t < transversal.size(); ++t) out[a.dim + t] = (*coords)[jdim + t];
    return out;
  };
  auto embed_first = [&](const Vec& x) {  // (x, 0)
    Vec out = zero_vec(p.dim);
    for (int i = 0; i < a.dim; ++i) out[i] = x[i];
    return out;
  };

  const Vec h = unit_vec(5, 0);
  const Vec hhat = embed_second(h);
  REQUIRE(!vec_is_zero(hhat));

  // Weight relation [x, hhat] = lambda(h) phihat(x) for root vectors of the base:
  // e, f, mp, mm have weights -2, 2, -1, 1.
  const std::vector<std::pair<int, Scalar>> weights = {
      {1, Scalar(-2)}, {2, Scalar(2)}, {3, Scalar(-1)}, {4, Scalar(1)}};
  for (const auto& [idx, lam] : weights) {
    const Vec v = unit_vec(5, idx);
    const Vec first = embed_first(v);
    CHECK(p.bracket(first, hhat) == vec_scale(lam, p.phi.apply(first)));
    const Vec second = embed_second(v);
    if (!vec_is_zero(second))  // mp, mm lie in J: their classes vanish
      CHECK(p.bracket(second, hhat) == vec_scale(lam, p.phi.apply(second)));
  }
  // J-part classes vanish, non-J parts survive.
  CHECK(vec_is_zero(embed_second(unit_vec(5, 3))));
  CHECK(!vec_is_zero(embed_second(unit_vec(5, 1))));

  // hhat is central for hat(H) x hat(H) and phi-stable.
  CHECK(vec_is_zero(p.bracket(hhat, hhat)));
  CHECK(p.phi.apply(hhat) == hhat);

  // The diagonal embedding fails: [(0, e+J), (h, h+J)] has a nonzero first
  // component coming from -[h, e], so it cannot equal a multiple of (0, e+J).
  const Vec diag_h = vec_add(embed_first(h), hhat);
  const Vec e_second = embed_second(unit_vec(5, 1));
  const Vec br = p.bracket(e_second, diag_h);
  CHECK(br != vec_scale(Scalar(-2), p.phi.apply(e_second)));
}

TEST_CASE("yau twist round trip and validation") {
  const HomAlgebra sl2 = load("sl2").algebra;
  Matrix psi = Matrix::identity(3);
  psi.at(1, 1) = 2;
  psi.at(2, 2) = q("1/2");

  const HomAlgebra t = yau_twist(sl2, psi);
  CHECK(check_hom_leibniz(t).holds);
  CHECK(check_regular(t).holds);
  CHECK(t.phi == psi);
  // Matches the pinned sl2c structure constants.
  const HomAlgebra c = load("sl2c").algebra;
  CHECK(t.table == c.table);
  CHECK(t.phi == c.phi);

  // Twisting back by psi^{-1} recovers sl2 with the identity twist.
  const HomAlgebra back = yau_twist(t, *psi.inverse());
  CHECK(back.table == sl2.table);
  CHECK(back.phi.is_identity());

  // A non-automorphism is rejected.
  Matrix bad = Matrix::identity(3);
  bad.at(1, 1) = 3;
  CHECK_THROWS_WITH_AS(yau_twist(sl2, bad), doctest::Contains("NotAutomorphism"), MathError);
  Matrix sing(3, 3);
  CHECK_THROWS_WITH_AS(yau_twist(sl2, sing), doctest::Contains("NotAutomorphism"), MathError);
}

TEST_CASE("yau twist must preserve regularity") {
  // On d6s (phi = the swap), a psi that is an automorphism of the twisted
  // bracket but does not commute with phi is rejected.
  const HomAlgebra d6s = load("d6s").algebra;
  Matrix psi = Matrix::identity(6);
  for (int i : {1, 2, 4, 5}) psi.at(i, i) = -1;   // negate e's and f's
  // Such a sign flip is an automorphism of each sl2 factor pattern; check
  // whether the library accepts or rejects it purely on the commutation rule.
  const bool commutes = (psi * d6s.phi) == (d6s.phi * psi);
  CHECK(commutes);  // this particular psi does commute with the swap
  const HomAlgebra ok = yau_twist(d6s, psi);
  CHECK(check_hom_leibniz(ok).holds);

  Matrix skew = Matrix::identity(6);
  skew.at(1, 1) = -1;  // negate e1 only: breaks multiplicativity
  CHECK_THROWS_AS(yau_twist(d6s, skew), MathError);
}

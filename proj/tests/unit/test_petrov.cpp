#include <doctest.h>

#include "lefschetz/errors.hpp"
#include "lefschetz/petrov.hpp"
#include "random_util.hpp"

using namespace lefschetz;

namespace {

BiPoly sumOfPowers(int d) { return BiPoly::monomial(d, 0) + BiPoly::monomial(0, d); }

BiPoly dropConstant(BiPoly p) {
  p.add(0, 0, -p.coeff(0, 0));
  return p;
}

}  // namespace

TEST_SUITE("petrov") {
  TEST_CASE("basis labels and weights") {
    PetrovBasis b = petrov_basis(3);
    CHECK(b.size() == 4);
    CHECK(b.weight(1, 1) == Rat(4, 3));
    CHECK(b.form(0, 0) == eta(0, 0));
    CHECK(b.indexOf(1, 0) >= 0);
  }

  TEST_CASE("x dy over x^2 + y^2") {
    BiForm1 w{BiPoly(), BiPoly::x()};
    auto dec = decompose(w, sumOfPowers(2));
    CHECK(dec.coefficient(0, 0) == UniPoly{Rat(1, 2)});
    CHECK(dec.zeta1.isZero());
    CHECK(dec.zeta2 == BiPoly::monomial(1, 1, Rat(1, 2)));
    CHECK(dec.reconstruct(sumOfPowers(2)) == w);
  }

  TEST_CASE("exact forms have no Petrov part") {
    BiPoly K = BiPoly::monomial(3, 1) - BiPoly::monomial(0, 2, 5);
    auto dec = decompose(exteriorD(K), sumOfPowers(3));
    CHECK(dec.h.empty());
    CHECK(exteriorD(dec.zeta2) + multiply(dec.zeta1, exteriorD(sumOfPowers(3))) == exteriorD(K));
  }

  TEST_CASE("basis forms decompose to themselves") {
    for (int d = 2; d <= 4; ++d)
      for (int i = 0; i <= d - 2; ++i)
        for (int j = 0; j <= d - 2; ++j) {
          auto dec = decompose(eta(i, j), sumOfPowers(d));
          CHECK(dec.h.size() == 1);
          CHECK(dec.coefficient(i, j) == UniPoly{Rat(1)});
        }
  }

  TEST_CASE("eta_11 over x^2 + y^2") {
    BiPoly l = sumOfPowers(2);
    auto dec = decompose(eta(1, 1), l);
    CHECK(dec.reconstruct(l) == eta(1, 1));
    CHECK(dec.degreeBoundsHold(eta(1, 1).weightedDegree()));
    for (const auto& [ij, h] : dec.h) CHECK(ij == Monomial{0, 0});
  }

  TEST_CASE("input checks") {
    CHECK_THROWS_AS(decompose(eta(0, 0), BiPoly::monomial(1, 1) + sumOfPowers(2)), Error);
    try {
      decompose(eta(0, 0), BiPoly::monomial(2, 0) + BiPoly::monomial(0, 3));
      FAIL("expected NotTransversal");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotTransversal);
    }
  }

  TEST_CASE("transversality") {
    CHECK(transversal_check(sumOfPowers(2)));
    CHECK(transversal_check(sumOfPowers(3) + BiPoly::x()));
    CHECK_FALSE(transversal_check(BiPoly::monomial(2, 0) + BiPoly::y()));
    BiPoly s = BiPoly::x() + BiPoly::y();
    CHECK_FALSE(transversal_check(s * s));
  }

  TEST_CASE("relative exactness") {
    BiPoly l = sumOfPowers(2);
    BiForm1 w = exteriorD(BiPoly::monomial(0, 2)) + multiply(BiPoly::x(), exteriorD(l));
    auto r = relatively_exact(w, l);
    CHECK(r.exact);
    CHECK(exteriorD(r.K) + multiply(r.A, exteriorD(l)) == w);
    CHECK_FALSE(relatively_exact(eta(0, 0), l).exact);
  }

  TEST_CASE("property: decomposition reconstructs and respects degree bounds") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      int d = 2 + trial % 3;
      BiPoly l = BiPoly::fromX(testutil::randomUni(rng, d)) + BiPoly::fromY(testutil::randomUni(rng, d));
      BiForm1 w = testutil::randomForm(rng, 1 + trial % 5);
      auto dec = decompose(w, l);
      CHECK(dec.reconstruct(l) == w);
      CHECK(dec.degreeBoundsHold(w.weightedDegree()));
    }
  }

  TEST_CASE("property: decomposition is linear") {
    std::mt19937 rng(12);
    BiPoly l = sumOfPowers(3) - BiPoly::y();
    for (int trial = 0; trial < 20; ++trial) {
      BiForm1 u = testutil::randomForm(rng, 4), v = testutil::randomForm(rng, 3);
      Rat c = testutil::randomRat(rng);
      auto du = decompose(u, l), dv = decompose(v, l), dw = decompose(u + v * c, l);
      for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j) CHECK(dw.coefficient(i, j) == du.coefficient(i, j) + dv.coefficient(i, j) * c);
    }
  }

  TEST_CASE("pull-back basis extends") {
    for (auto [a, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
      auto rep = pullback_basis_extension(default_scenario(a, n));
      CHECK(rep.D == n * (a + 1));
      CHECK(rep.constant);
      CHECK(rep.rank == a * a);
      CHECK(rep.pass());
    }
  }

  TEST_CASE("W for the hamiltonian case equals the general W") {
    Scenario s = default_scenario(2, 2);
    std::mt19937 rng(13);
    BiPoly f = f_of(s);
    for (int trial = 0; trial < 5; ++trial) {
      BiPoly R1 = testutil::randomBiPoly(rng, 2), S1 = testutil::randomBiPoly(rng, 2);
      BiForm1 alpha = testutil::randomForm(rng, 2);
      CHECK(hamiltonian_W(s, R1, S1, alpha) == tangent_vector_W(s, f.dy(), -f.dx(), R1, S1, alpha));
    }
    CHECK_THROWS_AS(tangent_vector_W(s, f.dy(), -f.dx(), BiPoly::monomial(3, 0), BiPoly(), BiForm1{}), Error);
  }

  TEST_CASE("tangent cone membership") {
    Scenario s = default_scenario(1, 2);
    BiPoly R = R_of(s), S = S_of(s);
    BiPoly K = BiPoly::monomial(2, 1, 3) + BiPoly::constant(7);
    BiForm1 alpha = eta(0, 0) * Rat(2);
    BiForm1 w = exteriorD(K) + pullback(alpha, R, S);
    auto r = tangent_cone_membership(w, s);
    REQUIRE(r.member);
    CHECK(exteriorD(r.K) + pullback(r.alpha, R, S) == w);
    CHECK(dropConstant(r.K) == dropConstant(K));

    auto off = tangent_cone_membership(eta(1, 0), s);
    CHECK_FALSE(off.member);
    CHECK_FALSE(off.obstruction.empty());

    std::mt19937 rng(14);
    BiForm1 W = hamiltonian_W(s, testutil::randomBiPoly(rng, 2), testutil::randomBiPoly(rng, 2),
                              BiForm1{testutil::randomBiPoly(rng, 1), testutil::randomBiPoly(rng, 1)});
    auto rw = tangent_cone_membership(W, s);
    REQUIRE(rw.member);
    CHECK(exteriorD(rw.K) + pullback(rw.alpha, R, S) == W);
  }
}

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lefschetz/errors.hpp"
#include "lefschetz/polycore.hpp"
#include "random_util.hpp"

using namespace lefschetz;

TEST_SUITE("polycore") {
  TEST_CASE("roots of factored polynomials") {
    auto r = roots(UniPoly{-1, 0, 1});
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].real() == doctest::Approx(-1.0));
    CHECK(r.roots[1].real() == doctest::Approx(1.0));

    auto r3 = roots(UniPoly{0, -3, 0, 1});
    REQUIRE(r3.roots.size() == 3);
    CHECK(r3.roots[0].real() == doctest::Approx(-std::sqrt(3.0)));
    CHECK(std::abs(r3.roots[1]) < 1e-12);
    CHECK(r3.roots[2].real() == doctest::Approx(std::sqrt(3.0)));

    UniPoly p = UniPoly::fromRoots({1, 3});
    auto rd = roots(p.derivative());
    REQUIRE(rd.roots.size() == 1);
    CHECK(rd.roots[0].real() == doctest::Approx(2.0));
  }

  TEST_CASE("roots errors") {
    CHECK_THROWS_AS(roots(UniPoly::fromRoots({1, 1, 2})), Error);
    try {
      roots(UniPoly::fromRoots({1, 1}));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonSquarefree);
    }
    CHECK_THROWS_AS(roots(UniPoly::constant(3)), Error);
  }

  TEST_CASE("roots ordering is by real part then imaginary part") {
    auto r = roots(UniPoly{1, 0, 1});  // ±i
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].imag() < 0);
    CHECK(r.roots[1].imag() > 0);
  }

  TEST_CASE("compose examples") {
    UniPoly x2 = UniPoly{0, 0, 1};
    CHECK(compose(x2, UniPoly{-2, 0, 1}) == UniPoly{4, 0, -4, 0, 1});
    UniPoly q{3, -1, 2};
    CHECK(compose(UniPoly{0, 1}, q) == q);

    UniPoly outer = UniPoly::fromRoots({1, 3}), inner = UniPoly::fromRoots({0, 2});
    UniPoly c = compose(outer, inner);
    CHECK(c.degree() == 4);
    CHECK(c.coeff(3) == Rat(-4));
    for (int k = -2; k <= 2; ++k) {
      Rat t(k * 7, 3);
      CHECK(c(t) == outer(inner(t)));
    }
  }

  TEST_CASE("d1 examples") {
    CHECK(d1({BiPoly(), BiPoly::x()}) == BiPoly::constant(1));
    BiPoly xy = BiPoly::x() * BiPoly::y();
    CHECK(d1(exteriorD(xy)).isZero());
    CHECK(d1(eta(0, 0)) == BiPoly::constant(2));
  }

  TEST_CASE("property: compose agrees with nested evaluation at random points") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      UniPoly p = testutil::randomUni(rng, 3), q = testutil::randomUni(rng, 2);
      UniPoly c = compose(p, q);
      for (int k = 0; k < 20; ++k) {
        Rat t = testutil::randomRat(rng, 20, 7);
        CHECK(c(t) == p(q(t)));
      }
    }
  }

  TEST_CASE("property: roots of a product are the union of roots") {
    std::mt19937 rng(5);
    int done = 0;
    for (int trial = 0; done < 15 && trial < 200; ++trial) {
      UniPoly p = testutil::randomUni(rng, 1 + trial % 5), q = testutil::randomUni(rng, 1 + (trial / 5) % 5);
      UniPoly pq = p * q;
      if (!isSquarefree(pq)) continue;
      ComplexRootSet rp, rq, rpq;
      try {
        rp = roots(p), rq = roots(q), rpq = roots(pq);
      } catch (const Error&) {
        continue;  // roots closer than the tolerance
      }
      ++done;
      std::vector<cplx> u(rp.roots);
      u.insert(u.end(), rq.roots.begin(), rq.roots.end());
      REQUIRE(u.size() == rpq.roots.size());
      for (const auto& z : rpq.roots) {
        double best = 1e300;
        for (const auto& w : u) best = std::min(best, std::abs(z - w));
        CHECK(best <= 10 * default_tolerance() * std::max(1.0, std::abs(z)));
      }
    }
    CHECK(done == 15);
  }

  TEST_CASE("property: d1 of an exact form vanishes") {
    std::mt19937 rng(3);
    for (int k = 0; k < 50; ++k) CHECK(d1(exteriorD(testutil::randomBiPoly(rng, 6))).isZero());
  }

  TEST_CASE("potential inverts the exterior derivative up to constants") {
    std::mt19937 rng(4);
    for (int k = 0; k < 20; ++k) {
      BiPoly K = testutil::randomBiPoly(rng, 5);
      K.add(0, 0, -K.coeff(0, 0));
      CHECK(potential(exteriorD(K)) == K);
    }
  }

  TEST_CASE("rational parsing and JSON round trip") {
    CHECK(parseRational("-0.125") == Rat(-1, 8));
    CHECK(parseRational("6/4") == Rat(3, 2));
    CHECK(formatRational(Rat(6, 4)) == "3/2");
    CHECK_THROWS_AS(parseRational("abc"), Error);
    UniPoly p{Rat(1, 2), 0, -3};
    CHECK(UniPoly::fromJson(p.toJson()) == p);
    BiForm1 w = eta(1, 2);
    CHECK(BiForm1::fromJson(w.toJson()) == w);
  }

  TEST_CASE("tolerance override") {
    double old = default_tolerance();
    set_default_tolerance(1e-8);
    CHECK(default_tolerance() == 1e-8);
    set_default_tolerance(old);
    CHECK_THROWS_AS(set_default_tolerance(-1), Error);
  }
}

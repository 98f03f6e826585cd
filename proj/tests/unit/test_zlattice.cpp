#include <doctest.h>

#include <algorithm>
#include <random>

#include "lefschetz/errors.hpp"
#include "lefschetz/zlattice.hpp"

using namespace lefschetz;

namespace {

IntVec v(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

IntVec randomVec(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> d(-4, 4);
  IntVec out;
  for (int k = 0; k < dim; ++k) out.emplace_back(d(rng));
  return out;
}

}  // namespace

TEST_SUITE("zlattice") {
  TEST_CASE("hnf examples") {
    Lattice L = hnf({v({2, 0}), v({0, 2}), v({1, 1})}, 2);
    REQUIRE(L.rank() == 2);
    CHECK(L.hermiteBasis()[0] == v({1, 1}));
    CHECK(L.hermiteBasis()[1] == v({0, 2}));
    CHECK(hnf({}, 3).rank() == 0);
    Lattice I = hnf({v({1, 0}), v({0, 1})}, 2);
    CHECK(I.hermiteBasis()[0] == v({1, 0}));
    CHECK(I.hermiteBasis()[1] == v({0, 1}));
  }

  TEST_CASE("orbit closure examples") {
    CHECK(orbitClosure({IntMatrix::identity(3)}, v({1, 2, 3})) == hnf({v({1, 2, 3})}, 3));
    IntMatrix swap = IntMatrix::fromRows({{0, 1}, {1, 0}});
    Lattice o = orbitClosure({swap}, v({1, -1}));
    CHECK(o.rank() == 1);
    CHECK(o.contains(v({1, -1})));
    CHECK_THROWS_AS(orbitClosure({IntMatrix::fromRows({{2, 0}, {0, 1}})}, v({1, 0})), Error);
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel(IntMatrix::identity(4)).rank() == 0);
    Lattice k = kernel(IntMatrix::fromRows({{1, 1}}));
    CHECK(k.rank() == 1);
    CHECK(k.contains(v({1, -1})));
    CHECK(k == hnf({v({1, -1})}, 2));
  }

  TEST_CASE("membership and equality") {
    CHECK(member(hnf({v({1, 1})}, 2), v({2, 2})));
    CHECK_FALSE(member(hnf({v({2, 0})}, 2), v({1, 0})));
    std::vector<IntVec> A{v({1, 2, 0}), v({0, 3, 1}), v({4, 0, 1})};
    std::vector<IntVec> B{A[2], A[0], A[1]};
    CHECK(equal(hnf(A, 3), hnf(B, 3)));
  }

  TEST_CASE("property: hnf is idempotent and order independent") {
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
      std::vector<IntVec> vs;
      for (int k = 0; k < 4; ++k) vs.push_back(randomVec(rng, 5));
      Lattice L = hnf(vs, 5);
      CHECK(hnf(L.hermiteBasis(), 5) == L);
      std::shuffle(vs.begin(), vs.end(), rng);
      CHECK(hnf(vs, 5) == L);
    }
  }

  TEST_CASE("property: kernel vectors are annihilated and the kernel is saturated") {
    std::mt19937 rng(23);
    for (int t = 0; t < 30; ++t) {
      IntMatrix M(3, 6);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) M(i, j) = std::uniform_int_distribution<int>(-3, 3)(rng);
      Lattice K = kernel(M);
      CHECK(K.rank() == 6 - rank(M));
      for (const auto& row : K.hermiteBasis()) CHECK(isZero(M * row));
      // k*w in K with M w = 0 forces w in K
      for (const auto& row : K.hermiteBasis()) {
        IntVec w = row;
        for (auto& x : w) x *= 3;
        CHECK(K.contains(w));
      }
      IntVec probe = randomVec(rng, 6);
      if (isZero(M * probe)) CHECK(K.contains(probe));
    }
  }

  TEST_CASE("property: orbit closure is stable under every generator") {
    std::vector<IntMatrix> gens{IntMatrix::fromRows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                                IntMatrix::fromRows({{1, 0, 0}, {0, 1, 0}, {0, 2, 1}})};
    Lattice o = orbitClosure(gens, v({0, 1, 0}));
    for (const auto& g : gens)
      for (const auto& row : o.hermiteBasis()) CHECK(o.contains(g * row));
  }

  TEST_CASE("unimodular inverse and determinant") {
    IntMatrix M = IntMatrix::fromRows({{2, 1}, {1, 1}});
    CHECK(determinant(M) == 1);
    CHECK(M * inverseUnimodular(M) == IntMatrix::identity(2));
    CHECK_THROWS_AS(inverseUnimodular(IntMatrix::fromRows({{2, 0}, {0, 1}})), Error);
  }
}

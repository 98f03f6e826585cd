#include <doctest.h>

#include "lefschetz/errors.hpp"
#include "lefschetz/homology0.hpp"

using namespace lefschetz;

namespace {

const std::vector<std::pair<int, int>> kCases{{1, 2}, {2, 2}, {2, 3}, {3, 2}};

Basis0 leftBasis(int a, int n) { return basis0(default_scenario(a, n), SideId::Left); }

IntMatrix pushR(const Scenario& s, SideId id) {
  return pushforward_matrix(side(s, id).inner, basis0(s, id), outer_basis0(s, id));
}

}  // namespace

TEST_SUITE("homology0") {
  TEST_CASE("basis of a plain quadratic") {
    Basis0 B = basis0(UniPoly::fromRoots({1, 3}));
    REQUIRE(B.size() == 1);
    REQUIRE(B.fiber.points.size() == 2);
    CHECK(B.fiber.points[0].real() == doctest::Approx(1.0));
    CHECK(B.cycles[0] == IntVec{1, -1});
  }

  TEST_CASE("basis of g∘R for a=1, n=2") {
    Scenario s = build_scenario({0, 2}, {0, 3}, {1, 3}, {1, 4});
    Basis0 B = basis0(s, SideId::Left);
    REQUIRE(B.size() == 3);
    CHECK(B.labels[0].str() == "d1^1");
    CHECK(B.labels[1].str() == "d1^2");
    CHECK(B.labels[2].str() == "d2");
    CHECK(B.labels[2].kind == Kind0::Tangency);
  }

  TEST_CASE("basis size is degree - 1") {
    for (int d = 2; d <= 6; ++d) {
      std::vector<Rat> r;
      for (int k = 0; k < d; ++k) r.push_back(Rat(k * k + 1, 2));
      CHECK(basis0(UniPoly::fromRoots(r)).size() == d - 1);
    }
    for (auto [a, n] : kCases) CHECK(leftBasis(a, n).size() == n * (a + 1) - 1);
  }

  TEST_CASE("regular value is required") {
    CHECK_THROWS_AS(basis0(UniPoly::fromRoots({1, 3}), cplx(-1, 0)), Error);
  }

  TEST_CASE("intersection0 on a plain polynomial") {
    Basis0 B = basis0(UniPoly::fromRoots({0, 1, 3, 4, 7}));
    for (int i = 0; i < B.size(); ++i) {
      CHECK(intersection0(B.cycles[i], B.cycles[i]) == 2);
      if (i + 1 < B.size()) CHECK(intersection0(B.cycles[i], B.cycles[i + 1]) == -1);
      for (int j = i + 2; j < B.size(); ++j) CHECK(intersection0(B.cycles[i], B.cycles[j]) == 0);
    }
  }

  TEST_CASE("pull-back table entries") {
    for (auto [a, n] : kCases) {
      Basis0 B = leftBasis(a, n);
      IntMatrix G = pullback_intersection_table(B);
      for (int i = 0; i < B.size(); ++i)
        for (int j = 0; j < B.size(); ++j) {
          const auto &x = B.labels[i], &y = B.labels[j];
          if (i == j) CHECK(G(i, j) == 2);
          if (x.kind == Kind0::PullBack && y.kind == Kind0::PullBack && x.index == y.index && x.branch != y.branch)
            CHECK(G(i, j) == 0);
        }
    }
    // n odd: the tangency cycle d_{a+1} meets d_a^1 with -1 and d_a^2 with +1
    Basis0 B = leftBasis(2, 3);
    IntMatrix G = B.gram();
    CHECK(G(B.indexOf("d3"), B.indexOf("d2^1")) == -1);
    CHECK(G(B.indexOf("d3"), B.indexOf("d2^2")) == 1);
  }

  TEST_CASE("property: computed table equals the encoded case table") {
    for (auto [a, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {1, 3}, {3, 3}, {1, 4}}) {
      Scenario s = default_scenario(a, n);
      for (auto id : {SideId::Left, SideId::Right}) {
        Basis0 B = basis0(s, id);
        std::vector<std::string> labels;
        for (const auto& l : B.labels) labels.push_back(l.str());
        auto cmp = compare_tables(B.gram(), pullback_table_reference(s, B, true), labels);
        CAPTURE(a);
        CAPTURE(n);
        CHECK(cmp.match());
      }
    }
  }

  TEST_CASE("pushforward of pull-back and tangency cycles") {
    Scenario s = default_scenario(2, 3);
    Basis0 B = basis0(s, SideId::Left), G = outer_basis0(s, SideId::Left);
    IntMatrix P = pushR(s, SideId::Left);
    for (int k = 0; k < B.size(); ++k) {
      const auto& l = B.labels[k];
      IntVec col = P.col(k);
      if (l.kind == Kind0::Tangency) {
        CHECK(isZero(col));
      } else {
        // the image is the cycle of g vanishing at the same value
        int v = G.valueIndex("c" + std::to_string(l.index));
        CHECK(col == unitVector(G.size(), G.cyclesAt(v).at(0)));
      }
    }
    IntVec zero(B.fiber.points.size());
    CHECK(isZero(pushforward0(s.R, zero, B.fiber, G.fiber)));
    Fiber0 wrong{{cplx(100, 0), cplx(200, 0)}, 0};
    CHECK_THROWS_AS(pushforward0(s.R, B.cycles[0], B.fiber, wrong), Error);
  }

  TEST_CASE("monodromy0 examples") {
    Basis0 B = basis0(UniPoly::fromRoots({1, 3}));
    CHECK(monodromy0(B, 0).matrix == IntMatrix::fromRows({{-1}}));
    Basis0 P = basis0(UniPoly::fromRoots({0, 1, 3, 5, 7}));
    auto op = monodromy0(P, P.valueOf[0]);
    CHECK(op.matrix.col(3) == unitVector(4, 3));  // d4 is orthogonal to d1
    CHECK_THROWS_AS(monodromy0(B, 5), Error);
    CHECK_THROWS_AS(B.valueIndex("zz"), Error);
  }

  TEST_CASE("monodromy at a pull-back value corrects by all n cycles") {
    Basis0 B = leftBasis(2, 3);
    int v = B.valueIndex("c1");
    auto at = B.cyclesAt(v);
    CHECK(at.size() == 3);
    IntMatrix M = monodromy0(B, v).matrix;
    CHECK(M == oracle_monodromy0(B, v).matrix);
  }

  TEST_CASE("property: monodromy preserves the form and matches the oracle") {
    for (auto [a, n] : kCases)
      for (auto id : {SideId::Left, SideId::Right}) {
        Basis0 B = basis0(default_scenario(a, n), id);
        IntMatrix G = B.gram();
        for (const auto& op : all_monodromy0(B)) {
          CHECK(op.matrix.transpose() * G * op.matrix == G);
          CHECK(op.matrix == oracle_monodromy0(B, op.valueIndex).matrix);
        }
      }
  }

  TEST_CASE("orbit lattices") {
    for (int d = 2; d <= 6; ++d) {
      std::vector<Rat> r;
      for (int k = 0; k < d; ++k) r.push_back(Rat(7 * k + k * k, 7));
      Basis0 B = basis0(UniPoly::fromRoots(r));
      auto ops = all_monodromy0(B);
      for (int k = 0; k < B.size(); ++k) CHECK(orbit_lattice0(ops, unitVector(B.size(), k)).rank() == d - 1);
    }
    for (auto [a, n] : kCases) {
      Scenario s = default_scenario(a, n);
      Basis0 B = basis0(s, SideId::Left);
      auto ops = all_monodromy0(B);
      Lattice K = kernel(pushR(s, SideId::Left));
      CHECK(K.rank() == (a * n + n - 1) - a);
      for (int k = 0; k < B.size(); ++k) {
        Lattice o = orbit_lattice0(ops, unitVector(B.size(), k));
        if (B.labels[k].kind == Kind0::Tangency)
          CHECK(o == K);
        else
          CHECK(o.rank() == B.size());
      }
    }
  }
}

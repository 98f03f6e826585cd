#include <doctest.h>

#include <cmath>

#include "lefschetz/errors.hpp"
#include "lefschetz/homology0.hpp"
#include "lefschetz/oracle0.hpp"

using namespace lefschetz;

namespace {

std::vector<cplx> sortedRoots(const UniPoly& p, double t) { return roots(p - UniPoly::constant(roundRational(t, 1 << 20))).roots; }

}  // namespace

TEST_SUITE("oracle0") {
  TEST_CASE("simple loop around a single value winds once") {
    Loop L = simple_loop(cplx(-1, 0), cplx(0, 0), 0.3, {cplx(-1, 0)});
    CHECK(L.waypoints.front() == L.waypoints.back());
    CHECK(winding_number(L.waypoints, cplx(-1, 0)) == 1);
    CHECK(winding_number(L.waypoints, cplx(5, 0)) == 0);
  }

  TEST_CASE("loop radius guard") {
    CHECK_THROWS_AS(simple_loop(cplx(-1, 0), cplx(0, 0), 0.6, {cplx(-1, 0), cplx(-2, 0)}), Error);
  }

  TEST_CASE("two nearby values: the loop encloses only its own value") {
    std::vector<cplx> vals{cplx(-1, 0), cplx(-1.1, 0), cplx(-1.3, 0)};
    for (int sigma : {1, -1})
      for (size_t k = 0; k < vals.size(); ++k) {
        Loop L = simple_loop(vals[k], cplx(0, 0), 0.04, vals, sigma);
        for (size_t j = 0; j < vals.size(); ++j) CHECK(winding_number(L.waypoints, vals[j]) == (j == k ? 1 : 0));
      }
  }

  TEST_CASE("square root monodromy swaps") {
    UniPoly x2{0, 0, 1};
    Loop L = simple_loop(cplx(0, 0), cplx(1, 0), 0.5, {cplx(0, 0)});
    auto p = track(x2, L, {cplx(-1, 0), cplx(1, 0)});
    CHECK(p.perm == std::vector<int>{1, 0});
  }

  TEST_CASE("x^3 - 3x around the value 2 swaps the roots meeting at x = -1") {
    UniPoly p{0, -3, 0, 1};
    std::vector<cplx> fiber = sortedRoots(p, 0);
    // roots of p - t for t just below 2: the two nearest -1 are the colliding pair
    auto near = sortedRoots(p, 1.98);
    std::vector<int> colliding;
    for (int k = 0; k < 3; ++k)
      if (std::abs(near[k] + 1.0) < 0.2) colliding.push_back(k);
    REQUIRE(colliding.size() == 2);
    Loop L = simple_loop(cplx(2, 0), cplx(0, 0), 0.5, {cplx(2, 0), cplx(-2, 0)});
    auto perm = track(p, L, fiber).perm;
    CHECK(perm[colliding[0]] == colliding[1]);
    CHECK(perm[colliding[1]] == colliding[0]);
    CHECK(perm[2] == 2);
  }

  TEST_CASE("contractible loop gives the identity") {
    UniPoly p{0, -3, 0, 1};
    std::vector<cplx> fiber = sortedRoots(p, 0);
    Loop L{cplx(0, 0), {cplx(0, 0), cplx(0.5, 0), cplx(0.5, 0.5), cplx(0, 0.5), cplx(0, 0)}};
    CHECK(track(p, L, fiber).perm == std::vector<int>{0, 1, 2});
  }

  TEST_CASE("induced_on_H0 examples") {
    Basis0 B = basis0(UniPoly::fromRoots({1, 3}));
    FiberPermutation id{{0, 1}, 0}, sw{{1, 0}, 0};
    CHECK(induced_on_H0(id, B).matrix == IntMatrix::identity(1));
    CHECK(induced_on_H0(sw, B).matrix == IntMatrix::fromRows({{-1}}));
    Basis0 C = basis0(default_scenario(1, 2), SideId::Left);
    int v = C.valueIndex("c~2");
    CHECK(oracle_monodromy0(C, v).matrix == monodromy0(C, v).matrix);
  }

  TEST_CASE("property: composing loops composes permutations") {
    UniPoly p = UniPoly::fromRoots({0, 1, 3, Rat(9, 2)});
    Basis0 B = basis0(p);
    std::vector<cplx> vals;
    for (const auto& v : B.values) vals.push_back(v.value);
    for (size_t i = 0; i < vals.size(); ++i)
      for (size_t j = 0; j < vals.size(); ++j) {
        if (i == j) continue;
        double gap = 1e9;
        for (size_t u = 0; u < vals.size(); ++u)
          for (size_t w = u + 1; w < vals.size(); ++w) gap = std::min(gap, std::abs(vals[u] - vals[w]));
        for (const auto& v : vals) gap = std::min(gap, std::abs(v));
        Loop Li = simple_loop(vals[i], 0, 0.25 * gap, vals), Lj = simple_loop(vals[j], 0, 0.25 * gap, vals);
        auto pi = track(p, Li, B.fiber.points).perm, pj = track(p, Lj, B.fiber.points).perm;
        Loop both{0, Li.waypoints};
        both.waypoints.insert(both.waypoints.end(), Lj.waypoints.begin() + 1, Lj.waypoints.end());
        auto pij = track(p, both, B.fiber.points).perm;
        for (size_t k = 0; k < pi.size(); ++k) CHECK(pij[k] == pj[pi[k]]);
      }
  }

  TEST_CASE("property: halving the initial step does not change the permutation") {
    Basis0 B = basis0(default_scenario(2, 2), SideId::Left);
    TrackOptions fine;
    fine.initialStep = 1.0 / 32;
    for (size_t v = 0; v < B.values.size(); ++v)
      CHECK(oracle_monodromy0(B, static_cast<int>(v)).matrix == oracle_monodromy0(B, static_cast<int>(v), fine).matrix);
  }

  TEST_CASE("recorder sees every accepted step") {
    UniPoly x2{0, 0, 1};
    Loop L = simple_loop(cplx(0, 0), cplx(1, 0), 0.5, {cplx(0, 0)});
    TrackOptions opts;
    long calls = 0;
    opts.recorder = [&](cplx, int, cplx) { ++calls; };
    auto r = track_path(x2, L.waypoints, {cplx(-1, 0), cplx(1, 0)}, opts);
    CHECK(calls == 2 * (r.steps + 1));
  }
}

#include <doctest.h>

#include <cmath>

#include "lefschetz/errors.hpp"
#include "lefschetz/scenario.hpp"

using namespace lefschetz;

namespace {

ErrorKind kindOf(const std::vector<Rat>& R, const std::vector<Rat>& S, const std::vector<Rat>& g,
                 const std::vector<Rat>& h, int* index = nullptr) {
  try {
    build_scenario(R, S, g, h);
  } catch (const Error& e) {
    if (index && e.detail().contains("index")) *index = e.detail()["index"].get<int>();
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_SUITE("scenario") {
  TEST_CASE("a=1, n=2 example: critical values by direct evaluation") {
    Scenario s = build_scenario({0, 2}, {0, 3}, {1, 3}, {1, 4});
    CHECK(s.a == 1);
    CHECK(s.n == 2);
    UniPoly R = UniPoly::fromRoots({0, 2}), g = UniPoly::fromRoots({1, 3});
    REQUIRE(s.left.C.size() == 1);
    REQUIRE(s.left.Ctilde.size() == 1);
    CHECK(s.left.C[0] == doctest::Approx(toDouble(g(Rat(2)))));    // g(2) = -1
    CHECK(s.left.Ctilde[0] == doctest::Approx(toDouble(g(R(Rat(1))))));  // g(-1) = 8
    CHECK(s.left.C[0] == doctest::Approx(-1.0));
    CHECK(s.left.Ctilde[0] == doctest::Approx(8.0));
  }

  TEST_CASE("condition violations") {
    int idx = 0;
    CHECK(kindOf({0, 2}, {0, 3}, {-1, 3}, {1, 4}, &idx) == ErrorKind::ConditionViolation);
    CHECK(idx == 1);
    CHECK(kindOf({0, 2}, {0, 3}, {1, 1, 3}, {1, 4, 5}) == ErrorKind::NotMorse);
    idx = 0;
    CHECK(kindOf({0, 1, 2}, {0, 1, 2}, {1, 3}, {1, 4}, &idx) == ErrorKind::ConditionViolation);
    CHECK(idx == 2);
    idx = 0;
    CHECK(kindOf({0, 2}, {0, 2}, {1, 3}, {1, 3}, &idx) == ErrorKind::ConditionViolation);
    CHECK(idx == 3);
    idx = 0;
    CHECK(kindOf({0, 2}, {0, 3}, {1, 20}, {1, 4}, &idx) == ErrorKind::ConditionViolation);
    CHECK(idx == 4);
    CHECK(kindOf({0, 2}, {0, 3, 4}, {1, 3}, {1, 4}) == ErrorKind::InvalidInput);
  }

  TEST_CASE("counts |C| = a and |Ctilde| = n-1") {
    for (auto [a, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
      Scenario s = default_scenario(a, n);
      CHECK(s.left.C.size() == static_cast<size_t>(a));
      CHECK(s.left.Ctilde.size() == static_cast<size_t>(n - 1));
      CHECK(s.right.C.size() == static_cast<size_t>(a));
      CHECK(s.right.Ctilde.size() == static_cast<size_t>(n - 1));
    }
  }

  TEST_CASE("n even reverses the C order") {
    Scenario s = default_scenario(2, 2);
    const auto& L = s.left;
    CHECK(L.C[0] == doctest::Approx(L.outer.eval(L.outerCritical[1])));
    CHECK(L.C[1] == doctest::Approx(L.outer.eval(L.outerCritical[0])));
    Scenario t = default_scenario(2, 3);
    CHECK(t.left.C[0] == doctest::Approx(t.left.outer.eval(t.left.outerCritical[0])));
  }

  TEST_CASE("property: n critical points above each c, one above each c~") {
    for (auto [a, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {1, 4}}) {
      Scenario s = default_scenario(a, n);
      for (const Side* side : {&s.left, &s.right}) {
        auto crit = realRoots(side->composite.derivative());
        CHECK(crit.size() == static_cast<size_t>(n * a + n - 1));
        for (double c : side->C) {
          int count = 0;
          for (double x : crit) count += std::abs(side->composite.eval(x) - c) < 1e-7 * std::max(1.0, std::abs(c));
          CHECK(count == n);
        }
        for (double c : side->Ctilde) {
          int count = 0;
          for (double x : crit) count += std::abs(side->composite.eval(x) - c) < 1e-7 * std::max(1.0, std::abs(c));
          CHECK(count == 1);
        }
      }
    }
  }

  TEST_CASE("property: f∘F has (na+n-1)^2 critical points with pairwise-sum values") {
    for (auto [a, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}}) {
      Scenario s = default_scenario(a, n);
      auto cx = realRoots(s.left.composite.derivative());
      auto cy = realRoots(s.right.composite.derivative());
      CHECK(cx.size() * cy.size() == static_cast<size_t>((n * a + n - 1) * (n * a + n - 1)));
      std::vector<double> lv(s.left.C), rv(s.right.C);
      lv.insert(lv.end(), s.left.Ctilde.begin(), s.left.Ctilde.end());
      rv.insert(rv.end(), s.right.Ctilde.begin(), s.right.Ctilde.end());
      for (double x : cx)
        for (double y : cy) {
          double v = s.left.composite.eval(x) + s.right.composite.eval(y);
          bool found = false;
          for (double u : lv)
            for (double w : rv) found = found || std::abs(u + w - v) < 1e-7 * std::max(1.0, std::abs(v));
          CHECK(found);
        }
    }
  }

  TEST_CASE("JSON round trip and unknown keys") {
    Scenario s = default_scenario(2, 3);
    Scenario t = scenario_from_json(s.toJson());
    CHECK(t.toJson() == s.toJson());
    nlohmann::json j = s.toJson();
    j["extra"] = 1;
    CHECK_THROWS_AS(scenario_from_json(j), Error);
    for (const auto& r : s.toJson()["R_roots"]) {
      Rat q = parseRational(r.get<std::string>());
      q.canonicalize();
      CHECK(formatRational(q) == r.get<std::string>());
    }
  }

  TEST_CASE("critical data groups points by value") {
    Scenario s = default_scenario(2, 2);
    auto cd = critical_data(s);
    CHECK(cd.left.perValue.size() == 3);
    int pullback = 0;
    for (const auto& [v, pts] : cd.left.perValue) pullback += pts.size() == 2;
    CHECK(pullback == 2);
  }
}

#include <doctest.h>

#include "lefschetz/dynkin.hpp"
#include "lefschetz/errors.hpp"

using namespace lefschetz;

TEST_SUITE("dynkin") {
  TEST_CASE("A3 path") {
    IntMatrix Q(3, 3);
    Q(0, 1) = 1, Q(1, 0) = -1, Q(1, 2) = 1, Q(2, 1) = -1;
    DynkinGraph g = build(Q, {{"a"}, {"b"}, {"c"}}, 1);
    CHECK(g.edges.size() == 2);
    CHECK(g.connected());
    CHECK(canonical_form(g) == canonical_form(build(Q, {{"x"}, {"y"}, {"z"}}, 1)));
  }

  TEST_CASE("edgeless graph") {
    DynkinGraph g = build(IntMatrix(2, 2), {{"a"}, {"b"}}, 1);
    CHECK(g.edges.empty());
    CHECK_FALSE(g.connected());
  }

  TEST_CASE("g∘R graph for a = 1, n = 2") {
    Scenario s = default_scenario(1, 2);
    DynkinGraph g = build(basis0(s, SideId::Left));
    CHECK(g.size() == 3);
    CHECK(g.connected());
  }

  TEST_CASE("subgraph decomposition") {
    for (auto [a, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}}) {
      JoinContext c = join_context(default_scenario(a, n));
      DynkinGraph H = build(c.fF, c.formFF), G = build(c.f, c.formF);
      CHECK(H.connected());
      auto rep = subgraph_decomposition(H, G, n);
      CHECK(rep.components.size() == static_cast<size_t>(n * n));
      CHECK(rep.pass());
    }
  }

  TEST_CASE("property: tangency vertices of dim-0 graphs have at most two pull-back neighbours") {
    for (auto [a, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {1, 4}})
      for (SideId side : {SideId::Left, SideId::Right})
        CHECK(max_tangency_pullback_degree(build(basis0(default_scenario(a, n), side))) <= 2);
  }

  TEST_CASE("DOT output") {
    JoinContext c = join_context(default_scenario(1, 2));
    std::string dot = to_dot(build(c.fF, c.formFF));
    auto count = [&](const std::string& needle) {
      int k = 0;
      for (size_t p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) ++k;
      return k;
    };
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(count("label=") >= 9);
    CHECK(count("fillcolor=black") == 4);
    CHECK(count("shape=square") == 1);
  }
}

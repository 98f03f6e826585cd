#include <doctest.h>

#include "lefschetz/bounds.hpp"
#include "lefschetz/errors.hpp"

using namespace lefschetz;

TEST_SUITE("bounds") {
  TEST_CASE("pull-back cyclicity examples") {
    CHECK(pullback_cyclicity(2, 2) == 17);
    CHECK(cyclicity_bound(5, 2) == 17);
    CHECK(pullback_cyclicity(4, 2) == 67);
    CHECK(cyclicity_bound(11, 3) == 115);
    CHECK_THROWS_AS(cyclicity_bound(4, 2), Error);
  }

  TEST_CASE("other bounds") {
    CHECK(hamiltonian_codim_bound(2) == 1);
    CHECK(hamiltonian_codim_bound(3) == 4);
    CHECK(hamiltonian_codim_bound(5) == 13);
    CHECK(logarithmic_bound(3, {2, 2}) == 7);
    CHECK(mardesic_upper(2) == 9);
    CHECK_THROWS_AS(logarithmic_bound(3, {5}), Error);
  }

  TEST_CASE("best factorization") {
    auto t = best_factorization(12);
    REQUIRE_FALSE(t.rows.empty());
    for (size_t k = 1; k < t.rows.size(); ++k) CHECK(t.rows[k - 1].n < t.rows[k].n);
    for (const auto& r : t.rows) {
      CHECK(r.n * r.aPlus1 == 12);
      CHECK(r.C == cyclicity_bound(11, r.n));
    }
    long best = 0;
    for (const auto& r : t.rows) best = std::max(best, r.C);
    for (const auto& r : t.rows) CHECK(r.maximizer == (r.C == best));
    CHECK(best_factorization(36).rows.size() == 7);
    try {
      best_factorization(13);
      FAIL("expected PrimeInput");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PrimeInput);
    }
  }

  TEST_CASE("property: q = 2 specialization") {
    for (long p = 2; p <= 30; ++p) CHECK(cyclicity_bound(2 * p - 1, 2) == 3 * p * p + p - 13);
    for (long p = 2; p <= 12; ++p)
      for (long q = 2; q <= 12; ++q)
        CHECK(cyclicity_bound(p * q - 1, q) == p * q * p * q + p * q - q * q - 3 * q - p * p - p - 3);
  }

  TEST_CASE("symbolic identity") {
    auto id = symbolic_identity_check();
    CHECK(id.closedFormAgrees);
    CHECK(id.specializationAgrees);
  }
}

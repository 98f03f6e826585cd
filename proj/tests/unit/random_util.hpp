#pragma once

#include <random>

#include "lefschetz/polycore.hpp"

namespace testutil {

using lefschetz::BiForm1;
using lefschetz::BiPoly;
using lefschetz::Rat;
using lefschetz::UniPoly;

inline Rat randomRat(std::mt19937& rng, int num = 9, int den = 5) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  Rat r(n(rng), d(rng));
  r.canonicalize();
  return r;
}

inline BiPoly randomBiPoly(std::mt19937& rng, int degree, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  BiPoly p;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      if (keep(rng)) p.add(i, j, randomRat(rng));
  return p;
}

inline BiForm1 randomForm(std::mt19937& rng, int degree) {
  return {randomBiPoly(rng, degree), randomBiPoly(rng, degree)};
}

inline UniPoly randomUni(std::mt19937& rng, int degree) {
  std::vector<Rat> c;
  for (int k = 0; k < degree; ++k) c.push_back(randomRat(rng));
  c.push_back(Rat(std::uniform_int_distribution<int>(1, 4)(rng)));
  return UniPoly(c);
}

}  // namespace testutil

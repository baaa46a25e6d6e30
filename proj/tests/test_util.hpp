#pragma once
// Shared samplers for the test suites.
#include <random>

#include "ehb/polytope.hpp"

namespace ehb::sample {

// Balanced rational vector with entries in [-2, 2] and denominators up to max_den.
inline ExponentVector random_balanced(std::mt19937_64& g, int max_den = 12) {
  std::uniform_int_distribution<int> den(1, max_den);
  ExponentVector v;
  Q s(0);
  for (int r = 0; r < 5; ++r) {
    int d = den(g);
    std::uniform_int_distribution<int> num(-2 * d, 2 * d);
    v.a[r] = Q(num(g), d);
    s += v.a[r];
  }
  v.a[5] = Q(1) - s;
  int d = den(g);
  std::uniform_int_distribution<int> num(-3 * d, 3 * d);
  v.zeta = Q(num(g), d);
  return v;
}

inline ExponentVector random_in_P(std::mt19937_64& g, int max_den = 12) {
  return reduce_to_P(random_balanced(g, max_den)).result;
}

// Point of P0 paired with its zeta.
inline ExponentVector random_in_P0(std::mt19937_64& g, int max_den = 12) {
  ExponentVector v = random_in_P(g, max_den);
  v.zeta = zeta_for(v.a);
  return v;
}

}  // namespace ehb::sample

#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "eqschubert/poly.hpp"

namespace eqschubert::testing {

inline Poly P(std::string_view text) { return parse_poly(text); }

/// Random sparse polynomial over the given variables.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vars, int max_terms = 5, int max_deg = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), coeff(-5, 5), deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  PolyBuilder b;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    int d = deg(rng);
    for (int j = 0; j < d; ++j) m.mul_power(vars[pick(rng)], 1);
    b.add(m, coeff(rng));
  }
  return b.build();
}

}  // namespace eqschubert::testing

#pragma once

#include <map>
#include <vector>

#include "eqschubert/permutation.hpp"
#include "eqschubert/poly.hpp"

namespace eqschubert {

/// Classical Schubert polynomial S_w(x). Independent of the window; n only
/// has to contain w.
Poly classical_schubert(const Permutation& w, int n);
Poly classical_schubert(const Permutation& w);

/// Double Schubert polynomial S_w(x,t) from the sum over factorizations
/// w = v^{-1} u with l(u) + l(v) = l(w).
Poly double_schubert(const Permutation& w, int n);

/// Every v in S_n with l(v w) = l(w) - l(v), paired with u = v w.
std::vector<std::pair<Permutation, Permutation>> reduced_factorizations(const Permutation& w, int n);

/// Permutation in S_n with the given Lehmer code.
Permutation from_lehmer_code(const std::vector<int>& code);

struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) < 0; }
};

/// Polynomial grouped by its x-part: x-monomial -> coefficient in the other
/// variables. Ordered lexicographically, smallest first.
using XCoefficients = std::map<Monomial, Poly, LexLess>;
XCoefficients split_x(const Poly& p);
Poly join_x(const XCoefficients& parts);

/// Expansion of p (homogeneous or not in x) in classical Schubert
/// polynomials with coefficients free of x. Peels the lex-smallest
/// x-monomial, which is x^{code(w)} for S_w. Throws NotInSpan if some
/// x-monomial exceeds the staircase of window n.
std::map<Permutation, Poly> classical_expand(const Poly& p, int n);

}  // namespace eqschubert

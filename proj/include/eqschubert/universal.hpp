#pragma once

#include <map>
#include <vector>

#include "eqschubert/permutation.hpp"
#include "eqschubert/poly.hpp"

namespace eqschubert {

/// g_i[j] as a variable; g_i[0] is x_i.
Poly g_var(int i, int j);

/// E_k^l(g) from the inductive definition.
Poly E_poly(int k, int l);
/// Same polynomial read off det(M_l + T I) as the coefficient of T^{l-k}.
Poly E_det_check(int k, int l);
/// H_a^b(g) = det(c_{1+j-i}(b+j-1)) with c_k(l) = E_k^l(g).
Poly H_poly(int a, int b);

/// c_k(l) -> E_k^l(g) for all k <= l <= l_max.
Bindings c_to_g(int l_max);
/// g_i[j] -> polynomial in c for i + j <= l_max (x_i stands for g_i[0]).
Bindings invert_E(int l_max);
/// c_k(l) -> e_k(x_1..x_l).
Bindings c_to_elementary(int l_max, Family target = Family::X);

/// Coefficients a_{k_1..k_n} of p = sum a e_{k_1}(1)...e_{k_n}(n).
/// Coefficients may involve variables other than x.
using ElemExpansion = std::map<std::vector<int>, Poly>;
ElemExpansion expand_elementary(const Poly& p, int n);
/// sum a c_{k_1}(1)...c_{k_n}(n).
Poly elementary_to_c(const ElemExpansion& e);

/// Sch_w(c) for w in S_{n+1}.
Poly univ_single(const Permutation& w, int n);
/// Sch_w(c,y) for w in S_{n+1}: top product, then -d^y_i along left descents.
Poly univ_double_dd(const Permutation& w, int n);
/// Sch_w(c,d) from the sum over w = v^{-1} u with l(u) + l(v) = l(w).
Poly univ_double_sum(const Permutation& w, int n);
/// Smallest window holding w (at least 1).
int univ_window(const Permutation& w);

/// d_k(l) -> e_k(y_1..y_l).
Poly d_to_y(const Poly& p, int l_max);
/// Sch_w(c) -> Sch_w(d).
Poly rename_c_to_d(const Poly& p);

/// Zeroes g_i[j] (j > 0) unless the path ends at some n_p or at n.
Poly partial_restrict(const Poly& g_form, const FlagShape& nn);
/// Route through c: c_k(l) -> c_k(n_p) for l in [n_p, n_{p+1}), then into g,
/// then the same zeroing.
Poly partial_restrict_via_c(const Poly& c_form, const FlagShape& nn);

}  // namespace eqschubert

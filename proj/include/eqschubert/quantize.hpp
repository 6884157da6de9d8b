#pragma once

#include <optional>
#include <string>

#include "eqschubert/permutation.hpp"
#include "eqschubert/poly.hpp"

namespace eqschubert {

/// Specialization of the g/h/y alphabet for shape nn: x_i for g_i[0], a
/// signed q_i for the path g_{n_{i-1}+1}[n_{i+1}-n_{i-1}-1], t_i for y_i,
/// zero for every other g and h.
Poly quantum_specialize(const Poly& g_form, const FlagShape& nn);

/// e^q_k(l) for shape nn.
Poly quantum_elementary(int k, int l, const FlagShape& nn);
/// c_k(l) -> e^q_k(l) for l <= l_max, and y_i -> t_i.
Bindings c_to_quantum(int l_max, const FlagShape& nn);

struct EqQuantumSchubert {
  Permutation w;
  FlagShape shape;
  Poly body_x;
  /// Filled by with_sigma().
  std::optional<Poly> body_sigma;
};

/// Sch^q_w(x,t) for w in S^nn, built from the universal double polynomial
/// through partial restriction and specialization. Throws NotInShape.
EqQuantumSchubert eq_quantum_schubert(const Permutation& w, const FlagShape& nn);
/// Adds the block-elementary form.
EqQuantumSchubert with_sigma(EqQuantumSchubert s);

/// Complete-flag Sch^q_w(x,t), computed in the smallest window holding w by
/// specializing c_k(l) -> e^q_k(l) directly. Cached.
Poly quantum_schubert(const Permutation& w);
/// Sch_w(c,t): the universal double polynomial with y renamed to t.
Poly universal_ct(const Permutation& w);

/// Rewrites a polynomial symmetric in each block x_{n_{j-1}+1..n_j}
/// (j = 1..m+1) in the generators sigma_i^j. Throws NotBlockSymmetric.
Poly block_rewrite(const Poly& p, const FlagShape& nn);
/// sigma_i^j -> e_i(block j).
Poly block_expand(const Poly& p, const FlagShape& nn);

/// LaTeX rendering: x_{1}, t_{1}, q_{1}, \sigma^{j}_{i}, c_{k}(l), g_{i}[j].
std::string to_latex(const Poly& p);

}  // namespace eqschubert

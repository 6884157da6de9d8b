#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "eqschubert/permutation.hpp"
#include "eqschubert/poly.hpp"

namespace eqschubert {

/// Linear combination of equivariant quantum Schubert polynomials with
/// coefficients in Z[t,q].
struct SchubertCombo {
  int window = 0;
  std::map<Permutation, Poly> terms;

  bool operator==(const SchubertCombo&) const = default;
};

/// q-multidegree d = (d_1, ..., d_{n-1}).
using QDegree = std::vector<int>;
/// (w, d) -> c_{u,v}^{w,d}(t).
using ProductTerms = std::map<std::pair<Permutation, QDegree>, Poly>;

struct StructureTable {
  int n = 0;
  /// Unordered pairs stored with u <= v.
  std::map<std::pair<Permutation, Permutation>, ProductTerms> entries;

  /// Symmetric lookup.
  const ProductTerms& at(const Permutation& u, const Permutation& v) const;
  /// Pairs in generation order: by l(u) + l(v), then (u, v).
  std::vector<std::pair<Permutation, Permutation>> ordered_pairs() const;
};

struct Report {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Basis element Sch^q_w of shape nn (complete shapes use the stable form).
Poly basis_polynomial(const Permutation& w, const FlagShape& nn);

/// Expansion of p in {Sch^q_w : w in S^nn}, nn a shape on C^N (complete(N)
/// by default). Peels the top x-degree part classically. Throws NotInSpan
/// when an x-exponent leaves the staircase of window N.
SchubertCombo expand_in_basis(const Poly& p, int N);
SchubertCombo expand_in_basis(const Poly& p, const FlagShape& nn);

/// Keeps the terms with w in S^nn. Throws StrayVariables if a kept
/// coefficient involves t_{>n} or q_{>m}.
SchubertCombo truncate(const SchubertCombo& combo, const FlagShape& nn);
SchubertCombo truncate(const SchubertCombo& combo, int n);

/// Splits coefficients of a truncated combo by q-monomial.
ProductTerms split_by_q(const SchubertCombo& combo, int n);

/// sigma_u * sigma_v in QH_T^* Fl(n), by straightening in the quotient ring.
ProductTerms qproduct(const Permutation& u, const Permutation& v, int n);
/// The same product from the expansion of Sch^q_u Sch^q_v in window 2n-1.
ProductTerms qproduct_reference(const Permutation& u, const Permutation& v, int n);

/// Normal form of a polynomial in c_k(l), t, q modulo the relations of
/// QH_T^* Fl(n): at most one c-factor per level l <= n-1, c_k(n) = e_k(t).
Poly straighten(const Poly& p, int n);
/// Expansion of a straightened polynomial in {Sch_w(c,t) : w in S_n}.
SchubertCombo expand_universal(const Poly& standard, int n);

/// All unordered pairs, computed with `workers` threads (0 picks the
/// hardware concurrency).
StructureTable multiplication_table(int n, unsigned workers = 0);

/// Negative coefficients of entries written in the basis of -alpha monomials.
Report graham_check(const StructureTable& table);
Report graham_check(const ProductTerms& terms, int n, const std::string& label);

/// e^q_k(n) - e_k(t) truncated to S^nn for k = 1..n.
Report verify_presentation(const FlagShape& nn);
/// The e^q straightening identity for all 0 <= j, k <= l <= l_max.
Report verify_straightening(int l_max);
/// (u v) w = u (v w) through table contractions.
Report verify_associativity(const StructureTable& table,
                            const std::vector<std::tuple<Permutation, Permutation, Permutation>>& triples);
/// Every triple of S_n.
Report verify_associativity(const StructureTable& table);

/// Sum of c^{w,d} q^d as a single Z[t,q] coefficient per w.
std::map<Permutation, Poly> collapse_q(const ProductTerms& terms);

std::string product_to_string(const ProductTerms& terms);
std::string product_to_latex(const ProductTerms& terms);
std::string combo_to_string(const SchubertCombo& combo);

/// {"n":3,"entries":[{"u":"213","v":"213","terms":[{"w":"312","d":[0,0],"t_poly":"1"},...]}]}
std::string table_to_json(const StructureTable& table);
StructureTable table_from_json(std::string_view json);
std::string table_to_latex(const StructureTable& table);

}  // namespace eqschubert

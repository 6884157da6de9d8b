#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eqschubert/monomial.hpp"
#include "eqschubert/var.hpp"

namespace eqschubert {

using Integer = boost::multiprecision::cpp_int;

struct Term {
  Monomial monomial;
  Integer coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact integer coefficients.
///
/// Terms are stored in strictly decreasing graded-lex order with no zero
/// coefficients, so two equal polynomials have identical term vectors.
class Poly {
 public:
  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const Integer& value);  // NOLINT(google-explicit-constructor)
  Poly(VarId v);  // NOLINT(google-explicit-constructor)
  Poly(const Monomial& m, const Integer& c = 1);

  /// Takes unsorted terms, merges duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }

  /// Constant term value if the polynomial is a constant.
  std::optional<Integer> constant_value() const;
  Integer coefficient(const Monomial& m) const;

  std::set<VarId> variables() const;
  bool involves(VarId v) const;
  bool involves_family(Family f) const;
  int degree_in(VarId v) const;
  int total_degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a);
  friend Poly operator*(const Integer& s, const Poly& p);
  friend Poly operator*(long s, const Poly& p) { return Integer(s) * p; }

  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Groups terms by the part of each monomial whose variables satisfy
  /// `select`. The map value is the cofactor in the remaining variables.
  std::map<Monomial, Poly> split(const std::function<bool(VarId)>& select) const;

 private:
  std::vector<Term> terms_;
};

/// Accumulates terms in a hash map; build() sorts and canonicalizes.
class PolyBuilder {
 public:
  void add(const Monomial& m, const Integer& c);
  void add(const Poly& p);
  void add_scaled(const Poly& p, const Integer& s);
  /// Adds a * b without materializing the product.
  void add_product(const Poly& a, const Poly& b);
  void add_product(const Poly& a, const Monomial& m, const Integer& c);
  bool empty() const { return acc_.empty(); }
  Poly build();

 private:
  std::unordered_map<Monomial, Integer> acc_;
};

enum class ArithKind { Add, Sub, Mul };
Poly arith(const Poly& a, const Poly& b, ArithKind kind);

/// How variables without a binding are treated by substitute().
enum class Unmapped { Keep, Reject };

using Bindings = std::map<VarId, Poly>;

/// Simultaneous substitution of variables by polynomials.
Poly substitute(const Poly& p, const Bindings& bindings, Unmapped mode = Unmapped::Keep);

/// Resolver form: returning std::nullopt keeps the variable.
using Resolver = std::function<std::optional<Poly>(VarId)>;
Poly substitute(const Poly& p, const Resolver& resolve);

/// Exchanges two variables everywhere.
Poly swap_variables(const Poly& p, VarId a, VarId b);

/// Quotient q with q * d == p; throws NotDivisible otherwise.
Poly exact_divide(const Poly& p, const Poly& d);

/// (p - s_i p) / (v_i - v_{i+1}) for v in {X, Y, T}.
Poly divided_difference(const Poly& p, int i, Family family);

Poly elementary_symmetric(int k, const std::vector<VarId>& vars);
Poly complete_symmetric(int k, const std::vector<VarId>& vars);

/// Family-indexed variable list v_first..v_last.
std::vector<VarId> var_range(Family family, int first, int last);

/// t_i -> alpha_i + ... + alpha_n.
Poly alpha_rewrite(const Poly& p, int n);
/// alpha_i -> t_i - t_{i+1} (i < n), alpha_n -> t_n.
Poly alpha_unrewrite(const Poly& p, int n);

/// Degree weights. q_i has weight q_weights[i-1] when present, else 2.
struct Grading {
  std::vector<int> q_weights;
  int weight(VarId v) const;
};

/// Weighted degree if p is homogeneous (zero counts as homogeneous of any
/// degree and yields std::nullopt along with inhomogeneous input).
std::optional<int> graded_degree(const Poly& p, const Grading& grading = {});
bool is_homogeneous(const Poly& p, const Grading& grading = {});

/// Canonical text: decreasing graded-lex terms, explicit '*' and '^'.
std::string to_string(const Poly& p);
/// Parses sums/products/powers of integers, variable names and parentheses.
Poly parse_poly(std::string_view text);

std::string to_json(const Poly& p);
Poly poly_from_json(std::string_view json);

}  // namespace eqschubert
